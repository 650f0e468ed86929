#include "qchrom/graph6.hpp"

#include "qchrom/errors.hpp"

namespace qchrom {

namespace {

constexpr int kBias = 63;
constexpr char kMaxByte = 126;
constexpr std::string_view kPrefix = ">>graph6<<";

[[noreturn]] void fail(std::size_t offset, const std::string& why) {
  throw ParseError("graph6 byte " + std::to_string(offset) + ": " + why);
}

int sextet(std::string_view s, std::size_t i, std::size_t base) {
  const auto ch = static_cast<unsigned char>(s[i]);
  if (ch < kBias || ch > kMaxByte) {
    fail(base + i, "character " + std::to_string(ch) +
                       " outside printable range 63..126");
  }
  return ch - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    text.remove_prefix(kPrefix.size());
    base = kPrefix.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) fail(base, "empty input, missing header byte");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != kMaxByte) {
    n = static_cast<std::size_t>(sextet(text, 0, base));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != kMaxByte) {
    if (text.size() < 4) fail(base + text.size(), "truncated 4-byte header");
    for (std::size_t i = 1; i < 4; ++i) {
      n = (n << 6) | static_cast<std::size_t>(sextet(text, i, base));
    }
    if (n < 63) fail(base, "4-byte header encodes n < 63");
    pos = 4;
  } else {
    if (text.size() < 8) fail(base + text.size(), "truncated 8-byte header");
    for (std::size_t i = 2; i < 8; ++i) {
      n = (n << 6) | static_cast<std::size_t>(sextet(text, i, base));
    }
    if (n < 258048) fail(base, "8-byte header encodes n < 258048");
    pos = 8;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos < chars) {
    fail(base + text.size(), "truncated bit vector: expected " +
                                 std::to_string(chars) + " data bytes, got " +
                                 std::to_string(text.size() - pos));
  }
  if (text.size() - pos > chars) {
    fail(base + pos + chars, "unexpected trailing data");
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  int current = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) current = sextet(text, pos + k / 6, base);
      if (current & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  // Validate the padding byte characters even when no bit is read from them.
  for (std::size_t i = pos; i < pos + chars; ++i) sextet(text, i, base);
  return Graph(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(kMaxByte);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  } else {
    out.push_back(kMaxByte);
    out.push_back(kMaxByte);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  // Column-major upper triangle: bit index of (i, j), i < j, is j(j-1)/2 + i.
  for (const auto& [i, j] : g.edges()) {
    const std::size_t k = j * (j - 1) / 2 + i;
    packed[k / 6] |= static_cast<unsigned char>(1u << (5 - k % 6));
  }
  for (auto byte : packed) out.push_back(static_cast<char>(byte + kBias));
  return out;
}

}  // namespace qchrom
