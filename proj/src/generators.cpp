#include "qchrom/generators.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <random>
#include <string>

#include "qchrom/errors.hpp"

namespace qchrom::gen {

Graph empty(std::size_t n) {
  if (n == 0) throw StructuralError("empty: n must be positive");
  return Graph(n, {}, "empty(" + std::to_string(n) + ")");
}

Graph complete(std::size_t n) {
  if (n == 0) throw StructuralError("complete: n must be positive");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges), "complete(" + std::to_string(n) + ")");
}

Graph cycle(std::size_t n) {
  if (n < 3) throw StructuralError("cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges), "cycle(" + std::to_string(n) + ")");
}

Graph path(std::size_t n) {
  if (n == 0) throw StructuralError("path: n must be positive");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges), "path(" + std::to_string(n) + ")");
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a + b == 0) throw StructuralError("complete_bipartite: empty graph");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph(a + b, std::move(edges),
               "complete_bipartite(" + std::to_string(a) + "," +
                   std::to_string(b) + ")");
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, std::move(edges), "petersen");
}

Graph clebsch() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 16; ++u) {
    for (Vertex v = u + 1; v < 16; ++v) {
      const int dist = std::popcount(static_cast<unsigned>(u ^ v));
      if (dist == 1 || dist == 4) edges.emplace_back(u, v);
    }
  }
  return Graph(16, std::move(edges), "clebsch");
}

Graph circulant(std::size_t n, const std::vector<std::size_t>& connection) {
  if (n == 0) throw StructuralError("circulant: n must be positive");
  std::vector<Edge> edges;
  for (auto s : connection) {
    if (s == 0 || s >= n) {
      throw StructuralError("circulant: connection element " +
                            std::to_string(s) + " not in 1.." +
                            std::to_string(n - 1));
    }
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + s) % n);
  }
  return Graph(n, std::move(edges), "circulant(" + std::to_string(n) + ")");
}

Graph cyclotomic13() {
  std::vector<std::size_t> cubes;
  for (std::size_t x = 1; x < 13; ++x) {
    const std::size_t r = x * x * x % 13;
    if (std::find(cubes.begin(), cubes.end(), r) == cubes.end()) {
      cubes.push_back(r);
    }
  }
  return circulant(13, cubes).with_name("cyclotomic13");
}

Graph gq24() {
  // a_i -> i, b_i -> 6 + i, c_{ij} -> 12 + pair index (i < j, lexicographic).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (i != j) edges.emplace_back(i, 6 + j);
    }
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [j, k] = pairs[p];
    const Vertex c = 12 + p;
    for (std::size_t i : {j, k}) {
      edges.emplace_back(i, c);
      edges.emplace_back(6 + i, c);
    }
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      const auto [x, y] = pairs[q];
      if (x != j && x != k && y != j && y != k) edges.emplace_back(c, 12 + q);
    }
  }
  return Graph(27, std::move(edges), "gq24");
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw StructuralError("erdos_renyi: n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw StructuralError("erdos_renyi: p must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit_interval(rng()) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges),
               "erdos_renyi(" + std::to_string(n) + "," + std::to_string(p) +
                   "," + std::to_string(seed) + ")");
}

Graph random_bipartite(std::size_t a, std::size_t b, double p,
                       std::uint64_t seed) {
  if (a == 0 || b == 0) {
    throw StructuralError("random_bipartite: both parts must be nonempty");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) {
      if (unit_interval(rng()) < p) edges.emplace_back(u, a + v);
    }
  }
  if (edges.empty()) edges.emplace_back(rng() % a, a + rng() % b);
  return Graph(a + b, std::move(edges), "random_bipartite");
}

namespace {

std::vector<std::string_view> split_params(std::string_view s) {
  std::vector<std::string_view> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    auto comma = s.find(',', pos);
    out.push_back(s.substr(pos, comma == std::string_view::npos
                                    ? std::string_view::npos
                                    : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::uint64_t to_uint(std::string_view tok, std::string_view name) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError("generator '" + std::string(name) +
                     "': expected non-negative integer, got '" +
                     std::string(tok) + "'");
  }
  return v;
}

double to_double(std::string_view tok, std::string_view name) {
  try {
    std::size_t used = 0;
    const std::string s(tok);
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("generator '" + std::string(name) +
                     "': expected number, got '" + std::string(tok) + "'");
  }
}

void expect_count(std::string_view name, std::size_t got, std::size_t want) {
  if (got != want) {
    throw ParseError("generator '" + std::string(name) + "' takes " +
                     std::to_string(want) + " parameter(s), got " +
                     std::to_string(got));
  }
}

}  // namespace

Graph from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const auto params = split_params(
      colon == std::string_view::npos ? std::string_view{}
                                      : spec.substr(colon + 1));

  if (name == "complete" || name == "cycle" || name == "path" ||
      name == "empty") {
    expect_count(name, params.size(), 1);
    const auto n = to_uint(params[0], name);
    if (name == "complete") return complete(n);
    if (name == "cycle") return cycle(n);
    if (name == "path") return path(n);
    return empty(n);
  }
  if (name == "complete_bipartite") {
    expect_count(name, params.size(), 2);
    return complete_bipartite(to_uint(params[0], name),
                              to_uint(params[1], name));
  }
  if (name == "petersen" || name == "clebsch" || name == "cyclotomic13" ||
      name == "gq24") {
    expect_count(name, params.size(), 0);
    if (name == "petersen") return petersen();
    if (name == "clebsch") return clebsch();
    if (name == "cyclotomic13") return cyclotomic13();
    return gq24();
  }
  if (name == "circulant") {
    if (params.empty()) expect_count(name, 0, 1);
    std::vector<std::size_t> conn;
    for (std::size_t i = 1; i < params.size(); ++i) {
      conn.push_back(to_uint(params[i], name));
    }
    return circulant(to_uint(params[0], name), conn);
  }
  if (name == "erdos_renyi") {
    expect_count(name, params.size(), 3);
    return erdos_renyi(to_uint(params[0], name), to_double(params[1], name),
                       to_uint(params[2], name));
  }
  throw ParseError("unknown generator '" + std::string(name) + "'");
}

}  // namespace qchrom::gen
