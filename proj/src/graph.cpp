#include "qchrom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "qchrom/errors.hpp"

namespace qchrom {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::string name)
    : n_(n), edges_(std::move(edges)), adj_(n), name_(std::move(name)) {
  for (auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_) {
      throw StructuralError("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") out of range for n=" +
                            std::to_string(n_));
    }
    if (u == v) {
      throw StructuralError("self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_regular() const {
  if (n_ == 0) return true;
  const std::size_t d = adj_[0].size();
  return std::all_of(adj_.begin(), adj_.end(),
                     [d](const auto& nbrs) { return nbrs.size() == d; });
}

Graph Graph::with_name(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Eigen::MatrixXd adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
    a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1.0;
  }
  return a;
}

Eigen::MatrixXd degree_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index v = 0; v < n; ++v) {
    d(v, v) = static_cast<double>(g.degree(static_cast<Vertex>(v)));
  }
  return d;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == ',' || ch == '\r';
  };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_id(std::string_view tok, std::size_t line_no) {
  auto fail = [&](const std::string& why) {
    return ParseError("edge list line " + std::to_string(line_no) + ": " +
                      why + " '" + std::string(tok) + "'");
  };
  if (!tok.empty() && tok.front() == '-') throw fail("negative vertex id");
  std::size_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw fail("vertex id too large");
  if (ec != std::errc() || ptr != last) throw fail("non-integer token");
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t max_id = 0;
  bool any_vertex = false;
  bool first_content = true;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (first_content && toks[0] == "n") {
      first_content = false;
      if (toks.size() != 2) {
        throw ParseError("edge list line " + std::to_string(line_no) +
                         ": expected 'n <count>'");
      }
      declared = parse_id(toks[1], line_no);
      continue;
    }
    first_content = false;
    if (toks.size() != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": expected two vertex ids, got " +
                       std::to_string(toks.size()) + " tokens");
    }
    const auto u = parse_id(toks[0], line_no);
    const auto v = parse_id(toks[1], line_no);
    if (u == v) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": self-loop at vertex " + std::to_string(u));
    }
    if (declared && (u >= *declared || v >= *declared)) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": vertex id exceeds declared n=" +
                       std::to_string(*declared));
    }
    max_id = std::max({max_id, u, v});
    any_vertex = true;
    edges.emplace_back(u, v);
  }

  std::size_t n = declared ? *declared : (any_vertex ? max_id + 1 : 0);
  if (n == 0) throw ParseError("edge list declares no vertices");
  return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace qchrom
