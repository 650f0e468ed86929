#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qchrom {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on the vertex set {0, ..., n-1}.
///
/// Edges are stored once as (u, v) with u < v, sorted lexicographically.
/// Construction rejects self-loops and out-of-range endpoints and collapses
/// duplicate edges, so every Graph value satisfies the simple-graph
/// invariants. Graphs are immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, std::vector<Edge> edges = {},
                 std::string name = {});

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool is_regular() const;

  Graph with_name(std::string name) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::string name_;
};

/// Dense 0/1 adjacency matrix: symmetric, zero diagonal, row sums = degrees.
Eigen::MatrixXd adjacency(const Graph& g);

/// Diagonal degree matrix D.
Eigen::MatrixXd degree_matrix(const Graph& g);

/// Parses "u v" lines (whitespace or comma separated, 0-based ids) with an
/// optional leading "n <count>" line. Blank lines and '#' comments are
/// skipped. Errors carry the offending line number.
Graph parse_edge_list(std::string_view text);

std::string to_edge_list(const Graph& g);

}  // namespace qchrom
