#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qchrom/graph.hpp"

namespace qchrom::gen {

Graph empty(std::size_t n);
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen();

/// Folded 5-cube: 4-bit strings, adjacent iff Hamming distance is 1 or 4.
/// srg(16,5,0,2).
Graph clebsch();

/// Circulant graph on Z_n; `connection` is closed under negation on output
/// (both s and n-s are added).
Graph circulant(std::size_t n, const std::vector<std::size_t>& connection);

/// Circulant on Z_13 with the nonzero cubic residues {1,5,8,12}.
Graph cyclotomic13();

/// Collinearity graph of GQ(2,4) in the 27-lines model: vertices a_1..a_6,
/// b_1..b_6 and c_ij (i<j). srg(27,10,1,5).
Graph gq24();

/// G(n, p); reproducible across platforms for a fixed seed.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Random bipartite graph with parts of size a and b, edge probability p,
/// and at least one edge whenever a, b >= 1.
Graph random_bipartite(std::size_t a, std::size_t b, double p,
                       std::uint64_t seed);

/// Parses a generator spec "name" or "name:p1,p2,...", e.g. "complete:4",
/// "circulant:13,1,5,8,12", "erdos_renyi:10,0.3,7".
Graph from_spec(std::string_view spec);

/// Uniform double in [0, 1) from a 64-bit draw.
inline double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace qchrom::gen
