#pragma once

#include <string>
#include <string_view>

#include "qchrom/graph.hpp"

namespace qchrom {

/// Decodes a graph6 string. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted. Supports the 1-byte, 4-byte and 8-byte headers.
/// Errors name the byte offset of the problem.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6 (no prefix, no trailing newline).
std::string encode_graph6(const Graph& g);

}  // namespace qchrom
