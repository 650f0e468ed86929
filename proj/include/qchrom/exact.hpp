#pragma once

#include <chrono>
#include <cstddef>
#include <string_view>
#include <vector>

#include "qchrom/graph.hpp"
#include "qchrom/quantum_cert.hpp"

namespace qchrom::exact {

using Seconds = std::chrono::duration<double>;

inline constexpr Seconds kDefaultBudget{60.0};

enum class Status { kComplete, kTimedOut };

std::string_view to_string(Status status);

using Coloring = std::vector<std::size_t>;

struct ChromaticResult {
  /// Exact chi on completion; otherwise lower <= chi <= upper.
  std::size_t lower = 0;
  std::size_t upper = 0;
  Coloring coloring;  // proper coloring with `upper` colors
  Seconds elapsed{0};
  Status status = Status::kComplete;
  std::size_t nodes = 0;

  std::size_t chromatic() const { return upper; }
};

struct CliqueResult {
  std::size_t clique = 0;  // exact on completion, best found otherwise
  std::vector<Vertex> witness;
  Seconds elapsed{0};
  Status status = Status::kComplete;
};

struct ExactReport {
  ChromaticResult chromatic;
  CliqueResult clique;

  Status status() const;
};

/// Maximum clique by branch and bound with greedy-coloring pruning.
CliqueResult clique_number(const Graph& g, Seconds budget = kDefaultBudget);

/// DSATUR branch and bound. The lower bound is seeded with a maximum clique
/// (whose vertices are pre-colored), the upper bound with a greedy DSATUR
/// coloring. Timeout is reported through `status`, not thrown.
ChromaticResult chromatic_number(const Graph& g,
                                 Seconds budget = kDefaultBudget);

/// Both computations under one shared budget.
ExactReport solve(const Graph& g, Seconds budget = kDefaultBudget);

/// Greedy DSATUR coloring (no backtracking).
Coloring dsatur_greedy(const Graph& g);

bool is_proper(const Graph& g, const Coloring& coloring);
std::size_t color_count(const Coloring& coloring);
bool is_clique(const Graph& g, const std::vector<Vertex>& vertices);

/// Scalar color indicators P_{v,k} = [color(v) == k] ⊗ I_d, with
/// c = max color + 1. Throws RefusalError naming a monochromatic edge.
cert::QuantumColoringCert proper_coloring_to_certificate(
    const Graph& g, const Coloring& coloring, std::size_t d = 1);

}  // namespace qchrom::exact
