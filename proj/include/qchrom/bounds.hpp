#pragma once

#include <array>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "qchrom/graph.hpp"
#include "qchrom/spectral.hpp"

namespace qchrom::bounds {

/// Hermitian weight matrix W for the weighted adjacency W∘A.
///
/// The stored matrix is (W + W^H) / 2. Inputs whose anti-Hermitian part
/// exceeds 1e-8 * (1 + ||W||_F) are rejected rather than silently repaired.
class WeightMatrix {
 public:
  explicit WeightMatrix(const Eigen::MatrixXcd& w);

  Eigen::Index order() const { return entries_.rows(); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

 private:
  Eigen::MatrixXcd entries_;
};

/// W∘A: the Hadamard product restricted to the edges of g.
Eigen::MatrixXcd weighted_adjacency(const Graph& g, const WeightMatrix& w);

// Each bound returns 1 + (ratio), or nullopt when the bound does not apply
// (edgeless graphs, vanishing denominators).
std::optional<double> hoffman(const spectral::SpectralSummary& s);
std::optional<double> lima(const Graph& g,
                           const spectral::LaplacianSpectra& ls);
std::optional<double> kolotilina(const spectral::SpectralSummary& s,
                                 const spectral::LaplacianSpectra& ls);
std::optional<double> inertia_bound(const spectral::SpectralSummary& s);
std::optional<double> ando_lin(const spectral::SpectralSummary& s);

enum class BoundStatus {
  kComputed,
  kInapplicable,       // reported as 1
  kNotComputedWeighted,  // Laplacian-type bound skipped in weighted mode
};

std::string_view to_string(BoundStatus status);

struct BoundEntry {
  double value = 1.0;
  BoundStatus status = BoundStatus::kInapplicable;

  bool applicable() const { return status == BoundStatus::kComputed; }
};

enum class BoundKind { kHoffman, kLima, kKolotilina, kInertia, kAndoLin };

inline constexpr std::array<BoundKind, 5> kAllBounds = {
    BoundKind::kHoffman, BoundKind::kLima, BoundKind::kKolotilina,
    BoundKind::kInertia, BoundKind::kAndoLin};

std::string_view to_string(BoundKind kind);

struct BoundsReport {
  BoundEntry hoffman;
  BoundEntry lima;
  BoundEntry kolotilina;
  BoundEntry inertia;
  BoundEntry ando_lin;
  double best = 1.0;
  int best_ceil = 1;
  bool weighted = false;

  const BoundEntry& operator[](BoundKind kind) const;
  BoundEntry& operator[](BoundKind kind);
};

/// Ceiling that ignores floating-point overshoot of at most
/// 1e-9 * max(1, x) above an integer.
int ceil_bound(double x);

/// All five bounds on A (or on W∘A when weights are given). In weighted mode
/// Lima and Kolotilina are flagged kNotComputedWeighted, unless W∘A equals A
/// exactly, in which case the unweighted report is returned.
BoundsReport all_bounds(const Graph& g,
                        const std::optional<WeightMatrix>& weights = {});

}  // namespace qchrom::bounds
