#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qchrom/linalg.hpp"

namespace qchrom::pinching {

/// Default Frobenius-norm tolerance for projector, resolution and unitarity
/// checks. Every validating entry point takes an override.
inline constexpr double kTolerance = 1e-8;

/// Residuals of the projector-family conditions, all in Frobenius norm.
struct FamilyDiagnostics {
  double hermitian = 0.0;     // max_k ||Q_k - Q_k^H||
  double idempotent = 0.0;    // max_k ||Q_k^2 - Q_k||
  double resolution = 0.0;    // ||sum_k Q_k - I||
  double orthogonality = 0.0; // max_{k != l} ||Q_k Q_l||

  double worst() const;
  bool valid(double tol = kTolerance) const { return worst() <= tol; }
};

FamilyDiagnostics diagnose(std::span<const CMatrix> projectors);

/// Orthogonal projectors Q_0..Q_{c-1} on C^m that resolve the identity.
/// Construction validates every condition in FamilyDiagnostics and throws
/// StructuralError naming the first violated one.
class ProjectorFamily {
 public:
  explicit ProjectorFamily(std::vector<CMatrix> projectors,
                           double tol = kTolerance);

  std::size_t count() const { return projectors_.size(); }
  Eigen::Index dim() const { return projectors_.front().rows(); }
  const CMatrix& operator[](std::size_t k) const { return projectors_[k]; }
  const std::vector<CMatrix>& projectors() const { return projectors_; }

 private:
  std::vector<CMatrix> projectors_;
};

/// Projectors onto span{e_i : labels[i] == k} for k in [c].
ProjectorFamily standard_basis_partition(std::span<const std::size_t> labels,
                                         std::size_t c);

/// Projectors onto consecutive index blocks of the given (positive) sizes.
ProjectorFamily contiguous_partition(std::span<const std::size_t> sizes);

/// sum_k Q_k X Q_k.
CMatrix pinch(const ProjectorFamily& f, const CMatrix& x);

/// U with U^c = I used to realize a pinching as an average of c conjugations.
class TwirlingUnitary {
 public:
  /// Validates ||U^H U - I||_F <= tol and ||U^c - I||_F <= tol.
  TwirlingUnitary(CMatrix u, std::size_t c, double tol = kTolerance);

  const CMatrix& matrix() const { return u_; }
  std::size_t order() const { return c_; }
  Eigen::Index dim() const { return u_.rows(); }

  /// U^l by repeated multiplication.
  CMatrix power(std::size_t l) const;

 private:
  CMatrix u_;
  std::size_t c_;
};

/// U = sum_k w^k Q_k with w = exp(2 pi i / c).
TwirlingUnitary twirling_unitary(const ProjectorFamily& f);

/// (1/c) sum_{l in [c]} U^l X (U^H)^l.
CMatrix twirl(const TwirlingUnitary& u, const CMatrix& x);

/// ||pinch(f, x)||_F.
double annihilation_residual(const ProjectorFamily& f, const CMatrix& x);

/// residual <= tol * (1 + ||x||_F).
bool annihilates(const ProjectorFamily& f, const CMatrix& x,
                 double tol = kTolerance);

}  // namespace qchrom::pinching
