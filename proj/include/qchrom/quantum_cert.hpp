#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qchrom/graph.hpp"
#include "qchrom/linalg.hpp"
#include "qchrom/pinching.hpp"

namespace qchrom::cert {

inline constexpr double kTolerance = 1e-8;

/// Family {P_{v,k}} of d x d matrices indexed by vertex v in [n] and color
/// k in [c]. Construction checks shapes only; whether the matrices form a
/// quantum coloring is decided by verify_certificate.
class QuantumColoringCert {
 public:
  /// `projectors` is vertex-major: entry v * c + k holds P_{v,k}.
  QuantumColoringCert(std::size_t n, std::size_t c, std::size_t d,
                      std::vector<CMatrix> projectors);

  std::size_t vertices() const { return n_; }
  std::size_t colors() const { return c_; }
  std::size_t dim() const { return d_; }

  const CMatrix& p(Vertex v, std::size_t k) const { return p_[v * c_ + k]; }
  const std::vector<CMatrix>& projectors() const { return p_; }

 private:
  std::size_t n_;
  std::size_t c_;
  std::size_t d_;
  std::vector<CMatrix> p_;
};

struct ProjectorCheck {
  Vertex v;
  std::size_t k;
  double hermitian;   // ||P - P^H||_F
  double idempotent;  // ||P^2 - P||_F
  std::size_t rank;   // eigenvalues of the Hermitian part above 1/2
};

struct CompletenessCheck {
  Vertex v;
  double residual;  // ||sum_k P_{v,k} - I_d||_F
};

struct OrthogonalityCheck {
  Vertex v;
  Vertex w;
  std::size_t k;
  double residual;  // ||P_{v,k} P_{w,k}||_F
};

struct VerificationReport {
  std::vector<ProjectorCheck> projectors;
  std::vector<CompletenessCheck> completeness;
  std::vector<OrthogonalityCheck> orthogonality;  // edge order, then color
  double worst_projector = 0.0;
  double worst_completeness = 0.0;
  double worst_orthogonality = 0.0;
  double tolerance = kTolerance;
  bool accepted = false;

  /// Entry with the largest orthogonality residual; nullptr if no edges.
  const OrthogonalityCheck* worst_orthogonality_check() const;
};

/// Checks projector validity, completeness per vertex, and orthogonality per
/// edge and color. Throws StructuralError if cert.vertices() != g.order().
VerificationReport verify_certificate(const Graph& g,
                                      const QuantumColoringCert& cert,
                                      double tol = kTolerance);

/// The c block-diagonal projectors P_k = sum_v e_v e_v^H ⊗ P_{v,k} on C^{nd}.
class LiftedFamily {
 public:
  LiftedFamily(pinching::ProjectorFamily family, std::size_t n, std::size_t d)
      : family_(std::move(family)), n_(n), d_(d) {}

  const pinching::ProjectorFamily& family() const { return family_; }
  std::size_t vertices() const { return n_; }
  std::size_t dim() const { return d_; }

 private:
  pinching::ProjectorFamily family_;
  std::size_t n_;
  std::size_t d_;
};

/// Throws RefusalError if the certificate does not verify.
LiftedFamily lift(const Graph& g, const QuantumColoringCert& cert,
                  double tol = kTolerance);

/// max_v ||pinch(f, E_v ⊗ I_d) - E_v ⊗ I_d||_F over the vertex indicators
/// E_v = e_v e_v^H; by linearity this covers every diagonal E.
double fixed_point_residual(const pinching::ProjectorFamily& f, std::size_t n,
                            std::size_t d);

/// Reads P_{v,k} off the diagonal blocks of a block-diagonal family whose
/// pinching annihilates A ⊗ I_d and fixes every E ⊗ I_d. Throws
/// RefusalError naming the offending block or residual when a precondition
/// fails, StructuralError when f.dim() != n * d.
QuantumColoringCert extract_certificate(const Graph& g,
                                        const pinching::ProjectorFamily& f,
                                        std::size_t d,
                                        double tol = kTolerance);

/// ||A⊗I - (c-1)(D⊗I) + sum_{l=1}^{c-1} U^l (Q⊗I) (U^H)^l||_F with U the
/// twirling unitary of the lifted family. Refuses unverified certificates.
double lima_identity_residual(const Graph& g, const QuantumColoringCert& cert,
                              double tol = kTolerance);

/// 1e-7 * (1 + c * ||Q||_F), the acceptance threshold for the residual above.
double lima_identity_tolerance(const Graph& g, std::size_t colors);

}  // namespace qchrom::cert
