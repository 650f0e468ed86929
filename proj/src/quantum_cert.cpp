#include "qchrom/quantum_cert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qchrom/errors.hpp"

namespace qchrom::cert {

namespace {

// Operations on n * d above this size refuse instead of running for hours.
constexpr std::size_t kMaxLiftedDim = 2048;
constexpr std::size_t kMaxLocalDim = 64;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void check_envelope(std::size_t n, std::size_t d) {
  if (d > kMaxLocalDim || n * d > kMaxLiftedDim) {
    throw StructuralError("certificate too large: n*d = " +
                          std::to_string(n * d) + ", d = " +
                          std::to_string(d) + " (limits " +
                          std::to_string(kMaxLiftedDim) + ", " +
                          std::to_string(kMaxLocalDim) + ")");
  }
}

}  // namespace

QuantumColoringCert::QuantumColoringCert(std::size_t n, std::size_t c,
                                         std::size_t d,
                                         std::vector<CMatrix> projectors)
    : n_(n), c_(c), d_(d), p_(std::move(projectors)) {
  if (n_ == 0 || c_ == 0 || d_ == 0) {
    throw StructuralError("certificate requires n, c, d >= 1");
  }
  if (p_.size() != n_ * c_) {
    throw StructuralError("certificate holds " + std::to_string(p_.size()) +
                          " matrices, expected n*c = " +
                          std::to_string(n_ * c_));
  }
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i].rows() != idx(d_) || p_[i].cols() != idx(d_)) {
      throw StructuralError("P_{" + std::to_string(i / c_) + "," +
                            std::to_string(i % c_) + "} is not " +
                            std::to_string(d_) + "x" + std::to_string(d_));
    }
  }
}

const OrthogonalityCheck* VerificationReport::worst_orthogonality_check()
    const {
  if (orthogonality.empty()) return nullptr;
  return &*std::max_element(
      orthogonality.begin(), orthogonality.end(),
      [](const auto& a, const auto& b) { return a.residual < b.residual; });
}

VerificationReport verify_certificate(const Graph& g,
                                      const QuantumColoringCert& cert,
                                      double tol) {
  if (cert.vertices() != g.order()) {
    throw StructuralError("certificate has n = " +
                          std::to_string(cert.vertices()) +
                          " but graph has " + std::to_string(g.order()) +
                          " vertices");
  }
  const std::size_t c = cert.colors();
  const auto d = idx(cert.dim());
  const CMatrix id = CMatrix::Identity(d, d);

  VerificationReport r;
  r.tolerance = tol;
  for (Vertex v = 0; v < g.order(); ++v) {
    CMatrix sum = CMatrix::Zero(d, d);
    for (std::size_t k = 0; k < c; ++k) {
      const CMatrix& p = cert.p(v, k);
      const CMatrix herm = 0.5 * (p + p.adjoint());
      Eigen::SelfAdjointEigenSolver<CMatrix> eig(herm,
                                                 Eigen::EigenvaluesOnly);
      const auto rank = static_cast<std::size_t>(
          (eig.eigenvalues().array() > 0.5).count());
      ProjectorCheck pc{v, k, (p - p.adjoint()).norm(), (p * p - p).norm(),
                        rank};
      r.worst_projector =
          std::max({r.worst_projector, pc.hermitian, pc.idempotent});
      r.projectors.push_back(pc);
      sum += p;
    }
    CompletenessCheck cc{v, (sum - id).norm()};
    r.worst_completeness = std::max(r.worst_completeness, cc.residual);
    r.completeness.push_back(cc);
  }
  for (const auto& [v, w] : g.edges()) {
    for (std::size_t k = 0; k < c; ++k) {
      OrthogonalityCheck oc{v, w, k, (cert.p(v, k) * cert.p(w, k)).norm()};
      r.worst_orthogonality = std::max(r.worst_orthogonality, oc.residual);
      r.orthogonality.push_back(oc);
    }
  }
  // NaN residuals fail every comparison and therefore reject.
  auto ok = [tol](double x) { return x <= tol; };
  r.accepted = ok(r.worst_projector) && ok(r.worst_completeness) &&
               ok(r.worst_orthogonality);
  for (const auto& pc : r.projectors) {
    r.accepted = r.accepted && ok(pc.hermitian) && ok(pc.idempotent);
  }
  return r;
}

LiftedFamily lift(const Graph& g, const QuantumColoringCert& cert,
                  double tol) {
  check_envelope(cert.vertices(), cert.dim());
  const auto report = verify_certificate(g, cert, tol);
  if (!report.accepted) {
    throw RefusalError("cannot lift a certificate that fails verification");
  }
  const std::size_t n = cert.vertices();
  const auto d = idx(cert.dim());
  const auto nd = idx(n) * d;
  std::vector<CMatrix> ps;
  for (std::size_t k = 0; k < cert.colors(); ++k) {
    CMatrix p = CMatrix::Zero(nd, nd);
    for (Vertex v = 0; v < n; ++v) block_of(p, idx(v), idx(v), d) = cert.p(v, k);
    ps.push_back(std::move(p));
  }
  // Per-vertex residuals below tol add up in quadrature across n blocks.
  const double family_tol = tol * std::sqrt(static_cast<double>(n));
  return LiftedFamily(pinching::ProjectorFamily(std::move(ps), family_tol), n,
                      cert.dim());
}

double fixed_point_residual(const pinching::ProjectorFamily& f, std::size_t n,
                            std::size_t d) {
  const auto dd = idx(d);
  const auto nd = idx(n) * dd;
  if (f.dim() != nd) {
    throw StructuralError("family dimension " + std::to_string(f.dim()) +
                          " != n*d = " + std::to_string(nd));
  }
  double worst = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    // Q (E_v ⊗ I) Q = Q[:, block v] Q[block v, :].
    CMatrix image = CMatrix::Zero(nd, nd);
    for (const auto& q : f.projectors()) {
      image.noalias() +=
          q.middleCols(idx(v) * dd, dd) * q.middleRows(idx(v) * dd, dd);
    }
    image.block(idx(v) * dd, idx(v) * dd, dd, dd) -= CMatrix::Identity(dd, dd);
    worst = std::max(worst, image.norm());
  }
  return worst;
}

QuantumColoringCert extract_certificate(const Graph& g,
                                        const pinching::ProjectorFamily& f,
                                        std::size_t d, double tol) {
  const std::size_t n = g.order();
  if (d == 0) throw StructuralError("local dimension must be positive");
  if (f.dim() != idx(n * d)) {
    throw StructuralError("family dimension " + std::to_string(f.dim()) +
                          " != n*d = " + std::to_string(n * d));
  }
  check_envelope(n, d);
  const auto dd = idx(d);

  for (std::size_t k = 0; k < f.count(); ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        if (v == w) continue;
        const double off = block_of(f[k], idx(v), idx(w), dd).norm();
        if (!(off <= tol)) {
          throw RefusalError("projector " + std::to_string(k) +
                             " is not block diagonal: block (" +
                             std::to_string(v) + "," + std::to_string(w) +
                             ") has norm " + std::to_string(off));
        }
      }
    }
  }

  const CMatrix a = kron_identity(adjacency(g), dd);
  const double residual = pinching::annihilation_residual(f, a);
  if (!(residual <= tol * (1.0 + a.norm()))) {
    throw RefusalError("pinching does not annihilate A⊗I_d (residual " +
                       std::to_string(residual) + ")");
  }
  const double fixed = fixed_point_residual(f, n, d);
  if (!(fixed <= tol)) {
    throw RefusalError("pinching does not fix E⊗I_d (residual " +
                       std::to_string(fixed) + ")");
  }

  std::vector<CMatrix> ps;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < f.count(); ++k) {
      ps.emplace_back(block_of(f[k], idx(v), idx(v), dd));
    }
  }
  QuantumColoringCert cert(n, f.count(), d, std::move(ps));
  const auto report = verify_certificate(g, cert, tol);
  if (!report.accepted) {
    throw RefusalError("extracted blocks do not form a quantum coloring "
                       "(worst orthogonality residual " +
                       std::to_string(report.worst_orthogonality) + ")");
  }
  return cert;
}

double lima_identity_residual(const Graph& g, const QuantumColoringCert& cert,
                              double tol) {
  const auto lifted = lift(g, cert, tol);
  const auto u = pinching::twirling_unitary(lifted.family());
  const auto d = idx(cert.dim());
  const Eigen::MatrixXd a = adjacency(g);
  const Eigen::MatrixXd deg = degree_matrix(g);
  const CMatrix q = kron_identity(deg + a, d);
  const auto c = static_cast<double>(cert.colors());

  CMatrix r = kron_identity(a, d) - (c - 1.0) * kron_identity(deg, d);
  CMatrix p = u.matrix();
  for (std::size_t l = 1; l < cert.colors(); ++l) {
    r.noalias() += p * q * p.adjoint();
    p = p * u.matrix();
  }
  return r.norm();
}

double lima_identity_tolerance(const Graph& g, std::size_t colors) {
  const Eigen::MatrixXd q = degree_matrix(g) + adjacency(g);
  return 1e-7 * (1.0 + static_cast<double>(colors) * q.norm());
}

}  // namespace qchrom::cert
