#include "qchrom/pinching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qchrom/errors.hpp"

namespace qchrom::pinching {

double FamilyDiagnostics::worst() const {
  return std::max({hermitian, idempotent, resolution, orthogonality});
}

FamilyDiagnostics diagnose(std::span<const CMatrix> projectors) {
  FamilyDiagnostics d;
  if (projectors.empty()) {
    d.resolution = std::numeric_limits<double>::infinity();
    return d;
  }
  const Eigen::Index m = projectors.front().rows();
  CMatrix sum = CMatrix::Zero(m, m);
  for (const auto& q : projectors) {
    d.hermitian = std::max(d.hermitian, (q - q.adjoint()).norm());
    d.idempotent = std::max(d.idempotent, (q * q - q).norm());
    sum += q;
  }
  d.resolution = (sum - CMatrix::Identity(m, m)).norm();
  for (std::size_t k = 0; k < projectors.size(); ++k) {
    for (std::size_t l = k + 1; l < projectors.size(); ++l) {
      d.orthogonality =
          std::max(d.orthogonality, (projectors[k] * projectors[l]).norm());
    }
  }
  return d;
}

ProjectorFamily::ProjectorFamily(std::vector<CMatrix> projectors, double tol)
    : projectors_(std::move(projectors)) {
  if (projectors_.empty()) {
    throw StructuralError("projector family must contain at least one matrix");
  }
  const Eigen::Index m = projectors_.front().rows();
  if (m == 0) throw StructuralError("projector family of dimension 0");
  for (std::size_t k = 0; k < projectors_.size(); ++k) {
    if (projectors_[k].rows() != m || projectors_[k].cols() != m) {
      throw StructuralError("projector " + std::to_string(k) +
                            " is not " + std::to_string(m) + "x" +
                            std::to_string(m));
    }
  }
  const auto d = diagnose(projectors_);
  auto check = [tol](double residual, const char* what) {
    if (!(residual <= tol)) {
      throw StructuralError(std::string("invalid projector family: ") + what +
                            " residual " + std::to_string(residual) +
                            " exceeds " + std::to_string(tol));
    }
  };
  check(d.hermitian, "Hermiticity");
  check(d.idempotent, "idempotence");
  check(d.resolution, "resolution of identity");
  check(d.orthogonality, "mutual orthogonality");
}

ProjectorFamily standard_basis_partition(std::span<const std::size_t> labels,
                                         std::size_t c) {
  const auto m = static_cast<Eigen::Index>(labels.size());
  std::vector<CMatrix> qs(c, CMatrix::Zero(m, m));
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto k = labels[static_cast<std::size_t>(i)];
    if (k >= c) {
      throw StructuralError("label " + std::to_string(k) + " at index " +
                            std::to_string(i) + " exceeds class count " +
                            std::to_string(c));
    }
    qs[k](i, i) = 1.0;
  }
  return ProjectorFamily(std::move(qs));
}

ProjectorFamily contiguous_partition(std::span<const std::size_t> sizes) {
  std::vector<std::size_t> labels;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] == 0) throw StructuralError("partition blocks must be nonempty");
    labels.insert(labels.end(), sizes[k], k);
  }
  return standard_basis_partition(labels, sizes.size());
}

namespace {

void require_dim(Eigen::Index dim, const CMatrix& x, const char* op) {
  if (x.rows() != dim || x.cols() != dim) {
    throw StructuralError(std::string(op) + ": matrix is " +
                          std::to_string(x.rows()) + "x" +
                          std::to_string(x.cols()) + ", expected " +
                          std::to_string(dim) + "x" + std::to_string(dim));
  }
}

}  // namespace

CMatrix pinch(const ProjectorFamily& f, const CMatrix& x) {
  require_dim(f.dim(), x, "pinch");
  CMatrix out = CMatrix::Zero(x.rows(), x.cols());
  for (const auto& q : f.projectors()) out.noalias() += q * x * q;
  return out;
}

TwirlingUnitary::TwirlingUnitary(CMatrix u, std::size_t c, double tol)
    : u_(std::move(u)), c_(c) {
  if (c_ == 0) throw StructuralError("twirling unitary order must be >= 1");
  if (u_.rows() != u_.cols() || u_.rows() == 0) {
    throw StructuralError("twirling unitary must be square and nonempty");
  }
  const CMatrix id = CMatrix::Identity(u_.rows(), u_.cols());
  const double unitarity = (u_.adjoint() * u_ - id).norm();
  if (!(unitarity <= tol)) {
    throw StructuralError("twirling matrix is not unitary (residual " +
                          std::to_string(unitarity) + ")");
  }
  const double period = (power(c_) - id).norm();
  if (!(period <= tol)) {
    throw StructuralError("U^c != I (residual " + std::to_string(period) +
                          ")");
  }
}

CMatrix TwirlingUnitary::power(std::size_t l) const {
  CMatrix p = CMatrix::Identity(u_.rows(), u_.cols());
  for (std::size_t i = 0; i < l; ++i) p = p * u_;
  return p;
}

TwirlingUnitary twirling_unitary(const ProjectorFamily& f) {
  const std::size_t c = f.count();
  CMatrix u = CMatrix::Zero(f.dim(), f.dim());
  for (std::size_t k = 0; k < c; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(c);
    u += std::polar(1.0, angle) * f[k];
  }
  return TwirlingUnitary(std::move(u), c);
}

CMatrix twirl(const TwirlingUnitary& u, const CMatrix& x) {
  require_dim(u.dim(), x, "twirl");
  CMatrix sum = CMatrix::Zero(x.rows(), x.cols());
  CMatrix p = CMatrix::Identity(x.rows(), x.cols());
  for (std::size_t l = 0; l < u.order(); ++l) {
    sum.noalias() += p * x * p.adjoint();
    p = p * u.matrix();
  }
  return sum / static_cast<double>(u.order());
}

double annihilation_residual(const ProjectorFamily& f, const CMatrix& x) {
  return pinch(f, x).norm();
}

bool annihilates(const ProjectorFamily& f, const CMatrix& x, double tol) {
  return annihilation_residual(f, x) <= tol * (1.0 + x.norm());
}

}  // namespace qchrom::pinching
