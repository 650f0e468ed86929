#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qchrom {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Kronecker product a ⊗ b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// a ⊗ I_d, with a real input promoted to complex.
CMatrix kron_identity(const Eigen::MatrixXd& a, Eigen::Index d);

/// Block (i, j) of size `block` x `block` of a square block matrix.
inline auto block_of(const CMatrix& m, Eigen::Index i, Eigen::Index j,
                     Eigen::Index block) {
  return m.block(i * block, j * block, block, block);
}

inline auto block_of(CMatrix& m, Eigen::Index i, Eigen::Index j,
                     Eigen::Index block) {
  return m.block(i * block, j * block, block, block);
}

}  // namespace qchrom
