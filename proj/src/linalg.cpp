#include "qchrom/linalg.hpp"

namespace qchrom {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix kron_identity(const Eigen::MatrixXd& a, Eigen::Index d) {
  return kron(a.cast<Complex>(), CMatrix::Identity(d, d));
}

}  // namespace qchrom
