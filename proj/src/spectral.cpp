#include "qchrom/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "qchrom/errors.hpp"

namespace qchrom::spectral {

SymmetricMatrix::SymmetricMatrix(const Eigen::MatrixXd& x) {
  if (x.rows() != x.cols()) {
    throw StructuralError("symmetric matrix must be square");
  }
  entries_ = 0.5 * (x + x.transpose());
}

HermitianMatrix::HermitianMatrix(const Eigen::MatrixXcd& x) {
  if (x.rows() != x.cols()) {
    throw StructuralError("Hermitian matrix must be square");
  }
  entries_ = 0.5 * (x + x.adjoint());
}

namespace {

template <typename Matrix>
Eigen::SelfAdjointEigenSolver<Matrix> solve(const Matrix& m, bool vectors) {
  if (m.rows() == 0) throw StructuralError("eigenvalues of an empty matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(
      m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge (order " +
                         std::to_string(m.rows()) + ")");
  }
  return solver;
}

// Eigen returns ascending order.
std::vector<double> descending(const Eigen::VectorXd& ascending) {
  std::vector<double> out(ascending.data(),
                          ascending.data() + ascending.size());
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<double> eigenvalues(const SymmetricMatrix& x) {
  return descending(solve(x.entries(), false).eigenvalues());
}

std::vector<double> eigenvalues(const HermitianMatrix& x) {
  return descending(solve(x.entries(), false).eigenvalues());
}

EigenDecomposition eigen_decomposition(const SymmetricMatrix& x) {
  auto solver = solve(x.entries(), true);
  EigenDecomposition out;
  out.values = descending(solver.eigenvalues());
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

double zero_tolerance(const std::vector<double>& eigenvalues) {
  double scale = 1.0;
  if (!eigenvalues.empty()) {
    scale = std::max({scale, std::abs(eigenvalues.front()),
                      std::abs(eigenvalues.back())});
  }
  return 1e-9 * scale;
}

SpectralSummary summarize(std::vector<double> eigenvalues) {
  if (eigenvalues.empty()) throw StructuralError("empty spectrum");
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
  SpectralSummary s;
  s.zero_tolerance = zero_tolerance(eigenvalues);
  for (double mu : eigenvalues) {
    if (std::abs(mu) <= s.zero_tolerance) {
      ++s.inertia.n_zero;
    } else if (mu > 0) {
      ++s.inertia.n_plus;
      s.s_plus += mu * mu;
    } else {
      ++s.inertia.n_minus;
      s.s_minus += mu * mu;
    }
  }
  s.eigenvalues = std::move(eigenvalues);
  return s;
}

SpectralSummary summarize(const SymmetricMatrix& x) {
  return summarize(eigenvalues(x));
}

SpectralSummary summarize(const HermitianMatrix& x) {
  return summarize(eigenvalues(x));
}

SpectralSummary summarize(const Graph& g) {
  return summarize(SymmetricMatrix(adjacency(g)));
}

LaplacianSpectra laplacian_spectra(const Graph& g) {
  const Eigen::MatrixXd a = adjacency(g);
  const Eigen::MatrixXd d = degree_matrix(g);
  return {eigenvalues(SymmetricMatrix(d - a)),
          eigenvalues(SymmetricMatrix(d + a))};
}

}  // namespace qchrom::spectral
