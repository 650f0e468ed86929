#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qchrom/graph.hpp"

namespace qchrom::spectral {

/// Real symmetric matrix. The constructor stores (X + X^T) / 2, so the
/// stored entries are exactly symmetric.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(const Eigen::MatrixXd& x);

  Eigen::Index order() const { return entries_.rows(); }
  const Eigen::MatrixXd& entries() const { return entries_; }

 private:
  Eigen::MatrixXd entries_;
};

/// Complex Hermitian matrix, stored as (X + X^H) / 2.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Eigen::MatrixXcd& x);

  Eigen::Index order() const { return entries_.rows(); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

 private:
  Eigen::MatrixXcd entries_;
};

/// Non-increasing eigenvalues. Throws NumericalError if the solver does not
/// converge and StructuralError on an empty matrix.
std::vector<double> eigenvalues(const SymmetricMatrix& x);
std::vector<double> eigenvalues(const HermitianMatrix& x);

struct EigenDecomposition {
  std::vector<double> values;   // non-increasing
  Eigen::MatrixXd vectors;      // column i belongs to values[i]
};

EigenDecomposition eigen_decomposition(const SymmetricMatrix& x);

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_zero = 0;
  std::size_t n_minus = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct SpectralSummary {
  std::vector<double> eigenvalues;  // non-increasing
  Inertia inertia;
  double s_plus = 0.0;   // sum of squares of positive eigenvalues
  double s_minus = 0.0;  // sum of squares of negative eigenvalues
  double zero_tolerance = 0.0;

  double largest() const { return eigenvalues.front(); }
  double smallest() const { return eigenvalues.back(); }
};

/// tau = 1e-9 * max(1, |mu_1|, |mu_n|); |mu| <= tau counts as zero and is
/// excluded from s_plus / s_minus.
double zero_tolerance(const std::vector<double>& eigenvalues);

SpectralSummary summarize(std::vector<double> eigenvalues);
SpectralSummary summarize(const SymmetricMatrix& x);
SpectralSummary summarize(const HermitianMatrix& x);
SpectralSummary summarize(const Graph& g);

struct LaplacianSpectra {
  std::vector<double> theta;  // L = D - A, non-increasing, theta.back() ~ 0
  std::vector<double> delta;  // Q = D + A, non-increasing
};

LaplacianSpectra laplacian_spectra(const Graph& g);

}  // namespace qchrom::spectral
