#include "qchrom/random.hpp"

#include <algorithm>
#include <vector>

#include "qchrom/errors.hpp"

namespace qchrom::random {

CMatrix gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal;
  CMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

CMatrix unitary(Eigen::Index m, Rng& rng) {
  Eigen::HouseholderQR<CMatrix> qr(gaussian(m, m, rng));
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

CMatrix hermitian(Eigen::Index m, Rng& rng) {
  const CMatrix g = gaussian(m, m, rng);
  return 0.5 * (g + g.adjoint());
}

pinching::ProjectorFamily projector_family(Eigen::Index m, std::size_t c,
                                           std::uint64_t seed) {
  if (c == 0 || static_cast<Eigen::Index>(c) > m) {
    throw StructuralError("random projector family needs 1 <= c <= m");
  }
  Rng rng(seed);
  const CMatrix u = unitary(m, rng);

  // c - 1 distinct cut points in 1..m-1.
  std::vector<Eigen::Index> cuts(static_cast<std::size_t>(m - 1));
  for (Eigen::Index i = 0; i < m - 1; ++i) cuts[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(c - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(m);

  std::vector<CMatrix> qs;
  for (std::size_t k = 0; k < c; ++k) {
    const auto cols = u.middleCols(cuts[k], cuts[k + 1] - cuts[k]);
    qs.push_back(cols * cols.adjoint());
  }
  return pinching::ProjectorFamily(std::move(qs));
}

}  // namespace qchrom::random
