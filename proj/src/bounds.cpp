#include "qchrom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "qchrom/errors.hpp"

namespace qchrom::bounds {

WeightMatrix::WeightMatrix(const Eigen::MatrixXcd& w) {
  if (w.rows() != w.cols()) {
    throw StructuralError("weight matrix must be square");
  }
  const double skew = (w - w.adjoint()).norm() * 0.5;
  if (skew > 1e-8 * (1.0 + w.norm())) {
    throw StructuralError("weight matrix is not Hermitian (||W - W^H||/2 = " +
                          std::to_string(skew) + ")");
  }
  entries_ = 0.5 * (w + w.adjoint());
}

Eigen::MatrixXcd weighted_adjacency(const Graph& g, const WeightMatrix& w) {
  if (static_cast<std::size_t>(w.order()) != g.order()) {
    throw StructuralError("weight matrix order " + std::to_string(w.order()) +
                          " does not match graph order " +
                          std::to_string(g.order()));
  }
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    const auto i = static_cast<Eigen::Index>(u);
    const auto j = static_cast<Eigen::Index>(v);
    m(i, j) = w.entries()(i, j);
    m(j, i) = w.entries()(j, i);
  }
  return m;
}

std::optional<double> hoffman(const spectral::SpectralSummary& s) {
  if (s.inertia.n_minus == 0 || s.inertia.n_plus == 0) return std::nullopt;
  return 1.0 + s.largest() / std::abs(s.smallest());
}

std::optional<double> lima(const Graph& g,
                           const spectral::LaplacianSpectra& ls) {
  if (g.size() == 0) return std::nullopt;
  const double two_m = 2.0 * static_cast<double>(g.size());
  const double denom =
      two_m - static_cast<double>(g.order()) * ls.delta.back();
  if (denom <= 1e-12 * two_m) return std::nullopt;
  return 1.0 + two_m / denom;
}

std::optional<double> kolotilina(const spectral::SpectralSummary& s,
                                 const spectral::LaplacianSpectra& ls) {
  if (s.inertia.n_plus == 0 || s.inertia.n_minus == 0) return std::nullopt;
  const double mu1 = s.largest();
  const double denom = mu1 - ls.delta.front() + ls.theta.front();
  if (denom <= s.zero_tolerance) return std::nullopt;
  return 1.0 + mu1 / denom;
}

std::optional<double> inertia_bound(const spectral::SpectralSummary& s) {
  const auto plus = static_cast<double>(s.inertia.n_plus);
  const auto minus = static_cast<double>(s.inertia.n_minus);
  if (plus == 0 || minus == 0) return std::nullopt;
  return 1.0 + std::max(plus / minus, minus / plus);
}

std::optional<double> ando_lin(const spectral::SpectralSummary& s) {
  if (s.inertia.n_plus == 0 || s.inertia.n_minus == 0) return std::nullopt;
  return 1.0 + std::max(s.s_plus / s.s_minus, s.s_minus / s.s_plus);
}

std::string_view to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::kComputed: return "computed";
    case BoundStatus::kInapplicable: return "inapplicable";
    case BoundStatus::kNotComputedWeighted: return "not computed (weighted)";
  }
  return "?";
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kHoffman: return "hoffman";
    case BoundKind::kLima: return "lima";
    case BoundKind::kKolotilina: return "kolotilina";
    case BoundKind::kInertia: return "inertia";
    case BoundKind::kAndoLin: return "ando_lin";
  }
  return "?";
}

const BoundEntry& BoundsReport::operator[](BoundKind kind) const {
  switch (kind) {
    case BoundKind::kHoffman: return hoffman;
    case BoundKind::kLima: return lima;
    case BoundKind::kKolotilina: return kolotilina;
    case BoundKind::kInertia: return inertia;
    case BoundKind::kAndoLin: return ando_lin;
  }
  return hoffman;
}

BoundEntry& BoundsReport::operator[](BoundKind kind) {
  return const_cast<BoundEntry&>(std::as_const(*this)[kind]);
}

int ceil_bound(double x) {
  return static_cast<int>(std::ceil(x - 1e-9 * std::max(1.0, std::abs(x))));
}

namespace {

BoundEntry entry(std::optional<double> value) {
  if (!value) return {};
  return {*value, BoundStatus::kComputed};
}

void finish(BoundsReport& r) {
  r.best = 1.0;
  for (auto kind : kAllBounds) {
    if (r[kind].applicable()) r.best = std::max(r.best, r[kind].value);
  }
  r.best_ceil = ceil_bound(r.best);
}

bool equals_adjacency(const Graph& g, const Eigen::MatrixXcd& weighted) {
  return (weighted - adjacency(g).cast<std::complex<double>>())
             .cwiseAbs()
             .maxCoeff() <= 1e-12;
}

}  // namespace

BoundsReport all_bounds(const Graph& g,
                        const std::optional<WeightMatrix>& weights) {
  if (g.order() == 0) throw StructuralError("bounds of an empty graph");
  BoundsReport r;
  if (g.size() == 0) {
    finish(r);
    return r;
  }

  if (weights) {
    const Eigen::MatrixXcd wa = weighted_adjacency(g, *weights);
    if (!equals_adjacency(g, wa)) {
      const auto s = spectral::summarize(spectral::HermitianMatrix(wa));
      r.weighted = true;
      r.hoffman = entry(hoffman(s));
      r.inertia = entry(inertia_bound(s));
      r.ando_lin = entry(ando_lin(s));
      r.lima.status = BoundStatus::kNotComputedWeighted;
      r.kolotilina.status = BoundStatus::kNotComputedWeighted;
      finish(r);
      return r;
    }
  }

  const auto s = spectral::summarize(g);
  const auto ls = spectral::laplacian_spectra(g);
  r.hoffman = entry(hoffman(s));
  r.lima = entry(lima(g, ls));
  r.kolotilina = entry(kolotilina(s, ls));
  r.inertia = entry(inertia_bound(s));
  r.ando_lin = entry(ando_lin(s));
  finish(r);
  return r;
}

}  // namespace qchrom::bounds
