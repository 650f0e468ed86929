#pragma once

// Fixtures shared by the unit and acceptance suites.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string>

#include <unistd.h>

#include "qchrom/exact.hpp"
#include "qchrom/generators.hpp"
#include "qchrom/pinching.hpp"
#include "qchrom/quantum_cert.hpp"
#include "qchrom/random.hpp"

namespace support {

using qchrom::CMatrix;
using qchrom::Graph;

/// Random graph with n drawn from [lo, hi] and p from [0.15, 0.85].
inline Graph random_graph(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  const std::size_t n = lo + rng() % (hi - lo + 1);
  const double p = 0.15 + 0.7 * qchrom::gen::unit_interval(rng());
  return qchrom::gen::erdos_renyi(n, p, rng());
}

/// A d-dimensional quantum coloring that is not a scalar tensor: layer i of
/// C^d uses the classical coloring composed with a color permutation, and
/// the whole family is rotated by one random unitary.
inline qchrom::cert::QuantumColoringCert mixed_layer_certificate(
    const Graph& g, const qchrom::exact::Coloring& coloring, std::size_t c,
    std::size_t d, std::uint64_t seed) {
  qchrom::random::Rng rng(seed);
  const auto dd = static_cast<Eigen::Index>(d);
  std::vector<std::vector<std::size_t>> perms(d, std::vector<std::size_t>(c));
  for (auto& p : perms) {
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng);
  }
  const CMatrix u = qchrom::random::unitary(dd, rng);
  std::vector<CMatrix> ps;
  for (std::size_t v = 0; v < g.order(); ++v) {
    for (std::size_t k = 0; k < c; ++k) {
      CMatrix diag = CMatrix::Zero(dd, dd);
      for (std::size_t i = 0; i < d; ++i) {
        if (perms[i][coloring[v]] == k) diag(static_cast<Eigen::Index>(i),
                                             static_cast<Eigen::Index>(i)) = 1.0;
      }
      ps.push_back(u * diag * u.adjoint());
    }
  }
  return qchrom::cert::QuantumColoringCert(g.order(), c, d, std::move(ps));
}

/// Conjugates every projector by exp(i eps H), where H is a random Hermitian
/// matrix supported on the off-diagonal d x d blocks. The result is still a
/// valid projector family but no longer block diagonal.
inline qchrom::pinching::ProjectorFamily off_block_rotation(
    const qchrom::pinching::ProjectorFamily& f, std::size_t n, std::size_t d,
    double eps, std::uint64_t seed) {
  qchrom::random::Rng rng(seed);
  CMatrix h = qchrom::random::hermitian(f.dim(), rng);
  const auto dd = static_cast<Eigen::Index>(d);
  for (std::size_t v = 0; v < n; ++v) {
    const auto o = static_cast<Eigen::Index>(v) * dd;
    h.block(o, o, dd, dd).setZero();
  }
  h /= h.norm();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const Eigen::VectorXcd phases =
      (eig.eigenvalues().cast<qchrom::Complex>() * qchrom::Complex(0, eps))
          .array()
          .exp();
  const CMatrix v =
      eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
  std::vector<CMatrix> qs;
  for (const auto& q : f.projectors()) qs.push_back(v * q * v.adjoint());
  return qchrom::pinching::ProjectorFamily(std::move(qs));
}

/// Temporary file removed on destruction.
class TempFile {
 public:
  explicit TempFile(const std::string& contents, const std::string& ext = ".json") {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("qchrom_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++) + ext);
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace support
