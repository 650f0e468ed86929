#include <doctest.h>

#include <numbers>

#include "qchrom/errors.hpp"
#include "qchrom/exact.hpp"
#include "qchrom/generators.hpp"
#include "qchrom/pinching.hpp"
#include "qchrom/random.hpp"
#include "support.hpp"

using namespace qchrom;
using namespace qchrom::pinching;

namespace {

CMatrix diag(std::initializer_list<Complex> xs) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v.asDiagonal();
}

}  // namespace

TEST_SUITE("pinching") {

TEST_CASE("family validation") {
  CHECK_NOTHROW(ProjectorFamily({CMatrix::Identity(3, 3)}));
  CHECK_THROWS_AS(ProjectorFamily({}), StructuralError);
  CHECK_THROWS_AS(ProjectorFamily({diag({1, 0})}), StructuralError);  // not a resolution
  CHECK_THROWS_AS(ProjectorFamily({diag({1, 1}), diag({0, 0.5})}), StructuralError);
  CHECK_THROWS_AS(ProjectorFamily({diag({1, 0}), CMatrix::Identity(3, 3)}), StructuralError);
  // Hermitian, sums to I, but not idempotent.
  CHECK_THROWS_AS(ProjectorFamily({diag({0.5, 1}), diag({0.5, 0})}), StructuralError);
  const auto d = diagnose(std::vector<CMatrix>{diag({1, 0}), diag({1, 1})});
  CHECK(d.resolution == doctest::Approx(1.0));
  CHECK(d.orthogonality == doctest::Approx(1.0));
  CHECK_FALSE(d.valid());
}

TEST_CASE("pinch examples") {
  random::Rng rng(1);
  const CMatrix x = random::gaussian(4, 4, rng);

  CHECK((pinch(ProjectorFamily({CMatrix::Identity(4, 4)}), x) - x).norm() == 0.0);

  const std::vector<std::size_t> singletons = {0, 1, 2, 3};
  const auto dephase = standard_basis_partition(singletons, 4);
  CHECK((pinch(dephase, x) - CMatrix(x.diagonal().asDiagonal())).norm() <= 1e-12);

  // Blocks of sizes 2, 1, 3: off-diagonal blocks vanish, diagonal blocks stay.
  const std::vector<std::size_t> sizes = {2, 1, 3};
  const auto blocks = contiguous_partition(sizes);
  const CMatrix y = random::gaussian(6, 6, rng);
  const CMatrix py = pinch(blocks, y);
  CMatrix want = CMatrix::Zero(6, 6);
  want.block(0, 0, 2, 2) = y.block(0, 0, 2, 2);
  want.block(2, 2, 1, 1) = y.block(2, 2, 1, 1);
  want.block(3, 3, 3, 3) = y.block(3, 3, 3, 3);
  CHECK((py - want).norm() <= 1e-12);

  CHECK_THROWS_AS(pinch(blocks, x), StructuralError);
}

TEST_CASE("twirling unitary examples") {
  const auto two = ProjectorFamily({diag({1, 0}), diag({0, 1})});
  CHECK((twirling_unitary(two).matrix() - diag({1, -1})).norm() <= 1e-15);

  const auto one = ProjectorFamily({CMatrix::Identity(3, 3)});
  CHECK((twirling_unitary(one).matrix() - CMatrix::Identity(3, 3)).norm() <= 1e-15);
  CHECK(twirling_unitary(one).order() == 1);

  const std::vector<std::size_t> labels = {0, 1, 2};
  const auto three = standard_basis_partition(labels, 3);
  const Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
  CHECK((twirling_unitary(three).matrix() - diag({1, w, w * w})).norm() <= 1e-14);

  CHECK_THROWS_AS(TwirlingUnitary(CMatrix::Identity(2, 2) * 2.0, 1), StructuralError);
  CHECK_THROWS_AS(TwirlingUnitary(diag({1, -1}), 3), StructuralError);  // U^3 != I
  CHECK_NOTHROW(TwirlingUnitary(diag({1, -1}), 2));
}

TEST_CASE("twirl examples") {
  random::Rng rng(2);
  const CMatrix x = random::gaussian(5, 5, rng);
  const auto one = twirling_unitary(ProjectorFamily({CMatrix::Identity(5, 5)}));
  CHECK((twirl(one, x) - x).norm() <= 1e-14);

  const std::vector<std::size_t> labels = {0, 1, 1, 2, 0};
  const auto f = standard_basis_partition(labels, 3);
  const auto u = twirling_unitary(f);
  // Anything in the commutant of U (block-diagonal w.r.t. the labels) is fixed.
  const CMatrix fixed = pinch(f, x);
  CHECK((twirl(u, fixed) - fixed).norm() <= 1e-12);
  CHECK((twirl(u, x) - pinch(f, x)).norm() <= 1e-12 * (1 + x.norm()));
}

TEST_CASE("U^l equals sum_k w^{kl} Q_k") {
  const auto f = random::projector_family(8, 4, 77);
  const auto u = twirling_unitary(f);
  for (std::size_t l = 0; l < 9; ++l) {
    CMatrix want = CMatrix::Zero(8, 8);
    for (std::size_t k = 0; k < 4; ++k) {
      want += std::polar(1.0, 2 * std::numbers::pi * double(k * l) / 4.0) * f[k];
    }
    CHECK((u.power(l) - want).norm() <= 1e-10);
  }
}

TEST_CASE("annihilation residual") {
  const std::vector<std::size_t> sizes = {2, 2};
  const auto f = contiguous_partition(sizes);
  CHECK(annihilation_residual(f, CMatrix::Zero(4, 4)) == 0.0);

  CMatrix x = CMatrix::Zero(4, 4);
  x(0, 1) = Complex(3, 4);
  CHECK(annihilation_residual(f, x) == doctest::Approx(5.0));
  CHECK_FALSE(annihilates(f, x));

  // A proper coloring of C_5 yields a partition pinching that annihilates A.
  const auto g = gen::cycle(5);
  const std::vector<std::size_t> colors = {0, 1, 0, 1, 2};
  const auto color_classes = standard_basis_partition(colors, 3);
  const CMatrix a = adjacency(g).cast<Complex>();
  CHECK(annihilation_residual(color_classes, a) <= 1e-12);
  CHECK(annihilates(color_classes, a));
}

TEST_CASE("pinching equals twirling on random families") {
  std::mt19937_64 rng(314);
  random::Rng mrng(315);
  for (int i = 0; i < 100; ++i) {
    const auto m = static_cast<Eigen::Index>(1 + rng() % 16);
    const std::size_t c = 1 + rng() % std::min<std::size_t>(6, static_cast<std::size_t>(m));
    const auto f = random::projector_family(m, c, rng());
    const CMatrix x = random::gaussian(m, m, mrng);
    const double residual = (pinch(f, x) - twirl(twirling_unitary(f), x)).norm();
    CHECK(residual <= 1e-8 * (1 + x.norm()));
  }
}

TEST_CASE("pinching is trace preserving, unital, idempotent and contractive") {
  std::mt19937_64 rng(42);
  random::Rng mrng(43);
  for (int i = 0; i < 60; ++i) {
    const auto m = static_cast<Eigen::Index>(2 + rng() % 12);
    const std::size_t c = 1 + rng() % static_cast<std::size_t>(m);
    const auto f = random::projector_family(m, c, rng());
    const CMatrix x = random::gaussian(m, m, mrng);
    const CMatrix px = pinch(f, x);
    CHECK(std::abs(px.trace() - x.trace()) <= 1e-9 * (1 + x.norm()));
    CHECK((pinch(f, CMatrix::Identity(m, m)) - CMatrix::Identity(m, m)).norm() <= 1e-8);
    CHECK((pinch(f, px) - px).norm() <= 1e-8 * (1 + x.norm()));
    CHECK(px.norm() <= x.norm() + 1e-8);

    const CMatrix h = random::hermitian(m, mrng);
    const CMatrix ph = pinch(f, h);
    CHECK((ph - ph.adjoint()).norm() <= 1e-10 * (1 + h.norm()));
  }
}

TEST_CASE("classical coloring identity: sum_l U^l A U^-l = 0") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const auto g = support::random_graph(rng, 2, 9);
    const auto chi = exact::chromatic_number(g);
    const std::size_t c = chi.chromatic();
    const auto n = static_cast<Eigen::Index>(g.order());
    Eigen::VectorXcd phases(n);
    for (Eigen::Index v = 0; v < n; ++v) {
      phases(v) = std::polar(1.0, 2 * std::numbers::pi *
                                      double(chi.coloring[static_cast<std::size_t>(v)]) /
                                      double(c));
    }
    const CMatrix u = phases.asDiagonal();
    const CMatrix a = adjacency(g).cast<Complex>();
    CMatrix sum = CMatrix::Zero(n, n);
    CMatrix p = CMatrix::Identity(n, n);
    for (std::size_t l = 0; l < c; ++l) {
      sum += p * a * p.adjoint();
      p = p * u;
    }
    CHECK(sum.norm() <= 1e-9 * (1 + a.norm()));
  }
}

TEST_CASE("random projector families are deterministic and valid") {
  const auto a = random::projector_family(10, 3, 5);
  const auto b = random::projector_family(10, 3, 5);
  for (std::size_t k = 0; k < 3; ++k) CHECK((a[k] - b[k]).norm() == 0.0);
  CHECK(diagnose(a.projectors()).valid());
  CHECK_THROWS_AS(random::projector_family(3, 4, 1), StructuralError);
}

}  // TEST_SUITE
