#include <doctest.h>

#include <random>

#include "qchrom/errors.hpp"
#include "qchrom/exact.hpp"
#include "qchrom/generators.hpp"
#include "qchrom/quantum_cert.hpp"
#include "qchrom/random.hpp"
#include "support.hpp"

using namespace qchrom;
using namespace qchrom::cert;

namespace {

const exact::Coloring kC5Coloring = {0, 1, 0, 1, 2};

double entrywise_distance(const QuantumColoringCert& a, const QuantumColoringCert& b) {
  REQUIRE(a.vertices() == b.vertices());
  REQUIRE(a.colors() == b.colors());
  REQUIRE(a.dim() == b.dim());
  double worst = 0;
  for (std::size_t i = 0; i < a.projectors().size(); ++i) {
    worst = std::max(worst, (a.projectors()[i] - b.projectors()[i]).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace

TEST_SUITE("quantum_cert") {

TEST_CASE("classical colorings verify as d=1 and d=2 certificates") {
  const auto g = gen::cycle(5);
  const auto c1 = exact::proper_coloring_to_certificate(g, kC5Coloring, 1);
  const auto r1 = verify_certificate(g, c1);
  CHECK(r1.accepted);
  CHECK(r1.worst_orthogonality == 0.0);
  CHECK(r1.orthogonality.size() == g.size() * 3);
  CHECK(r1.completeness.size() == 5);

  const auto c2 = exact::proper_coloring_to_certificate(g, kC5Coloring, 2);
  const auto r2 = verify_certificate(g, c2);
  CHECK(r2.accepted);
  for (const auto& p : r2.projectors) {
    CHECK(p.rank == (kC5Coloring[p.v] == p.k ? 2u : 0u));
  }
}

TEST_CASE("monochromatic edge is rejected with residual 1 on that edge") {
  const auto g = gen::cycle(5);
  auto bad = kC5Coloring;
  bad[1] = 0;  // edge (0,1) now monochromatic in color 0
  std::vector<CMatrix> ps;
  for (std::size_t v = 0; v < 5; ++v) {
    for (std::size_t k = 0; k < 3; ++k) ps.push_back(CMatrix::Constant(1, 1, bad[v] == k ? 1.0 : 0.0));
  }
  const QuantumColoringCert c(5, 3, 1, ps);
  const auto r = verify_certificate(g, c);
  CHECK_FALSE(r.accepted);
  CHECK(r.worst_orthogonality == doctest::Approx(1.0));
  const auto* w = r.worst_orthogonality_check();
  REQUIRE(w != nullptr);
  CHECK(w->v == 0);
  CHECK(w->w == 1);
  CHECK(w->k == 0);
}

TEST_CASE("verification reports projector and completeness failures") {
  const auto g = gen::complete(2);
  // P_{0,0} = 0.5 (not idempotent), completeness broken at vertex 0.
  const QuantumColoringCert c(2, 2, 1,
                              {CMatrix::Constant(1, 1, 0.5), CMatrix::Zero(1, 1),
                               CMatrix::Zero(1, 1), CMatrix::Identity(1, 1)});
  const auto r = verify_certificate(g, c);
  CHECK_FALSE(r.accepted);
  CHECK(r.worst_projector == doctest::Approx(0.25));
  CHECK(r.worst_completeness == doctest::Approx(0.5));
}

TEST_CASE("structural errors are distinct from rejection") {
  const auto c = exact::proper_coloring_to_certificate(gen::complete(2), {0, 1});
  CHECK_THROWS_AS(verify_certificate(gen::complete(3), c), StructuralError);
  CHECK_THROWS_AS(QuantumColoringCert(2, 2, 1, {}), StructuralError);
  CHECK_THROWS_AS(QuantumColoringCert(1, 1, 2, {CMatrix::Identity(2, 1)}), StructuralError);
  CHECK_THROWS_AS(QuantumColoringCert(0, 1, 1, {}), StructuralError);
}

TEST_CASE("lift of a classical K3 coloring") {
  const auto g = gen::complete(3);
  const auto c = exact::proper_coloring_to_certificate(g, {0, 1, 2});
  const auto lifted = lift(g, c);
  const auto& f = lifted.family();
  REQUIRE(f.count() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CMatrix want = CMatrix::Zero(3, 3);
    want(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = 1.0;
    CHECK((f[k] - want).norm() == 0.0);
  }
  CHECK(pinching::annihilation_residual(f, adjacency(g).cast<Complex>()) <= 1e-12);
}

TEST_CASE("lift satisfies annihilation and fixed-point properties") {
  std::mt19937_64 rng(12);
  random::Rng mrng(13);
  for (int i = 0; i < 25; ++i) {
    const auto g = support::random_graph(rng, 2, 7);
    const auto col = exact::chromatic_number(g);
    const std::size_t d = 1 + rng() % 3;
    const auto c = support::mixed_layer_certificate(g, col.coloring, col.chromatic(), d, rng());
    REQUIRE(verify_certificate(g, c).accepted);
    const auto lifted = lift(g, c);
    const auto& f = lifted.family();
    const auto dd = static_cast<Eigen::Index>(d);
    const CMatrix a = kron_identity(adjacency(g), dd);
    CHECK(pinching::annihilation_residual(f, a) <= 1e-8 * (1 + a.norm()));
    CHECK(fixed_point_residual(f, g.order(), d) <= 1e-8);

    // A random real diagonal E.
    Eigen::VectorXd e(static_cast<Eigen::Index>(g.order()));
    for (Eigen::Index v = 0; v < e.size(); ++v) e(v) = random::gaussian(1, 1, mrng)(0, 0).real();
    const CMatrix ed = kron_identity(Eigen::MatrixXd(e.asDiagonal()), dd);
    CHECK((pinching::pinch(f, ed) - ed).norm() <= 1e-8 * (1 + ed.norm()));

    // Pinching and twirling agree on the lifted family.
    const auto u = pinching::twirling_unitary(f);
    CHECK((pinching::pinch(f, a) - pinching::twirl(u, a)).norm() <= 1e-8 * (1 + a.norm()));
    for (int j = 0; j < 5; ++j) {
      const CMatrix x = random::hermitian(f.dim(), mrng);
      CHECK((pinching::pinch(f, x) - pinching::twirl(u, x)).norm() <= 1e-8 * (1 + x.norm()));
    }
  }
}

TEST_CASE("lift refuses unverified certificates") {
  const auto g = gen::complete(2);
  const QuantumColoringCert same(2, 1, 1, {CMatrix::Identity(1, 1), CMatrix::Identity(1, 1)});
  CHECK_THROWS_AS(lift(g, same), RefusalError);
  CHECK_THROWS_AS(lima_identity_residual(g, same), RefusalError);
}

TEST_CASE("extraction inverts lifting") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    const auto g = support::random_graph(rng, 1, 7);
    const auto col = exact::chromatic_number(g);
    const std::size_t d = 1 + rng() % 3;
    const auto c = support::mixed_layer_certificate(g, col.coloring, col.chromatic(), d, rng());
    const auto back = extract_certificate(g, lift(g, c).family(), d);
    CHECK(entrywise_distance(back, c) <= 1e-10);
  }
}

TEST_CASE("extraction from a standard-basis color partition") {
  const auto g = gen::cycle(5);
  const auto f = pinching::standard_basis_partition(kC5Coloring, 3);
  const auto c = extract_certificate(g, f, 1);
  for (std::size_t v = 0; v < 5; ++v) {
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(c.p(v, k)(0, 0) == Complex(kC5Coloring[v] == k ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("extraction rejects off-block noise and non-annihilating families") {
  const auto g = gen::petersen();
  const auto col = exact::chromatic_number(g);
  const auto c = support::mixed_layer_certificate(g, col.coloring, 3, 2, 4);
  const auto lifted = lift(g, c);
  const auto noisy = support::off_block_rotation(lifted.family(), 10, 2, 1e-3, 5);
  try {
    extract_certificate(g, noisy, 2);
    FAIL("expected rejection");
  } catch (const RefusalError& e) {
    CHECK(std::string(e.what()).find("block (") != std::string::npos);
  }

  // Block diagonal but not annihilating: all vertices in one class.
  const std::vector<std::size_t> labels(10, 0);
  const auto trivial = pinching::standard_basis_partition(labels, 1);
  try {
    extract_certificate(g, trivial, 1);
    FAIL("expected rejection");
  } catch (const RefusalError& e) {
    CHECK(std::string(e.what()).find("annihilate") != std::string::npos);
  }

  CHECK_THROWS_AS(extract_certificate(g, lifted.family(), 3), StructuralError);
}

TEST_CASE("lima identity residual") {
  const auto k2 = gen::complete(2);
  const auto c_k2 = exact::proper_coloring_to_certificate(k2, {0, 1});
  CHECK(lima_identity_residual(k2, c_k2) <= lima_identity_tolerance(k2, 2));

  const auto c5 = gen::cycle(5);
  const auto cert1 = exact::proper_coloring_to_certificate(c5, kC5Coloring, 1);
  const auto cert2 = exact::proper_coloring_to_certificate(c5, kC5Coloring, 2);
  CHECK(lima_identity_residual(c5, cert1) <= 1e-12);
  CHECK(lima_identity_residual(c5, cert2) <= 1e-12);
  CHECK(lima_identity_residual(c5, support::mixed_layer_certificate(c5, kC5Coloring, 3, 3, 8)) <=
        lima_identity_tolerance(c5, 3));
  CHECK(lima_identity_tolerance(k2, 2) == doctest::Approx(1e-7 * (1 + 2 * std::sqrt(8.0))));
}

TEST_CASE("certificates restricted to an edge subgraph still verify") {
  std::mt19937_64 rng(50);
  for (int i = 0; i < 20; ++i) {
    const auto g = support::random_graph(rng, 3, 8);
    const auto col = exact::chromatic_number(g);
    const auto c = support::mixed_layer_certificate(g, col.coloring, col.chromatic(), 2, rng());
    std::vector<Edge> kept;
    for (const auto& e : g.edges()) {
      if (rng() % 2) kept.push_back(e);
    }
    CHECK(verify_certificate(Graph(g.order(), kept), c).accepted);
  }
}

TEST_CASE("flipping one endpoint color always exposes a residual of 1") {
  std::mt19937_64 rng(60);
  int tried = 0;
  while (tried < 30) {
    const auto g = support::random_graph(rng, 2, 8);
    if (g.size() == 0) continue;
    ++tried;
    auto coloring = exact::chromatic_number(g).coloring;
    const auto [v, w] = g.edges()[rng() % g.size()];
    coloring[v] = coloring[w];
    const std::size_t c = exact::color_count(coloring);
    std::vector<CMatrix> ps;
    for (std::size_t x = 0; x < g.order(); ++x) {
      for (std::size_t k = 0; k < c; ++k) ps.push_back(CMatrix::Constant(1, 1, coloring[x] == k ? 1.0 : 0.0));
    }
    const auto r = verify_certificate(g, QuantumColoringCert(g.order(), c, 1, ps));
    CHECK_FALSE(r.accepted);
    CHECK(r.worst_orthogonality >= 1 - 1e-8);
  }
}

}  // TEST_SUITE
