#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qchrom/errors.hpp"
#include "qchrom/exact.hpp"
#include "qchrom/generators.hpp"
#include "support.hpp"

using namespace qchrom;
using namespace qchrom::exact;

TEST_SUITE("exact") {

TEST_CASE("chromatic numbers of named graphs") {
  CHECK(chromatic_number(gen::complete(5)).chromatic() == 5);
  CHECK(oracle::chromatic_by_partitions(gen::petersen()) == 3);
  CHECK(chromatic_number(gen::petersen()).chromatic() == 3);
  CHECK(chromatic_number(gen::cycle(7)).chromatic() == 3);
  CHECK(chromatic_number(gen::cycle(8)).chromatic() == 2);
  CHECK(chromatic_number(gen::empty(4)).chromatic() == 1);
  CHECK(chromatic_number(gen::clebsch()).chromatic() == 4);
  CHECK(chromatic_number(gen::cyclotomic13()).chromatic() == 4);
  const auto gq = chromatic_number(gen::gq24());
  CHECK(gq.status == Status::kComplete);
  CHECK(gq.chromatic() == 6);
  CHECK(is_proper(gen::gq24(), gq.coloring));
  CHECK(color_count(gq.coloring) == 6);
}

TEST_CASE("clique numbers") {
  CHECK(clique_number(gen::clebsch()).clique == 2);
  CHECK(clique_number(gen::gq24()).clique == 3);
  CHECK(clique_number(gen::cycle(6)).clique == 2);
  CHECK(clique_number(gen::complete(6)).clique == 6);
  CHECK(clique_number(gen::empty(3)).clique == 1);
  CHECK(clique_number(gen::cyclotomic13()).clique == oracle::clique_by_subsets(gen::cyclotomic13()));
  const auto big = gen::erdos_renyi(130, 0.5, 4);  // more than two bitset words
  const auto r = clique_number(big);
  CHECK(is_clique(big, r.witness));
  CHECK(r.witness.size() == r.clique);
}

TEST_CASE("exhaustive cross-check against set-partition enumeration, n <= 6") {
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << oracle::pair_count(n)); ++mask) {
      const auto g = oracle::from_mask(n, mask);
      const auto r = solve(g);
      REQUIRE(r.status() == Status::kComplete);
      CHECK(r.chromatic.chromatic() == oracle::chromatic_by_partitions(g));
      CHECK(r.clique.clique == oracle::clique_by_subsets(g));
      ++graphs;
    }
  }
  CHECK(graphs == 1 + 2 + 8 + 64 + 1024 + 32768);
}

TEST_CASE("witnesses validate and bounds are ordered, n <= 9") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const auto g = support::random_graph(rng, 1, 9);
    const auto r = solve(g);
    CHECK(is_proper(g, r.chromatic.coloring));
    CHECK(color_count(r.chromatic.coloring) == r.chromatic.chromatic());
    CHECK(is_clique(g, r.clique.witness));
    CHECK(r.clique.witness.size() == r.clique.clique);
    CHECK(r.clique.clique <= r.chromatic.chromatic());
    CHECK(color_count(dsatur_greedy(g)) >= r.chromatic.chromatic());
    CHECK(is_proper(g, dsatur_greedy(g)));
  }
}

TEST_CASE("deterministic results") {
  const auto g = gen::erdos_renyi(25, 0.4, 3);
  const auto a = solve(g);
  const auto b = solve(g);
  CHECK(a.chromatic.chromatic() == b.chromatic.chromatic());
  CHECK(a.chromatic.coloring == b.chromatic.coloring);
  CHECK(a.clique.witness == b.clique.witness);
}

TEST_CASE("timeout returns a bracket instead of throwing") {
  const auto g = gen::erdos_renyi(90, 0.5, 1);
  const auto r = solve(g, Seconds(0.0));
  CHECK(r.status() == Status::kTimedOut);
  CHECK(r.chromatic.status == Status::kTimedOut);
  CHECK(r.chromatic.lower <= r.chromatic.upper);
  CHECK(r.chromatic.lower >= 1);
  CHECK(is_proper(g, r.chromatic.coloring));
  CHECK(is_clique(g, r.clique.witness));
}

TEST_CASE("coloring to certificate") {
  const auto k2 = gen::complete(2);
  const auto c = proper_coloring_to_certificate(k2, {0, 1});
  CHECK(cert::verify_certificate(k2, c).accepted);

  const auto p = gen::petersen();
  const auto col = chromatic_number(p).coloring;
  const auto c2 = proper_coloring_to_certificate(p, col, 2);
  CHECK(c2.dim() == 2);
  CHECK(c2.colors() == 3);
  const auto r = cert::verify_certificate(p, c2);
  CHECK(r.accepted);
  for (const auto& pc : r.projectors) CHECK((pc.rank == 0 || pc.rank == 2));

  try {
    proper_coloring_to_certificate(gen::cycle(4), {0, 0, 1, 1});
    FAIL("expected refusal");
  } catch (const RefusalError& e) {
    CHECK(std::string(e.what()).find("edge (0,1)") != std::string::npos);
  }
  CHECK_THROWS_AS(proper_coloring_to_certificate(k2, {0}), StructuralError);
}

}  // TEST_SUITE
