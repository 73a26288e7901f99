#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "carank/closure.hpp"
#include "carank/io.hpp"
#include "carank/rank.hpp"
#include "carank/wreath.hpp"
#include "oracle_helpers.hpp"

using namespace carank;

TEST_CASE("divisor stats") {
  const auto s12 = divisor_stats(12);
  CHECK(s12.di == 6);
  CHECK(s12.di_plus == 4);
  const auto s15 = divisor_stats(15);
  CHECK(s15.di == 4);
  CHECK(s15.di_plus == 0);
  const auto s8 = divisor_stats(8);
  CHECK(s8.di == 4);
  CHECK(s8.di_plus == 3);
  CHECK_THROWS_AS(divisor_stats(1), InvalidArgument);
}

TEST_CASE("divisibility digraph and its edge count") {
  const auto g2 = divisibility_digraph(2);
  CHECK(g2.vertices == std::vector<std::uint64_t>{1, 2});
  const std::set<std::pair<std::uint64_t, std::uint64_t>> e2(g2.edges.begin(), g2.edges.end());
  CHECK(e2 == std::set<std::pair<std::uint64_t, std::uint64_t>>{{1, 1}, {2, 1}, {2, 2}});
  CHECK(edge_count(2) == 3);
  CHECK(edge_count(6) == 9);
  CHECK(edge_count(12) == 18);

  for (std::uint64_t n = 2; n <= 500; ++n)
    CHECK(edge_count(n) == divisibility_digraph(n).edges.size());

  // every vertex has a self-loop and an edge to 1
  const auto g12 = divisibility_digraph(12);
  const std::set<std::pair<std::uint64_t, std::uint64_t>> e12(g12.edges.begin(),
                                                              g12.edges.end());
  for (std::uint64_t v : g12.vertices) {
    CHECK(e12.count({v, v}) == 1);
    CHECK(e12.count({v, 1}) == 1);
  }
}

TEST_CASE("idempotent collapses, representative-aligned") {
  const Params p(3, 2);
  const auto os = OrbitStructure::enumerate(p);
  const Orbit& constant0 = os.orbits()[0];   // {0}
  const Orbit& orbit124 = os.orbits()[1];    // {1,2,4}
  const Orbit& orbit365 = os.orbits()[2];    // {3,6,5}
  const Orbit& constant7 = os.orbits()[3];   // {7}

  CHECK(idempotent_tau(p, orbit124, constant0).table() ==
        std::vector<Config>{0, 0, 0, 3, 0, 5, 6, 7});
  CHECK(idempotent_tau(p, constant7, constant0).table() ==
        std::vector<Config>{0, 1, 2, 3, 4, 5, 6, 0});

  // representative alignment maps 1 -> 3, 2 -> 6, 4 -> 5
  CHECK(idempotent_tau(p, orbit124, orbit365).table() ==
        std::vector<Config>{0, 3, 6, 3, 5, 5, 6, 7});
  // the alternative base-point choice (1->6)(2->5)(4->3) is another valid
  // equivariant collapse of the same pair
  const auto alt = parse_notation("(1->6)(2->5)(4->3)", p);
  CHECK(compose(alt, alt) == alt);
  CHECK(kernel_of(alt).num_nonsingleton() == 3);

  CHECK_THROWS_AS(idempotent_tau(p, orbit124, orbit124), SameOrbit);

  const Params p6(6, 2);
  const auto os6 = OrbitStructure::enumerate(p6);
  const Orbit& size2 = os6.orbits()[os6.orbits_of_size(2)[0]];
  const Orbit& size3 = os6.orbits()[os6.orbits_of_size(3)[0]];
  CHECK_THROWS_AS(idempotent_tau(p6, size2, size3), NonDividingSizes);
}

TEST_CASE("idempotent_tau properties across grids") {
  for (const Params& p :
       {Params(2, 2), Params(3, 2), Params(4, 2), Params(6, 2), Params(2, 3), Params(3, 3)}) {
    const auto os = OrbitStructure::enumerate(p);
    for (std::uint32_t i = 0; i < os.orbits().size(); ++i) {
      for (std::uint32_t j = 0; j < os.orbits().size(); ++j) {
        if (i == j) continue;
        const Orbit& src = os.orbits()[i];
        const Orbit& tgt = os.orbits()[j];
        if (src.size % tgt.size != 0) continue;
        const auto tau = idempotent_tau(p, src, tgt);
        CHECK(compose(tau, tau) == tau);
        CHECK(commutes_with_shift(tau.table(), p));
        for (Config c : src.members)
          CHECK(os.orbit_id(tau.apply(c)) == os.orbit_id(tgt.representative));
        for (Config c = 0; c < p.num_states(); ++c)
          if (os.orbit_id(c) != i) CHECK(tau.apply(c) == c);
      }
    }
  }
}

TEST_CASE("relative rank closed form") {
  CHECK(relative_rank_value(3, 2) == 3);
  CHECK(relative_rank_value(2, 2) == 2);
  CHECK(relative_rank_value(6, 3) == 9);
  CHECK(relative_rank_value(6, 2) == 8);
  CHECK(relative_rank_value(15, 2) == 9);
}

TEST_CASE("rank bounds for the invertible group") {
  CHECK(rank_ica_bounds(4, 2) == std::pair<std::uint64_t, std::uint64_t>{4, 4});
  CHECK(rank_ica_bounds(6, 2) == std::pair<std::uint64_t, std::uint64_t>{5, 5});
  CHECK(rank_ica_bounds(15, 2) == std::pair<std::uint64_t, std::uint64_t>{4, 6});
  CHECK(rank_ica_bounds(2, 2) == std::pair<std::uint64_t, std::uint64_t>{2, 2});
  CHECK(rank_ica_bounds(2, 3) == std::pair<std::uint64_t, std::uint64_t>{3, 3});
  CHECK(rank_ica_bounds(8, 5) == std::pair<std::uint64_t, std::uint64_t>{7, 7});
}

TEST_CASE("rank reports") {
  const auto r22 = rank_ca_report(2, 2);
  CHECK(r22.exact);
  CHECK(r22.rank_lower == 4);

  const auto r32 = rank_ca_report(3, 2);
  CHECK(r32.exact);
  CHECK(r32.rank_lower == 5);

  const auto r62 = rank_ca_report(6, 2);
  CHECK(r62.exact);
  CHECK(r62.rank_lower == 13);

  const auto r152 = rank_ca_report(15, 2);
  CHECK_FALSE(r152.exact);
  CHECK(r152.rank_lower == 13);
  CHECK(r152.rank_upper == 15);

  // structural invariants on a grid of cases
  for (std::uint64_t n = 2; n <= 40; ++n) {
    for (std::uint32_t q = 2; q <= 4; ++q) {
      const auto r = rank_ca_report(n, q);
      CHECK(r.rank_lower == r.ica_lower + r.relative_rank);
      CHECK(r.rank_upper == r.ica_upper + r.relative_rank);
      CHECK(r.epsilon_max == r.ica_upper - r.ica_lower);
      CHECK(r.exact == (r.rank_lower == r.rank_upper));
      CHECK(r.rank_lower <= r.rank_upper);
    }
  }
}

TEST_CASE("closed forms for primes, 2-powers and their products") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
      const auto r = rank_ca_report(p, q);
      CHECK(r.exact);
      CHECK(r.rank_lower == 5);
    }
    for (std::uint64_t k = 1; k <= 6; ++k) {
      const auto r = rank_ca_report(std::uint64_t{1} << k, q);
      CHECK(r.exact);
      const std::uint64_t expected = k * (k + 7) / 2 + (q >= 3 ? 2 : 0);
      CHECK(r.rank_lower == expected);
    }
    for (std::uint64_t k = 1; k <= 6; ++k) {
      for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
        const std::uint64_t n = (std::uint64_t{1} << k) * p;
        if (n > 200) continue;
        const auto r = rank_ca_report(n, q);
        CHECK(r.exact);
        const std::uint64_t expected = k * (3 * k + 17) / 2 + (q >= 3 ? 5 : 3);
        CHECK(r.rank_lower == expected);
        // the invertible part alone is 4k+1 / 4k+2
        CHECK(r.ica_lower == 4 * k + (q >= 3 ? 2 : 1));
      }
    }
  }
}

TEST_CASE("standard generating sets generate") {
  const Params p32(3, 2);
  const auto gens32 = standard_generating_set(p32);
  CHECK(gens32.size() == 5);
  CHECK(semigroup_closure(GeneratorSet::of(p32, gens32)).size() == 256);

  const Params p22(2, 2);
  const auto gens22 = standard_generating_set(p22);
  CHECK(gens22.size() == 4);
  CHECK(semigroup_closure(GeneratorSet::of(p22, gens22)).size() == 16);
  // exactly the four quoted generators, as a set
  std::set<std::vector<Config>> got;
  for (const auto& g : gens22) got.insert(g.table());
  const std::set<std::vector<Config>> expected{
      {0, 2, 1, 3},  // (1,2)
      {0, 0, 0, 3},  // ({1,2} -> 0)
      {3, 1, 2, 0},  // (0,3)
      {0, 1, 2, 0},  // (3 -> 0)
  };
  CHECK(got == expected);

  const Params p23(2, 3);
  const auto gens23 = standard_generating_set(p23);
  CHECK(gens23.size() == 6);
  CHECK(semigroup_closure(GeneratorSet::of(p23, gens23)).size() == 19683);
}

TEST_CASE("standard set size equals the rank whenever the rank is exact") {
  for (const Params& p : {Params(2, 2), Params(3, 2), Params(4, 2), Params(6, 2),
                          Params(8, 2), Params(12, 2), Params(2, 3), Params(3, 3)}) {
    const auto r = rank_ca_report(p.n, p.q);
    REQUIRE(r.exact);
    CHECK(standard_generating_set(p).size() == r.rank_lower);
  }
}

TEST_CASE("every CA maps orbits onto orbits of dividing size") {
  std::mt19937_64 rng(0xABCD);
  for (const Params& p : {Params(3, 2), Params(4, 2)}) {
    const auto os = OrbitStructure::enumerate(p);
    for (int i = 0; i < 500; ++i) {
      const auto ca = oracle::random_ca(p, rng);
      for (const Orbit& orbit : os.orbits()) {
        std::set<Config> image;
        for (Config c : orbit.members) image.insert(ca.apply(c));
        const Orbit& target = os.orbits()[os.orbit_id(*image.begin())];
        CHECK(orbit.size % target.size == 0);
        CHECK(image == std::set<Config>(target.members.begin(), target.members.end()));
      }
    }
  }
}

TEST_CASE("each idempotent in the standard set is load-bearing") {
  const Params p(3, 2);
  const auto gens = standard_generating_set(p);
  REQUIRE(gens.size() == 5);
  // generators 2, 3, 4 are the three idempotents
  for (std::size_t drop = 2; drop < 5; ++drop) {
    std::vector<CellularAutomaton> reduced;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (i != drop) reduced.push_back(gens[i]);
    CHECK(semigroup_closure(GeneratorSet::of(p, reduced)).size() < 256);
  }
}
