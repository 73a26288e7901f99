#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "carank/automaton.hpp"
#include "carank/params.hpp"
#include "oracle_helpers.hpp"

using namespace carank;

namespace {

CellularAutomaton ca_from(const Params& p, std::vector<Config> t) {
  return CellularAutomaton::from_table(p, std::move(t));
}

}  // namespace

TEST_CASE("params validation") {
  CHECK_THROWS_AS(Params(1, 2), InvalidArgument);
  CHECK_THROWS_AS(Params(2, 1), InvalidArgument);
  CHECK(Params(2, 2).num_states() == 4);
  CHECK(Params(3, 2).num_states() == 8);
  // over the default cap of 2^24 states
  CHECK_THROWS_AS(Params(30, 2).num_states(), StateCapExceeded);
  CHECK_THROWS_AS(Params(4, 2, 10).num_states(), StateCapExceeded);
  CHECK(Params(24, 2).num_states() == (1u << 24));
}

TEST_CASE("lexicographic encoding") {
  const Params p22(2, 2), p32(3, 2);
  const std::vector<std::uint32_t> t11{1, 1};
  CHECK(encode_config(t11, p22) == 3);
  const std::vector<std::uint32_t> zeros{0, 0, 0};
  CHECK(encode_config(zeros, p32) == 0);
  const std::vector<std::uint32_t> t101{1, 0, 1};
  CHECK(encode_config(t101, p32) == 5);

  const std::vector<std::uint32_t> bad{2, 0};
  CHECK_THROWS_AS(encode_config(bad, p22), InvalidSymbol);
  const std::vector<std::uint32_t> too_short{1};
  CHECK_THROWS_AS(encode_config(too_short, p22), InvalidArgument);

  // decode(encode(t)) = t across a whole space
  const Params p(3, 3);
  for (Config c = 0; c < p.num_states(); ++c)
    CHECK(encode_config(decode_config(c, p), p) == c);
  CHECK_THROWS_AS(decode_config(27, p), InvalidSymbol);
}

TEST_CASE("shift automaton") {
  const Params p22(2, 2);
  CHECK(CellularAutomaton::shift(p22).table() == std::vector<Config>{0, 2, 1, 3});

  // matches the tuple-rotation oracle on larger spaces
  for (const Params& p : {Params(3, 2), Params(4, 2), Params(3, 3)})
    CHECK(CellularAutomaton::shift(p).table() == oracle::shift_table(p));

  const Params p32(3, 2);
  const auto sigma = CellularAutomaton::shift(p32);
  auto power = sigma;
  for (std::uint32_t i = 1; i < p32.n; ++i) power = compose(power, sigma);
  CHECK(power.is_identity());

  // orbit of label 1 is {1, 2, 4}
  CHECK(sigma.apply(1) == 2);
  CHECK(sigma.apply(2) == 4);
  CHECK(sigma.apply(4) == 1);
}

TEST_CASE("apply") {
  const Params p(3, 2);
  const auto id = CellularAutomaton::identity(p);
  for (Config c = 0; c < 8; ++c) CHECK(id.apply(c) == c);
  CHECK(CellularAutomaton::shift(p).apply(1) == 2);

  const LocalRule const_zero{p, std::vector<std::uint32_t>(8, 0)};
  CHECK(CellularAutomaton::from_local_rule(const_zero).apply(7) == 0);

  CHECK_THROWS_AS(id.apply(8), InvalidSymbol);
}

TEST_CASE("compose follows the right-action convention") {
  const Params p(2, 2);
  const auto sigma = CellularAutomaton::shift(p);
  CHECK(compose(sigma, sigma).is_identity());

  const auto collapse = ca_from(p, {0, 0, 0, 3});  // ({1,2} -> 0)
  CHECK(compose(CellularAutomaton::identity(p), collapse) == collapse);

  // (1,2) then ({1,2} -> 0): sends 1 and 2 to 0, fixes 0 and 3
  const auto swapped_then_collapsed = compose(sigma, collapse);
  CHECK(swapped_then_collapsed.table() == std::vector<Config>{0, 0, 0, 3});

  CHECK_THROWS_AS(compose(sigma, CellularAutomaton::identity(Params(3, 2))), InvalidArgument);
}

TEST_CASE("from_local_rule on the coordinate formula") {
  const Params p(3, 2);

  // mu(x) = x_n gives the identity
  std::vector<std::uint32_t> mu_last(8);
  for (Config c = 0; c < 8; ++c) mu_last[c] = c / 4;
  CHECK(CellularAutomaton::from_local_rule({p, mu_last}).is_identity());

  // mu(x) = x_{n-1} gives the shift
  std::vector<std::uint32_t> mu_prev(8);
  for (Config c = 0; c < 8; ++c) mu_prev[c] = (c / 2) % 2;
  CHECK(CellularAutomaton::from_local_rule({p, mu_prev}) == CellularAutomaton::shift(p));

  // constant rule gives the constant map
  const auto const_one = CellularAutomaton::from_local_rule({p, std::vector<std::uint32_t>(8, 1)});
  for (Config c = 0; c < 8; ++c) CHECK(const_one.apply(c) == 7);

  // agrees with the window-materialising oracle on random rules
  std::mt19937_64 rng(0xC0FFEE);
  for (const Params& pp : {Params(3, 2), Params(4, 2), Params(2, 3), Params(3, 3)}) {
    for (int i = 0; i < 25; ++i) {
      const auto mu = oracle::random_local_rule(pp, rng);
      CHECK(CellularAutomaton::from_local_rule(mu).table() ==
            oracle::local_rule_table(pp, mu.table));
    }
  }
}

TEST_CASE("to_local_rule is the n-th coordinate") {
  const Params p(3, 2);
  const auto id = CellularAutomaton::identity(p);
  std::vector<std::uint32_t> mu_last(8);
  for (Config c = 0; c < 8; ++c) mu_last[c] = c / 4;
  CHECK(id.local_rule().table == mu_last);

  const auto sigma = CellularAutomaton::shift(p);
  std::vector<std::uint32_t> mu_prev(8);
  for (Config c = 0; c < 8; ++c) mu_prev[c] = (c / 2) % 2;
  CHECK(sigma.local_rule().table == mu_prev);

  // a non-commuting raw table is rejected at the validation boundary
  CHECK_THROWS_AS(ca_from(Params(2, 2), {0, 0, 2, 3}), NotACellularAutomaton);
}

TEST_CASE("commutes_with_shift") {
  const Params p22(2, 2);
  CHECK(commutes_with_shift(CellularAutomaton::shift(p22).table(), p22));
  const std::vector<Config> one_to_zero{0, 0, 2, 3};
  CHECK_FALSE(commutes_with_shift(one_to_zero, p22));
  const std::vector<Config> short_table{0, 1};
  CHECK_THROWS_AS(commutes_with_shift(short_table, p22), InvalidArgument);

  std::mt19937_64 rng(7);
  for (const Params& p : {Params(3, 2), Params(4, 2), Params(2, 3)})
    for (int i = 0; i < 200; ++i)
      CHECK(commutes_with_shift(oracle::random_ca(p, rng).table(), p));
}

TEST_CASE("kernel partitions") {
  const Params p(3, 2);
  const auto id_kernel = kernel_of(CellularAutomaton::identity(p));
  CHECK(id_kernel.num_blocks() == 8);
  CHECK(id_kernel.num_nonsingleton() == 0);

  const auto seven_to_zero = ca_from(p, {0, 1, 2, 3, 4, 5, 6, 0});
  const auto k = kernel_of(seven_to_zero);
  CHECK(k.num_blocks() == 7);
  CHECK(k.blocks.front() == std::vector<Config>{0, 7});

  const auto constant = CellularAutomaton::from_local_rule({p, std::vector<std::uint32_t>(8, 0)});
  CHECK(kernel_of(constant).num_blocks() == 1);
  CHECK(kernel_of(constant).blocks.front().size() == 8);
}

TEST_CASE("invertibility") {
  const Params p(3, 2);
  const auto sigma = CellularAutomaton::shift(p);
  CHECK(sigma.is_invertible());
  auto sigma_pow = sigma;
  for (std::uint32_t i = 1; i < p.n - 1; ++i) sigma_pow = compose(sigma_pow, sigma);
  CHECK(sigma.inverse() == sigma_pow);

  const auto seven_to_zero = ca_from(p, {0, 1, 2, 3, 4, 5, 6, 0});
  CHECK_FALSE(seven_to_zero.is_invertible());
  CHECK_THROWS_AS(seven_to_zero.inverse(), NotInvertible);

  // (1,6)(2,5)(3,4) is an invertible CA
  const auto swap163 = ca_from(p, {0, 6, 5, 4, 3, 2, 1, 7});
  CHECK(swap163.is_invertible());

  // inverse undoes apply, exhaustively over every invertible CA at (2,2), (3,2)
  for (const Params& pp : {Params(2, 2), Params(3, 2)}) {
    for (const auto& table : oracle::all_commuting_tables(pp)) {
      const auto ca = ca_from(pp, table);
      if (!ca.is_invertible()) continue;
      const auto inv = ca.inverse();
      CHECK(commutes_with_shift(inv.table(), pp));
      for (Config c = 0; c < pp.num_states(); ++c) CHECK(inv.apply(ca.apply(c)) == c);
    }
  }
}

TEST_CASE("every shift-commuting table is a CA and round-trips") {
  // Forward: all local rules commute. Backward: all commuting tables come
  // from their n-th coordinate rule. Exhaustive at (2,2), (3,2), (2,3).
  for (const Params& p : {Params(2, 2), Params(3, 2), Params(2, 3)}) {
    std::uint64_t full = 1;
    for (std::uint32_t i = 0; i < p.num_states(); ++i) full *= p.q;

    const auto tables = oracle::all_commuting_tables(p);
    CHECK(tables.size() == full);
    std::set<std::vector<Config>> distinct;
    for (const auto& t : tables) {
      CHECK(commutes_with_shift(t, p));
      const auto ca = ca_from(p, t);
      CHECK(CellularAutomaton::from_local_rule(ca.local_rule()) == ca);
      distinct.insert(t);
    }
    CHECK(distinct.size() == full);
  }
}

TEST_CASE("count of distinct CA is q^(q^n)") {
  for (const Params& p : {Params(2, 2), Params(3, 2)}) {
    std::uint64_t full = 1;
    for (std::uint32_t i = 0; i < p.num_states(); ++i) full *= p.q;
    std::set<std::vector<Config>> distinct;
    std::vector<std::uint32_t> mu(p.num_states(), 0);
    for (std::uint64_t r = 0; r < full; ++r) {
      const auto ca = CellularAutomaton::from_local_rule({p, mu});
      CHECK(commutes_with_shift(ca.table(), p));
      distinct.insert(ca.table());
      for (std::uint32_t i = 0; i < p.num_states(); ++i) {
        if (++mu[i] < p.q) break;
        mu[i] = 0;
      }
    }
    CHECK(distinct.size() == full);
  }
}

TEST_CASE("composition is associative with the identity as unit") {
  std::mt19937_64 rng(42);
  for (const Params& p : {Params(3, 2), Params(2, 3)}) {
    const auto id = CellularAutomaton::identity(p);
    for (int i = 0; i < 100; ++i) {
      const auto f = oracle::random_ca(p, rng);
      const auto g = oracle::random_ca(p, rng);
      const auto h = oracle::random_ca(p, rng);
      CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
      CHECK(compose(id, f) == f);
      CHECK(compose(f, id) == f);
    }
  }
}
