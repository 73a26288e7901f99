#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carank/io.hpp"
#include "carank/rank.hpp"
#include "carank/wreath.hpp"
#include "oracle_helpers.hpp"

using namespace carank;

TEST_CASE("ca table files round-trip") {
  const Params p(3, 2);
  const auto sigma = CellularAutomaton::shift(p);
  CHECK(read_ca_table(write_ca_table(sigma)) == sigma);
  CHECK(write_ca_table(sigma) == "3 2\n0 2 4 6 1 3 5 7\n");

  CHECK_THROWS_AS(read_ca_table("3 2\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(read_ca_table("3 2\n0 1 2 3 4 5 6 9\n"), ParseError);
  CHECK_THROWS_AS(read_ca_table("3 2\n0 1 2 3 4 5 6 7 0\n"), ParseError);  // trailing
  CHECK_THROWS_AS(read_ca_table("1 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(read_ca_table("junk\n"), ParseError);
  // in-range but non-commuting
  CHECK_THROWS_AS(read_ca_table("2 2\n0 0 2 3\n"), NotACellularAutomaton);
}

TEST_CASE("local rule files round-trip") {
  const Params p(2, 3);
  std::mt19937_64 rng(3);
  const auto mu = oracle::random_local_rule(p, rng);
  const auto back = read_local_rule(write_local_rule(mu));
  CHECK(back.table == mu.table);
  CHECK(back.params == p);
  CHECK_THROWS_AS(read_local_rule("2 3\n0 1 2 0 1 2 0 1 3\n"), ParseError);
}

TEST_CASE("notation parsing against the quoted generators") {
  const Params p(3, 2);
  CHECK(parse_notation("(1,2,4)(0,7)", p).table() ==
        std::vector<Config>{7, 2, 4, 3, 1, 5, 6, 0});
  CHECK(parse_notation("(1,6)(2,5)(3,4)", p).table() ==
        std::vector<Config>{0, 6, 5, 4, 3, 2, 1, 7});
  CHECK(parse_notation("(1->6)(2->5)(4->3)", p).table() ==
        std::vector<Config>{0, 6, 5, 3, 3, 5, 6, 7});
  CHECK(parse_notation("({1,2,4}->0)", p).table() ==
        std::vector<Config>{0, 0, 0, 3, 0, 5, 6, 7});
  CHECK(parse_notation("(7->0)", p).table() ==
        std::vector<Config>{0, 1, 2, 3, 4, 5, 6, 0});

  // whitespace and the arrow glyph are accepted
  CHECK(parse_notation("( 1 , 2 , 4 ) ( 0 , 7 )", p) == parse_notation("(1,2,4)(0,7)", p));
  CHECK(parse_notation("(7 \xE2\x86\x92 0)", p) == parse_notation("(7->0)", p));
  CHECK(parse_notation("({1, 2, 4} \xE2\x86\x92 0)", p) == parse_notation("({1,2,4}->0)", p));

  CHECK_THROWS_AS(parse_notation("", p), ParseError);
  CHECK_THROWS_AS(parse_notation("(1,2", p), ParseError);
  CHECK_THROWS_AS(parse_notation("(1,2)(2,4)", p), ParseError);  // 2 mapped twice
  CHECK_THROWS_AS(parse_notation("(9->0)", p), ParseError);      // label out of range
  CHECK_THROWS_AS(parse_notation("(1,2->0)", p), ParseError);    // braces required
  // a lone (1 -> 0) does not commute with the shift
  CHECK_THROWS_AS(parse_notation("(1->0)", Params(2, 2)), NotACellularAutomaton);
}

TEST_CASE("generator files") {
  const std::string text =
      "# quoted generators\n"
      "3 2\n"
      "\n"
      "(1,2,4)(0,7)\n"
      "0 6 5 4 3 2 1 7\n"
      "(7->0)\n";
  const auto gens = read_generator_file(text);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == parse_notation("(1,2,4)(0,7)", Params(3, 2)));
  CHECK(gens[1].table() == std::vector<Config>{0, 6, 5, 4, 3, 2, 1, 7});

  const Params p(3, 2);
  const auto round = read_generator_file(write_generator_file(p, gens));
  REQUIRE(round.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(round[i] == gens[i]);

  CHECK_THROWS_AS(read_generator_file("3 2\n"), ParseError);
  CHECK_THROWS_AS(read_generator_file(""), ParseError);
  CHECK_THROWS_AS(read_generator_file("3 2\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(read_generator_file("3 2\n0 1 2 3 4 5 6 7 0\n"), ParseError);
}

TEST_CASE("orbit JSON") {
  const auto os = OrbitStructure::enumerate(Params(3, 2));
  const auto j = orbits_to_json(os);
  CHECK(j.at("n") == 3);
  CHECK(j.at("q") == 2);
  CHECK(j.at("alpha").at("1") == 2);
  CHECK(j.at("alpha").at("3") == 2);
  REQUIRE(j.at("orbits").size() == 4);
  CHECK(j.at("orbits")[1].at("rep") == 1);
  CHECK(j.at("orbits")[1].at("size") == 3);
  CHECK(j.at("orbits")[1].at("members") == nlohmann::json({1, 2, 4}));
  // emission is stable under a parse/dump cycle
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("rank report JSON and CSV round-trip") {
  for (const auto& r : {rank_ca_report(3, 2), rank_ca_report(15, 2), rank_ca_report(12, 3)}) {
    const auto j = rank_report_to_json(r);
    const auto back = rank_report_from_json(j);
    CHECK(rank_report_to_json(back) == j);

    const auto row = rank_report_csv_row(r);
    const auto back_csv = rank_report_from_csv_row(row);
    CHECK(rank_report_csv_row(back_csv) == row);
    CHECK(back_csv.rank_lower == r.rank_lower);
    CHECK(back_csv.exact == r.exact);
  }
  CHECK(rank_report_csv_header() ==
        "n,q,di,di_plus,E,ica_lower,ica_upper,relative_rank,rank_lower,rank_upper,exact");
  CHECK(rank_report_csv_row(rank_ca_report(6, 2)) == "6,2,4,2,9,5,5,8,13,13,true");
  CHECK_THROWS_AS(rank_report_from_csv_row("1,2,3"), ParseError);
}

TEST_CASE("ica element JSON round-trip") {
  const Params p(3, 2);
  const auto os = OrbitStructure::enumerate(p);
  const auto swap163 = CellularAutomaton::from_table(p, {0, 6, 5, 4, 3, 2, 1, 7});
  const auto e = ica_decompose(swap163, os);
  const auto j = ica_element_to_json(e);
  CHECK(j.at("factors")[0].at("d") == 3);
  CHECK(j.at("factors")[0].at("v") == nlohmann::json({1, 2}));
  const auto back = ica_element_from_json(j);
  CHECK(back == e);
  CHECK(ica_element_to_json(back) == j);

  auto broken = j;
  broken["constant_perm"] = {0, 0};
  CHECK_THROWS_AS(ica_element_from_json(broken), ParseError);
}

TEST_CASE("word strings") {
  CHECK(word_to_string({0, 2, 1}) == "0 2 1");
  CHECK(word_to_string({}) == "");
  CHECK(word_from_string("0 2 1") == Word{0, 2, 1});
  CHECK(word_from_string("") == Word{});
  CHECK(word_from_string(word_to_string({3, 1, 4, 1, 5})) == Word{3, 1, 4, 1, 5});
  CHECK_THROWS_AS(word_from_string("0 x"), ParseError);
}
