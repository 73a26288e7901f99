#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "carank/automaton.hpp"
#include "carank/closure.hpp"
#include "carank/orbits.hpp"
#include "carank/rank.hpp"
#include "carank/wreath.hpp"

namespace carank {

// --- CA table files: line 1 "n q", line 2 the q^n image indices. ---

std::string write_ca_table(const CellularAutomaton& ca);
CellularAutomaton read_ca_table(std::istream& in);
CellularAutomaton read_ca_table(const std::string& text);

// --- Local rule files: line 1 "n q", line 2 the q^n rule values (< q). ---

std::string write_local_rule(const LocalRule& mu);
LocalRule read_local_rule(std::istream& in);
LocalRule read_local_rule(const std::string& text);

// --- Generator files: line 1 "n q", then one generator per line, either a
//     full image table or cycle/arrow notation such as
//     (1,2,4)(0,7)   ({1,2,4} -> 0)   (7 -> 0)
//     Blank lines and lines starting with '#' are skipped. ---

std::string write_generator_file(const Params& p,
                                 const std::vector<CellularAutomaton>& gens);
std::vector<CellularAutomaton> read_generator_file(std::istream& in);
std::vector<CellularAutomaton> read_generator_file(const std::string& text);

/// Compiles one cycle/arrow notation line against the lexicographic labels.
/// Cycles denote permutations, arrow groups collapse a set onto one label;
/// the result must commute with the shift (NotACellularAutomaton otherwise).
CellularAutomaton parse_notation(std::string_view line, const Params& p);

// --- JSON / CSV views. ---

nlohmann::json orbits_to_json(const OrbitStructure& os);

nlohmann::json rank_report_to_json(const RankReport& r);
RankReport rank_report_from_json(const nlohmann::json& j);

std::string rank_report_csv_header();
std::string rank_report_csv_row(const RankReport& r);
RankReport rank_report_from_csv_row(const std::string& row);

nlohmann::json ica_element_to_json(const ICAElement& e);
ICAElement ica_element_from_json(const nlohmann::json& j);

nlohmann::json closure_summary_to_json(const ClosureSummary& s);

std::string word_to_string(const Word& w);
Word word_from_string(const std::string& text);

}  // namespace carank
