// carank: exact computation in the finite semigroups of one-dimensional
// cellular automata over cyclic groups.
//
// Subcommands: orbits, rank, table, gens, verify, decompose, closure.
// Machine output goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 2 usage/parse error, 3 computational limit.

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "carank/closure.hpp"
#include "carank/io.hpp"
#include "carank/orbits.hpp"
#include "carank/rank.hpp"
#include "carank/wreath.hpp"

namespace {

struct GlobalOpts {
  std::uint64_t cap = std::uint64_t{1} << 22;
  std::uint64_t seed = 12345;  // reserved for sampling subcommands
  std::uint32_t threads = 1;
};

struct Range {
  std::uint64_t lo = 0, hi = 0;
};

// "a" or "a..b"
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::uint64_t v = std::stoull(text);
      return {v, v};
    }
    Range r{std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    if (r.lo > r.hi) throw carank::ParseError("empty range " + text);
    return r;
  } catch (const std::invalid_argument&) {
    throw carank::ParseError("malformed range " + text);
  } catch (const std::out_of_range&) {
    throw carank::ParseError("range value out of range in " + text);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw carank::ParseError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int cmd_orbits(std::uint32_t n, std::uint32_t q, const GlobalOpts& g) {
  const carank::Params p(n, q, g.cap);
  const auto os = carank::OrbitStructure::enumerate(p);
  std::cout << carank::orbits_to_json(os).dump() << "\n";
  return 0;
}

int cmd_rank(std::uint64_t n, std::uint32_t q, bool csv) {
  const auto report = carank::rank_ca_report(n, q);
  if (csv)
    std::cout << carank::rank_report_csv_row(report) << "\n";
  else
    std::cout << carank::rank_report_to_json(report).dump() << "\n";
  return 0;
}

int cmd_table(const std::string& nrange, const std::string& qrange, bool json) {
  const Range nr = parse_range(nrange);
  const Range qr = parse_range(qrange);
  if (nr.lo < 2 || qr.lo < 2) throw carank::ParseError("table needs n, q >= 2");
  if (nr.hi > 1000000000000ULL || qr.hi > (1u << 30))
    throw carank::ParseError("table range out of supported bounds");
  if (json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint64_t n = nr.lo; n <= nr.hi; ++n)
      for (std::uint64_t q = qr.lo; q <= qr.hi; ++q)
        rows.push_back(carank::rank_report_to_json(
            carank::rank_ca_report(n, static_cast<std::uint32_t>(q))));
    std::cout << rows.dump() << "\n";
  } else {
    std::cout << carank::rank_report_csv_header() << "\n";
    for (std::uint64_t n = nr.lo; n <= nr.hi; ++n)
      for (std::uint64_t q = qr.lo; q <= qr.hi; ++q)
        std::cout << carank::rank_report_csv_row(
                         carank::rank_ca_report(n, static_cast<std::uint32_t>(q)))
                  << "\n";
  }
  return 0;
}

int cmd_gens(std::uint32_t n, std::uint32_t q, bool json, const GlobalOpts& g) {
  const carank::Params p(n, q, g.cap);
  const auto gens = carank::standard_generating_set(p);
  if (json) {
    nlohmann::json j;
    j["n"] = n;
    j["q"] = q;
    j["generators"] = nlohmann::json::array();
    for (const auto& ca : gens) j["generators"].push_back(ca.table());
    std::cout << j.dump() << "\n";
  } else {
    std::cout << carank::write_generator_file(p, gens);
  }
  return 0;
}

int cmd_verify(const std::string& path, std::optional<std::uint32_t> n,
               std::optional<std::uint32_t> q, bool json, const GlobalOpts& g) {
  const auto gens = carank::read_generator_file(read_file(path));
  const carank::Params p = gens.front().params();
  if ((n && *n != p.n) || (q && *q != p.q))
    throw carank::ParseError("file header (" + std::to_string(p.n) + ", " +
                             std::to_string(p.q) + ") does not match -n/-q");
  const auto set = carank::GeneratorSet::of(p, gens);
  const carank::ClosureOptions opts{g.cap, g.threads};
  const auto summary = carank::closure_summary(set, opts);
  if (summary.capped) {
    if (json)
      std::cout << nlohmann::json{{"size", summary.size}, {"capped", true}}.dump() << "\n";
    else
      std::cout << "size=" << summary.size << " capped=true\n";
    std::cerr << "closure exceeded the cap of " << g.cap << " elements\n";
    return 3;
  }
  // the closure sits inside the full semigroup, so size q^(q^n) means equality
  std::uint64_t full = 1;
  bool overflow = false;
  for (std::uint32_t i = 0; i < p.num_states() && !overflow; ++i) {
    if (full > summary.size) break;  // already bigger than the closure
    overflow = full > std::numeric_limits<std::uint64_t>::max() / p.q;
    if (!overflow) full *= p.q;
  }
  const bool generating = !overflow && summary.size == full;
  if (json) {
    std::cout << nlohmann::json{{"size", summary.size}, {"generating", generating}}.dump()
              << "\n";
  } else {
    std::cout << "size=" << summary.size << " generating=" << (generating ? "true" : "false")
              << "\n";
  }
  return 0;
}

int cmd_decompose(std::uint32_t n, std::uint32_t q, const std::string& target_path,
                  const std::string& gens_spec, bool json, const GlobalOpts& g) {
  const carank::Params p(n, q, g.cap);
  const auto target = carank::read_ca_table(read_file(target_path));
  if (!(target.params() == p))
    throw carank::ParseError("target file header does not match -n/-q");
  std::vector<carank::CellularAutomaton> gens;
  if (gens_spec == "std") {
    gens = carank::standard_generating_set(p);
  } else {
    gens = carank::read_generator_file(read_file(gens_spec));
    if (!(gens.front().params() == p))
      throw carank::ParseError("generator file header does not match -n/-q");
  }
  const auto set = carank::GeneratorSet::of(p, gens);
  const auto word = carank::decompose_word(target, set, {g.cap, g.threads});
  const bool verified = carank::evaluate_word(word, set) == target;
  if (json) {
    std::cout << nlohmann::json{{"word", word},
                                {"length", word.size()},
                                {"verified", verified}}
                     .dump()
              << "\n";
  } else {
    std::cout << carank::word_to_string(word) << "\n";
    std::cerr << "verified=" << (verified ? "true" : "false") << "\n";
  }
  return verified ? 0 : 3;
}

int cmd_closure(const std::string& path, const GlobalOpts& g) {
  const auto gens = carank::read_generator_file(read_file(path));
  const auto set = carank::GeneratorSet::of(gens.front().params(), gens);
  const auto summary = carank::closure_summary(set, {g.cap, g.threads});
  std::cout << carank::closure_summary_to_json(summary).dump() << "\n";
  return summary.capped ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rank and structure computations for cellular automata over cyclic groups"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand

  GlobalOpts g;
  app.add_option("--cap", g.cap, "element cap for closures and searches");
  app.add_option("--seed", g.seed, "seed for randomized operations (reserved)");
  app.add_option("--threads", g.threads, "worker threads for closure expansion")
      ->check(CLI::Range(1u, 256u));

  std::uint32_t n = 0, q = 0;
  std::uint64_t rank_n = 0;  // formula-only commands take n far past table scale
  bool json = false, csv = false;
  constexpr std::uint64_t kMaxFormulaN = 1000000000000ULL;

  auto* orbits = app.add_subcommand("orbits", "enumerate shift orbits (necklaces)");
  orbits->add_option("-n,--n", n, "group order")->required()->check(CLI::Range(2u, 1u << 30));
  orbits->add_option("-q,--q", q, "alphabet size")->required()->check(CLI::Range(2u, 1u << 30));
  orbits->add_flag("--json", json, "JSON output (default)");

  auto* rank = app.add_subcommand("rank", "rank report for CA(Z_n; A)");
  rank->add_option("-n,--n", rank_n, "group order")
      ->required()
      ->check(CLI::Range(std::uint64_t{2}, kMaxFormulaN));
  rank->add_option("-q,--q", q, "alphabet size")->required()->check(CLI::Range(2u, 1u << 30));
  rank->add_flag("--json", json, "JSON output (default)");
  rank->add_flag("--csv", csv, "CSV row output");

  std::string nrange, qrange;
  auto* table = app.add_subcommand("table", "batch rank reports over ranges");
  table->add_option("--n", nrange, "n range, e.g. 2..8")->required();
  table->add_option("--q", qrange, "q range, e.g. 2 or 2..4")->required();
  table->add_flag("--json", json, "JSON output instead of CSV");
  table->add_flag("--csv", csv, "CSV output (default)");

  auto* gens = app.add_subcommand("gens", "standard generating set for CA(Z_n; A)");
  gens->add_option("-n,--n", n, "group order")->required()->check(CLI::Range(2u, 1u << 30));
  gens->add_option("-q,--q", q, "alphabet size")->required()->check(CLI::Range(2u, 1u << 30));
  gens->add_flag("--json", json, "JSON output instead of a generator file");

  std::string file, target_path, gens_spec = "std";
  std::uint32_t vn = 0, vq = 0;
  auto* verify = app.add_subcommand("verify", "closure size and generation check for a generator file");
  verify->add_option("file", file, "generator file")->required();
  auto* vn_opt = verify->add_option("-n,--n", vn, "expected group order");
  auto* vq_opt = verify->add_option("-q,--q", vq, "expected alphabet size");
  verify->add_option("--closure-cap", g.cap, "element cap for the closure");
  verify->add_flag("--json", json, "JSON output");

  auto* decompose = app.add_subcommand("decompose", "express a CA as a word in generators");
  decompose->add_option("-n,--n", n, "group order")->required()->check(CLI::Range(2u, 1u << 30));
  decompose->add_option("-q,--q", q, "alphabet size")->required()->check(CLI::Range(2u, 1u << 30));
  decompose->add_option("--target", target_path, "CA table file")->required();
  decompose->add_option("--gens", gens_spec, "generator file, or 'std'");
  decompose->add_flag("--json", json, "JSON output");

  auto* closure = app.add_subcommand("closure", "closure summary for a generator file");
  closure->add_option("file", file, "generator file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*orbits) return cmd_orbits(n, q, g);
    if (*rank) return cmd_rank(rank_n, q, csv);
    if (*table) return cmd_table(nrange, qrange, json);
    if (*gens) return cmd_gens(n, q, json, g);
    if (*verify)
      return cmd_verify(file,
                        vn_opt->count() ? std::optional<std::uint32_t>(vn) : std::nullopt,
                        vq_opt->count() ? std::optional<std::uint32_t>(vq) : std::nullopt,
                        json, g);
    if (*decompose) return cmd_decompose(n, q, target_path, gens_spec, json, g);
    if (*closure) return cmd_closure(file, g);
  } catch (const carank::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const carank::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const carank::InvalidSymbol& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const carank::NotACellularAutomaton& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const carank::CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (partial count " << e.partial_count << ")\n";
    return 3;
  } catch (const carank::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
