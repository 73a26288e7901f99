#include "carank/io.hpp"

#include <algorithm>
#include <cctype>
#include <span>
#include <sstream>

namespace carank {

namespace {

std::vector<std::uint64_t> read_numbers(std::istream& in, std::size_t count,
                                        const char* what) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  std::uint64_t v;
  while (out.size() < count && in >> v) out.push_back(v);
  if (out.size() < count)
    throw ParseError(std::string("expected ") + std::to_string(count) + " " + what +
                     ", got " + std::to_string(out.size()));
  return out;
}

Params read_header(std::istream& in) {
  std::int64_t n, q;
  if (!(in >> n >> q)) throw ParseError("expected header line \"n q\"");
  if (n < 2 || q < 2) throw ParseError("header needs n >= 2 and q >= 2");
  return Params(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(q));
}

void expect_end(std::istream& in, const char* what) {
  std::string extra;
  if (in >> extra)
    throw ParseError(std::string("unexpected trailing data in ") + what + ": " + extra);
}

std::string join_numbers(std::span<const std::uint32_t> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

std::string write_ca_table(const CellularAutomaton& ca) {
  return std::to_string(ca.params().n) + " " + std::to_string(ca.params().q) + "\n" +
         join_numbers(ca.table()) + "\n";
}

CellularAutomaton read_ca_table(std::istream& in) {
  const Params p = read_header(in);
  const auto nums = read_numbers(in, p.num_states(), "image indices");
  std::vector<Config> table;
  table.reserve(nums.size());
  for (std::uint64_t v : nums) {
    if (v >= p.num_states()) throw ParseError("image index " + std::to_string(v) + " too large");
    table.push_back(static_cast<Config>(v));
  }
  expect_end(in, "CA table file");
  return CellularAutomaton::from_table(p, std::move(table));
}

CellularAutomaton read_ca_table(const std::string& text) {
  std::istringstream in(text);
  return read_ca_table(in);
}

std::string write_local_rule(const LocalRule& mu) {
  return std::to_string(mu.params.n) + " " + std::to_string(mu.params.q) + "\n" +
         join_numbers(mu.table) + "\n";
}

LocalRule read_local_rule(std::istream& in) {
  const Params p = read_header(in);
  const auto nums = read_numbers(in, p.num_states(), "rule values");
  std::vector<std::uint32_t> table;
  table.reserve(nums.size());
  for (std::uint64_t v : nums) {
    if (v >= p.q) throw ParseError("rule value " + std::to_string(v) + " not below q");
    table.push_back(static_cast<std::uint32_t>(v));
  }
  expect_end(in, "local rule file");
  return LocalRule::from_table(p, std::move(table));
}

LocalRule read_local_rule(const std::string& text) {
  std::istringstream in(text);
  return read_local_rule(in);
}

std::string write_generator_file(const Params& p,
                                 const std::vector<CellularAutomaton>& gens) {
  std::string out = std::to_string(p.n) + " " + std::to_string(p.q) + "\n";
  for (const auto& g : gens) out += join_numbers(g.table()) + "\n";
  return out;
}

namespace {

// Cycle/arrow notation, whitespace-insensitive, "->" or the arrow glyph.
struct NotationParser {
  std::string text;
  std::size_t pos = 0;

  explicit NotationParser(std::string_view raw) {
    std::string squeezed;
    for (std::size_t i = 0; i < raw.size();) {
      // UTF-8 right arrow
      if (i + 2 < raw.size() && static_cast<unsigned char>(raw[i]) == 0xE2 &&
          static_cast<unsigned char>(raw[i + 1]) == 0x86 &&
          static_cast<unsigned char>(raw[i + 2]) == 0x92) {
        squeezed += "->";
        i += 3;
        continue;
      }
      if (!std::isspace(static_cast<unsigned char>(raw[i]))) squeezed += raw[i];
      ++i;
    }
    text = std::move(squeezed);
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "' at position " +
                       std::to_string(pos) + " in notation");
    ++pos;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  bool accept_arrow() {
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }

  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a label at position " + std::to_string(pos) +
                       " in notation");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
    }
    return v;
  }
};

}  // namespace

CellularAutomaton parse_notation(std::string_view line, const Params& p) {
  const std::uint32_t states = p.num_states();
  std::vector<Config> table(states);
  for (std::uint32_t c = 0; c < states; ++c) table[c] = c;
  std::vector<bool> assigned(states, false);

  auto set_image = [&](std::uint64_t from, std::uint64_t to) {
    if (from >= states || to >= states)
      throw ParseError("label " + std::to_string(std::max(from, to)) +
                       " not below q^n = " + std::to_string(states));
    if (assigned[from])
      throw ParseError("label " + std::to_string(from) + " mapped twice");
    assigned[from] = true;
    table[from] = static_cast<Config>(to);
  };

  NotationParser in(line);
  if (in.done()) throw ParseError("empty notation");
  while (!in.done()) {
    in.expect('(');
    if (in.accept('{')) {
      std::vector<std::uint64_t> sources{in.number()};
      while (in.accept(',')) sources.push_back(in.number());
      in.expect('}');
      if (!in.accept_arrow()) throw ParseError("expected -> after {...}");
      const std::uint64_t target = in.number();
      for (std::uint64_t s : sources) set_image(s, target);
    } else {
      std::vector<std::uint64_t> labels{in.number()};
      while (in.accept(',')) labels.push_back(in.number());
      if (in.accept_arrow()) {
        if (labels.size() != 1)
          throw ParseError("arrow source list needs braces: ({a,b} -> t)");
        set_image(labels[0], in.number());
      } else if (labels.size() >= 2) {
        for (std::size_t i = 0; i < labels.size(); ++i)
          set_image(labels[i], labels[(i + 1) % labels.size()]);
      }
      // a singleton cycle "(a)" is the identity on a: nothing to do
    }
    in.expect(')');
  }
  return CellularAutomaton::from_table(p, std::move(table));
}

std::vector<CellularAutomaton> read_generator_file(std::istream& in) {
  std::string header;
  while (std::getline(in, header)) {
    const auto first = header.find_first_not_of(" \t\r");
    if (first == std::string::npos || header[first] == '#') continue;
    break;
  }
  std::istringstream hs(header);
  const Params p = read_header(hs);

  std::vector<CellularAutomaton> gens;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line[first] == '(') {
      gens.push_back(parse_notation(line, p));
    } else {
      std::istringstream ls(line);
      const auto nums = read_numbers(ls, p.num_states(), "image indices");
      std::vector<Config> table;
      table.reserve(nums.size());
      for (std::uint64_t v : nums) {
        if (v >= p.num_states())
          throw ParseError("image index " + std::to_string(v) + " too large");
        table.push_back(static_cast<Config>(v));
      }
      expect_end(ls, "generator line");
      gens.push_back(CellularAutomaton::from_table(p, std::move(table)));
    }
  }
  if (gens.empty()) throw ParseError("generator file has no generators");
  return gens;
}

std::vector<CellularAutomaton> read_generator_file(const std::string& text) {
  std::istringstream in(text);
  return read_generator_file(in);
}

nlohmann::json orbits_to_json(const OrbitStructure& os) {
  nlohmann::json j;
  j["n"] = os.params().n;
  j["q"] = os.params().q;
  j["orbits"] = nlohmann::json::array();
  for (const Orbit& o : os.orbits())
    j["orbits"].push_back({{"size", o.size}, {"rep", o.representative}, {"members", o.members}});
  nlohmann::json alpha = nlohmann::json::object();
  for (const auto& [d, count] : os.alpha_map()) alpha[std::to_string(d)] = count;
  j["alpha"] = std::move(alpha);
  return j;
}

nlohmann::json rank_report_to_json(const RankReport& r) {
  return nlohmann::json{{"n", r.n},
                        {"q", r.q},
                        {"di", r.di},
                        {"di_plus", r.di_plus},
                        {"E", r.E},
                        {"ica_lower", r.ica_lower},
                        {"ica_upper", r.ica_upper},
                        {"relative_rank", r.relative_rank},
                        {"rank_lower", r.rank_lower},
                        {"rank_upper", r.rank_upper},
                        {"epsilon_max", r.epsilon_max},
                        {"exact", r.exact}};
}

RankReport rank_report_from_json(const nlohmann::json& j) {
  RankReport r;
  r.n = j.at("n").get<std::uint64_t>();
  r.q = j.at("q").get<std::uint32_t>();
  r.di = j.at("di").get<std::uint32_t>();
  r.di_plus = j.at("di_plus").get<std::uint32_t>();
  r.E = j.at("E").get<std::uint64_t>();
  r.ica_lower = j.at("ica_lower").get<std::uint64_t>();
  r.ica_upper = j.at("ica_upper").get<std::uint64_t>();
  r.relative_rank = j.at("relative_rank").get<std::uint64_t>();
  r.rank_lower = j.at("rank_lower").get<std::uint64_t>();
  r.rank_upper = j.at("rank_upper").get<std::uint64_t>();
  r.epsilon_max = j.at("epsilon_max").get<std::uint64_t>();
  r.exact = j.at("exact").get<bool>();
  return r;
}

std::string rank_report_csv_header() {
  return "n,q,di,di_plus,E,ica_lower,ica_upper,relative_rank,rank_lower,rank_upper,exact";
}

std::string rank_report_csv_row(const RankReport& r) {
  std::ostringstream s;
  s << r.n << ',' << r.q << ',' << r.di << ',' << r.di_plus << ',' << r.E << ','
    << r.ica_lower << ',' << r.ica_upper << ',' << r.relative_rank << ',' << r.rank_lower
    << ',' << r.rank_upper << ',' << (r.exact ? "true" : "false");
  return s.str();
}

RankReport rank_report_from_csv_row(const std::string& row) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream s(row);
  while (std::getline(s, field, ',')) fields.push_back(field);
  if (fields.size() != 11) throw ParseError("CSV row needs 11 fields");
  RankReport r;
  try {
    r.n = std::stoull(fields[0]);
    r.q = static_cast<std::uint32_t>(std::stoul(fields[1]));
    r.di = static_cast<std::uint32_t>(std::stoul(fields[2]));
    r.di_plus = static_cast<std::uint32_t>(std::stoul(fields[3]));
    r.E = std::stoull(fields[4]);
    r.ica_lower = std::stoull(fields[5]);
    r.ica_upper = std::stoull(fields[6]);
    r.relative_rank = std::stoull(fields[7]);
    r.rank_lower = std::stoull(fields[8]);
    r.rank_upper = std::stoull(fields[9]);
  } catch (const std::exception&) {
    throw ParseError("CSV row has a malformed number");
  }
  if (fields[10] != "true" && fields[10] != "false")
    throw ParseError("CSV exact field must be true or false");
  r.exact = fields[10] == "true";
  r.epsilon_max = r.ica_upper - r.ica_lower;
  return r;
}

nlohmann::json ica_element_to_json(const ICAElement& e) {
  nlohmann::json factors = nlohmann::json::array();
  for (const WreathElement& w : e.factors)
    factors.push_back({{"d", w.d}, {"alpha", w.alpha}, {"v", w.v}, {"phi", w.phi}});
  return nlohmann::json{{"factors", std::move(factors)},
                        {"constant_perm", e.constant_perm}};
}

ICAElement ica_element_from_json(const nlohmann::json& j) {
  ICAElement e;
  for (const auto& f : j.at("factors")) {
    e.factors.push_back(WreathElement::make(
        f.at("d").get<std::uint32_t>(), f.at("alpha").get<std::uint32_t>(),
        f.at("v").get<std::vector<std::uint32_t>>(), f.at("phi").get<Perm>()));
  }
  e.constant_perm = j.at("constant_perm").get<Perm>();
  if (!is_permutation(e.constant_perm))
    throw ParseError("constant_perm is not a permutation");
  return e;
}

nlohmann::json closure_summary_to_json(const ClosureSummary& s) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [len, count] : s.word_length_histogram)
    hist[std::to_string(len)] = count;
  return nlohmann::json{
      {"size", s.size}, {"capped", s.capped}, {"word_length_histogram", std::move(hist)}};
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

Word word_from_string(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::uint32_t v;
  while (in >> v) w.push_back(v);
  if (!in.eof() && in.fail()) throw ParseError("word must be whitespace-separated indices");
  return w;
}

}  // namespace carank
