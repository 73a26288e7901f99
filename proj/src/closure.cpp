#include "carank/closure.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace carank {

namespace {

using Table = std::vector<Config>;

struct TableHash {
  std::size_t operator()(const Table& t) const {
    return static_cast<std::size_t>(hash_table(t));
  }
};

Table mul_tables(const Table& a, const Table& b) {
  Table c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

std::vector<Table> extract_tables(std::span<const CellularAutomaton> elements) {
  std::vector<Table> tables;
  tables.reserve(elements.size());
  for (const auto& e : elements) tables.push_back(e.table());
  return tables;
}

ClosureResult<Table> run_closure(const std::vector<Table>& gens, const ClosureOptions& opts) {
  return bfs_closure<Table, Table (*)(const Table&, const Table&), TableHash>(
      std::span<const Table>(gens), &mul_tables, opts);
}

std::uint64_t full_semigroup_size(const Params& p, std::uint64_t cap) {
  const std::uint64_t states = checked_pow(p.q, p.n);
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < states; ++i) {
    if (total > cap / p.q)
      throw CapExceeded("q^(q^n) exceeds cap " + std::to_string(cap), 0);
    total *= p.q;
  }
  return total;
}

}  // namespace

GeneratorSet GeneratorSet::of(const Params& p, std::vector<CellularAutomaton> elements) {
  for (const auto& e : elements)
    if (!(e.params() == p))
      throw InvalidArgument("generator set: element params mismatch");
  return GeneratorSet{p, std::move(elements)};
}

std::vector<CellularAutomaton> semigroup_closure(const GeneratorSet& gens,
                                                 const ClosureOptions& opts) {
  if (gens.elements.empty()) throw InvalidArgument("semigroup_closure needs generators");
  auto result = run_closure(extract_tables(gens.elements), opts);
  std::vector<CellularAutomaton> out;
  out.reserve(result.elements.size());
  for (auto& t : result.elements)
    out.emplace_back(gens.params, std::move(t), CellularAutomaton::Unchecked{});
  return out;
}

ClosureSummary closure_summary(const GeneratorSet& gens, const ClosureOptions& opts) {
  if (gens.elements.empty()) throw InvalidArgument("closure_summary needs generators");
  ClosureSummary s;
  try {
    auto result = run_closure(extract_tables(gens.elements), opts);
    s.size = result.elements.size();
    for (std::uint32_t d : result.depth) ++s.word_length_histogram[d];
  } catch (const CapExceeded& e) {
    s.capped = true;
    s.size = e.partial_count;
  }
  return s;
}

bool is_generating(const GeneratorSet& gens, const ClosureOptions& opts) {
  const std::uint64_t target = full_semigroup_size(gens.params, opts.cap);
  ClosureOptions bounded = opts;
  bounded.cap = target;  // the closure can never exceed the full semigroup
  auto result = run_closure(extract_tables(gens.elements), bounded);
  return result.elements.size() == target;
}

Word decompose_word(const CellularAutomaton& target, const GeneratorSet& gens,
                    const ClosureOptions& opts) {
  if (gens.elements.empty()) throw InvalidArgument("decompose_word needs generators");
  if (!(target.params() == gens.params))
    throw InvalidArgument("decompose_word: target params mismatch");
  auto result = run_closure(extract_tables(gens.elements), opts);
  for (std::uint32_t i = 0; i < result.elements.size(); ++i)
    if (result.elements[i] == target.table()) return result.word(i);
  throw NotInClosure("target is not in the closure of the generators");
}

CellularAutomaton evaluate_word(const Word& w, const GeneratorSet& gens) {
  CellularAutomaton acc = CellularAutomaton::identity(gens.params);
  for (std::uint32_t sym : w) {
    if (sym >= gens.elements.size())
      throw InvalidArgument("word symbol " + std::to_string(sym) + " out of range");
    acc = compose(acc, gens.elements[sym]);
  }
  return acc;
}

std::vector<CellularAutomaton> all_cellular_automata(const Params& p, std::uint64_t cap) {
  const std::uint64_t total = full_semigroup_size(p, cap);
  const std::uint32_t states = p.num_states();
  std::vector<CellularAutomaton> out;
  out.reserve(total);
  std::vector<std::uint32_t> mu(states, 0);
  for (std::uint64_t r = 0; r < total; ++r) {
    out.push_back(CellularAutomaton::from_local_rule(LocalRule{p, mu}));
    // increment mu as a base-q counter
    for (std::uint32_t i = 0; i < states; ++i) {
      if (++mu[i] < p.q) break;
      mu[i] = 0;
    }
  }
  return out;
}

std::optional<KernelEdgeType> kernel_edge_type(const CellularAutomaton& ca,
                                               const OrbitStructure& orbits) {
  const KernelPartition kp = kernel_of(ca);
  std::vector<const std::vector<Config>*> merged;
  for (const auto& b : kp.blocks)
    if (b.size() > 1) merged.push_back(&b);
  if (merged.empty()) return std::nullopt;

  std::unordered_set<std::uint32_t> touched;
  std::size_t support = 0;
  for (const auto* b : merged) {
    support += b->size();
    for (Config c : *b) touched.insert(orbits.orbit_id(c));
  }
  if (touched.size() != 2) return std::nullopt;

  auto it = touched.begin();
  const Orbit& o1 = orbits.orbits()[*it++];
  const Orbit& o2 = orbits.orbits()[*it];
  const Orbit& src = o1.size >= o2.size ? o1 : o2;
  const Orbit& tgt = o1.size >= o2.size ? o2 : o1;
  if (src.size % tgt.size != 0) return std::nullopt;
  if (support != std::size_t{src.size} + tgt.size) return std::nullopt;
  if (merged.size() != tgt.size) return std::nullopt;

  const std::size_t expected = 1 + src.size / tgt.size;
  for (const auto* b : merged) {
    if (b->size() != expected) return std::nullopt;
    std::size_t in_tgt = 0;
    for (Config c : *b)
      if (orbits.orbit_id(c) == orbits.orbit_id(tgt.representative)) ++in_tgt;
    if (in_tgt != 1) return std::nullopt;
  }
  return KernelEdgeType{src.size, tgt.size};
}

std::vector<KernelEdgeType> required_kernel_classes(const Params& p) {
  std::vector<KernelEdgeType> classes;
  for (std::uint64_t s : divisors_of(p.n)) {
    for (std::uint64_t t : divisors_of(p.n)) {
      if (s % t != 0) continue;
      if (s == t && moreau_alpha(s, p.q) < 2) continue;  // single orbit: no collapse
      classes.push_back(KernelEdgeType{static_cast<std::uint32_t>(s),
                                       static_cast<std::uint32_t>(t)});
    }
  }
  return classes;
}

namespace {

struct SubsetSearch {
  std::vector<Table> pool;          // candidate elements, fixed order
  std::vector<Table> base;          // generators always included
  std::vector<int> class_of;       // per pool element: class id or -1
  std::uint32_t num_classes = 0;
  std::vector<std::uint8_t> pool_is_unit;
  std::uint64_t full_size = 0;
  std::uint64_t ica_size = 0;       // only used when track_units
  std::uint32_t min_units_bound = 0;
  bool track_units = false;
  bool prune = true;
  ClosureOptions closure_opts;

  std::vector<std::uint32_t> chosen;
  std::vector<std::uint32_t> class_hits;
  std::vector<std::uint32_t> chosen_units;
  bool units_ok = false;  // closure of chosen units is the full unit group

  bool closure_is_full(const std::vector<Table>& gens) const {
    ClosureOptions o = closure_opts;
    o.cap = std::min<std::uint64_t>(o.cap, full_size);
    auto result = run_closure(gens, o);
    return result.elements.size() == full_size;
  }

  bool units_generate(const std::vector<std::uint32_t>& unit_idx) const {
    if (unit_idx.empty()) return false;
    std::vector<Table> gens;
    gens.reserve(unit_idx.size());
    for (std::uint32_t i : unit_idx) gens.push_back(pool[i]);
    auto result = run_closure(gens, closure_opts);
    return result.elements.size() == ica_size;
  }

  std::uint32_t uncovered() const {
    std::uint32_t u = 0;
    for (std::uint32_t h : class_hits)
      if (h == 0) ++u;
    return u;
  }

  std::uint32_t unit_deficit() const {
    if (!track_units) return 0;
    if (units_ok) return 0;
    const auto have = static_cast<std::uint32_t>(chosen_units.size());
    return std::max<std::uint32_t>(1, min_units_bound > have ? min_units_bound - have : 1);
  }

  bool found(std::vector<std::uint32_t>& witness, std::uint32_t start,
             std::uint32_t remaining) {
    if (remaining == 0) {
      std::vector<Table> gens = base;
      for (std::uint32_t i : chosen) gens.push_back(pool[i]);
      if (closure_is_full(gens)) {
        witness = chosen;
        return true;
      }
      return false;
    }
    const std::uint32_t needed = prune ? uncovered() + unit_deficit() : 0;
    if (prune && remaining < needed) return false;
    const bool tight = prune && remaining == needed;
    for (std::uint32_t i = start; i < pool.size(); ++i) {
      if (tight) {
        // Every remaining slot must pay for a requirement.
        const bool helps_class = class_of[i] >= 0 && class_hits[class_of[i]] == 0;
        const bool helps_units = track_units && !units_ok && pool_is_unit[i];
        if (!helps_class && !helps_units) continue;
      }
      chosen.push_back(i);
      if (class_of[i] >= 0) ++class_hits[class_of[i]];
      const bool was_units_ok = units_ok;
      if (track_units && pool_is_unit[i]) {
        chosen_units.push_back(i);
        if (!units_ok) units_ok = units_generate(chosen_units);
      }
      if (found(witness, i + 1, remaining - 1)) return true;
      if (track_units && pool_is_unit[i]) {
        chosen_units.pop_back();
        units_ok = was_units_ok;
      }
      if (class_of[i] >= 0) --class_hits[class_of[i]];
      chosen.pop_back();
    }
    return false;
  }
};

void assign_classes(SubsetSearch& search, const OrbitStructure& orbits,
                    const std::vector<KernelEdgeType>& classes,
                    const std::vector<CellularAutomaton>& elements) {
  search.num_classes = static_cast<std::uint32_t>(classes.size());
  search.class_hits.assign(classes.size(), 0);
  search.class_of.assign(elements.size(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto type = kernel_edge_type(elements[i], orbits);
    if (!type) continue;
    auto it = std::find(classes.begin(), classes.end(), *type);
    if (it != classes.end())
      search.class_of[i] = static_cast<int>(it - classes.begin());
  }
}

}  // namespace

std::optional<SearchResult> exhaustive_rank(const Params& p, std::uint32_t max_size,
                                            const SearchOptions& opts) {
  const std::vector<CellularAutomaton> universe =
      all_cellular_automata(p, opts.closure_cap);
  const OrbitStructure orbits = OrbitStructure::enumerate(p);

  SubsetSearch search;
  search.prune = opts.prune;
  search.track_units = true;
  search.closure_opts = ClosureOptions{opts.closure_cap, opts.threads};
  search.full_size = universe.size();
  search.pool = extract_tables(universe);
  assign_classes(search, orbits, required_kernel_classes(p), universe);

  search.pool_is_unit.resize(universe.size());
  std::vector<std::uint32_t> unit_indices;
  for (std::uint32_t i = 0; i < universe.size(); ++i) {
    search.pool_is_unit[i] = universe[i].is_invertible();
    if (search.pool_is_unit[i]) unit_indices.push_back(i);
  }
  search.ica_size = unit_indices.size();
  search.min_units_bound = 2;
  for (std::uint32_t u : unit_indices) {
    if (search.units_generate({u})) {
      search.min_units_bound = 1;
      break;
    }
  }

  for (std::uint32_t k = 1; k <= max_size; ++k) {
    std::vector<std::uint32_t> witness;
    if (search.found(witness, 0, k)) return SearchResult{k, std::move(witness)};
  }
  return std::nullopt;
}

std::optional<SearchResult> exhaustive_relative_rank(
    const Params& p, std::span<const CellularAutomaton> unit_group,
    std::uint32_t max_additions, const SearchOptions& opts) {
  const std::vector<CellularAutomaton> universe =
      all_cellular_automata(p, opts.closure_cap);
  const OrbitStructure orbits = OrbitStructure::enumerate(p);

  // Candidates are the non-units; the unit group rides along as a base.
  std::vector<CellularAutomaton> candidates;
  std::vector<std::uint32_t> universe_index;
  for (std::uint32_t i = 0; i < universe.size(); ++i) {
    if (!universe[i].is_invertible()) {
      candidates.push_back(universe[i]);
      universe_index.push_back(i);
    }
  }

  SubsetSearch search;
  search.prune = opts.prune;
  search.track_units = false;
  search.closure_opts = ClosureOptions{opts.closure_cap, opts.threads};
  search.full_size = universe.size();
  search.pool = extract_tables(candidates);
  search.base = extract_tables(
      std::span<const CellularAutomaton>(unit_group.data(), unit_group.size()));
  if (search.base.empty())
    throw InvalidArgument("exhaustive_relative_rank needs the unit group");
  assign_classes(search, orbits, required_kernel_classes(p), candidates);

  for (std::uint32_t k = 1; k <= max_additions; ++k) {
    std::vector<std::uint32_t> witness;
    if (search.found(witness, 0, k)) {
      for (auto& w : witness) w = universe_index[w];
      return SearchResult{k, std::move(witness)};
    }
  }
  return std::nullopt;
}

}  // namespace carank
