#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "carank/automaton.hpp"
#include "carank/closure_engine.hpp"
#include "carank/orbits.hpp"

namespace carank {

/// An ordered list of CA sharing one Params; positions are word symbols.
struct GeneratorSet {
  Params params;
  std::vector<CellularAutomaton> elements;

  static GeneratorSet of(const Params& p, std::vector<CellularAutomaton> elements);
};

/// Generator indices, composed left to right. The empty word is the identity.
using Word = std::vector<std::uint32_t>;

/// Least composition-closed superset of the generators (identity only if
/// generated). Deterministic BFS order by word length, then lexicographically.
/// Throws CapExceeded with the partial count when the cap is passed.
std::vector<CellularAutomaton> semigroup_closure(const GeneratorSet& gens,
                                                 const ClosureOptions& opts = {});

struct ClosureSummary {
  std::uint64_t size = 0;
  bool capped = false;
  std::map<std::uint32_t, std::uint64_t> word_length_histogram;
};

/// Like semigroup_closure but reports a cap overrun instead of throwing.
ClosureSummary closure_summary(const GeneratorSet& gens, const ClosureOptions& opts = {});

/// True iff the closure is all of CA(Z_n; A), i.e. has q^(q^n) elements.
bool is_generating(const GeneratorSet& gens, const ClosureOptions& opts = {});

/// Shortest word over gens evaluating to target, ties broken by
/// lexicographically least symbol sequence. Throws NotInClosure.
Word decompose_word(const CellularAutomaton& target, const GeneratorSet& gens,
                    const ClosureOptions& opts = {});

/// Left-to-right evaluation; the empty word gives the identity.
CellularAutomaton evaluate_word(const Word& w, const GeneratorSet& gens);

/// Every CA on the given grid, enumerated through all q^(q^n) local rules in
/// ascending rule order. Throws CapExceeded when that count passes the cap.
std::vector<CellularAutomaton> all_cellular_automata(const Params& p,
                                                     std::uint64_t cap = 1u << 20);

/// Kernel shape of an edge of the divisibility digraph: the non-singleton
/// fibers merge exactly one source orbit (size d_source) into one target
/// orbit (size d_target), everything else is injective.
struct KernelEdgeType {
  std::uint32_t source_size = 0;
  std::uint32_t target_size = 0;
  friend bool operator==(const KernelEdgeType&, const KernelEdgeType&) = default;
  friend bool operator<(const KernelEdgeType& a, const KernelEdgeType& b) {
    return std::pair(a.source_size, a.target_size) <
           std::pair(b.source_size, b.target_size);
  }
};

/// Classifies the kernel of a CA, or nullopt when it is not of edge shape.
std::optional<KernelEdgeType> kernel_edge_type(const CellularAutomaton& ca,
                                               const OrbitStructure& orbits);

/// The kernel shapes every generating set must realise: one per digraph edge,
/// except the size-2 self-edge when q = 2 and n is even (no second orbit).
std::vector<KernelEdgeType> required_kernel_classes(const Params& p);

struct SearchOptions {
  std::uint64_t closure_cap = std::uint64_t{1} << 22;
  std::uint32_t threads = 1;
  bool prune = true;  // kernel-class + unit-subgroup pruning
};

struct SearchResult {
  std::uint32_t size;
  std::vector<std::uint32_t> witness;  // indices into the searched universe
};

/// Least k <= max_size such that some k-subset of all q^(q^n) CA generates
/// the full semigroup; nullopt when none does. Subsets are scanned in
/// ascending lexicographic index order, so the witness is the first one.
std::optional<SearchResult> exhaustive_rank(const Params& p, std::uint32_t max_size,
                                            const SearchOptions& opts = {});

/// Least k <= max_additions such that the unit group plus k non-units
/// generates the full semigroup; nullopt when none does.
std::optional<SearchResult> exhaustive_relative_rank(
    const Params& p, std::span<const CellularAutomaton> unit_group,
    std::uint32_t max_additions, const SearchOptions& opts = {});

}  // namespace carank
