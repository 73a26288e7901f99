#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "carank/automaton.hpp"
#include "carank/orbits.hpp"

namespace carank {

struct DivisorStats {
  std::uint64_t n;
  std::vector<std::uint64_t> divisors;  // ascending, includes 1 and n
  std::uint32_t di;                     // number of divisors
  std::uint32_t di_plus;                // number of even divisors
};

DivisorStats divisor_stats(std::uint64_t n);

/// Vertices are the divisors of n; (s, t) is an edge whenever t | s.
struct DivisibilityDigraph {
  std::vector<std::uint64_t> vertices;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
};

DivisibilityDigraph divisibility_digraph(std::uint64_t n);

/// Closed form for the edge count: with n = prod p_i^{a_i},
/// E(n) = prod (a_i + 1)(a_i + 2) / 2^m.
std::uint64_t edge_count(std::uint64_t n);

/// Lower/upper rank bounds with the contributing quantities. Bounds are
/// additive: rank = ica + relative_rank on both ends, and exact means the
/// interval collapsed.
struct RankReport {
  std::uint64_t n;
  std::uint32_t q;
  std::uint32_t di;
  std::uint32_t di_plus;
  std::uint64_t E;
  std::uint64_t ica_lower;
  std::uint64_t ica_upper;
  std::uint64_t relative_rank;
  std::uint64_t rank_lower;
  std::uint64_t rank_upper;
  std::uint64_t epsilon_max;  // = ica_upper - ica_lower
  bool exact;
};

/// E(n) - 1 when q = 2 and n even (the single size-2 orbit kills one
/// idempotent), E(n) otherwise.
std::uint64_t relative_rank_value(std::uint64_t n, std::uint32_t q);

/// Rank interval for the group of invertible CA. Exact (2k or 2k+1) when
/// n = 2^k; otherwise a base of di + di_plus (minus 1 in the degenerate
/// q = 2, n even case) with slack up to max(0, di - di_plus - 2).
std::pair<std::uint64_t, std::uint64_t> rank_ica_bounds(std::uint64_t n, std::uint32_t q);

RankReport rank_ca_report(std::uint64_t n, std::uint32_t q);
inline RankReport rank_ca_report(const Params& p) { return rank_ca_report(p.n, p.q); }

/// The shift-equivariant idempotent collapsing the source orbit onto the
/// target orbit, representative to representative: rep_src * shift^k maps to
/// rep_tgt * shift^k, everything outside the source orbit is fixed.
/// Requires |target| dividing |source| and distinct orbits.
CellularAutomaton idempotent_tau(const Params& p, const Orbit& source, const Orbit& target);

/// ica_generating_set plus one idempotent per edge (d_i, d_j) of the
/// divisibility digraph: source = first orbit of size d_i, target = first of
/// size d_j (second/first for self-edges), skipping the size-2 self-edge when
/// q = 2 and n is even. Generates the full CA semigroup.
std::vector<CellularAutomaton> standard_generating_set(const Params& p);
std::vector<CellularAutomaton> standard_generating_set(const Params& p,
                                                       const OrbitStructure& orbits);

}  // namespace carank
