#include "carank/rank.hpp"

#include <algorithm>
#include <string>

#include "carank/wreath.hpp"

namespace carank {

DivisorStats divisor_stats(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("divisor_stats needs n >= 2");
  DivisorStats s;
  s.n = n;
  s.divisors = divisors_of(n);
  s.di = static_cast<std::uint32_t>(s.divisors.size());
  s.di_plus = static_cast<std::uint32_t>(
      std::count_if(s.divisors.begin(), s.divisors.end(),
                    [](std::uint64_t d) { return d % 2 == 0; }));
  return s;
}

DivisibilityDigraph divisibility_digraph(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("divisibility_digraph needs n >= 2");
  DivisibilityDigraph g;
  g.vertices = divisors_of(n);
  for (std::uint64_t s : g.vertices)
    for (std::uint64_t t : g.vertices)
      if (s % t == 0) g.edges.emplace_back(s, t);
  return g;
}

std::uint64_t edge_count(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("edge_count needs n >= 2");
  std::uint64_t e = 1;
  for (auto [p, a] : factorize(n)) {
    // (a+1)(a+2) is even, so each factor divides out exactly.
    e *= (std::uint64_t{a} + 1) * (std::uint64_t{a} + 2) / 2;
  }
  return e;
}

std::uint64_t relative_rank_value(std::uint64_t n, std::uint32_t q) {
  const std::uint64_t e = edge_count(n);
  return (q == 2 && n % 2 == 0) ? e - 1 : e;
}

std::pair<std::uint64_t, std::uint64_t> rank_ica_bounds(std::uint64_t n, std::uint32_t q) {
  if (n < 2 || q < 2) throw InvalidArgument("rank_ica_bounds needs n, q >= 2");
  const DivisorStats s = divisor_stats(n);
  if ((n & (n - 1)) == 0) {
    // n = 2^k: exact, 2k when q = 2 and 2k + 1 otherwise.
    const std::uint64_t k = s.di - 1;
    const std::uint64_t v = (q == 2) ? 2 * k : 2 * k + 1;
    return {v, v};
  }
  const std::uint64_t base =
      (q == 2 && n % 2 == 0) ? std::uint64_t{s.di} + s.di_plus - 1
                             : std::uint64_t{s.di} + s.di_plus;
  const std::uint64_t slack =
      (s.di >= s.di_plus + 2) ? std::uint64_t{s.di} - s.di_plus - 2 : 0;
  return {base, base + slack};
}

RankReport rank_ca_report(std::uint64_t n, std::uint32_t q) {
  const DivisorStats s = divisor_stats(n);
  RankReport r;
  r.n = n;
  r.q = q;
  r.di = s.di;
  r.di_plus = s.di_plus;
  r.E = edge_count(n);
  std::tie(r.ica_lower, r.ica_upper) = rank_ica_bounds(n, q);
  r.relative_rank = relative_rank_value(n, q);
  r.rank_lower = r.ica_lower + r.relative_rank;
  r.rank_upper = r.ica_upper + r.relative_rank;
  r.epsilon_max = r.ica_upper - r.ica_lower;
  r.exact = (r.rank_lower == r.rank_upper);
  return r;
}

CellularAutomaton idempotent_tau(const Params& p, const Orbit& source, const Orbit& target) {
  if (source.representative == target.representative &&
      source.members == target.members)
    throw SameOrbit("idempotent_tau needs distinct source and target orbits");
  if (source.size % target.size != 0)
    throw NonDividingSizes("target orbit size " + std::to_string(target.size) +
                           " does not divide source orbit size " +
                           std::to_string(source.size));
  const std::uint32_t states = p.num_states();
  std::vector<Config> images(states);
  for (std::uint32_t c = 0; c < states; ++c) images[c] = c;
  for (std::uint32_t k = 0; k < source.size; ++k)
    images[source.members[k]] = target.members[k % target.size];
  return CellularAutomaton(p, std::move(images), CellularAutomaton::Unchecked{});
}

std::vector<CellularAutomaton> standard_generating_set(const Params& p) {
  return standard_generating_set(p, OrbitStructure::enumerate(p));
}

std::vector<CellularAutomaton> standard_generating_set(const Params& p,
                                                       const OrbitStructure& orbits) {
  std::vector<CellularAutomaton> gens = ica_generating_set(p, orbits);
  for (std::uint32_t di : orbits.divisors()) {
    for (std::uint32_t dj : orbits.divisors()) {
      if (di % dj != 0) continue;
      const auto& src_ids = orbits.orbits_of_size(di);
      const auto& tgt_ids = orbits.orbits_of_size(dj);
      if (di == dj) {
        // Self-edge: collapse the second orbit onto the first. With a single
        // orbit in the class (size 2 at q = 2) there is nothing to collapse.
        if (src_ids.size() < 2) continue;
        gens.push_back(idempotent_tau(p, orbits.orbits()[src_ids[1]],
                                      orbits.orbits()[tgt_ids[0]]));
      } else {
        gens.push_back(idempotent_tau(p, orbits.orbits()[src_ids[0]],
                                      orbits.orbits()[tgt_ids[0]]));
      }
    }
  }
  return gens;
}

}  // namespace carank
