#include "carank/wreath.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace carank {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw StateCapExceeded("64-bit overflow in order computation");
  return a * b;
}

std::uint64_t factorial_checked(std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= k; ++i) r = checked_mul(r, i);
  return r;
}

bool is_prime(std::uint32_t m) {
  if (m < 2) return false;
  for (std::uint32_t i = 2; std::uint64_t{i} * i <= m; ++i)
    if (m % i == 0) return false;
  return true;
}

}  // namespace

Perm perm_identity(std::uint32_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

bool is_permutation(const Perm& a) {
  std::vector<bool> hit(a.size(), false);
  for (std::uint32_t x : a) {
    if (x >= a.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw InvalidArgument("perm_compose: degree mismatch");
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = static_cast<std::uint32_t>(i);
  return inv;
}

Perm perm_transposition(std::uint32_t degree, std::uint32_t i, std::uint32_t j) {
  if (i >= degree || j >= degree || i == j)
    throw InvalidArgument("perm_transposition: bad points");
  Perm p = perm_identity(degree);
  std::swap(p[i], p[j]);
  return p;
}

Perm perm_from_cycles(std::uint32_t degree,
                      const std::vector<std::vector<std::uint32_t>>& cycles) {
  Perm p = perm_identity(degree);
  std::vector<bool> touched(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const std::uint32_t from = cyc[k];
      const std::uint32_t to = cyc[(k + 1) % cyc.size()];
      if (from >= degree || to >= degree) throw InvalidArgument("cycle point out of range");
      if (touched[from]) throw InvalidArgument("point repeated across cycles");
      touched[from] = true;
      p[from] = to;
    }
  }
  return p;
}

std::uint64_t perm_order(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::uint32_t x = i;
    do {
      seen[x] = true;
      x = a[x];
      ++len;
    } while (x != i);
    order = std::lcm(order, len);
  }
  return order;
}

Perm z_alpha(std::uint32_t alpha) {
  if (alpha < 2) throw InvalidArgument("z_alpha needs alpha >= 2");
  Perm p(alpha);
  if (alpha % 2 == 1) {
    for (std::uint32_t i = 0; i < alpha; ++i) p[i] = (i + 1) % alpha;
  } else {
    p[0] = 0;
    for (std::uint32_t i = 1; i < alpha; ++i) p[i] = (i == alpha - 1) ? 1 : i + 1;
  }
  return p;
}

WreathElement WreathElement::identity(std::uint32_t d, std::uint32_t alpha) {
  return WreathElement{d, alpha, std::vector<std::uint32_t>(alpha, 0), perm_identity(alpha)};
}

WreathElement WreathElement::make(std::uint32_t d, std::uint32_t alpha,
                                  std::vector<std::uint32_t> v, Perm phi) {
  if (d < 1 || alpha < 1) throw InvalidArgument("wreath element needs d, alpha >= 1");
  if (v.size() != alpha || phi.size() != alpha)
    throw InvalidArgument("wreath element shape mismatch");
  for (std::uint32_t x : v)
    if (x >= d) throw InvalidArgument("rotation entry not below d");
  if (!is_permutation(phi)) throw InvalidArgument("phi is not a permutation");
  return WreathElement{d, alpha, std::move(v), std::move(phi)};
}

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b) {
  if (a.d != b.d || a.alpha != b.alpha)
    throw InvalidArgument("wreath_multiply: shape mismatch");
  WreathElement c{a.d, a.alpha, std::vector<std::uint32_t>(a.alpha), Perm(a.alpha)};
  for (std::uint32_t s = 0; s < a.alpha; ++s) {
    c.v[s] = (a.v[s] + b.v[a.phi[s]]) % a.d;
    c.phi[s] = b.phi[a.phi[s]];
  }
  return c;
}

WreathElement wreath_inverse(const WreathElement& a) {
  WreathElement c{a.d, a.alpha, std::vector<std::uint32_t>(a.alpha), perm_inverse(a.phi)};
  for (std::uint32_t t = 0; t < a.alpha; ++t)
    c.v[t] = (a.d - a.v[c.phi[t]]) % a.d;
  return c;
}

std::pair<WreathElement, WreathElement> wreath_rank2_generators(std::uint32_t d,
                                                                std::uint32_t alpha) {
  if (d < 2 || alpha < 2) throw InvalidArgument("rank-2 generators need d, alpha >= 2");
  std::vector<std::uint32_t> e1(alpha, 0);
  e1[0] = 1;
  WreathElement x = WreathElement::make(d, alpha, e1, z_alpha(alpha));
  WreathElement y = WreathElement::make(d, alpha, e1, perm_transposition(alpha, 0, 1));
  return {std::move(x), std::move(y)};
}

ICAElement ICAElement::identity(const OrbitStructure& orbits) {
  ICAElement e;
  for (std::uint32_t d : orbits.divisors()) {
    if (d == 1) continue;
    e.factors.push_back(
        WreathElement::identity(d, static_cast<std::uint32_t>(orbits.alpha(d))));
  }
  e.constant_perm = perm_identity(orbits.params().q);
  return e;
}

ICAElement ica_multiply(const ICAElement& a, const ICAElement& b) {
  if (a.factors.size() != b.factors.size())
    throw InvalidArgument("ica_multiply: factor count mismatch");
  ICAElement c;
  c.factors.reserve(a.factors.size());
  for (std::size_t i = 0; i < a.factors.size(); ++i)
    c.factors.push_back(wreath_multiply(a.factors[i], b.factors[i]));
  c.constant_perm = perm_compose(a.constant_perm, b.constant_perm);
  return c;
}

ICAElement ica_inverse(const ICAElement& a) {
  ICAElement c;
  c.factors.reserve(a.factors.size());
  for (const auto& f : a.factors) c.factors.push_back(wreath_inverse(f));
  c.constant_perm = perm_inverse(a.constant_perm);
  return c;
}

ICAElement ica_decompose(const CellularAutomaton& ca, const OrbitStructure& orbits) {
  if (!(ca.params() == orbits.params()))
    throw InvalidArgument("ica_decompose: params mismatch");
  if (!ca.is_invertible()) throw NotInvertible("ica_decompose needs a bijective table");
  const Params& p = orbits.params();
  ICAElement e;
  for (std::uint32_t d : orbits.divisors()) {
    if (d == 1) continue;
    const auto& ids = orbits.orbits_of_size(d);
    const std::uint32_t alpha = static_cast<std::uint32_t>(ids.size());
    std::unordered_map<std::uint32_t, std::uint32_t> class_index;
    for (std::uint32_t s = 0; s < alpha; ++s) class_index[ids[s]] = s;
    WreathElement w = WreathElement::identity(d, alpha);
    for (std::uint32_t s = 0; s < alpha; ++s) {
      const Config img = ca.apply(orbits.orbits()[ids[s]].representative);
      auto it = class_index.find(orbits.orbit_id(img));
      if (it == class_index.end())
        throw Error("bijective table moved an orbit across size classes");
      w.phi[s] = it->second;
      w.v[s] = orbits.orbit_pos(img);
    }
    e.factors.push_back(std::move(w));
  }
  const std::uint32_t base = (p.num_states() - 1) / (p.q - 1);
  e.constant_perm.resize(p.q);
  for (std::uint32_t a = 0; a < p.q; ++a) {
    const Config img = ca.apply(constant_config(a, p));
    if (img % base != 0) throw Error("bijective table moved a constant off the constants");
    e.constant_perm[a] = img / base;
  }
  return e;
}

CellularAutomaton ica_compose(const ICAElement& e, const OrbitStructure& orbits) {
  const Params& p = orbits.params();
  std::size_t fi = 0;
  const std::uint32_t states = p.num_states();
  std::vector<Config> images(states, 0);
  for (std::uint32_t d : orbits.divisors()) {
    if (d == 1) continue;
    if (fi >= e.factors.size()) throw InvalidArgument("ica_compose: missing wreath factor");
    const WreathElement& w = e.factors[fi++];
    const auto& ids = orbits.orbits_of_size(d);
    if (w.d != d || w.alpha != ids.size() || !is_permutation(w.phi))
      throw InvalidArgument("ica_compose: factor shape mismatch at d = " + std::to_string(d));
    for (std::uint32_t s = 0; s < ids.size(); ++s) {
      if (w.v[s] >= d) throw InvalidArgument("ica_compose: rotation offset not below d");
      const Orbit& src = orbits.orbits()[ids[s]];
      const Orbit& tgt = orbits.orbits()[ids[w.phi[s]]];
      for (std::uint32_t j = 0; j < d; ++j)
        images[src.members[j]] = tgt.members[(w.v[s] + j) % d];
    }
  }
  if (fi != e.factors.size()) throw InvalidArgument("ica_compose: extra wreath factors");
  if (e.constant_perm.size() != p.q || !is_permutation(e.constant_perm))
    throw InvalidArgument("ica_compose: constant permutation has wrong shape");
  for (std::uint32_t a = 0; a < p.q; ++a)
    images[constant_config(a, p)] = constant_config(e.constant_perm[a], p);
  return CellularAutomaton(p, std::move(images), CellularAutomaton::Unchecked{});
}

std::uint64_t ica_order(const Params& p) {
  std::uint64_t order = factorial_checked(p.q);
  for (std::uint64_t d : divisors_of(p.n)) {
    if (d == 1) continue;
    const std::uint64_t a = moreau_alpha(d, p.q);
    order = checked_mul(order, checked_pow(d, a));
    order = checked_mul(order, factorial_checked(a));
  }
  return order;
}

namespace {

// Assembles a CA from a single wreath factor and a constant permutation,
// everything else identity.
CellularAutomaton embed_element(const OrbitStructure& os, std::uint32_t d,
                                const WreathElement* w, const Perm* constants) {
  ICAElement e = ICAElement::identity(os);
  if (w != nullptr) {
    std::size_t fi = 0;
    for (std::uint32_t dd : os.divisors()) {
      if (dd == 1) continue;
      if (dd == d) {
        e.factors[fi] = *w;
        break;
      }
      ++fi;
    }
  }
  if (constants != nullptr) e.constant_perm = *constants;
  return ica_compose(e, os);
}

}  // namespace

std::vector<CellularAutomaton> ica_generating_set(const Params& p) {
  return ica_generating_set(p, OrbitStructure::enumerate(p));
}

std::vector<CellularAutomaton> ica_generating_set(const Params& p,
                                                  const OrbitStructure& os) {
  std::vector<std::uint32_t> nontrivial;
  for (std::uint32_t d : os.divisors())
    if (d != 1) nontrivial.push_back(d);

  const bool power_of_two = (p.n & (p.n - 1)) == 0;
  std::uint32_t odd_prime = 0;
  for (std::uint32_t d : nontrivial) {
    if (d % 2 == 1 && is_prime(d)) {
      odd_prime = d;
      break;  // divisors ascend, so this is the smallest odd prime factor
    }
  }

  // Which factor carries the constant permutations alongside it.
  const std::uint32_t paired = power_of_two ? (p.q >= 3 ? 2 : 0) : odd_prime;

  const Perm const_transposition = perm_transposition(p.q, 0, 1);
  const Perm const_zq = z_alpha(p.q);

  std::vector<CellularAutomaton> gens;
  for (std::uint32_t d : nontrivial) {
    const std::uint32_t alpha = static_cast<std::uint32_t>(os.alpha(d));
    if (alpha == 1) {
      // Single orbit of size d (only happens at d = 2, q = 2): the factor is
      // the rotation group Z_2, one generator suffices.
      WreathElement rot = WreathElement::identity(d, 1);
      rot.v[0] = 1;
      gens.push_back(embed_element(os, d, &rot, nullptr));
      continue;
    }
    auto [x, y] = wreath_rank2_generators(d, alpha);
    if (d == paired && !power_of_two) {
      // u1 = ((e^1; z_alpha), (1,2)), u2 = ((e^1; (1,2)), z_q)
      gens.push_back(embed_element(os, d, &x, &const_transposition));
      gens.push_back(embed_element(os, d, &y, &const_zq));
    } else if (d == paired && power_of_two) {
      // v1 = ((e^1; z_alpha), id), v2 = ((e^1; (1,2)), z_q), v3 = (id, (1,2))
      gens.push_back(embed_element(os, d, &x, nullptr));
      gens.push_back(embed_element(os, d, &y, &const_zq));
      gens.push_back(embed_element(os, d, nullptr, &const_transposition));
    } else {
      gens.push_back(embed_element(os, d, &x, nullptr));
      gens.push_back(embed_element(os, d, &y, nullptr));
    }
  }
  if (paired == 0) {
    // q = 2 and n a power of 2: nothing was paired with the constants, so the
    // constant swap is its own generator.
    gens.push_back(embed_element(os, 0, nullptr, &const_transposition));
  }
  return gens;
}

namespace {

// Vectors of (Z_p)^alpha encoded as integers base p.
struct VectorSpace {
  std::uint32_t p, alpha, count;

  std::vector<std::uint32_t> decode(std::uint32_t code) const {
    std::vector<std::uint32_t> v(alpha);
    for (std::uint32_t i = 0; i < alpha; ++i) {
      v[i] = code % p;
      code /= p;
    }
    return v;
  }

  std::uint32_t encode(const std::vector<std::uint32_t>& v) const {
    std::uint32_t code = 0;
    for (std::uint32_t i = alpha; i-- > 0;) code = code * p + v[i];
    return code;
  }
};

// Row-reduced span of a set of vectors over Z_p, returned as sorted codes.
// The basis is kept in echelon form keyed by leading position.
std::pair<std::vector<std::uint32_t>, std::vector<std::vector<std::uint32_t>>> span_of(
    const VectorSpace& vs, const std::vector<std::uint32_t>& codes) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> rows;  // lead position -> row
  for (std::uint32_t code : codes) {
    auto v = vs.decode(code);
    for (;;) {
      std::uint32_t lead = 0;
      while (lead < vs.alpha && v[lead] == 0) ++lead;
      if (lead == vs.alpha) break;
      auto it = rows.find(lead);
      if (it == rows.end()) {
        // normalise leading coefficient to 1 (p prime: invert by search)
        std::uint32_t inv = 1;
        while ((v[lead] * inv) % vs.p != 1) ++inv;
        for (std::uint32_t i = 0; i < vs.alpha; ++i) v[i] = (v[i] * inv) % vs.p;
        rows.emplace(lead, std::move(v));
        break;
      }
      const std::uint32_t c = v[lead];
      for (std::uint32_t i = 0; i < vs.alpha; ++i)
        v[i] = (v[i] + (vs.p - c) * it->second[i]) % vs.p;
    }
  }
  std::vector<std::vector<std::uint32_t>> basis;
  basis.reserve(rows.size());
  for (auto& [lead, row] : rows) basis.push_back(row);
  // enumerate the span
  std::vector<std::uint32_t> span{0};
  for (const auto& b : basis) {
    std::vector<std::uint32_t> next;
    next.reserve(span.size() * vs.p);
    for (std::uint32_t c = 0; c < vs.p; ++c) {
      for (std::uint32_t s : span) {
        auto sv = vs.decode(s);
        for (std::uint32_t i = 0; i < vs.alpha; ++i) sv[i] = (sv[i] + c * b[i]) % vs.p;
        next.push_back(vs.encode(sv));
      }
    }
    span = std::move(next);
  }
  std::sort(span.begin(), span.end());
  span.erase(std::unique(span.begin(), span.end()), span.end());
  return {std::move(span), std::move(basis)};
}

}  // namespace

SubmoduleReport invariant_submodules(std::uint32_t p, std::uint32_t alpha,
                                     std::uint64_t cap) {
  if (!is_prime(p)) throw InvalidArgument("invariant_submodules needs p prime");
  if (alpha < 2) throw InvalidArgument("invariant_submodules needs alpha >= 2");
  const std::uint64_t total = checked_pow(p, alpha);
  if (total > cap)
    throw CapExceeded("p^alpha = " + std::to_string(total) + " exceeds cap " +
                          std::to_string(cap),
                      0);
  const VectorSpace vs{p, alpha, static_cast<std::uint32_t>(total)};

  // Coordinate permutations generating Sym_alpha.
  const Perm t = perm_transposition(alpha, 0, 1);
  const Perm z = [&] {
    Perm c(alpha);
    for (std::uint32_t i = 0; i < alpha; ++i) c[i] = (i + 1) % alpha;
    return c;
  }();
  auto permute = [&](std::uint32_t code, const Perm& g) {
    const auto v = vs.decode(code);
    std::vector<std::uint32_t> w(alpha);
    for (std::uint32_t i = 0; i < alpha; ++i) w[i] = v[g[i]];
    return vs.encode(w);
  };

  // Invariant subspace generated by one vector: span of its Sym-orbit.
  auto cyclic_invariant = [&](std::uint32_t code) {
    std::vector<std::uint32_t> orbit{code};
    std::unordered_set<std::uint32_t> seen{code};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const Perm* g : {&t, &z}) {
        const std::uint32_t y = permute(orbit[i], *g);
        if (seen.insert(y).second) orbit.push_back(y);
      }
    }
    return span_of(vs, orbit);
  };

  // Every invariant subspace is a join of cyclic ones, so collect those and
  // close under pairwise joins.
  std::set<std::vector<std::uint32_t>> subspaces;
  subspaces.insert(std::vector<std::uint32_t>{0});
  for (std::uint32_t code = 1; code < vs.count; ++code)
    subspaces.insert(cyclic_invariant(code).first);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<std::uint32_t>> current(subspaces.begin(), subspaces.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<std::uint32_t> both = current[i];
        both.insert(both.end(), current[j].begin(), current[j].end());
        auto joined = span_of(vs, both).first;
        if (subspaces.insert(std::move(joined)).second) grew = true;
      }
    }
  }

  // Reference submodules: diagonal and zero-sum.
  std::vector<std::uint32_t> diagonal, zero_sum;
  for (std::uint32_t code = 0; code < vs.count; ++code) {
    const auto v = vs.decode(code);
    if (std::all_of(v.begin(), v.end(), [&](std::uint32_t x) { return x == v[0]; }))
      diagonal.push_back(code);
    if (std::accumulate(v.begin(), v.end(), 0u) % p == 0) zero_sum.push_back(code);
  }

  SubmoduleReport report;
  report.p = p;
  report.alpha = alpha;
  report.diagonal_equals_zero_sum = (diagonal == zero_sum);
  report.diagonal_contained_in_zero_sum =
      std::includes(zero_sum.begin(), zero_sum.end(), diagonal.begin(), diagonal.end());
  for (const auto& codes : subspaces) {
    if (codes.size() == 1 || codes.size() == total) continue;
    Submodule m;
    m.size = codes.size();
    m.basis = span_of(vs, codes).second;
    m.is_diagonal = (codes == diagonal);
    m.is_zero_sum = (codes == zero_sum);
    report.proper_nonzero.push_back(std::move(m));
  }
  std::sort(report.proper_nonzero.begin(), report.proper_nonzero.end(),
            [](const Submodule& a, const Submodule& b) {
              return std::pair(a.size, a.basis) < std::pair(b.size, b.basis);
            });
  return report;
}

}  // namespace carank
