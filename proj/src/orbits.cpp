#include "carank/orbits.hpp"

#include <algorithm>
#include <string>

namespace carank {

OrbitStructure OrbitStructure::enumerate(const Params& p) {
  OrbitStructure os;
  os.params_ = p;
  const std::uint32_t states = p.num_states();
  const std::uint32_t qn1 = states / p.q;

  for (std::uint64_t d : divisors_of(p.n)) os.divisors_.push_back(static_cast<std::uint32_t>(d));

  constexpr std::uint32_t kUnseen = 0xFFFFFFFFu;
  os.orbit_id_.assign(states, kUnseen);
  os.orbit_pos_.assign(states, 0);

  for (std::uint32_t c = 0; c < states; ++c) {
    if (os.orbit_id_[c] != kUnseen) continue;
    // c is the least unseen index, hence the orbit representative.
    Orbit orbit;
    orbit.representative = c;
    const std::uint32_t id = static_cast<std::uint32_t>(os.orbits_.size());
    std::uint32_t x = c;
    std::uint32_t pos = 0;
    do {
      os.orbit_id_[x] = id;
      os.orbit_pos_[x] = pos++;
      orbit.members.push_back(x);
      x = (x % qn1) * p.q + x / qn1;
    } while (x != c);
    orbit.size = static_cast<std::uint32_t>(orbit.members.size());
    os.orbits_.push_back(std::move(orbit));
  }

  for (std::uint32_t i = 0; i < os.orbits_.size(); ++i) {
    const Orbit& o = os.orbits_[i];
    os.by_size_[o.size].push_back(i);
    ++os.alpha_[o.size];
  }
  return os;
}

const std::vector<std::uint32_t>& OrbitStructure::orbits_of_size(std::uint32_t d) const {
  static const std::vector<std::uint32_t> kEmpty;
  auto it = by_size_.find(d);
  return it == by_size_.end() ? kEmpty : it->second;
}

std::uint64_t OrbitStructure::alpha(std::uint32_t d) const {
  auto it = alpha_.find(d);
  return it == alpha_.end() ? 0 : it->second;
}

Config canonical_rotation(Config c, const Params& p) {
  const std::uint32_t states = p.num_states();
  const std::uint32_t qn1 = states / p.q;
  Config best = c;
  Config x = c;
  for (std::uint32_t i = 1; i < p.n; ++i) {
    x = (x % qn1) * p.q + x / qn1;
    best = std::min(best, x);
  }
  return best;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int moebius(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("moebius undefined at 0");
  int sign = 1;
  for (auto [p, e] : factorize(m)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t moreau_alpha(std::uint64_t d, std::uint64_t q) {
  if (d == 0) throw InvalidArgument("moreau_alpha needs d >= 1");
  if (q < 2) throw InvalidArgument("moreau_alpha needs q >= 2");
  __int128 sum = 0;
  for (std::uint64_t b : divisors_of(d))
    sum += static_cast<__int128>(moebius(d / b)) * static_cast<__int128>(checked_pow(q, b));
  // The divisor sum counts aperiodic words of length d; division is exact.
  const __int128 a = sum / static_cast<__int128>(d);
  if (a < 0 || sum % static_cast<__int128>(d) != 0)
    throw Error("moreau_alpha: non-exact division, arithmetic bug");
  return static_cast<std::uint64_t>(a);
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("divisors_of needs n >= 1");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t i = 1; i * i <= n; ++i) {
    if (n % i) continue;
    small.push_back(i);
    if (i != n / i) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace carank
