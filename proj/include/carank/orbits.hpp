#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "carank/params.hpp"

namespace carank {

/// One rotation orbit (necklace class). Members are listed in shift order
/// starting from the representative, which is the least index in the orbit.
struct Orbit {
  std::uint32_t size;
  Config representative;
  std::vector<Config> members;
};

/// The partition of A^n into shift orbits, with per-size counts. Orbits are
/// numbered by ascending representative; within each size class the same
/// order gives the coordinates used by the wreath decomposition.
class OrbitStructure {
 public:
  static OrbitStructure enumerate(const Params& p);

  const Params& params() const { return params_; }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  const std::vector<std::uint32_t>& divisors() const { return divisors_; }

  /// Indices into orbits() of the orbits of size d, ascending representative.
  const std::vector<std::uint32_t>& orbits_of_size(std::uint32_t d) const;

  /// Number of orbits of size exactly d (0 when d does not divide n).
  std::uint64_t alpha(std::uint32_t d) const;

  std::uint32_t orbit_id(Config c) const { return orbit_id_[c]; }
  /// Position k with c = representative * shift^k within its orbit.
  std::uint32_t orbit_pos(Config c) const { return orbit_pos_[c]; }

  const std::map<std::uint32_t, std::uint64_t>& alpha_map() const { return alpha_; }

 private:
  Params params_{2, 2};
  std::vector<Orbit> orbits_;
  std::vector<std::uint32_t> orbit_id_;
  std::vector<std::uint32_t> orbit_pos_;
  std::vector<std::uint32_t> divisors_;
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_size_;
  std::map<std::uint32_t, std::uint64_t> alpha_;
};

/// Least index among the rotations of c.
Config canonical_rotation(Config c, const Params& p);

/// Classic Moebius function; throws InvalidArgument for m = 0.
int moebius(std::uint64_t m);

/// Necklace count: the number of rotation orbits of size exactly d over a
/// q-letter alphabet, (1/d) * sum over b | d of moebius(d/b) q^b.
std::uint64_t moreau_alpha(std::uint64_t d, std::uint64_t q);

/// Ascending divisor list (trial division; fine up to ~10^12).
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

/// Prime factorisation as (prime, exponent) pairs, ascending primes.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

}  // namespace carank
