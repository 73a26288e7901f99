#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "carank/errors.hpp"

namespace carank {

/// A configuration of the n-cell cyclic grid, stored as its lexicographic
/// index in [0, q^n): the tuple (x_1, ..., x_n) has index sum x_i * q^(i-1).
using Config = std::uint32_t;

/// Default ceiling on q^n for anything that materialises full tables.
inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 24;

/// Grid length n and alphabet size q. Construction only checks n, q >= 2;
/// the state cap is enforced lazily by num_states(), so formula-level
/// queries (divisor counts, rank bounds) work for n far beyond table scale.
struct Params {
  std::uint32_t n;
  std::uint32_t q;
  std::uint64_t state_cap;

  Params(std::uint32_t n_, std::uint32_t q_,
         std::uint64_t cap = kDefaultStateCap);

  /// q^n, checked against 32-bit range and the state cap.
  /// Throws StateCapExceeded when tables of this size may not be built.
  std::uint32_t num_states() const;

  friend bool operator==(const Params& a, const Params& b) {
    return a.n == b.n && a.q == b.q;
  }
};

/// q^e with overflow detection; throws StateCapExceeded on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t q, std::uint64_t e);

/// Lexicographic encoding of a length-n tuple with entries < q.
Config encode_config(std::span<const std::uint32_t> symbols, const Params& p);

/// Inverse of encode_config; index 0 is (0,...,0).
std::vector<std::uint32_t> decode_config(Config c, const Params& p);

/// The shift: (x_1, ..., x_n) -> (x_n, x_1, ..., x_{n-1}), on indices.
Config rotate_config(Config c, const Params& p);

/// Inverse shift: (x_1, ..., x_n) -> (x_2, ..., x_n, x_1).
Config rotate_config_inv(Config c, const Params& p);

/// Index of the constant configuration (a, a, ..., a).
Config constant_config(std::uint32_t symbol, const Params& p);

}  // namespace carank
