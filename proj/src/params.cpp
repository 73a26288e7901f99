#include "carank/params.hpp"

#include <limits>
#include <string>

namespace carank {

Params::Params(std::uint32_t n_, std::uint32_t q_, std::uint64_t cap)
    : n(n_), q(q_), state_cap(cap) {
  if (n < 2) throw InvalidArgument("group order n must be >= 2, got " + std::to_string(n));
  if (q < 2) throw InvalidArgument("alphabet size q must be >= 2, got " + std::to_string(q));
}

std::uint64_t checked_pow(std::uint64_t q, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q)
      throw StateCapExceeded("q^e overflows 64-bit arithmetic");
    r *= q;
  }
  return r;
}

std::uint32_t Params::num_states() const {
  const std::uint64_t s = checked_pow(q, n);
  if (s > state_cap || s > std::numeric_limits<std::uint32_t>::max())
    throw StateCapExceeded("q^n = " + std::to_string(s) + " exceeds the state cap " +
                           std::to_string(state_cap));
  return static_cast<std::uint32_t>(s);
}

Config encode_config(std::span<const std::uint32_t> symbols, const Params& p) {
  if (symbols.size() != p.n)
    throw InvalidArgument("tuple length " + std::to_string(symbols.size()) +
                          " does not match n = " + std::to_string(p.n));
  p.num_states();
  std::uint64_t idx = 0;
  std::uint64_t weight = 1;
  for (std::uint32_t s : symbols) {
    if (s >= p.q)
      throw InvalidSymbol("symbol " + std::to_string(s) + " not below q = " +
                          std::to_string(p.q));
    idx += s * weight;
    weight *= p.q;
  }
  return static_cast<Config>(idx);
}

std::vector<std::uint32_t> decode_config(Config c, const Params& p) {
  const std::uint32_t states = p.num_states();
  if (c >= states)
    throw InvalidSymbol("configuration index " + std::to_string(c) + " not below q^n");
  std::vector<std::uint32_t> out(p.n);
  for (std::uint32_t i = 0; i < p.n; ++i) {
    out[i] = c % p.q;
    c /= p.q;
  }
  return out;
}

Config rotate_config(Config c, const Params& p) {
  const std::uint32_t qn1 = p.num_states() / p.q;
  return (c % qn1) * p.q + c / qn1;
}

Config rotate_config_inv(Config c, const Params& p) {
  const std::uint32_t qn1 = p.num_states() / p.q;
  return c / p.q + (c % p.q) * qn1;
}

Config constant_config(std::uint32_t symbol, const Params& p) {
  if (symbol >= p.q) throw InvalidSymbol("symbol " + std::to_string(symbol) + " not below q");
  const std::uint32_t states = p.num_states();
  // a * (q^n - 1) / (q - 1) = a * (1 + q + ... + q^(n-1))
  return static_cast<Config>(std::uint64_t{symbol} * ((states - 1) / (p.q - 1)));
}

}  // namespace carank
