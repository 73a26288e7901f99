#include "carank/automaton.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace carank {

LocalRule LocalRule::from_table(const Params& p, std::vector<std::uint32_t> table) {
  const std::uint32_t states = p.num_states();
  if (table.size() != states)
    throw InvalidArgument("local rule table has length " + std::to_string(table.size()) +
                          ", expected q^n = " + std::to_string(states));
  for (std::uint32_t v : table)
    if (v >= p.q)
      throw InvalidSymbol("local rule value " + std::to_string(v) + " not below q");
  return LocalRule{p, std::move(table)};
}

CellularAutomaton CellularAutomaton::identity(const Params& p) {
  const std::uint32_t states = p.num_states();
  std::vector<Config> images(states);
  for (std::uint32_t c = 0; c < states; ++c) images[c] = c;
  return CellularAutomaton(p, std::move(images), Unchecked{});
}

CellularAutomaton CellularAutomaton::shift(const Params& p) {
  const std::uint32_t states = p.num_states();
  const std::uint32_t qn1 = states / p.q;
  std::vector<Config> images(states);
  for (std::uint32_t c = 0; c < states; ++c) images[c] = (c % qn1) * p.q + c / qn1;
  return CellularAutomaton(p, std::move(images), Unchecked{});
}

CellularAutomaton CellularAutomaton::from_local_rule(const LocalRule& mu) {
  const Params& p = mu.params;
  const std::uint32_t states = p.num_states();
  if (mu.table.size() != states) throw InvalidArgument("local rule table length mismatch");
  const std::uint32_t qn1 = states / p.q;
  std::vector<Config> images(states);
  for (std::uint32_t c = 0; c < states; ++c) {
    // The i-th image coordinate reads mu at the window rotated left i times.
    std::uint64_t img = 0;
    std::uint64_t weight = 1;
    std::uint32_t w = c;
    for (std::uint32_t i = 0; i < p.n; ++i) {
      w = w / p.q + (w % p.q) * qn1;  // one left rotation
      img += std::uint64_t{mu.table[w]} * weight;
      weight *= p.q;
    }
    images[c] = static_cast<Config>(img);
  }
  return CellularAutomaton(p, std::move(images), Unchecked{});
}

CellularAutomaton CellularAutomaton::from_table(const Params& p, std::vector<Config> images) {
  const std::uint32_t states = p.num_states();
  if (images.size() != states)
    throw InvalidArgument("image table has length " + std::to_string(images.size()) +
                          ", expected q^n = " + std::to_string(states));
  for (Config c : images)
    if (c >= states)
      throw InvalidSymbol("image index " + std::to_string(c) + " not below q^n");
  if (!commutes_with_shift(images, p))
    throw NotACellularAutomaton("image table does not commute with the shift");
  return CellularAutomaton(p, std::move(images), Unchecked{});
}

Config CellularAutomaton::apply(Config c) const {
  if (c >= images_.size())
    throw InvalidSymbol("configuration index " + std::to_string(c) + " not below q^n");
  return images_[c];
}

LocalRule CellularAutomaton::local_rule() const {
  const std::uint32_t states = static_cast<std::uint32_t>(images_.size());
  const std::uint32_t qn1 = states / params_.q;
  std::vector<std::uint32_t> mu(states);
  for (std::uint32_t c = 0; c < states; ++c) mu[c] = images_[c] / qn1;  // f_n
  return LocalRule{params_, std::move(mu)};
}

bool CellularAutomaton::is_identity() const {
  for (std::uint32_t c = 0; c < images_.size(); ++c)
    if (images_[c] != c) return false;
  return true;
}

bool CellularAutomaton::is_invertible() const {
  std::vector<bool> hit(images_.size(), false);
  for (Config c : images_) {
    if (hit[c]) return false;
    hit[c] = true;
  }
  return true;
}

CellularAutomaton CellularAutomaton::inverse() const {
  const std::uint32_t states = static_cast<std::uint32_t>(images_.size());
  std::vector<Config> inv(states, states);
  for (std::uint32_t c = 0; c < states; ++c) {
    if (inv[images_[c]] != states) throw NotInvertible("image table is not a bijection");
    inv[images_[c]] = c;
  }
  for (Config c : inv)
    if (c == states) throw NotInvertible("image table is not a bijection");
  return CellularAutomaton(params_, std::move(inv), Unchecked{});
}

CellularAutomaton compose(const CellularAutomaton& f, const CellularAutomaton& g) {
  if (!(f.params() == g.params()))
    throw InvalidArgument("compose: operands have different (n, q)");
  const std::vector<Config>& ft = f.table();
  const std::vector<Config>& gt = g.table();
  std::vector<Config> images(ft.size());
  for (std::size_t c = 0; c < ft.size(); ++c) images[c] = gt[ft[c]];
  return CellularAutomaton(f.params(), std::move(images), CellularAutomaton::Unchecked{});
}

bool commutes_with_shift(std::span<const Config> table, const Params& p) {
  const std::uint32_t states = p.num_states();
  if (table.size() != states)
    throw InvalidArgument("table has length " + std::to_string(table.size()) +
                          ", expected q^n = " + std::to_string(states));
  const std::uint32_t qn1 = states / p.q;
  for (std::uint32_t c = 0; c < states; ++c) {
    const Config cs = (c % qn1) * p.q + c / qn1;
    const Config tc = table[c];
    if (table[cs] != (tc % qn1) * p.q + tc / qn1) return false;
  }
  return true;
}

std::size_t KernelPartition::num_nonsingleton() const {
  std::size_t k = 0;
  for (const auto& b : blocks)
    if (b.size() > 1) ++k;
  return k;
}

KernelPartition kernel_of(const CellularAutomaton& ca) {
  const std::vector<Config>& t = ca.table();
  std::unordered_map<Config, std::vector<Config>> fibers;
  for (std::uint32_t c = 0; c < t.size(); ++c) fibers[t[c]].push_back(c);
  KernelPartition k;
  k.blocks.reserve(fibers.size());
  for (auto& [img, block] : fibers) k.blocks.push_back(std::move(block));
  std::sort(k.blocks.begin(), k.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return k;
}

std::uint64_t hash_table(std::span<const Config> table) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (Config c : table) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (c >> (8 * byte)) & 0xFFu;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

}  // namespace carank
