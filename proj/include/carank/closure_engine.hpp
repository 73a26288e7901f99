#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "carank/errors.hpp"

namespace carank {

struct ClosureOptions {
  std::uint64_t cap = std::uint64_t{1} << 22;
  std::uint32_t threads = 1;
};

/// Breadth-first closure under a binary product. Elements are discovered in
/// word-length order, ties broken by (parent discovery order, generator
/// index), so the first discovery of an element corresponds to its
/// lexicographically least shortest word. The result is a deterministic
/// function of the generator list, independent of the thread count.
template <typename Elem>
struct ClosureResult {
  std::vector<Elem> elements;          // discovery order; generators first
  std::vector<std::uint32_t> parent;   // index into elements (self for generators)
  std::vector<std::uint32_t> symbol;   // generator index producing the element
  std::vector<std::uint32_t> depth;    // word length (generators have depth 1)

  /// Reconstructs the defining word of elements[i], left-to-right.
  std::vector<std::uint32_t> word(std::uint32_t i) const {
    std::vector<std::uint32_t> w;
    for (; depth[i] > 1; i = parent[i]) w.push_back(symbol[i]);
    w.push_back(symbol[i]);
    std::reverse(w.begin(), w.end());
    return w;
  }
};

template <typename Elem, typename Mul, typename Hash = std::hash<Elem>,
          typename Eq = std::equal_to<Elem>>
ClosureResult<Elem> bfs_closure(std::span<const Elem> generators, Mul mul,
                                const ClosureOptions& opts = {}) {
  if (generators.empty()) throw InvalidArgument("bfs_closure needs generators");
  ClosureResult<Elem> out;
  std::unordered_map<Elem, std::uint32_t, Hash, Eq> index;

  auto insert = [&](const Elem& e, std::uint32_t par, std::uint32_t sym,
                    std::uint32_t dep) -> bool {
    auto [it, fresh] = index.try_emplace(e, static_cast<std::uint32_t>(out.elements.size()));
    if (!fresh) return false;
    out.elements.push_back(e);
    out.parent.push_back(par);
    out.symbol.push_back(sym);
    out.depth.push_back(dep);
    if (out.elements.size() > opts.cap)
      throw CapExceeded("closure exceeded cap of " + std::to_string(opts.cap) +
                            " elements",
                        out.elements.size());
    return true;
  };

  for (std::uint32_t g = 0; g < generators.size(); ++g)
    insert(generators[g], static_cast<std::uint32_t>(out.elements.size()), g, 1);

  std::size_t level_begin = 0;
  while (level_begin < out.elements.size()) {
    const std::size_t level_end = out.elements.size();
    const std::size_t level_size = level_end - level_begin;
    const std::size_t ngen = generators.size();

    if (opts.threads > 1 && level_size >= 64) {
      // Products are computed in parallel into fixed slots, then merged in
      // the same (parent, generator) order the sequential path would use.
      std::vector<Elem> products(level_size * ngen);
      const std::uint32_t nthreads = opts.threads;
      std::vector<std::thread> pool;
      pool.reserve(nthreads);
      for (std::uint32_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < level_size; i += nthreads)
            for (std::size_t g = 0; g < ngen; ++g)
              products[i * ngen + g] =
                  mul(out.elements[level_begin + i], generators[g]);
        });
      }
      for (auto& th : pool) th.join();
      for (std::size_t i = 0; i < level_size; ++i)
        for (std::size_t g = 0; g < ngen; ++g)
          insert(products[i * ngen + g],
                 static_cast<std::uint32_t>(level_begin + i),
                 static_cast<std::uint32_t>(g),
                 out.depth[level_begin + i] + 1);
    } else {
      for (std::size_t i = level_begin; i < level_end; ++i)
        for (std::size_t g = 0; g < ngen; ++g)
          insert(mul(out.elements[i], generators[g]), static_cast<std::uint32_t>(i),
                 static_cast<std::uint32_t>(g), out.depth[i] + 1);
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace carank
