#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "carank/params.hpp"

namespace carank {

/// A local map mu : A^n -> A, stored as its full value table indexed by
/// configuration. Entry at index c is mu applied to the tuple decoding c.
struct LocalRule {
  Params params;
  std::vector<std::uint32_t> table;  // length q^n, entries < q

  static LocalRule from_table(const Params& p, std::vector<std::uint32_t> table);
};

/// A transformation of A^n that commutes with the shift, stored as a full
/// image table. The commutation invariant is unconditional: tables from
/// outside sources go through from_table, which validates it.
class CellularAutomaton {
 public:
  static CellularAutomaton identity(const Params& p);
  static CellularAutomaton shift(const Params& p);

  /// Builds the transformation whose i-th image coordinate is mu applied to
  /// the window (x_{1+i}, ..., x_{n+i}), indices cyclic. Always shift-commuting.
  static CellularAutomaton from_local_rule(const LocalRule& mu);

  /// Wraps a raw image table, validating length, range and commutation.
  /// Throws NotACellularAutomaton when the table fails the centraliser test.
  static CellularAutomaton from_table(const Params& p, std::vector<Config> images);

  const Params& params() const { return params_; }
  const std::vector<Config>& table() const { return images_; }

  Config apply(Config c) const;

  /// mu = n-th coordinate function of this transformation.
  LocalRule local_rule() const;

  bool is_identity() const;
  bool is_invertible() const;
  CellularAutomaton inverse() const;  // throws NotInvertible

  friend bool operator==(const CellularAutomaton& a, const CellularAutomaton& b) {
    return a.params_ == b.params_ && a.images_ == b.images_;
  }
  friend bool operator<(const CellularAutomaton& a, const CellularAutomaton& b) {
    return a.images_ < b.images_;
  }

  struct Unchecked {};
  CellularAutomaton(const Params& p, std::vector<Config> images, Unchecked)
      : params_(p), images_(std::move(images)) {}

 private:
  Params params_;
  std::vector<Config> images_;
};

/// f then g (maps act on the right): the image of c is g(f(c)).
CellularAutomaton compose(const CellularAutomaton& f, const CellularAutomaton& g);

/// Centraliser membership test for a raw image table.
bool commutes_with_shift(std::span<const Config> table, const Params& p);

/// Fibers of the image map: two indices share a block iff their images agree.
/// Blocks are ascending, ordered by least member.
struct KernelPartition {
  std::vector<std::vector<Config>> blocks;

  std::size_t num_blocks() const { return blocks.size(); }
  std::size_t num_nonsingleton() const;
};

KernelPartition kernel_of(const CellularAutomaton& ca);

std::uint64_t hash_table(std::span<const Config> table);

struct CellularAutomatonHash {
  std::size_t operator()(const CellularAutomaton& ca) const {
    return static_cast<std::size_t>(hash_table(ca.table()));
  }
};

}  // namespace carank
