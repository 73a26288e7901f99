#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "carank/automaton.hpp"
#include "carank/orbits.hpp"

namespace carank {

/// Permutations are 0-based image tables: perm[i] is the image of point i.
/// Composition is left-to-right, matching the right action used throughout.
using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::uint32_t degree);
Perm perm_compose(const Perm& a, const Perm& b);  // a then b
Perm perm_inverse(const Perm& a);
Perm perm_transposition(std::uint32_t degree, std::uint32_t i, std::uint32_t j);
/// Builds the permutation that is the product of the given cycles.
Perm perm_from_cycles(std::uint32_t degree,
                      const std::vector<std::vector<std::uint32_t>>& cycles);
std::uint64_t perm_order(const Perm& a);
bool is_permutation(const Perm& a);

/// The cycle (1,2,...,alpha) when alpha is odd, (2,3,...,alpha) when alpha
/// is even, written on 0-based points. Its order is always odd.
Perm z_alpha(std::uint32_t alpha);

/// An element (v; phi) of the generalized symmetric group Z_d wr Sym_alpha:
/// per-coordinate rotations v over Z_d and a permutation phi of the alpha
/// coordinates. Product law: (v; phi)(w; psi) = (v + w^phi; phi psi), where
/// (w^phi)_s = w_{phi(s)}.
struct WreathElement {
  std::uint32_t d;
  std::uint32_t alpha;
  std::vector<std::uint32_t> v;  // length alpha, entries in [0, d)
  Perm phi;                      // permutation of alpha points

  static WreathElement identity(std::uint32_t d, std::uint32_t alpha);
  static WreathElement make(std::uint32_t d, std::uint32_t alpha,
                            std::vector<std::uint32_t> v, Perm phi);

  friend bool operator==(const WreathElement& a, const WreathElement& b) {
    return a.d == b.d && a.alpha == b.alpha && a.v == b.v && a.phi == b.phi;
  }
  friend bool operator<(const WreathElement& a, const WreathElement& b) {
    return std::pair(a.v, a.phi) < std::pair(b.v, b.phi);
  }
};

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b);
WreathElement wreath_inverse(const WreathElement& a);

/// The pair x = (e^1; z_alpha), y = (e^1; (1,2)) generating Z_d wr Sym_alpha.
std::pair<WreathElement, WreathElement> wreath_rank2_generators(std::uint32_t d,
                                                                std::uint32_t alpha);

/// Coordinates of an invertible CA: one wreath factor per non-trivial
/// divisor d of n (ascending d, degree = number of size-d orbits), plus the
/// permutation induced on the q constant configurations (by symbol value).
struct ICAElement {
  std::vector<WreathElement> factors;
  Perm constant_perm;

  static ICAElement identity(const OrbitStructure& orbits);

  friend bool operator==(const ICAElement& a, const ICAElement& b) {
    return a.factors == b.factors && a.constant_perm == b.constant_perm;
  }
};

/// Factor-wise wreath product plus composition of the constant permutations.
ICAElement ica_multiply(const ICAElement& a, const ICAElement& b);
ICAElement ica_inverse(const ICAElement& a);

/// Reads off the coordinates of an invertible CA: for each size class, how
/// the orbits are permuted and by which rotation offset each representative
/// lands relative to the target representative. Throws NotInvertible.
ICAElement ica_decompose(const CellularAutomaton& ca, const OrbitStructure& orbits);

/// Inverse direction: the unique invertible CA with the given coordinates.
CellularAutomaton ica_compose(const ICAElement& e, const OrbitStructure& orbits);

/// q! * product over non-trivial divisors d of (d^alpha(d,q) * alpha(d,q)!).
std::uint64_t ica_order(const Params& p);

/// A generating set of the invertible CA, sized by the structure of n:
/// 2 per wreath factor, with one factor paired against the constant
/// permutations (3 elements when n is a power of 2 and q >= 3; the single
/// size-2 orbit at q = 2 costs one element).
std::vector<CellularAutomaton> ica_generating_set(const Params& p);
std::vector<CellularAutomaton> ica_generating_set(const Params& p,
                                                  const OrbitStructure& orbits);

/// One invariant subgroup of (Z_p)^alpha under coordinate permutations.
struct Submodule {
  std::uint64_t size;
  std::vector<std::vector<std::uint32_t>> basis;  // row-reduced, over Z_p
  bool is_diagonal;  // {(a, a, ..., a)}
  bool is_zero_sum;  // {v : sum v_i = 0}
};

struct SubmoduleReport {
  std::uint32_t p;
  std::uint32_t alpha;
  std::vector<Submodule> proper_nonzero;  // sorted by size then basis
  bool diagonal_contained_in_zero_sum;    // holds iff p divides alpha
  bool diagonal_equals_zero_sum;          // the (p, alpha) = (2, 2) coincidence
};

/// Exhaustive enumeration of the permutation-invariant subgroups of
/// (Z_p)^alpha, p prime; oracle for the "exactly diagonal and zero-sum"
/// classification. Throws CapExceeded when p^alpha exceeds the cap.
SubmoduleReport invariant_submodules(std::uint32_t p, std::uint32_t alpha,
                                     std::uint64_t cap = 729);

}  // namespace carank
