#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace carank {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A tuple entry was >= q, or a configuration index was >= q^n.
struct InvalidSymbol : Error {
  using Error::Error;
};

/// Bad argument shape (wrong length, empty range, zero where positive needed).
struct InvalidArgument : Error {
  using Error::Error;
};

/// q^n exceeds the configured state cap (or overflows 64-bit arithmetic).
struct StateCapExceeded : Error {
  using Error::Error;
};

/// A raw image table does not commute with the shift.
struct NotACellularAutomaton : Error {
  using Error::Error;
};

/// Inversion requested for a non-bijective transformation.
struct NotInvertible : Error {
  using Error::Error;
};

/// idempotent_tau: target orbit size does not divide source orbit size.
struct NonDividingSizes : Error {
  using Error::Error;
};

/// idempotent_tau: source and target orbit coincide.
struct SameOrbit : Error {
  using Error::Error;
};

/// Closure/search grew past its element cap. Carries the partial count.
struct CapExceeded : Error {
  CapExceeded(const std::string& what, std::uint64_t partial)
      : Error(what), partial_count(partial) {}
  std::uint64_t partial_count;
};

/// decompose_word: the target is not in the closure of the generators.
struct NotInClosure : Error {
  using Error::Error;
};

/// Malformed input file or notation string.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace carank
