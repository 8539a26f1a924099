#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lre {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A move was applied to a permutation that cannot support it
/// (currently only: Exchange on a single-element permutation).
class InvalidMoveError : public Error {
 public:
  using Error::Error;
};

/// An argument was outside the documented domain of an operation
/// (out-of-range r in k_perm, rank value >= n!, and the like).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A sorting algorithm was asked for a size it is not defined for.
class UnsupportedSizeError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (permutation or move-sequence strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised when the frontier empties before the target is found.
/// The generator set connects all of S_n, so seeing this means a bug.
class FrontierExhaustedError : public Error {
 public:
  using Error::Error;
};

/// A search hit one of its configured limits. Carries the deepest level
/// that completed, i.e. every state at distance <= deepest_completed_level
/// from the source had been discovered when the search stopped.
class SearchAborted : public Error {
 public:
  SearchAborted(const std::string& what, int deepest_completed_level,
                std::uint64_t states_expanded, std::uint64_t peak_frontier)
      : Error(what),
        deepest_completed_level(deepest_completed_level),
        states_expanded(states_expanded),
        peak_frontier(peak_frontier) {}

  int deepest_completed_level;
  std::uint64_t states_expanded;
  std::uint64_t peak_frontier;
};

}  // namespace lre
