#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tkchar {

/// Raised when an operation's geometric input is degenerate (coincident
/// projective points, central matrices where eigenvectors are needed, ...).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A system of congruences or power equations with no solution.
class NoSolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nearest-value decoding found more than one admissible candidate.
class AmbiguityError : public std::runtime_error {
 public:
  AmbiguityError(const std::string& what, std::vector<int> candidates)
      : std::runtime_error(what), candidates_(std::move(candidates)) {}

  const std::vector<int>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<int> candidates_;
};

}  // namespace tkchar
