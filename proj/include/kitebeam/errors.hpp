#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kitebeam {

// A computation refused to run because it would exceed an explicit
// operation budget (candidate scans, representable magnitudes, ...).
// This is a normal outcome for the astronomically large constants this
// library manipulates, and callers are expected to handle it.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A connected sequence was too short to feed a net construction.
// Carries the first integer interval index the walk failed to populate.
class InsufficientLengthError : public std::runtime_error {
 public:
  InsufficientLengthError(const std::string& what, std::int64_t first_uncovered_k)
      : std::runtime_error(what), first_uncovered_k_(first_uncovered_k) {}

  std::int64_t first_uncovered_k() const { return first_uncovered_k_; }

 private:
  std::int64_t first_uncovered_k_;
};

}  // namespace kitebeam
