#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msec {

// Malformed polynomial text or input file.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what), position_(0) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// The configurable Gröbner pair budget ran out.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (ring mismatch, zero inputs,
// point off the variety, ...).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A computed object failed one of its own invariants, or repeated random
// trials disagreed.
class InvariantViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace msec
