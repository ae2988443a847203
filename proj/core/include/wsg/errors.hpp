#pragma once

#include <stdexcept>
#include <string>

namespace wsg {

// Invalid curve parameters or malformed input (bad gcd, non-positive degree...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The number of points m lies outside the admissible range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Vectors or divisors of different lengths were combined.
class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A Gamma index (t, i, s_2..s_m) violates one of its defining constraints.
class ConstraintViolation : public std::invalid_argument {
 public:
  enum class Kind {
    Shape,       // wrong number of s_j entries
    SumRule,     // t + sum s_j != a+1-m
    Positivity,  // 0 < i*a < t*b or s_j >= 0 fails
  };

  ConstraintViolation(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace wsg
