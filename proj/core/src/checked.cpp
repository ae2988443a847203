#include "wsg/checked.hpp"

#include <cstdlib>

namespace wsg {

Int checked_add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

Int checked_sub(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Int checked_binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (Int j = 1; j <= k; ++j) {
    // result * (n-k+j) is divisible by j at every step
    result = checked_mul(result, n - k + j) / j;
  }
  return result;
}

Int gcd(Int x, Int y) {
  x = std::llabs(x);
  y = std::llabs(y);
  while (y != 0) {
    Int r = x % y;
    x = y;
    y = r;
  }
  return x;
}

}  // namespace wsg
