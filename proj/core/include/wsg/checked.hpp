#pragma once

#include <cstdint>
#include <stdexcept>

namespace wsg {

using Int = std::int64_t;

// Overflow-checked 64-bit arithmetic. Every operation throws
// std::overflow_error instead of wrapping.
Int checked_add(Int x, Int y);
Int checked_sub(Int x, Int y);
Int checked_mul(Int x, Int y);

// Binomial coefficient C(n, k); 0 when k < 0 or k > n.
Int checked_binomial(Int n, Int k);

// Floor division for a positive divisor.
inline Int floor_div(Int x, Int d) {
  Int q = x / d;
  if ((x % d != 0) && (x < 0)) --q;
  return q;
}

inline Int ceil_div(Int x, Int d) { return -floor_div(-x, d); }

Int gcd(Int x, Int y);

}  // namespace wsg
