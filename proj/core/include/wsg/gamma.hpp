#pragma once

#include <vector>

#include "wsg/pole_vector.hpp"
#include "wsg/semigroup.hpp"

namespace wsg {

// Index (t, i, s_2..s_m) of an element of the minimal generating set
// Gamma(P_1..P_m): t + sum s_j = a+1-m, 0 < i*a < t*b, s_j >= 0.
struct GammaIndex {
  Int t = 0;
  Int i = 0;
  std::vector<Int> s;

  friend bool operator==(const GammaIndex&, const GammaIndex&) = default;
};

using GammaVector = PoleVector;

// Throws RangeError unless 2 <= m <= a+1.
void require_gamma_range(const CurveParams& params, Int m);

// Throws ConstraintViolation naming the first failed constraint.
void validate_gamma_index(const CurveParams& params, Int m, const GammaIndex& idx);

// (t*b - i*a, s_2*b + i, ..., s_m*b + i).
GammaVector gamma_element(const CurveParams& params, Int m, const GammaIndex& idx);

// All valid indices, ordered by t, then i, then s lexicographically.
std::vector<GammaIndex> enumerate_gamma_indices(const CurveParams& params, Int m);

// Gamma(P_1..P_m), sorted lexicographically without duplicates.
std::vector<GammaVector> enumerate_gamma(const CurveParams& params, Int m);

// sum_{t=1}^{a+1-m} C(a-1-t, m-2) * floor((t*b - 1)/a)
Int gamma_cardinality(const CurveParams& params, Int m);

}  // namespace wsg
