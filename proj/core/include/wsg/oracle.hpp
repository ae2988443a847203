#pragma once

#include <vector>

#include "wsg/divisor.hpp"
#include "wsg/poset.hpp"

namespace wsg {

struct ExponentRange {
  Int lo = 0;
  Int hi = 0;
};

// Search space for the brute-force oracle: monomials y^c prod (x - alpha_j)^{e_j}
// with c and every e_j in the given ranges, keeping those whose poles lie in
// `support` (1-based labels, increasing) and inside `bound`.
struct OracleConfig {
  std::vector<int> support;
  PoleVector bound;  // one entry per support label
  ExponentRange c;
  std::vector<ExponentRange> e;  // e[k] is the range for P_{k+2}

  // c in [0, a(1 + max bound)], e_j in [-(max bound + c_max)/b - 1, 0]. Any
  // monomial with a pole vector in the box has a representative in these
  // ranges, because y^b = prod (x - alpha_j) trades c for the e_j.
  static OracleConfig make_default(const CurveParams& params, std::vector<int> support,
                                   PoleVector bound);
};

// Pole vectors (on the support coordinates) of every monomial in range that is
// regular off the support and whose poles fit the bound. Sorted, unique.
std::vector<PoleVector> monomial_pole_vectors(const CurveParams& params, const OracleConfig& config);

// Closure of the monomial pole vectors under addition and lub inside the box.
// A lower bound for H on the support; never certified.
SemigroupBox oracle_box_semigroup(const CurveParams& params, const OracleConfig& config);
SemigroupBox oracle_box_semigroup(const CurveParams& params, Int m, const PoleVector& bound);

// All-positive members of the oracle box that are minimal in some nabla_i.
std::vector<PoleVector> oracle_gamma(const CurveParams& params, const OracleConfig& config);
std::vector<PoleVector> oracle_gamma(const CurveParams& params, Int m, const PoleVector& bound);

// Additive closure of the monomial pole orders at a single point P_l, l >= 2.
struct CertifiedSemigroup {
  int point = 0;
  Int bound = 0;
  std::vector<Int> generators;  // minimal generators up to bound
  std::vector<Int> gaps;        // non-members in [1, bound]
  Int gap_count = 0;
  // gap_count equals the genus and bound >= 2g-1, so the closure is H(P_l).
  bool certified = false;

  bool contains(Int n) const;

 private:
  friend CertifiedSemigroup singleton_semigroup(const CurveParams&, int, Int);
  std::vector<bool> member_;
};

CertifiedSemigroup singleton_semigroup(const CurveParams& params, int point, Int bound);

// Exactness test for a two-point Gamma computed from a subset of H(P, Q).
// The true Gamma(P, Q) is the graph of a bijection G(P) -> G(Q); a lower bound
// whose minimal elements hit every gap of P and of Q exactly once must have
// the same minimal elements.
bool certify_two_point_gamma(const std::vector<PoleVector>& gamma, const std::vector<Int>& gaps_first,
                             const std::vector<Int>& gaps_second);

}  // namespace wsg
