#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wsg/gamma.hpp"
#include "wsg/lattice.hpp"
#include "wsg/semigroup.hpp"

namespace wsg {

// Integer combination of the labelled points P_1..P_{a+1}. Index 0 is P_1.
class FormalDivisor {
 public:
  FormalDivisor() = default;
  explicit FormalDivisor(std::size_t points) : coeffs_(points, 0) {}
  explicit FormalDivisor(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}

  // n * P_label, label 1-based.
  static FormalDivisor point(std::size_t points, int label, Int n = 1);

  std::size_t size() const noexcept { return coeffs_.size(); }
  Int operator[](std::size_t k) const { return coeffs_[k]; }
  Int& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

  Int degree() const;
  bool is_effective() const;

  // Pole orders at P_1..P_k: max(0, -coeff).
  PoleVector pole_part(std::size_t k) const;

  FormalDivisor& operator+=(const FormalDivisor& rhs);
  FormalDivisor& operator-=(const FormalDivisor& rhs);
  friend FormalDivisor operator+(FormalDivisor lhs, const FormalDivisor& rhs) { return lhs += rhs; }
  friend FormalDivisor operator-(FormalDivisor lhs, const FormalDivisor& rhs) { return lhs -= rhs; }
  friend FormalDivisor operator*(Int n, const FormalDivisor& d);

  friend bool operator==(const FormalDivisor&, const FormalDivisor&) = default;

 private:
  std::vector<Int> coeffs_;
};

// "3P1 - P2 + 7P4"; "0" for the zero divisor.
std::string to_string(const FormalDivisor& d);
std::ostream& operator<<(std::ostream& os, const FormalDivisor& d);

// Principal divisors generated by
//   r_0 = a P_1 - (P_2 + ... + P_{a+1})   (divisor of y, negated)
//   r_j = b P_j - b P_1,  j = 2..a+1       (divisor of x - alpha_j)
class RelationLattice {
 public:
  explicit RelationLattice(const CurveParams& params);

  std::size_t points() const noexcept { return basis_.empty() ? 0 : basis_.front().size(); }
  const std::vector<FormalDivisor>& basis() const noexcept { return basis_; }
  bool contains(const FormalDivisor& d) const;

 private:
  std::vector<FormalDivisor> basis_;
  IntegerLattice lattice_;
};

bool is_equivalent(const FormalDivisor& d1, const FormalDivisor& d2, const RelationLattice& lattice);

// y^c * prod_j (x - alpha_j)^{e_j}; e[k] is the exponent for P_{k+2}.
struct MonomialFunction {
  Int c = 0;
  std::vector<Int> e;

  static MonomialFunction constant(const CurveParams& params);
};

// c (P_2 + ... + P_{a+1} - a P_1) + sum_j e_j (b P_j - b P_1)
FormalDivisor divisor_of(const MonomialFunction& f, const CurveParams& params);

// (ab - a - b - 1) P_1
FormalDivisor canonical_divisor(const CurveParams& params);

struct CertificateCheck {
  std::string name;
  bool passed = false;
  FormalDivisor witness;
  // The check only shows its half of a statement whose remaining step is
  // Riemann-Roch duality, which is not re-derived here.
  bool conditional_on_duality = false;
};

struct CertificateReport {
  std::vector<CertificateCheck> checks;
  bool overall() const;
};

// Equivalences (1), (2) of the point configuration and, for idx, the divisor
// identities behind the Gamma element: the shifted divisor, A, A', and the
// special representative are all equivalent to sum_{j>m} (b-i) P_j, and the
// effective ones are effective. Throws ConstraintViolation for a bad idx.
CertificateReport verify_equivalence_chain(const CurveParams& params, Int m, const GammaIndex& idx);

// Checks, by exact divisor arithmetic, the explicit functions that make the
// Gamma element's divisor a discrepancy for every pair of points.
CertificateReport verify_discrepancy_certificate(const CurveParams& params, Int m,
                                                 const GammaIndex& idx);

}  // namespace wsg
