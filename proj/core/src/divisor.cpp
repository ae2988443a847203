#include "wsg/divisor.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "wsg/errors.hpp"

namespace wsg {

FormalDivisor FormalDivisor::point(std::size_t points, int label, Int n) {
  if (label < 1 || static_cast<std::size_t>(label) > points)
    throw std::out_of_range("point label out of range");
  FormalDivisor d(points);
  d[static_cast<std::size_t>(label - 1)] = n;
  return d;
}

Int FormalDivisor::degree() const {
  Int s = 0;
  for (Int c : coeffs_) s = checked_add(s, c);
  return s;
}

bool FormalDivisor::is_effective() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c >= 0; });
}

PoleVector FormalDivisor::pole_part(std::size_t k) const {
  PoleVector p(k);
  for (std::size_t j = 0; j < k; ++j) p[j] = coeffs_[j] < 0 ? -coeffs_[j] : 0;
  return p;
}

FormalDivisor& FormalDivisor::operator+=(const FormalDivisor& rhs) {
  if (size() != rhs.size()) throw LengthMismatch("divisors over different point sets");
  for (std::size_t k = 0; k < size(); ++k) coeffs_[k] = checked_add(coeffs_[k], rhs[k]);
  return *this;
}

FormalDivisor& FormalDivisor::operator-=(const FormalDivisor& rhs) {
  if (size() != rhs.size()) throw LengthMismatch("divisors over different point sets");
  for (std::size_t k = 0; k < size(); ++k) coeffs_[k] = checked_sub(coeffs_[k], rhs[k]);
  return *this;
}

FormalDivisor operator*(Int n, const FormalDivisor& d) {
  FormalDivisor out(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) out[k] = checked_mul(n, d[k]);
  return out;
}

std::string to_string(const FormalDivisor& d) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const Int c = d[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Int mag = c < 0 ? -c : c;
    if (mag != 1) os << mag;
    os << 'P' << (k + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FormalDivisor& d) { return os << to_string(d); }

namespace {

std::vector<FormalDivisor> relation_basis(const CurveParams& params) {
  const auto a = static_cast<std::size_t>(params.a());
  const std::size_t points = a + 1;
  std::vector<FormalDivisor> basis;
  FormalDivisor r0(points);
  r0[0] = params.a();
  for (std::size_t j = 1; j < points; ++j) r0[j] = -1;
  basis.push_back(r0);
  for (std::size_t j = 1; j < points; ++j) {
    FormalDivisor rj(points);
    rj[j] = params.b();
    rj[0] = -params.b();
    basis.push_back(rj);
  }
  return basis;
}

std::vector<std::vector<Int>> as_rows(const std::vector<FormalDivisor>& ds) {
  std::vector<std::vector<Int>> rows;
  for (const auto& d : ds) rows.push_back(d.coeffs());
  return rows;
}

}  // namespace

RelationLattice::RelationLattice(const CurveParams& params)
    : basis_(relation_basis(params)),
      lattice_(static_cast<std::size_t>(params.a()) + 1, as_rows(basis_)) {}

bool RelationLattice::contains(const FormalDivisor& d) const {
  return lattice_.contains(d.coeffs());
}

bool is_equivalent(const FormalDivisor& d1, const FormalDivisor& d2, const RelationLattice& lattice) {
  return lattice.contains(d1 - d2);
}

MonomialFunction MonomialFunction::constant(const CurveParams& params) {
  return MonomialFunction{0, std::vector<Int>(static_cast<std::size_t>(params.a()), 0)};
}

FormalDivisor divisor_of(const MonomialFunction& f, const CurveParams& params) {
  const auto a = static_cast<std::size_t>(params.a());
  if (f.e.size() != a) throw LengthMismatch("monomial needs one exponent per point P_2..P_{a+1}");
  FormalDivisor d(a + 1);
  d[0] = checked_mul(-params.a(), f.c);
  for (std::size_t j = 0; j < a; ++j) {
    d[j + 1] = checked_add(f.c, checked_mul(params.b(), f.e[j]));
    d[0] = checked_sub(d[0], checked_mul(params.b(), f.e[j]));
  }
  return d;
}

FormalDivisor canonical_divisor(const CurveParams& params) {
  const auto points = static_cast<std::size_t>(params.a()) + 1;
  const Int k = frobenius(params) - 1;
  return FormalDivisor::point(points, 1, k);
}

bool CertificateReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.passed; });
}

namespace {

struct ChainDivisors {
  FormalDivisor shifted;   // (tb-ia)P_1 + sum_j (s_j b + i) P_j
  FormalDivisor a_div;     // (b-i)(a P_1 - P_2 - ... - P_m)
  FormalDivisor a_prime;   // ((a+1-m)b - ia) P_1 + i(P_2 + ... + P_m)
  FormalDivisor special;   // (tb-ia)P_1 + (sb+i)P_2 + i(P_3 + ... + P_m)
  FormalDivisor tail;      // sum_{j>m} (b-i) P_j
};

ChainDivisors chain_divisors(const CurveParams& params, Int m, const GammaIndex& idx) {
  const Int a = params.a();
  const Int b = params.b();
  const Int i = idx.i;
  const auto points = static_cast<std::size_t>(a) + 1;
  const auto mm = static_cast<std::size_t>(m);
  Int s_total = 0;
  for (Int s : idx.s) s_total = checked_add(s_total, s);

  ChainDivisors c{FormalDivisor(points), FormalDivisor(points), FormalDivisor(points),
                  FormalDivisor(points), FormalDivisor(points)};
  c.shifted[0] = checked_mul(idx.t, b) - checked_mul(i, a);
  for (std::size_t j = 1; j < mm; ++j) c.shifted[j] = checked_mul(idx.s[j - 1], b) + i;

  c.a_div[0] = checked_mul(b - i, a);
  for (std::size_t j = 1; j < mm; ++j) c.a_div[j] = -(b - i);

  c.a_prime[0] = checked_mul(a + 1 - m, b) - checked_mul(i, a);
  for (std::size_t j = 1; j < mm; ++j) c.a_prime[j] = i;

  c.special[0] = c.shifted[0];
  if (mm >= 2) c.special[1] = checked_mul(s_total, b) + i;
  for (std::size_t j = 2; j < mm; ++j) c.special[j] = i;

  for (std::size_t j = mm; j < points; ++j) c.tail[j] = b - i;
  return c;
}

CertificateCheck equivalence_check(std::string name, const FormalDivisor& lhs,
                                   const FormalDivisor& rhs, const RelationLattice& lattice) {
  return CertificateCheck{std::move(name), is_equivalent(lhs, rhs, lattice), lhs - rhs, false};
}

CertificateCheck effectiveness_check(std::string name, const FormalDivisor& d) {
  return CertificateCheck{std::move(name), d.is_effective(), d, false};
}

}  // namespace

CertificateReport verify_equivalence_chain(const CurveParams& params, Int m, const GammaIndex& idx) {
  validate_gamma_index(params, m, idx);
  const RelationLattice lattice(params);
  const auto points = static_cast<std::size_t>(params.a()) + 1;
  const Int a = params.a();
  const Int b = params.b();
  CertificateReport report;

  FormalDivisor sum_rest(points);
  for (std::size_t j = 1; j < points; ++j) sum_rest[j] = 1;
  report.checks.push_back(equivalence_check("eq1: a P1 ~ P2 + ... + P" + std::to_string(points),
                                            FormalDivisor::point(points, 1, a), sum_rest, lattice));

  CertificateCheck eq2{"eq2: b Pi ~ b Pj for all i, j", true, FormalDivisor(points), false};
  for (int x = 1; x <= static_cast<int>(points) && eq2.passed; ++x) {
    for (int y = x + 1; y <= static_cast<int>(points); ++y) {
      const auto lhs = FormalDivisor::point(points, x, b);
      const auto rhs = FormalDivisor::point(points, y, b);
      if (!is_equivalent(lhs, rhs, lattice)) {
        eq2.passed = false;
        eq2.witness = lhs - rhs;
        break;
      }
    }
  }
  report.checks.push_back(eq2);

  const ChainDivisors c = chain_divisors(params, m, idx);
  report.checks.push_back(equivalence_check("eq4: shifted divisor ~ tail", c.shifted, c.tail, lattice));
  report.checks.push_back(equivalence_check("eq6: A ~ tail", c.a_div, c.tail, lattice));
  report.checks.push_back(equivalence_check("eq7: A' ~ tail", c.a_prime, c.tail, lattice));
  report.checks.push_back(equivalence_check("eq8: special representative ~ tail", c.special, c.tail, lattice));
  report.checks.push_back(effectiveness_check("effective: shifted divisor", c.shifted));
  report.checks.push_back(effectiveness_check("effective: A'", c.a_prime));
  report.checks.push_back(effectiveness_check("effective: special representative", c.special));
  const GammaVector element = gamma_element(params, m, idx);
  bool matches = true;
  for (std::size_t j = 0; j < points; ++j)
    matches = matches && c.shifted[j] == (j < element.size() ? element[j] : 0);
  report.checks.push_back(
      CertificateCheck{"shifted divisor matches gamma element", matches, c.shifted, false});
  return report;
}

namespace {

// F = f_2^{i-1} * prod_{j in extra} f_j, with f_2 = y and f_j = x - alpha_j.
MonomialFunction duality_function(const CurveParams& params, Int i, Int first_extra, Int m) {
  MonomialFunction f = MonomialFunction::constant(params);
  f.c = i - 1;
  for (Int j = first_extra; j <= m; ++j) f.e[static_cast<std::size_t>(j - 2)] = 1;
  return f;
}

void add_duality_pair(CertificateReport& report, const CurveParams& params, const std::string& label,
                      const MonomialFunction& f, const FormalDivisor& k_minus_a_prime, int p, int q) {
  const auto points = k_minus_a_prime.size();
  const FormalDivisor div_f = divisor_of(f, params);
  const FormalDivisor with_pq = div_f + k_minus_a_prime + FormalDivisor::point(points, p) +
                                FormalDivisor::point(points, q);
  const FormalDivisor with_q = div_f + k_minus_a_prime + FormalDivisor::point(points, q);
  report.checks.push_back(
      CertificateCheck{label + ": F in L(K+P+Q-A')", with_pq.is_effective(), with_pq, true});
  report.checks.push_back(
      CertificateCheck{label + ": F not in L(K+Q-A')", !with_q.is_effective(), with_q, true});
}

}  // namespace

CertificateReport verify_discrepancy_certificate(const CurveParams& params, Int m,
                                                 const GammaIndex& idx) {
  validate_gamma_index(params, m, idx);
  const RelationLattice lattice(params);
  const Int b = params.b();
  const Int i = idx.i;
  const auto mm = static_cast<std::size_t>(m);
  CertificateReport report;

  // omega = y^{b-i} * prod_{l=2}^m (x - alpha_l)^{-(s_l+1)}
  MonomialFunction omega = MonomialFunction::constant(params);
  omega.c = b - i;
  for (std::size_t l = 0; l + 1 < mm; ++l) omega.e[l] = -(idx.s[l] + 1);
  const FormalDivisor div_omega = divisor_of(omega, params);
  const GammaVector expected = gamma_element(params, m, idx);
  bool omega_ok = div_omega.pole_part(mm) == expected && expected.all_positive();
  for (std::size_t j = mm; j < div_omega.size(); ++j) omega_ok = omega_ok && div_omega[j] == b - i;
  report.checks.push_back(
      CertificateCheck{"omega has pole divisor A with zeros of order b-i off the support", omega_ok,
                       div_omega, false});

  const ChainDivisors c = chain_divisors(params, m, idx);
  const FormalDivisor k_minus_a_prime = canonical_divisor(params) - c.a_prime;

  add_duality_pair(report, params, "P=P1,Q=P2", duality_function(params, i, 3, m), k_minus_a_prime, 1, 2);
  if (m >= 3)
    add_duality_pair(report, params, "P=P2,Q=P3", duality_function(params, i, 4, m), k_minus_a_prime, 2,
                     3);

  report.checks.push_back(equivalence_check("A ~ A'", c.a_div, c.a_prime, lattice));
  report.checks.push_back(equivalence_check("shifted divisor ~ A'", c.shifted, c.a_prime, lattice));
  return report;
}

}  // namespace wsg
