#include "wsg/gamma.hpp"

#include <numeric>
#include <string>

#include "wsg/errors.hpp"

namespace wsg {

namespace {

// Calls f(s) for every composition of `total` into `parts` nonnegative
// summands, in lexicographic order.
template <class F>
void for_each_composition(Int total, std::size_t parts, F&& f) {
  std::vector<Int> s(parts, 0);
  if (parts == 0) {
    if (total == 0) f(s);
    return;
  }
  auto rec = [&](auto&& self, std::size_t pos, Int remaining) -> void {
    if (pos + 1 == parts) {
      s[pos] = remaining;
      f(s);
      return;
    }
    for (Int v = 0; v <= remaining; ++v) {
      s[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

}  // namespace

void require_gamma_range(const CurveParams& params, Int m) {
  if (m < 2 || m > params.a() + 1)
    throw RangeError("m must satisfy 2 <= m <= a+1 = " + std::to_string(params.a() + 1) +
                     " (got " + std::to_string(m) + ")");
}

void validate_gamma_index(const CurveParams& params, Int m, const GammaIndex& idx) {
  require_gamma_range(params, m);
  const Int a = params.a();
  const Int b = params.b();
  if (idx.s.size() != static_cast<std::size_t>(m - 1))
    throw ConstraintViolation(ConstraintViolation::Kind::Shape,
                              "expected " + std::to_string(m - 1) + " entries s_2..s_m, got " +
                                  std::to_string(idx.s.size()));
  for (std::size_t k = 0; k < idx.s.size(); ++k) {
    if (idx.s[k] < 0)
      throw ConstraintViolation(ConstraintViolation::Kind::Positivity,
                                "s_" + std::to_string(k + 2) + " = " + std::to_string(idx.s[k]) +
                                    " must be nonnegative");
  }
  const Int ia = checked_mul(idx.i, a);
  const Int tb = checked_mul(idx.t, b);
  if (!(0 < ia && ia < tb))
    throw ConstraintViolation(ConstraintViolation::Kind::Positivity,
                              "0 < i*a < t*b violated (i*a = " + std::to_string(ia) +
                                  ", t*b = " + std::to_string(tb) + ")");
  Int total = idx.t;
  for (Int s : idx.s) total = checked_add(total, s);
  if (total != a + 1 - m)
    throw ConstraintViolation(ConstraintViolation::Kind::SumRule,
                              "t + sum(s) = " + std::to_string(total) + " must equal a+1-m = " +
                                  std::to_string(a + 1 - m));
}

GammaVector gamma_element(const CurveParams& params, Int m, const GammaIndex& idx) {
  validate_gamma_index(params, m, idx);
  const Int a = params.a();
  const Int b = params.b();
  GammaVector v(static_cast<std::size_t>(m));
  v[0] = checked_mul(idx.t, b) - checked_mul(idx.i, a);
  for (std::size_t k = 0; k < idx.s.size(); ++k)
    v[k + 1] = checked_add(checked_mul(idx.s[k], b), idx.i);
  return v;
}

std::vector<GammaIndex> enumerate_gamma_indices(const CurveParams& params, Int m) {
  require_gamma_range(params, m);
  const Int a = params.a();
  const Int b = params.b();
  const Int budget = a + 1 - m;
  std::vector<GammaIndex> out;
  for (Int t = 1; t <= budget; ++t) {
    const Int i_max = (checked_mul(t, b) - 1) / a;
    for (Int i = 1; i <= i_max; ++i) {
      for_each_composition(budget - t, static_cast<std::size_t>(m - 1),
                           [&](const std::vector<Int>& s) { out.push_back({t, i, s}); });
    }
  }
  return out;
}

std::vector<GammaVector> enumerate_gamma(const CurveParams& params, Int m) {
  std::vector<GammaVector> out;
  for (const auto& idx : enumerate_gamma_indices(params, m))
    out.push_back(gamma_element(params, m, idx));
  canonicalize(out);
  return out;
}

Int gamma_cardinality(const CurveParams& params, Int m) {
  require_gamma_range(params, m);
  const Int a = params.a();
  const Int b = params.b();
  Int total = 0;
  for (Int t = 1; t <= a + 1 - m; ++t) {
    const Int compositions = checked_binomial(a + 1 - m - t + m - 2, m - 2);
    total = checked_add(total, checked_mul(compositions, (checked_mul(t, b) - 1) / a));
  }
  return total;
}

}  // namespace wsg
