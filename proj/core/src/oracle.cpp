#include "wsg/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "wsg/errors.hpp"
#include "wsg/gamma.hpp"

namespace wsg {

OracleConfig OracleConfig::make_default(const CurveParams& params, std::vector<int> support,
                                        PoleVector bound) {
  if (support.size() != bound.size())
    throw LengthMismatch("oracle bound needs one entry per support point");
  Int max_bound = 0;
  for (Int x : bound) max_bound = std::max(max_bound, x);
  OracleConfig cfg;
  cfg.support = std::move(support);
  cfg.bound = std::move(bound);
  cfg.c = {0, checked_mul(params.a(), checked_add(1, max_bound))};
  const Int e_lo = -(checked_add(max_bound, cfg.c.hi) / params.b()) - 1;
  cfg.e.assign(static_cast<std::size_t>(params.a()), ExponentRange{e_lo, 0});
  return cfg;
}

namespace {

void validate_support(const CurveParams& params, const OracleConfig& cfg) {
  if (cfg.support.empty()) throw ValidationError("oracle support must be nonempty");
  if (cfg.support.size() != cfg.bound.size())
    throw LengthMismatch("oracle bound needs one entry per support point");
  if (cfg.e.size() != static_cast<std::size_t>(params.a()))
    throw LengthMismatch("oracle needs one exponent range per point P_2..P_{a+1}");
  for (std::size_t k = 0; k < cfg.support.size(); ++k) {
    if (cfg.support[k] < 1 || cfg.support[k] > params.a() + 1)
      throw ValidationError("support label out of range");
    if (k > 0 && cfg.support[k] <= cfg.support[k - 1])
      throw ValidationError("support labels must be strictly increasing");
    if (cfg.bound[k] < 0) throw ValidationError("oracle bound must be nonnegative");
  }
}

}  // namespace

std::vector<PoleVector> monomial_pole_vectors(const CurveParams& params, const OracleConfig& cfg) {
  validate_support(params, cfg);
  const auto a = static_cast<std::size_t>(params.a());
  const Int b = params.b();
  const std::size_t points = a + 1;

  // position of each label in the support, or -1
  std::vector<int> slot(points, -1);
  for (std::size_t k = 0; k < cfg.support.size(); ++k)
    slot[static_cast<std::size_t>(cfg.support[k] - 1)] = static_cast<int>(k);

  // Coefficient d_j = c + b e_j at P_j (j >= 2); the coefficient at P_1 is
  // -sum d_j. A pole at P_j in the support is capped by the bound; off the
  // support d_j >= 0. At P_1: sum d_j <= bound_1 on the support, <= 0 off it.
  std::vector<Int> lower(points, 0);
  for (std::size_t j = 1; j < points; ++j)
    lower[j] = slot[j] >= 0 ? -cfg.bound[static_cast<std::size_t>(slot[j])] : 0;
  const Int sum_cap = slot[0] >= 0 ? cfg.bound[static_cast<std::size_t>(slot[0])] : 0;
  std::vector<Int> rest_lower(points + 1, 0);
  for (std::size_t j = points; j-- > 1;) rest_lower[j] = rest_lower[j + 1] + lower[j];

  std::unordered_set<PoleVector, PoleVectorHash> found;
  std::vector<Int> d(points, 0);
  PoleVector pv(cfg.support.size(), 0);

  auto emit = [&](Int sum_d) {
    for (std::size_t k = 0; k < cfg.support.size(); ++k) {
      const auto j = static_cast<std::size_t>(cfg.support[k] - 1);
      pv[k] = j == 0 ? std::max<Int>(0, sum_d) : std::max<Int>(0, -d[j]);
    }
    found.insert(pv);
  };

  for (Int c = cfg.c.lo; c <= cfg.c.hi; ++c) {
    auto rec = [&](auto&& self, std::size_t j, Int partial) -> void {
      if (j == points) {
        emit(partial);
        return;
      }
      const ExponentRange& range = cfg.e[j - 1];
      const Int lo = std::max(range.lo, ceil_div(lower[j] - c, b));
      const Int hi = std::min(range.hi, floor_div(sum_cap - partial - rest_lower[j + 1] - c, b));
      for (Int e = lo; e <= hi; ++e) {
        d[j] = c + b * e;
        self(self, j + 1, partial + d[j]);
      }
    };
    rec(rec, 1, 0);
  }

  std::vector<PoleVector> out(found.begin(), found.end());
  canonicalize(out);
  return out;
}

SemigroupBox oracle_box_semigroup(const CurveParams& params, const OracleConfig& cfg) {
  auto raw = monomial_pole_vectors(params, cfg);
  std::stable_sort(raw.begin(), raw.end(), [](const PoleVector& x, const PoleVector& y) {
    return x.sum() < y.sum();
  });
  SemigroupBox box{static_cast<Int>(cfg.support.size()), LubClosedSet(cfg.bound), false, {}};
  for (const auto& v : raw) box.members.insert(v);
  box.members.close_under_addition();
  box.members.prune();
  box.uncertified_subsets.push_back(cfg.support);
  return box;
}

namespace {

OracleConfig leading_support_config(const CurveParams& params, Int m, const PoleVector& bound) {
  require_gamma_range(params, m);
  if (bound.size() != static_cast<std::size_t>(m))
    throw LengthMismatch("bound must have m coordinates");
  std::vector<int> support;
  for (int k = 1; k <= m; ++k) support.push_back(k);
  return OracleConfig::make_default(params, std::move(support), bound);
}

}  // namespace

SemigroupBox oracle_box_semigroup(const CurveParams& params, Int m, const PoleVector& bound) {
  return oracle_box_semigroup(params, leading_support_config(params, m, bound));
}

std::vector<PoleVector> oracle_gamma(const CurveParams& params, const OracleConfig& cfg) {
  return extract_minimal_generating(oracle_box_semigroup(params, cfg)).vectors;
}

std::vector<PoleVector> oracle_gamma(const CurveParams& params, Int m, const PoleVector& bound) {
  return oracle_gamma(params, leading_support_config(params, m, bound));
}

bool CertifiedSemigroup::contains(Int n) const {
  if (n < 0) return false;
  if (n > bound) throw std::out_of_range("query above the enumerated bound");
  return member_[static_cast<std::size_t>(n)];
}

CertifiedSemigroup singleton_semigroup(const CurveParams& params, int point, Int bound) {
  if (point < 2 || point > params.a() + 1)
    throw RangeError("singleton point must satisfy 2 <= l <= a+1");
  if (bound < 0) throw ValidationError("bound must be nonnegative");
  const auto cfg = OracleConfig::make_default(params, {point}, PoleVector{bound});
  std::vector<Int> orders;
  for (const auto& v : monomial_pole_vectors(params, cfg))
    if (v[0] > 0) orders.push_back(v[0]);

  CertifiedSemigroup out;
  out.point = point;
  out.bound = bound;
  out.member_.assign(static_cast<std::size_t>(bound) + 1, false);
  out.member_[0] = true;
  for (Int n = 1; n <= bound; ++n) {
    for (Int p : orders) {
      if (p > n) break;
      if (out.member_[static_cast<std::size_t>(n - p)]) {
        out.member_[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
    if (!out.member_[static_cast<std::size_t>(n)]) out.gaps.push_back(n);
  }
  for (Int n = 1; n <= bound; ++n) {
    if (!out.member_[static_cast<std::size_t>(n)]) continue;
    bool decomposable = false;
    for (Int x = 1; x <= n / 2 && !decomposable; ++x)
      decomposable = out.member_[static_cast<std::size_t>(x)] && out.member_[static_cast<std::size_t>(n - x)];
    if (!decomposable) out.generators.push_back(n);
  }
  out.gap_count = static_cast<Int>(out.gaps.size());
  // every gap of a genus-g semigroup is at most 2g-1
  out.certified = bound >= 2 * params.genus() - 1 && out.gap_count == params.genus();
  return out;
}

bool certify_two_point_gamma(const std::vector<PoleVector>& gamma, const std::vector<Int>& gaps_first,
                             const std::vector<Int>& gaps_second) {
  std::vector<Int> firsts;
  std::vector<Int> seconds;
  for (const auto& v : gamma) {
    if (v.size() != 2) return false;
    firsts.push_back(v[0]);
    seconds.push_back(v[1]);
  }
  std::sort(firsts.begin(), firsts.end());
  std::sort(seconds.begin(), seconds.end());
  auto g1 = gaps_first;
  auto g2 = gaps_second;
  std::sort(g1.begin(), g1.end());
  std::sort(g2.begin(), g2.end());
  return firsts == g1 && seconds == g2;
}

}  // namespace wsg
