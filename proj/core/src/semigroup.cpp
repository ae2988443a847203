#include "wsg/semigroup.hpp"

#include <algorithm>

#include "wsg/errors.hpp"

namespace wsg {

namespace {

bool is_prime_power(Int q) {
  if (q < 2) return false;
  for (Int p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return true;
}

}  // namespace

std::string to_string(Preset::Kind kind) {
  switch (kind) {
    case Preset::Kind::HermitianLike:
      return "hermitian-like";
    case Preset::Kind::Kummer:
      return "kummer";
  }
  return "unknown";
}

CurveParams::CurveParams(Int a, Int b, std::optional<Preset> preset)
    : a_(a), b_(b), genus_(0), preset_(std::move(preset)) {
  if (a < 2 || b < 2)
    throw ValidationError("degrees must satisfy a >= 2 and b >= 2 (got a=" +
                          std::to_string(a) + ", b=" + std::to_string(b) + ")");
  if (gcd(a, b) != 1)
    throw ValidationError("gcd(a, b) must be 1 (got gcd(" + std::to_string(a) + ", " +
                          std::to_string(b) + ") = " + std::to_string(gcd(a, b)) + ")");
  // (a-1)(b-1) is even because a and b are not both even
  genus_ = checked_mul(a - 1, b - 1) / 2;
  checked_mul(a, b);
}

CurveParams CurveParams::hermitian_like(Int q, Int r) {
  if (!is_prime_power(q))
    throw ValidationError("q must be a prime power (got " + std::to_string(q) + ")");
  if (r < 1 || r % 2 == 0)
    throw ValidationError("r must be an odd positive integer (got " + std::to_string(r) + ")");
  Int qr = 1;
  for (Int k = 0; k < r; ++k) qr = checked_mul(qr, q);
  return CurveParams(q, checked_add(qr, 1), Preset{Preset::Kind::HermitianLike, q, r});
}

CurveParams CurveParams::kummer(Int a, Int b, std::optional<Int> q) {
  if (q && !is_prime_power(*q))
    throw ValidationError("q must be a prime power (got " + std::to_string(*q) + ")");
  return CurveParams(a, b, Preset{Preset::Kind::Kummer, q, std::nullopt});
}

std::vector<std::string> CurveParams::warnings_for(Int m) const {
  std::vector<std::string> out;
  if (preset_ && preset_->q && m > *preset_->q) {
    out.push_back("m=" + std::to_string(m) + " exceeds the field size q=" +
                  std::to_string(*preset_->q) +
                  "; the lub construction of H is only established for m <= q");
  }
  return out;
}

TwoGeneratorSemigroup::TwoGeneratorSemigroup(const CurveParams& params)
    : a_(params.a()), apery_(static_cast<std::size_t>(params.a())), frobenius_(0) {
  const Int b = params.b();
  // k*b for k = 0..a-1 hits every residue class mod a exactly once
  for (Int k = 0; k < a_; ++k) {
    const Int w = checked_mul(k, b);
    apery_[static_cast<std::size_t>(w % a_)] = w;
  }
  frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - a_;
}

bool TwoGeneratorSemigroup::contains(Int n) const {
  if (n < 0) return false;
  return n >= apery_[static_cast<std::size_t>(n % a_)];
}

bool semigroup_membership(const CurveParams& params, Int n) {
  return TwoGeneratorSemigroup(params).contains(n);
}

std::vector<Int> gaps(const CurveParams& params) {
  const TwoGeneratorSemigroup sg(params);
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(params.genus()));
  for (Int n = 1; n <= sg.frobenius(); ++n)
    if (!sg.contains(n)) out.push_back(n);
  return out;
}

std::optional<GapRep> gap_representation(const CurveParams& params, Int n) {
  const Int a = params.a();
  const Int b = params.b();
  if (n <= 0) return std::nullopt;
  const Int ab = checked_mul(a, b);
  for (Int j = 1; j <= a - 1; ++j) {
    const Int rest = ab - j * b - n;  // = i*a
    if (rest <= 0) break;
    if (rest % a == 0) {
      const Int i = rest / a;
      if (i >= 1 && i <= b - 1) return GapRep{n, i, j};
    }
  }
  return std::nullopt;
}

Int frobenius(const CurveParams& params) {
  return checked_sub(checked_sub(checked_mul(params.a(), params.b()), params.a()), params.b());
}

}  // namespace wsg
