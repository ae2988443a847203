#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsg/checked.hpp"

namespace wsg {

// Named curve families with their construction parameters.
struct Preset {
  enum class Kind {
    HermitianLike,  // y^q + y = x^{q^r+1}: (a, b) = (q, q^r + 1)
    Kummer,         // y^b = g(x), deg g = a
  };
  Kind kind;
  std::optional<Int> q;
  std::optional<Int> r;
};

std::string to_string(Preset::Kind kind);

// Degrees (a, b) of a plane model f(y) = g(x) with gcd(a, b) = 1.
// Construction validates a, b >= 2 and coprimality; genus is (a-1)(b-1)/2.
class CurveParams {
 public:
  CurveParams(Int a, Int b, std::optional<Preset> preset = std::nullopt);

  // Throws ValidationError unless q >= 2 is a prime power and r >= 1 is odd.
  static CurveParams hermitian_like(Int q, Int r);
  static CurveParams kummer(Int a, Int b, std::optional<Int> q = std::nullopt);

  Int a() const noexcept { return a_; }
  Int b() const noexcept { return b_; }
  Int genus() const noexcept { return genus_; }
  const std::optional<Preset>& preset() const noexcept { return preset_; }

  // Human-readable warnings for using m points with this curve, e.g. when a
  // preset carries a field size q and m exceeds it.
  std::vector<std::string> warnings_for(Int m) const;

 private:
  Int a_;
  Int b_;
  Int genus_;
  std::optional<Preset> preset_;
};

// The numerical semigroup <a, b>, with membership answered from the table of
// smallest elements per residue class mod a.
class TwoGeneratorSemigroup {
 public:
  explicit TwoGeneratorSemigroup(const CurveParams& params);

  bool contains(Int n) const;
  Int frobenius() const noexcept { return frobenius_; }

 private:
  Int a_;
  std::vector<Int> apery_;
  Int frobenius_;
};

// A gap written as a*b - i*a - j*b with 1 <= i <= b-1 and 1 <= j <= a-1.
struct GapRep {
  Int value;
  Int i;
  Int j;

  friend bool operator==(const GapRep&, const GapRep&) = default;
};

bool semigroup_membership(const CurveParams& params, Int n);

// The sorted gaps of <a, b>; exactly genus() entries, the last being ab-a-b.
std::vector<Int> gaps(const CurveParams& params);

// The unique (i, j) representation of a gap, or nullopt when n is not a gap.
std::optional<GapRep> gap_representation(const CurveParams& params, Int n);

Int frobenius(const CurveParams& params);

}  // namespace wsg
