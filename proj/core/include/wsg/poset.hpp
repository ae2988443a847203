#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsg/pole_vector.hpp"
#include "wsg/semigroup.hpp"

namespace wsg {

// Coordinatewise maximum. Throws std::invalid_argument on an empty list and
// LengthMismatch on vectors of different lengths.
PoleVector lub(std::span<const PoleVector> vectors);

// A subset of the box {v : v ≼ bound} closed under lub and containing zero,
// stored through a generating set. A vector v lies in the set iff for every
// coordinate k with v_k > 0 some generator g ≼ v has g_k = v_k.
//
// The set is never materialized; boxes in N_0^6 with side 36 hold ~2e9 cells.
class LubClosedSet {
 public:
  explicit LubClosedSet(PoleVector bound);

  const PoleVector& bound() const noexcept { return bound_; }
  std::size_t dimension() const noexcept { return bound_.size(); }

  bool contains(const PoleVector& v) const;

  // Adds v as a generator unless it is outside the box or already a member.
  bool insert(const PoleVector& v);

  // Adds every sum of two members that fits in the box, to a fixpoint.
  void close_under_addition();

  // Drops generators that are lubs of other members.
  void prune();

  // Some member u ≠ v with u ≼ v and u_i = v_i, if one exists.
  std::optional<PoleVector> nabla_witness(const PoleVector& v, std::size_t i) const;

  // Members that are not the lub of the members strictly below them. Two
  // LubClosedSets with the same bound are equal iff these sets agree.
  std::vector<PoleVector> irreducibles() const;

  const std::vector<PoleVector>& generators() const noexcept { return generators_; }

  // Number of lattice points in the box; saturates at UINT64_MAX.
  std::uint64_t box_volume() const;

  // Explicit member / non-member lists. Throws std::length_error when the box
  // holds more than `max_volume` points.
  std::vector<PoleVector> members(std::uint64_t max_volume = kDefaultMaxVolume) const;
  std::vector<PoleVector> non_members(std::uint64_t max_volume = kDefaultMaxVolume) const;

  static constexpr std::uint64_t kDefaultMaxVolume = 50'000'000;

 private:
  template <class F>
  void for_each_box_point(std::uint64_t max_volume, F&& f) const;

  PoleVector bound_;
  std::vector<PoleVector> generators_;
  // by_value_[k][x]: generators g with g_k = x
  std::vector<std::vector<std::vector<std::uint32_t>>> by_value_;
};

bool same_members(const LubClosedSet& x, const LubClosedSet& y);

// Gamma of a subset of the points, on the subset's own coordinates.
struct SubsetGamma {
  std::vector<PoleVector> vectors;
  bool certified = false;
  std::string source;
};

// Supplies Gamma(P_{j_1}..P_{j_k}) for a subset of point labels (1-based,
// increasing), truncated to `bound` (one entry per label).
class GammaProvider {
 public:
  virtual ~GammaProvider() = default;
  virtual SubsetGamma gamma_for(const CurveParams& params, std::span<const int> labels,
                                const PoleVector& bound) const = 0;
};

// H(P_1..P_m) intersected with a box, plus provenance of its inputs.
struct SemigroupBox {
  Int m = 0;
  LubClosedSet members;
  bool certified = false;
  // Subsets (as label lists) whose Gamma input was not certified.
  std::vector<std::vector<int>> uncertified_subsets;

  const PoleVector& bound() const noexcept { return members.bound(); }
};

// Default box bound: (ab, ..., ab).
PoleVector default_bound(const CurveParams& params, Int m);

// All lubs of m vectors drawn from the zero-padded Gamma sets of every
// nonempty subset of {P_1..P_m}, intersected with the box.
SemigroupBox generate_h_box(const CurveParams& params, Int m, const PoleVector& bound,
                            const GammaProvider& provider);

// True iff no member u ≠ v satisfies u ≼ v and u_i = v_i (i is 0-based).
// Throws std::invalid_argument when v is not a member.
bool is_minimal_in_nabla(const PoleVector& v, std::size_t i, const SemigroupBox& box);

struct VectorSetResult {
  std::vector<PoleVector> vectors;
  bool certified = false;
};

// Members in N^m minimal in some nabla_i. Only elements inside the box are seen.
VectorSetResult extract_minimal_generating(const SemigroupBox& box);

// Box points outside H.
VectorSetResult gap_set_box(const SemigroupBox& box);

}  // namespace wsg
