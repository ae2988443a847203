#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "wsg/checked.hpp"

namespace wsg {

// An element of N_0^m: the pole orders of a function at P_1..P_m.
// Ordered lexicographically; the componentwise partial order is `precedes`.
class PoleVector {
 public:
  PoleVector() = default;
  explicit PoleVector(std::size_t m, Int fill = 0) : coords_(m, fill) {}
  PoleVector(std::initializer_list<Int> coords) : coords_(coords) {}
  explicit PoleVector(std::vector<Int> coords) : coords_(std::move(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  Int operator[](std::size_t k) const { return coords_[k]; }
  Int& operator[](std::size_t k) { return coords_[k]; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  const std::vector<Int>& coords() const noexcept { return coords_; }

  Int sum() const;
  bool is_zero() const;
  bool all_positive() const;

  friend auto operator<=>(const PoleVector&, const PoleVector&) = default;
  friend bool operator==(const PoleVector&, const PoleVector&) = default;

 private:
  std::vector<Int> coords_;
};

// u ≼ v: u_k <= v_k for every k. Throws LengthMismatch on differing sizes.
bool precedes(const PoleVector& u, const PoleVector& v);

// Componentwise sum (product of the underlying functions).
PoleVector operator+(const PoleVector& u, const PoleVector& v);

std::ostream& operator<<(std::ostream& os, const PoleVector& v);

struct PoleVectorHash {
  std::size_t operator()(const PoleVector& v) const noexcept;
};

// Sorts lexicographically and removes duplicates.
void canonicalize(std::vector<PoleVector>& vs);

}  // namespace wsg
