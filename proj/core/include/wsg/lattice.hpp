#pragma once

#include <span>
#include <vector>

#include "wsg/checked.hpp"

namespace wsg {

// Integer span of a finite set of generators in Z^n, kept in row Hermite
// normal form: pivots strictly increase, are positive, and entries above a
// pivot lie in [0, pivot).
class IntegerLattice {
 public:
  IntegerLattice(std::size_t dimension, const std::vector<std::vector<Int>>& generators);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<std::vector<Int>>& hermite_rows() const noexcept { return rows_; }

  bool contains(std::span<const Int> v) const;

 private:
  std::size_t dimension_;
  std::vector<std::vector<Int>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace wsg
