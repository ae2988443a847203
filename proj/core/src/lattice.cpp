#include "wsg/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "wsg/errors.hpp"

namespace wsg {

namespace {

void axpy(std::vector<Int>& target, Int factor, const std::vector<Int>& row) {
  if (factor == 0) return;
  for (std::size_t k = 0; k < target.size(); ++k)
    target[k] = checked_sub(target[k], checked_mul(factor, row[k]));
}

}  // namespace

IntegerLattice::IntegerLattice(std::size_t dimension, const std::vector<std::vector<Int>>& generators)
    : dimension_(dimension) {
  std::vector<std::vector<Int>> work;
  for (const auto& g : generators) {
    if (g.size() != dimension) throw LengthMismatch("lattice generator has wrong dimension");
    work.push_back(g);
  }

  std::size_t top = 0;
  for (std::size_t col = 0; col < dimension && top < work.size(); ++col) {
    // Euclid on column `col` over rows top..end
    while (true) {
      std::size_t best = work.size();
      for (std::size_t r = top; r < work.size(); ++r) {
        if (work[r][col] == 0) continue;
        if (best == work.size() || std::llabs(work[r][col]) < std::llabs(work[best][col])) best = r;
      }
      if (best == work.size()) break;
      std::swap(work[top], work[best]);
      bool reduced_all = true;
      for (std::size_t r = top + 1; r < work.size(); ++r) {
        if (work[r][col] == 0) continue;
        axpy(work[r], work[r][col] / work[top][col], work[top]);
        if (work[r][col] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (top == work.size() || work[top][col] == 0) continue;
    if (work[top][col] < 0)
      for (auto& x : work[top]) x = checked_sub(0, x);
    for (std::size_t r = 0; r < top; ++r)
      axpy(work[r], floor_div(work[r][col], work[top][col]), work[top]);
    pivots_.push_back(col);
    ++top;
  }
  rows_.assign(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(top));
}

bool IntegerLattice::contains(std::span<const Int> v) const {
  if (v.size() != dimension_) throw LengthMismatch("vector has wrong dimension for lattice");
  std::vector<Int> rest(v.begin(), v.end());
  std::size_t r = 0;
  for (std::size_t col = 0; col < dimension_; ++col) {
    if (r < rows_.size() && pivots_[r] == col) {
      const Int pivot = rows_[r][col];
      if (rest[col] % pivot != 0) return false;
      axpy(rest, rest[col] / pivot, rows_[r]);
      ++r;
    } else if (rest[col] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace wsg
