#include "wsg/pole_vector.hpp"

#include <algorithm>
#include <ostream>

#include "wsg/errors.hpp"

namespace wsg {

Int PoleVector::sum() const {
  Int s = 0;
  for (Int c : coords_) s = checked_add(s, c);
  return s;
}

bool PoleVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

bool PoleVector::all_positive() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c > 0; });
}

bool precedes(const PoleVector& u, const PoleVector& v) {
  if (u.size() != v.size()) throw LengthMismatch("pole vectors differ in length");
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] > v[k]) return false;
  return true;
}

PoleVector operator+(const PoleVector& u, const PoleVector& v) {
  if (u.size() != v.size()) throw LengthMismatch("pole vectors differ in length");
  PoleVector r(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) r[k] = checked_add(u[k], v[k]);
  return r;
}

std::ostream& operator<<(std::ostream& os, const PoleVector& v) {
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ',';
    os << v[k];
  }
  return os << ')';
}

std::size_t PoleVectorHash::operator()(const PoleVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Int c : v) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void canonicalize(std::vector<PoleVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace wsg
