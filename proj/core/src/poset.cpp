#include "wsg/poset.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "wsg/errors.hpp"
#include "wsg/gamma.hpp"

namespace wsg {

PoleVector lub(std::span<const PoleVector> vectors) {
  if (vectors.empty()) throw std::invalid_argument("lub of an empty list");
  PoleVector out = vectors.front();
  for (const auto& v : vectors.subspan(1)) {
    if (v.size() != out.size()) throw LengthMismatch("lub of vectors with different lengths");
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::max(out[k], v[k]);
  }
  return out;
}

LubClosedSet::LubClosedSet(PoleVector bound) : bound_(std::move(bound)) {
  by_value_.resize(bound_.size());
  for (std::size_t k = 0; k < bound_.size(); ++k) {
    if (bound_[k] < 0) throw ValidationError("box bound must be nonnegative");
    by_value_[k].resize(static_cast<std::size_t>(bound_[k]) + 1);
  }
}

bool LubClosedSet::contains(const PoleVector& v) const {
  if (v.size() != bound_.size()) throw LengthMismatch("vector length does not match box");
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] < 0 || v[k] > bound_[k]) return false;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    const auto& candidates = by_value_[k][static_cast<std::size_t>(v[k])];
    const bool attained = std::any_of(candidates.begin(), candidates.end(), [&](std::uint32_t id) {
      return precedes(generators_[id], v);
    });
    if (!attained) return false;
  }
  return true;
}

bool LubClosedSet::insert(const PoleVector& v) {
  if (contains(v)) return false;
  if (v.size() != bound_.size() || !precedes(v, bound_)) return false;
  for (Int c : v)
    if (c < 0) return false;
  const auto id = static_cast<std::uint32_t>(generators_.size());
  generators_.push_back(v);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] > 0) by_value_[k][static_cast<std::size_t>(v[k])].push_back(id);
  return true;
}

void LubClosedSet::close_under_addition() {
  // lub(g..) + lub(h..) = lub(g_i + h_j), so sums of generator pairs suffice.
  for (std::size_t next = 0; next < generators_.size(); ++next) {
    for (std::size_t k = 0; k <= next; ++k) {
      PoleVector s = generators_[next] + generators_[k];
      if (precedes(s, bound_)) insert(s);
    }
  }
}

void LubClosedSet::prune() {
  auto keep = irreducibles();
  generators_.clear();
  for (auto& per_coord : by_value_)
    for (auto& ids : per_coord) ids.clear();
  for (const auto& g : keep) insert(g);
}

std::optional<PoleVector> LubClosedSet::nabla_witness(const PoleVector& v, std::size_t i) const {
  if (i >= v.size()) throw std::out_of_range("coordinate index out of range");
  if (v[i] == 0) {
    if (v.is_zero()) return std::nullopt;
    return PoleVector(v.size(), 0);
  }
  if (v[i] > bound_[i]) return std::nullopt;
  for (std::uint32_t id : by_value_[i][static_cast<std::size_t>(v[i])]) {
    const auto& g = generators_[id];
    if (g != v && precedes(g, v)) return g;
  }
  return std::nullopt;
}

std::vector<PoleVector> LubClosedSet::irreducibles() const {
  std::vector<PoleVector> out;
  for (const auto& g : generators_) {
    bool irreducible = false;
    for (std::size_t k = 0; k < g.size() && !irreducible; ++k)
      if (g[k] > 0 && !nabla_witness(g, k)) irreducible = true;
    if (irreducible) out.push_back(g);
  }
  canonicalize(out);
  return out;
}

std::uint64_t LubClosedSet::box_volume() const {
  std::uint64_t vol = 1;
  for (Int c : bound_) {
    const auto side = static_cast<std::uint64_t>(c) + 1;
    if (vol > std::numeric_limits<std::uint64_t>::max() / side)
      return std::numeric_limits<std::uint64_t>::max();
    vol *= side;
  }
  return vol;
}

template <class F>
void LubClosedSet::for_each_box_point(std::uint64_t max_volume, F&& f) const {
  if (box_volume() > max_volume)
    throw std::length_error("box holds " + std::to_string(box_volume()) +
                            " points, more than the limit of " + std::to_string(max_volume));
  PoleVector v(bound_.size(), 0);
  while (true) {
    f(v);
    std::size_t k = v.size();
    while (k > 0) {
      --k;
      if (v[k] < bound_[k]) {
        ++v[k];
        break;
      }
      v[k] = 0;
      if (k == 0) return;
    }
    if (v.size() == 0) return;
  }
}

std::vector<PoleVector> LubClosedSet::members(std::uint64_t max_volume) const {
  std::vector<PoleVector> out;
  for_each_box_point(max_volume, [&](const PoleVector& v) {
    if (contains(v)) out.push_back(v);
  });
  return out;
}

std::vector<PoleVector> LubClosedSet::non_members(std::uint64_t max_volume) const {
  std::vector<PoleVector> out;
  for_each_box_point(max_volume, [&](const PoleVector& v) {
    if (!contains(v)) out.push_back(v);
  });
  return out;
}

bool same_members(const LubClosedSet& x, const LubClosedSet& y) {
  return x.bound() == y.bound() && x.irreducibles() == y.irreducibles();
}

PoleVector default_bound(const CurveParams& params, Int m) {
  return PoleVector(static_cast<std::size_t>(m), checked_mul(params.a(), params.b()));
}

SemigroupBox generate_h_box(const CurveParams& params, Int m, const PoleVector& bound,
                            const GammaProvider& provider) {
  require_gamma_range(params, m);
  if (bound.size() != static_cast<std::size_t>(m))
    throw LengthMismatch("bound has " + std::to_string(bound.size()) + " coordinates, m = " +
                         std::to_string(m));
  SemigroupBox box{m, LubClosedSet(bound), true, {}};

  std::vector<PoleVector> embedded;
  const unsigned full = (1u << m) - 1;
  for (unsigned mask = 1; mask <= full; ++mask) {
    std::vector<int> labels;
    PoleVector sub_bound;
    std::vector<Int> sb;
    for (int k = 0; k < m; ++k) {
      if (mask & (1u << k)) {
        labels.push_back(k + 1);
        sb.push_back(bound[static_cast<std::size_t>(k)]);
      }
    }
    sub_bound = PoleVector(sb);
    const SubsetGamma sub = provider.gamma_for(params, labels, sub_bound);
    if (!sub.certified) {
      box.certified = false;
      box.uncertified_subsets.push_back(labels);
    }
    for (const auto& u : sub.vectors) {
      PoleVector v(static_cast<std::size_t>(m), 0);
      for (std::size_t k = 0; k < labels.size(); ++k)
        v[static_cast<std::size_t>(labels[k] - 1)] = u[k];
      if (precedes(v, bound)) embedded.push_back(std::move(v));
    }
  }
  // smaller vectors first so that lubs of earlier generators are skipped
  std::sort(embedded.begin(), embedded.end(), [](const PoleVector& x, const PoleVector& y) {
    const Int sx = x.sum();
    const Int sy = y.sum();
    return sx != sy ? sx < sy : x < y;
  });
  for (const auto& v : embedded) box.members.insert(v);
  box.members.prune();
  return box;
}

bool is_minimal_in_nabla(const PoleVector& v, std::size_t i, const SemigroupBox& box) {
  if (!box.members.contains(v)) throw std::invalid_argument("vector is not a member of the box");
  return !box.members.nabla_witness(v, i).has_value();
}

VectorSetResult extract_minimal_generating(const SemigroupBox& box) {
  VectorSetResult out{{}, box.certified};
  for (auto& v : box.members.irreducibles())
    if (v.all_positive()) out.vectors.push_back(std::move(v));
  return out;
}

VectorSetResult gap_set_box(const SemigroupBox& box) {
  return VectorSetResult{box.members.non_members(), box.certified};
}

}  // namespace wsg
