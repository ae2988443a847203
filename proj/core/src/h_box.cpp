#include "wsg/h_box.hpp"

#include <algorithm>

#include "wsg/errors.hpp"
#include "wsg/gamma.hpp"

namespace wsg {

SubsetGamma DefaultGammaProvider::gamma_for(const CurveParams& params, std::span<const int> labels,
                                            const PoleVector& bound) const {
  if (labels.empty() || labels.size() != bound.size())
    throw LengthMismatch("subset labels and bound differ in length");
  SubsetGamma out;

  if (labels.size() == 1 && labels[0] == 1) {
    const TwoGeneratorSemigroup sg(params);
    for (Int n = 1; n <= bound[0]; ++n)
      if (sg.contains(n)) out.vectors.push_back(PoleVector{n});
    out.certified = true;
    out.source = "semigroup <a,b>";
    return out;
  }

  if (labels[0] == 1) {
    for (auto& v : enumerate_gamma(params, static_cast<Int>(labels.size())))
      if (precedes(v, bound)) out.vectors.push_back(std::move(v));
    out.certified = true;
    out.source = "closed form";
    return out;
  }

  const Int widest = *std::max_element(bound.begin(), bound.end());
  const SubsetGamma& full = off_leading_point(params, labels.size(), widest);
  out.certified = full.certified;
  out.source = full.source;
  for (const auto& v : full.vectors)
    if (precedes(v, bound)) out.vectors.push_back(v);
  return out;
}

SubsetGamma DefaultGammaProvider::off_leading_point(const CurveParams& params, std::size_t size,
                                                    Int bound) const {
  std::lock_guard lock(mutex_);
  const auto key = std::make_pair(size, bound);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  SubsetGamma out;
  // enough room to decide every gap, which are all at most 2g-1
  const Int cert_bound = std::max(bound, 2 * params.genus());
  if (size == 1) {
    const auto sg = singleton_semigroup(params, 2, cert_bound);
    for (Int n = 1; n <= bound; ++n)
      if (sg.contains(n)) out.vectors.push_back(PoleVector{n});
    out.certified = sg.certified;
    out.source = "singleton oracle";
  } else {
    std::vector<int> support;
    for (std::size_t k = 0; k < size; ++k) support.push_back(static_cast<int>(k) + 2);
    const auto cfg = OracleConfig::make_default(params, support, PoleVector(size, bound));
    out.vectors = oracle_gamma(params, cfg);
    out.source = "oracle";
    if (size == 2 && bound >= 2 * params.genus() - 1) {
      const auto sg = singleton_semigroup(params, 2, cert_bound);
      out.certified = sg.certified && certify_two_point_gamma(out.vectors, sg.gaps, sg.gaps);
      if (out.certified) out.source = "oracle, two-point certified";
    }
  }
  return cache_.emplace(key, std::move(out)).first->second;
}

SemigroupBox generate_h_box(const CurveParams& params, Int m, const PoleVector& bound) {
  const DefaultGammaProvider provider;
  return generate_h_box(params, m, bound, provider);
}

}  // namespace wsg
