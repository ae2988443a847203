#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "wsg/oracle.hpp"
#include "wsg/poset.hpp"

namespace wsg {

// Gamma inputs for generate_h_box:
//   {P_1}                      -> <a, b>, exact
//   {P_1, P_j2, ..., P_jk}     -> closed form S_k, exact
//   {P_l}, l >= 2              -> singleton oracle, certified by gap count
//   other subsets              -> oracle, certified only for two points
// Subsets avoiding P_1 depend only on their size, since P_2..P_{a+1} enter
// the relations symmetrically; results are cached per (size, bound).
class DefaultGammaProvider : public GammaProvider {
 public:
  SubsetGamma gamma_for(const CurveParams& params, std::span<const int> labels,
                        const PoleVector& bound) const override;

 private:
  SubsetGamma off_leading_point(const CurveParams& params, std::size_t size, Int bound) const;

  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, Int>, SubsetGamma> cache_;
};

SemigroupBox generate_h_box(const CurveParams& params, Int m, const PoleVector& bound);

}  // namespace wsg
