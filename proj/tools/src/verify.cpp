#include <algorithm>
#include <future>
#include <iterator>

#include "wsg/divisor.hpp"
#include "wsg/errors.hpp"
#include "wsg/gamma.hpp"
#include "wsg/h_box.hpp"
#include "wsg_cli/checks.hpp"

namespace wsg::cli {

namespace {

constexpr std::size_t kMaxReportedFailures = 8;

std::vector<PoleVector> difference(const std::vector<PoleVector>& x, const std::vector<PoleVector>& y) {
  std::vector<PoleVector> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

void record_report(PerMOutcome& out, const CertificateReport& report, const GammaIndex& idx,
                   std::size_t& failures) {
  if (report.overall()) return;
  ++failures;
  for (const auto& check : report.checks) {
    if (check.passed || out.failed_checks.size() >= kMaxReportedFailures) continue;
    std::string s = "t=" + std::to_string(idx.t) + " i=" + std::to_string(idx.i) + ": " + check.name +
                    " [" + to_string(check.witness) + "]";
    out.failed_checks.push_back(std::move(s));
  }
}

PerMOutcome verify_one(const CurveParams& params, Int m, const std::vector<Int>& bound_spec) {
  PerMOutcome out;
  out.m = m;
  out.bound = resolve_bound(params, m, bound_spec);

  const auto indices = enumerate_gamma_indices(params, m);
  out.indices = indices.size();
  for (const auto& idx : indices) {
    record_report(out, verify_equivalence_chain(params, m, idx), idx, out.chain_failures);
    record_report(out, verify_discrepancy_certificate(params, m, idx), idx, out.certificate_failures);
  }

  std::vector<PoleVector> expected;
  for (auto& v : enumerate_gamma(params, m))
    if (precedes(v, out.bound)) expected.push_back(std::move(v));
  const SemigroupBox oracle_box = oracle_box_semigroup(params, m, out.bound);
  const auto found = extract_minimal_generating(oracle_box).vectors;
  out.oracle_missing = difference(expected, found);
  out.oracle_extra = difference(found, expected);
  out.oracle_matches = out.oracle_missing.empty() && out.oracle_extra.empty();

  Int widest = 0;
  for (Int x : out.bound) widest = std::max(widest, x);
  const Int singleton_bound = std::max(widest, 2 * params.genus());
  out.singletons_certified = true;
  for (int point = 2; point <= m; ++point) {
    const auto sg = singleton_semigroup(params, point, singleton_bound);
    out.singletons.push_back({point, sg.generators, sg.gap_count, sg.certified});
    out.singletons_certified = out.singletons_certified && sg.certified;
  }

  const SemigroupBox h_box = generate_h_box(params, m, out.bound);
  out.boxes_equal = same_members(h_box.members, oracle_box.members);
  out.box_certified = h_box.certified;
  out.uncertified_subsets = h_box.uncertified_subsets;
  return out;
}

nlohmann::json to_json(const PerMOutcome& r) {
  nlohmann::json singles = nlohmann::json::array();
  for (const auto& s : r.singletons)
    singles.push_back({{"point", s.point}, {"generators", s.generators}, {"gap_count", s.gap_count},
                       {"certified", s.certified}});
  return {{"m", r.m},
          {"bound", r.bound.coords()},
          {"indices", r.indices},
          {"equivalence_chain_failures", r.chain_failures},
          {"discrepancy_certificate_failures", r.certificate_failures},
          {"failed_checks", r.failed_checks},
          {"oracle_matches_closed_form", r.oracle_matches},
          {"oracle_missing", vectors_to_json(r.oracle_missing)},
          {"oracle_extra", vectors_to_json(r.oracle_extra)},
          {"singletons", singles},
          {"singletons_certified", r.singletons_certified},
          {"closure_box_equals_oracle_box", r.boxes_equal},
          {"closure_box_certified", r.box_certified},
          {"uncertified_subsets", r.uncertified_subsets},
          {"passed", r.passed()}};
}

}  // namespace

bool PerMOutcome::passed() const {
  return chain_failures == 0 && certificate_failures == 0 && oracle_matches && singletons_certified &&
         boxes_equal;
}

bool VerifyOutcome::passed() const {
  return std::all_of(per_m.begin(), per_m.end(), [](const PerMOutcome& r) { return r.passed(); });
}

PoleVector resolve_bound(const CurveParams& params, Int m, const std::vector<Int>& bound) {
  if (bound.empty()) return default_bound(params, m);
  if (bound.size() == 1) return PoleVector(static_cast<std::size_t>(m), bound.front());
  if (bound.size() != static_cast<std::size_t>(m))
    throw ValidationError("--bound needs 1 or m = " + std::to_string(m) + " values, got " +
                          std::to_string(bound.size()));
  return PoleVector(bound);
}

VerifyOutcome verify_all(const CurveParams& params, Int m_min, Int m_max, const std::vector<Int>& bound,
                         unsigned workers) {
  if (m_min > m_max) throw RangeError("empty m range");
  require_gamma_range(params, m_min);
  require_gamma_range(params, m_max);
  for (Int m = m_min; m <= m_max; ++m) resolve_bound(params, m, bound);

  VerifyOutcome outcome;
  workers = std::max(1u, workers);
  Int next = m_min;
  while (next <= m_max) {
    std::vector<std::future<PerMOutcome>> batch;
    for (unsigned w = 0; w < workers && next <= m_max; ++w, ++next) {
      const Int m = next;
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                 [&params, m, &bound] { return verify_one(params, m, bound); }));
    }
    for (auto& f : batch) outcome.per_m.push_back(f.get());
  }
  return outcome;
}

nlohmann::json vectors_to_json(const std::vector<PoleVector>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : vs) out.push_back(v.coords());
  return out;
}

nlohmann::json to_json(const VerifyOutcome& outcome) {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& r : outcome.per_m) per.push_back(to_json(r));
  return {{"passed", outcome.passed()}, {"per_m", per}};
}

}  // namespace wsg::cli
