#include "wsg_cli/run.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wsg/errors.hpp"
#include "wsg/gamma.hpp"
#include "wsg/oracle.hpp"
#include "wsg/semigroup.hpp"
#include "wsg/h_box.hpp"
#include "wsg_cli/checks.hpp"

namespace wsg::cli {

namespace {

CurveParams resolve_params(const RunRequest& req) {
  if (req.preset == "hermitian-like") {
    if (!req.q || !req.r) throw ValidationError("preset hermitian-like needs --q and --r");
    auto params = CurveParams::hermitian_like(*req.q, *req.r);
    if ((req.a && *req.a != params.a()) || (req.b && *req.b != params.b()))
      throw ValidationError("--a/--b contradict the hermitian-like preset (a=" + std::to_string(params.a()) +
                            ", b=" + std::to_string(params.b()) + ")");
    return params;
  }
  if (!req.a || !req.b) throw ValidationError("--a and --b are required");
  if (req.preset == "kummer" || req.q) return CurveParams::kummer(*req.a, *req.b, req.q);
  return CurveParams(*req.a, *req.b);
}

Int require_m(const RunRequest& req) {
  if (!req.m) throw ValidationError("--m is required");
  if (*req.m < 1) throw RangeError("m must be positive");
  return *req.m;
}

std::vector<std::string> vector_columns(std::size_t m) {
  std::vector<std::string> cols;
  for (std::size_t k = 1; k <= m; ++k) cols.push_back("n" + std::to_string(k));
  return cols;
}

void vector_rows(RunReport& report, std::size_t m, const std::vector<PoleVector>& vs) {
  report.columns = vector_columns(m);
  for (const auto& v : vs) {
    std::vector<std::string> row;
    for (Int c : v) row.push_back(std::to_string(c));
    report.rows.push_back(std::move(row));
  }
}

std::vector<PoleVector> as_vectors(const std::vector<Int>& values) {
  std::vector<PoleVector> out;
  for (Int v : values) out.push_back(PoleVector{v});
  return out;
}

nlohmann::json one_point_summary(const CurveParams& params) {
  return {{"generators", {params.a(), params.b()}},
          {"gaps", gaps(params)},
          {"frobenius", frobenius(params)},
          {"genus", params.genus()}};
}

unsigned worker_count() {
  if (const char* env = std::getenv("WSG_WORKERS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

void run_gaps(const CurveParams& params, RunReport& report) {
  const auto gs = gaps(params);
  report.payload["m"] = 1;
  report.payload["result"] = gs;
  report.payload["certified"] = true;
  report.columns = {"gap", "i", "j"};
  for (Int g : gs) {
    const auto rep = gap_representation(params, g);
    report.rows.push_back({std::to_string(g), std::to_string(rep->i), std::to_string(rep->j)});
  }
}

void run_gamma(const RunRequest& req, const CurveParams& params, RunReport& report) {
  const Int m = require_m(req);
  report.payload["certified"] = true;
  if (m == 1) {
    report.payload["result"] = one_point_summary(params);
    vector_rows(report, 1, as_vectors(gaps(params)));
    return;
  }
  if (req.count) {
    const Int n = gamma_cardinality(params, m);
    report.payload["result"] = n;
    report.columns = {"count"};
    report.rows.push_back({std::to_string(n)});
    return;
  }
  const auto gamma = enumerate_gamma(params, m);
  report.payload["result"] = vectors_to_json(gamma);
  vector_rows(report, static_cast<std::size_t>(m), gamma);
}

void run_semigroup(const RunRequest& req, const CurveParams& params, RunReport& report) {
  const Int m = require_m(req);
  if (m == 1) {
    report.payload["result"] = one_point_summary(params);
    report.payload["certified"] = true;
    vector_rows(report, 1, as_vectors(gaps(params)));
    return;
  }
  const PoleVector bound = resolve_bound(params, m, req.bound);
  const SemigroupBox box = generate_h_box(params, m, bound);
  const auto irreducible = box.members.irreducibles();
  nlohmann::json result = {{"bound", bound.coords()},
                           {"irreducible", vectors_to_json(irreducible)},
                           {"gamma", vectors_to_json(extract_minimal_generating(box).vectors)},
                           {"uncertified_subsets", box.uncertified_subsets}};
  if (req.members) result["members"] = vectors_to_json(box.members.members());
  report.payload["result"] = result;
  report.payload["certified"] = box.certified;
  vector_rows(report, static_cast<std::size_t>(m), irreducible);
}

void run_gapset(const RunRequest& req, const CurveParams& params, RunReport& report) {
  const Int m = require_m(req);
  if (m == 1) {
    const auto gs = as_vectors(gaps(params));
    report.payload["result"] = vectors_to_json(gs);
    report.payload["certified"] = true;
    vector_rows(report, 1, gs);
    return;
  }
  const PoleVector bound = resolve_bound(params, m, req.bound);
  const SemigroupBox box = generate_h_box(params, m, bound);
  const auto gs = gap_set_box(box);
  report.payload["result"] = vectors_to_json(gs.vectors);
  report.payload["bound"] = bound.coords();
  report.payload["certified"] = gs.certified;
  vector_rows(report, static_cast<std::size_t>(m), gs.vectors);
}

void run_oracle(const RunRequest& req, const CurveParams& params, RunReport& report) {
  const Int m = require_m(req);
  require_gamma_range(params, m);
  const PoleVector bound = resolve_bound(params, m, req.bound);
  const auto found = oracle_gamma(params, m, bound);
  std::vector<PoleVector> expected;
  for (auto& v : enumerate_gamma(params, m))
    if (precedes(v, bound)) expected.push_back(std::move(v));

  std::vector<PoleVector> missing, extra;
  std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(), std::back_inserter(missing));
  std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(), std::back_inserter(extra));
  const bool matches = missing.empty() && extra.empty();

  Int widest = 0;
  for (Int x : bound) widest = std::max(widest, x);
  nlohmann::json singles = nlohmann::json::array();
  bool singles_ok = true;
  for (int point = 2; point <= m; ++point) {
    const auto sg = singleton_semigroup(params, point, std::max(widest, 2 * params.genus()));
    singles.push_back({{"point", point}, {"generators", sg.generators}, {"gap_count", sg.gap_count},
                       {"certified", sg.certified}});
    singles_ok = singles_ok && sg.certified;
  }
  report.payload["result"] = {{"bound", bound.coords()},
                              {"gamma", vectors_to_json(found)},
                              {"matches_closed_form", matches},
                              {"missing", vectors_to_json(missing)},
                              {"extra", vectors_to_json(extra)},
                              {"singletons", singles}};
  report.payload["certified"] = matches && singles_ok;
  vector_rows(report, static_cast<std::size_t>(m), found);
  if (!matches || !singles_ok) {
    report.exit_code = exit_code::kVerification;
    report.error = "oracle disagrees with the closed form or a singleton semigroup is uncertified";
  }
}

void run_verify(const RunRequest& req, const CurveParams& params, RunReport& report) {
  const Int m_min = req.m_min.value_or(req.m.value_or(2));
  const Int m_max = req.m_max.value_or(req.m.value_or(params.a() + 1));
  if (req.m_min || req.m_max) report.payload["m"] = nullptr;
  report.payload["m_range"] = {m_min, m_max};
  const VerifyOutcome outcome = verify_all(params, m_min, m_max, req.bound, worker_count());
  report.payload["result"] = to_json(outcome);
  report.payload["certified"] = outcome.passed();
  report.columns = {"m", "indices", "chain_failures", "certificate_failures", "oracle_matches",
                    "singletons_certified", "boxes_equal", "box_certified", "passed"};
  for (const auto& r : outcome.per_m) {
    report.rows.push_back({std::to_string(r.m), std::to_string(r.indices), std::to_string(r.chain_failures),
                           std::to_string(r.certificate_failures), r.oracle_matches ? "yes" : "no",
                           r.singletons_certified ? "yes" : "no", r.boxes_equal ? "yes" : "no",
                           r.box_certified ? "yes" : "no", r.passed() ? "PASS" : "FAIL"});
  }
  if (!outcome.passed()) {
    report.exit_code = exit_code::kVerification;
    report.error = "verification failed";
  }
}

void run_reproduce(const RunRequest& req, RunReport& report) {
  const ReproduceOutcome outcome = reproduce_tables(req.golden_dir);
  report.payload["a"] = nullptr;
  report.payload["b"] = nullptr;
  report.payload["m"] = nullptr;
  report.payload["result"] = to_json(outcome);
  report.payload["certified"] = outcome.passed();
  report.columns = {"table", "expected", "computed", "status"};
  for (const auto& t : outcome.tables) {
    report.rows.push_back(
        {t.id, std::to_string(t.expected), std::to_string(t.computed), t.passed ? "PASS" : "FAIL"});
    report.grouped_lines.push_back(t.id + " (a=" + std::to_string(t.a) + ", b=" + std::to_string(t.b) +
                                   ", m=" + std::to_string(t.m) + "): " + (t.passed ? "PASS" : "FAIL"));
    for (const auto& line : t.display) report.grouped_lines.push_back("  " + line);
  }
  if (!outcome.passed()) {
    report.exit_code = exit_code::kVerification;
    std::ostringstream diff;
    diff << "golden comparison failed:";
    for (const auto& t : outcome.tables) {
      if (t.passed) continue;
      diff << "\n  " << t.id << ":";
      for (const auto& v : t.missing) diff << "\n    - " << v;
      for (const auto& v : t.unexpected) diff << "\n    + " << v;
      for (const auto& p : t.problems) diff << "\n    ! " << p;
    }
    report.error = diff.str();
  }
}

}  // namespace

RunReport run(const RunRequest& req) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.payload = {{"version", kToolVersion}, {"schema", kSchemaVersion}, {"command", to_string(req.command)}};
  try {
    if (req.command == Command::Reproduce) {
      run_reproduce(req, report);
    } else {
      const CurveParams params = resolve_params(req);
      report.payload["a"] = params.a();
      report.payload["b"] = params.b();
      report.payload["m"] = req.m ? nlohmann::json(*req.m) : nlohmann::json(nullptr);
      if (params.preset()) {
        nlohmann::json preset = {{"name", wsg::to_string(params.preset()->kind)}};
        if (params.preset()->q) preset["q"] = *params.preset()->q;
        if (params.preset()->r) preset["r"] = *params.preset()->r;
        report.payload["preset"] = preset;
      }
      if (req.m) report.warnings = params.warnings_for(*req.m);
      switch (req.command) {
        case Command::Gaps: run_gaps(params, report); break;
        case Command::Gamma: run_gamma(req, params, report); break;
        case Command::Semigroup: run_semigroup(req, params, report); break;
        case Command::GapSet: run_gapset(req, params, report); break;
        case Command::Oracle: run_oracle(req, params, report); break;
        case Command::Verify: run_verify(req, params, report); break;
        case Command::Reproduce: break;
      }
    }
    report.payload["warnings"] = report.warnings;
  } catch (const std::invalid_argument& e) {  // ValidationError, ConstraintViolation, LengthMismatch
    report.exit_code = exit_code::kValidation;
    report.error = e.what();
  } catch (const std::out_of_range& e) {  // RangeError
    report.exit_code = exit_code::kValidation;
    report.error = e.what();
  } catch (const std::length_error& e) {
    report.exit_code = exit_code::kValidation;
    report.error = e.what();
  } catch (const std::overflow_error& e) {
    report.exit_code = exit_code::kValidation;
    report.error = e.what();
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int main_entry(const std::vector<std::string>& args) {
  const ParseResult parsed = parse_args(args);
  if (const auto* exit = std::get_if<ParseExit>(&parsed)) {
    (exit->exit_code == exit_code::kOk ? std::cout : std::cerr) << exit->message;
    return exit->exit_code;
  }
  const auto& req = std::get<RunRequest>(parsed);
  const RunReport report = run(req);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  if (report.exit_code == exit_code::kValidation) {
    std::cerr << "error: " << report.error << "\n";
    return report.exit_code;
  }
  const std::string text = render(report, req.format, req.grouped);
  if (req.out) {
    std::ofstream out(*req.out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << *req.out << "\n";
      return exit_code::kValidation;
    }
    out << text;
  } else {
    std::cout << text;
  }
  if (report.exit_code != exit_code::kOk) std::cerr << "error: " << report.error << "\n";
  if (req.timing) std::cerr << "elapsed: " << report.seconds << " s\n";
  return report.exit_code;
}

}  // namespace wsg::cli
