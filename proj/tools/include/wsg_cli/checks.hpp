#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsg/oracle.hpp"
#include "wsg/semigroup.hpp"

namespace wsg::cli {

struct SingletonOutcome {
  int point = 0;
  std::vector<Int> generators;
  Int gap_count = 0;
  bool certified = false;
};

struct PerMOutcome {
  Int m = 0;
  PoleVector bound;
  std::size_t indices = 0;
  std::size_t chain_failures = 0;
  std::size_t certificate_failures = 0;
  std::vector<std::string> failed_checks;  // first few, for diagnostics
  bool oracle_matches = false;
  std::vector<PoleVector> oracle_missing;
  std::vector<PoleVector> oracle_extra;
  std::vector<SingletonOutcome> singletons;
  bool singletons_certified = false;
  bool boxes_equal = false;
  bool box_certified = false;
  std::vector<std::vector<int>> uncertified_subsets;

  bool passed() const;
};

struct VerifyOutcome {
  std::vector<PerMOutcome> per_m;
  bool passed() const;
};

// Runs every check for m in [m_min, m_max]. `bound` is empty (default box),
// a single value (uniform side) or m values. Work for different m is spread
// over `workers` threads; the outcome does not depend on it.
VerifyOutcome verify_all(const CurveParams& params, Int m_min, Int m_max, const std::vector<Int>& bound,
                         unsigned workers = 1);

PoleVector resolve_bound(const CurveParams& params, Int m, const std::vector<Int>& bound);

nlohmann::json to_json(const VerifyOutcome& outcome);

struct TableOutcome {
  std::string id;
  Int a = 0;
  Int b = 0;
  Int m = 0;
  std::size_t expected = 0;
  std::size_t computed = 0;
  std::vector<PoleVector> missing;     // in the golden table, not computed
  std::vector<PoleVector> unexpected;  // computed, not in the golden table
  std::vector<std::size_t> family_counts;
  std::vector<std::string> problems;
  std::vector<std::string> display;  // golden order, one vector per line
  bool passed = false;
};

struct ReproduceOutcome {
  std::vector<TableOutcome> tables;
  bool passed() const;
};

// Recomputes each reference table and compares as sets. Files named
// <id>.json in `golden_dir` replace the embedded table of that id.
ReproduceOutcome reproduce_tables(const std::optional<std::string>& golden_dir);

nlohmann::json to_json(const ReproduceOutcome& outcome);

nlohmann::json vectors_to_json(const std::vector<PoleVector>& vs);

}  // namespace wsg::cli
