#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "wsg/errors.hpp"
#include "wsg/gamma.hpp"
#include "wsg_cli/checks.hpp"
#include "wsg_cli/goldens.hpp"

namespace wsg::cli {

namespace {

GoldenTable load_override(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read golden file " + path.string());
  try {
    return golden_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("malformed golden file " + path.string() + ": " + e.what());
  }
}

CurveParams params_for(const GoldenTable& t) {
  if (t.preset == "hermitian-like") return CurveParams::hermitian_like(t.q.value_or(0), t.r.value_or(0));
  return CurveParams::kummer(t.a, t.b, t.q);
}

std::string show(const PoleVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

TableOutcome check_table(const GoldenTable& golden) {
  TableOutcome out;
  out.id = golden.id;
  out.a = golden.a;
  out.b = golden.b;
  out.m = golden.m;

  const CurveParams params = params_for(golden);
  if (params.a() != golden.a || params.b() != golden.b)
    out.problems.push_back("preset yields (a,b) = (" + std::to_string(params.a()) + "," +
                           std::to_string(params.b()) + ")");

  auto listed = golden.expand();
  for (const auto& v : listed) out.display.push_back(show(v));
  auto expected = listed;
  canonicalize(expected);
  if (expected.size() != listed.size()) out.problems.push_back("golden table repeats an element");

  const auto computed = enumerate_gamma(params, golden.m);
  out.expected = expected.size();
  out.computed = computed.size();
  std::set_difference(expected.begin(), expected.end(), computed.begin(), computed.end(),
                      std::back_inserter(out.missing));
  std::set_difference(computed.begin(), computed.end(), expected.begin(), expected.end(),
                      std::back_inserter(out.unexpected));

  for (const auto& family : golden.families) {
    const auto n = std::count_if(computed.begin(), computed.end(),
                                 [&](const PoleVector& v) { return family.contains(v); });
    out.family_counts.push_back(static_cast<std::size_t>(n));
  }
  if (!golden.families.empty()) {
    for (const auto& v : computed) {
      const auto owners = std::count_if(golden.families.begin(), golden.families.end(),
                                        [&](const GoldenFamily& f) { return f.contains(v); });
      if (owners != 1) {
        out.problems.push_back(show(v) + " lies in " + std::to_string(owners) + " families");
        break;
      }
    }
  }

  out.passed = out.problems.empty() && out.missing.empty() && out.unexpected.empty();
  return out;
}

}  // namespace

bool ReproduceOutcome::passed() const {
  return std::all_of(tables.begin(), tables.end(), [](const TableOutcome& t) { return t.passed; });
}

ReproduceOutcome reproduce_tables(const std::optional<std::string>& golden_dir) {
  ReproduceOutcome outcome;
  for (auto golden : embedded_goldens()) {
    if (golden_dir) {
      const auto path = std::filesystem::path(*golden_dir) / (golden.id + ".json");
      if (std::filesystem::exists(path)) {
        const std::string id = golden.id;
        golden = load_override(path);
        if (golden.id != id) throw ValidationError("golden file " + path.string() + " has id " + golden.id);
      }
    }
    outcome.tables.push_back(check_table(golden));
  }
  return outcome;
}

nlohmann::json to_json(const ReproduceOutcome& outcome) {
  nlohmann::json tables = nlohmann::json::array();
  for (const auto& t : outcome.tables) {
    nlohmann::json j = {{"id", t.id},
                        {"a", t.a},
                        {"b", t.b},
                        {"m", t.m},
                        {"expected_count", t.expected},
                        {"computed_count", t.computed},
                        {"missing", vectors_to_json(t.missing)},
                        {"unexpected", vectors_to_json(t.unexpected)},
                        {"problems", t.problems},
                        {"passed", t.passed}};
    if (!t.family_counts.empty()) j["family_counts"] = t.family_counts;
    tables.push_back(std::move(j));
  }
  return {{"passed", outcome.passed()}, {"tables", tables}};
}

}  // namespace wsg::cli
