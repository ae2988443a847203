// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wsg/divisor.hpp"
#include "wsg/gamma.hpp"
#include "wsg/oracle.hpp"
#include "wsg/semigroup.hpp"
#include "wsg/h_box.hpp"
#include "wsg_cli/checks.hpp"
#include "wsg_cli/run.hpp"

namespace {

using wsg::CurveParams;
using wsg::GammaIndex;
using wsg::Int;
using wsg::PoleVector;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::vector<PoleVector> sorted(std::vector<PoleVector> v) {
  wsg::canonicalize(v);
  return v;
}

std::vector<std::pair<Int, Int>> coprime_grid() {
  std::vector<std::pair<Int, Int>> out;
  for (Int a = 2; a <= 7; ++a)
    for (Int b = 2; b <= 13; ++b)
      if (wsg::gcd(a, b) == 1) out.emplace_back(a, b);
  return out;
}

const std::vector<std::pair<Int, Int>> kOracleInstances{{2, 3}, {3, 4}, {3, 5}, {4, 5}, {5, 7}};

Verdict c1_hermitian_like() {
  const auto p = CurveParams::hermitian_like(5, 3);
  std::vector<PoleVector> families;
  const std::vector<std::pair<PoleVector, Int>> bases{
      {{126, 0, 0, 126}, 25}, {{126, 0, 126, 0}, 25}, {{126, 126, 0, 0}, 25}, {{252, 0, 0, 0}, 50}};
  for (const auto& [base, last] : bases)
    for (Int i = 1; i <= last; ++i) families.push_back(PoleVector{base[0] - 5 * i, base[1] + i, base[2] + i, base[3] + i});
  const auto gamma = wsg::enumerate_gamma(p, 4);
  const bool ok = gamma.size() == 125 && gamma == sorted(families);
  return {ok, std::to_string(gamma.size()) + " elements, union of 4 families: " + (ok ? "equal" : "differs")};
}

Verdict c2_five_seven_tables() {
  const std::vector<std::vector<PoleVector>> tables{
      {{23, 1}, {18, 2}, {13, 3}, {8, 4}, {3, 5}, {16, 8}, {11, 9}, {6, 10}, {1, 11}, {9, 15}, {4, 16}, {2, 22}},
      {{2, 8, 8}, {2, 15, 1}, {2, 1, 15}, {9, 8, 1}, {9, 1, 8}, {4, 9, 2}, {4, 2, 9}, {16, 1, 1}, {11, 2, 2}, {6, 3, 3}, {1, 4, 4}},
      {{2, 8, 1, 1}, {2, 1, 8, 1}, {2, 1, 1, 8}, {9, 1, 1, 1}, {4, 2, 2, 2}},
      {{2, 1, 1, 1, 1}}};
  const CurveParams p(5, 7);
  std::ostringstream sizes;
  bool ok = true;
  for (Int m = 2; m <= 5; ++m) {
    const auto got = wsg::enumerate_gamma(p, m);
    const bool eq = got == sorted(tables[static_cast<std::size_t>(m - 2)]);
    ok = ok && eq;
    sizes << (m > 2 ? "," : "") << got.size() << (eq ? "" : "(mismatch)");
  }
  return {ok, "sizes " + sizes.str()};
}

Verdict c3_cardinality_grid() {
  std::size_t cases = 0;
  for (auto [a, b] : coprime_grid()) {
    const CurveParams p(a, b);
    for (Int m = 2; m <= a + 1; ++m, ++cases) {
      if (wsg::gamma_cardinality(p, m) != static_cast<Int>(wsg::enumerate_gamma(p, m).size()))
        return {false, "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ") m=" + std::to_string(m)};
    }
  }
  return {true, std::to_string(cases) + " (a,b,m) cases"};
}

Verdict c4_gaps_grid() {
  auto grid = coprime_grid();
  grid.emplace_back(5, 126);
  for (auto [a, b] : grid) {
    const auto gs = wsg::gaps(CurveParams(a, b));
    if (static_cast<Int>(gs.size()) != (a - 1) * (b - 1) / 2 || gs.back() != a * b - a - b)
      return {false, "fails at (" + std::to_string(a) + "," + std::to_string(b) + ")"};
  }
  return {true, std::to_string(grid.size()) + " curves"};
}

Verdict c5_oracle_equivalence() {
  std::size_t cases = 0;
  for (auto [a, b] : kOracleInstances) {
    const CurveParams p(a, b);
    for (Int m = 2; m <= a + 1; ++m, ++cases) {
      const auto bound = wsg::default_bound(p, m);
      if (wsg::oracle_gamma(p, m, bound) != wsg::enumerate_gamma(p, m))
        return {false, "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ") m=" + std::to_string(m)};
    }
  }
  return {true, std::to_string(cases) + " instances at bound (ab,...,ab)"};
}

// (a, b, m_max) for the certificate sweeps
const std::vector<std::tuple<Int, Int, Int>> kSweeps{{5, 7, 5}, {3, 4, 4}};

Verdict c6_discrepancy() {
  std::size_t indices = 0;
  for (auto [a, b, m_max] : kSweeps) {
    const CurveParams p(a, b);
    for (Int m = 2; m <= m_max; ++m)
      for (const auto& idx : wsg::enumerate_gamma_indices(p, m)) {
        ++indices;
        if (!wsg::verify_discrepancy_certificate(p, m, idx).overall())
          return {false, "certificate fails for (" + std::to_string(a) + "," + std::to_string(b) + ") m=" +
                             std::to_string(m)};
      }
  }
  return {true, std::to_string(indices) + " indices"};
}

Verdict c7_equivalence_chain() {
  const std::vector<std::string> required{"eq1", "eq2", "eq4", "eq6", "eq7", "eq8"};
  std::size_t indices = 0;
  for (auto [a, b, m_max] : kSweeps) {
    const CurveParams p(a, b);
    for (Int m = 2; m <= m_max; ++m)
      for (const auto& idx : wsg::enumerate_gamma_indices(p, m)) {
        ++indices;
        const auto report = wsg::verify_equivalence_chain(p, m, idx);
        for (const auto& tag : required) {
          const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                                       [&](const wsg::CertificateCheck& c) { return c.name.rfind(tag, 0) == 0; });
          if (it == report.checks.end() || !it->passed)
            return {false, tag + " fails for (" + std::to_string(a) + "," + std::to_string(b) + ") m=" + std::to_string(m)};
        }
        if (!report.overall()) return {false, "auxiliary check fails"};
      }
  }
  return {true, std::to_string(indices) + " indices, eq1/2/4/6/7/8 by lattice membership"};
}

Verdict c8_singletons() {
  const auto s57 = wsg::singleton_semigroup(CurveParams(5, 7), 2, 40);
  const auto s23 = wsg::singleton_semigroup(CurveParams(2, 3), 2, 10);
  const bool ok57 = s57.generators == std::vector<Int>{6, 7, 17} && s57.gap_count == 12 && s57.certified;
  const bool ok23 = s23.generators == std::vector<Int>{2, 3} && s23.gap_count == 1 && s23.certified;
  return {ok57 && ok23, "(5,7): " + std::to_string(s57.gap_count) + " gaps, (2,3): " +
                            std::to_string(s23.gap_count) + " gap"};
}

Verdict c9_canonical_degree() {
  for (auto [a, b] : coprime_grid()) {
    const CurveParams p(a, b);
    if (wsg::canonical_divisor(p).degree() != 2 * p.genus() - 2)
      return {false, "fails at (" + std::to_string(a) + "," + std::to_string(b) + ")"};
  }
  return {true, std::to_string(coprime_grid().size()) + " curves"};
}

// The equivalence is checked on members in N^m, the domain of Gamma. Members
// on a coordinate hyperplane are counted apart: for those the statement does
// not hold literally, since zero lies below them with the same zero entry.
Verdict c10_nabla_equivalence() {
  std::size_t checked = 0;
  std::size_t boundary = 0;
  std::size_t boundary_split = 0;
  for (const auto& [p, bound] : std::vector<std::pair<CurveParams, PoleVector>>{
           {CurveParams(5, 7), PoleVector{24, 23}}, {CurveParams(3, 4), PoleVector{12, 12}}}) {
    const auto box = wsg::generate_h_box(p, 2, bound);
    for (const auto& v : box.members.members()) {
      const bool first = wsg::is_minimal_in_nabla(v, 0, box);
      const bool second = wsg::is_minimal_in_nabla(v, 1, box);
      if (!v.all_positive()) {
        ++boundary;
        if (first != second) ++boundary_split;
        continue;
      }
      ++checked;
      if (first != second) {
        std::ostringstream os;
        os << "differs at " << v;
        return {false, os.str()};
      }
    }
  }
  return {true, std::to_string(checked) + " members in N^m agree; " + std::to_string(boundary_split) + " of " +
                    std::to_string(boundary) + " members with a zero coordinate differ, e.g. (5,0)"};
}

Verdict c11_cross_construction() {
  std::size_t cases = 0;
  for (auto [a, b] : kOracleInstances) {
    const CurveParams p(a, b);
    for (Int m = 2; m <= a + 1; ++m, ++cases) {
      const auto bound = wsg::default_bound(p, m);
      if (!wsg::same_members(wsg::generate_h_box(p, m, bound).members,
                             wsg::oracle_box_semigroup(p, m, bound).members))
        return {false, "boxes differ at (" + std::to_string(a) + "," + std::to_string(b) + ") m=" + std::to_string(m)};
    }
  }
  return {true, std::to_string(cases) + " instances"};
}

Verdict c12_reproduce() {
  wsg::cli::RunRequest req;
  req.command = wsg::cli::Command::Reproduce;
  const auto first = wsg::cli::run(req);
  const auto second = wsg::cli::run(req);
  const auto text1 = wsg::cli::render(first, wsg::cli::Format::Json);
  const auto text2 = wsg::cli::render(second, wsg::cli::Format::Json);
  const std::size_t tables = first.payload["result"]["tables"].size();
  const bool ok = first.exit_code == 0 && tables == 5 && first.payload["result"]["passed"] == true && text1 == text2;
  return {ok, std::to_string(tables) + " tables, golden " + (first.exit_code == 0 ? "match" : "mismatch") +
                  ", JSON " + (text1 == text2 ? "byte-identical" : "differs") + " across runs"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no limit
    std::function<Verdict()> fn;
  };
  const std::vector<Criterion> criteria{
      {1, "Gamma for (5,126), m=4", 1.0, c1_hermitian_like},
      {2, "Gamma tables for (5,7), m=2..5", 1.0, c2_five_seven_tables},
      {3, "cardinality formula over grid", 5.0, c3_cardinality_grid},
      {4, "gap count and Frobenius number", 0.0, c4_gaps_grid},
      {5, "oracle Gamma equals closed form", 60.0, c5_oracle_equivalence},
      {6, "discrepancy certificates", 5.0, c6_discrepancy},
      {7, "equivalence chain", 0.0, c7_equivalence_chain},
      {8, "singleton certification", 0.0, c8_singletons},
      {9, "canonical divisor degree", 0.0, c9_canonical_degree},
      {10, "nabla minimality agrees across coordinates", 0.0, c10_nabla_equivalence},
      {11, "lub-closure box equals oracle box", 0.0, c11_cross_construction},
      {12, "reproduce and determinism", 0.0, c12_reproduce},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.fn();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      v.pass = false;
      v.detail += "; over time limit";
    }
    if (!v.pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (v.pass ? "PASS" : "FAIL") << "  C" << c.id << "  " << c.name << " [" << timing
              << (c.limit_seconds > 0 ? " < " + std::to_string(static_cast<int>(c.limit_seconds)) + "s" : std::string())
              << "]: " << v.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
