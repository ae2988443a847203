#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "wsg_cli/run.hpp"

namespace wsg::cli {

std::string to_string(Command c) {
  switch (c) {
    case Command::Gaps: return "gaps";
    case Command::Gamma: return "gamma";
    case Command::Semigroup: return "semigroup";
    case Command::GapSet: return "gapset";
    case Command::Verify: return "verify";
    case Command::Oracle: return "oracle";
    case Command::Reproduce: return "reproduce";
  }
  return "unknown";
}

namespace {

std::vector<Int> parse_bound(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const Int v = std::stoll(item, &used);
    if (used != item.size() || v < 0) throw CLI::ValidationError("--bound", "expected nonnegative integers");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("--bound", "empty bound");
  return out;
}

struct Scratch {
  std::string bound_text;
  std::string format = "json";
};

}  // namespace

ParseResult parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Weierstrass semigroups at several points of curves f(y) = g(x)", "wsg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  RunRequest req;
  Scratch scratch;

  auto curve_options = [&](CLI::App* sub) {
    sub->add_option("--a", req.a, "degree a of f(y)");
    sub->add_option("--b", req.b, "degree b of g(x)");
    sub->add_option("--preset", req.preset, "curve family")
        ->check(CLI::IsMember({"hermitian-like", "kummer"}));
    sub->add_option("--q", req.q, "field size (hermitian-like: also a = q)");
    sub->add_option("--r", req.r, "odd exponent r of the hermitian-like family");
  };
  auto output_options = [&](CLI::App* sub) {
    sub->add_option("--format", scratch.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--out", req.out, "write output to PATH instead of stdout");
    sub->add_flag("--timing", req.timing, "print elapsed time on stderr");
  };
  auto box_options = [&](CLI::App* sub) {
    sub->add_option("--m", req.m, "number of points P_1..P_m");
    sub->add_option("--bound", scratch.bound_text, "box bound, comma separated (default ab,...,ab)");
  };

  struct Entry {
    Command command;
    CLI::App* app;
  };
  std::vector<Entry> entries;

  auto* gaps = app.add_subcommand("gaps", "gaps of the one-point semigroup <a, b>");
  curve_options(gaps);
  output_options(gaps);
  entries.push_back({Command::Gaps, gaps});

  auto* gamma = app.add_subcommand("gamma", "minimal generating set Gamma(P_1..P_m)");
  curve_options(gamma);
  output_options(gamma);
  gamma->add_option("--m", req.m, "number of points")->required();
  gamma->add_flag("--count", req.count, "print only the number of elements");
  entries.push_back({Command::Gamma, gamma});

  auto* semigroup = app.add_subcommand("semigroup", "H(P_1..P_m) inside a box, from Gamma of all subsets");
  curve_options(semigroup);
  output_options(semigroup);
  box_options(semigroup);
  semigroup->add_flag("--members", req.members, "list every member of the box");
  entries.push_back({Command::Semigroup, semigroup});

  auto* gapset = app.add_subcommand("gapset", "gap set G(P_1..P_m) inside a box");
  curve_options(gapset);
  output_options(gapset);
  box_options(gapset);
  entries.push_back({Command::GapSet, gapset});

  auto* verify = app.add_subcommand("verify", "certificates and cross-checks for every Gamma index");
  curve_options(verify);
  output_options(verify);
  box_options(verify);
  verify->add_option("--m-min", req.m_min, "smallest m (default 2)");
  verify->add_option("--m-max", req.m_max, "largest m (default a+1)");
  entries.push_back({Command::Verify, verify});

  auto* oracle = app.add_subcommand("oracle", "brute-force Gamma from monomial functions");
  curve_options(oracle);
  output_options(oracle);
  box_options(oracle);
  entries.push_back({Command::Oracle, oracle});

  auto* reproduce = app.add_subcommand("reproduce", "regenerate the reference tables and compare");
  output_options(reproduce);
  reproduce->add_option("--golden-dir", req.golden_dir, "directory overriding embedded golden tables");
  reproduce->add_flag("--grouped", req.grouped, "table format: show families in reference order");
  entries.push_back({Command::Reproduce, reproduce});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (!scratch.bound_text.empty()) req.bound = parse_bound(scratch.bound_text);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto& e : entries)
      if (e.app->parsed()) target = e.app;
    return ParseExit{exit_code::kOk, target->help()};
  } catch (const CLI::CallForVersion&) {
    return ParseExit{exit_code::kOk, std::string(kToolVersion) + "\n"};
  } catch (const CLI::ParseError& e) {
    return ParseExit{exit_code::kValidation, std::string("error: ") + e.what() + "\n" + app.help()};
  } catch (const std::exception& e) {
    return ParseExit{exit_code::kValidation, std::string("error: ") + e.what() + "\n"};
  }

  for (const auto& e : entries)
    if (e.app->parsed()) req.command = e.command;
  req.format = scratch.format == "csv" ? Format::Csv : scratch.format == "table" ? Format::Table : Format::Json;
  return req;
}

}  // namespace wsg::cli
