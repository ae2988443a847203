#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wsg/checked.hpp"

namespace wsg::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class Command { Gaps, Gamma, Semigroup, GapSet, Verify, Oracle, Reproduce };
enum class Format { Json, Csv, Table };

std::string to_string(Command c);

struct RunRequest {
  Command command = Command::Gaps;
  std::optional<Int> a;
  std::optional<Int> b;
  std::string preset;  // "", "hermitian-like" or "kummer"
  std::optional<Int> q;
  std::optional<Int> r;
  std::optional<Int> m;
  std::optional<Int> m_min;  // verify only
  std::optional<Int> m_max;  // verify only
  std::vector<Int> bound;
  bool count = false;
  bool members = false;
  bool grouped = false;
  Format format = Format::Json;
  std::optional<std::string> out;
  std::optional<std::string> golden_dir;
  bool timing = false;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kValidation = 1;
inline constexpr int kVerification = 2;
}  // namespace exit_code

struct RunReport {
  int exit_code = exit_code::kOk;
  nlohmann::json payload;  // deterministic for a fixed request
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> grouped_lines;  // reproduce --grouped display
  std::vector<std::string> warnings;
  std::string error;
  double seconds = 0.0;
};

// Result of parsing argv: a request, or an exit status with text to print
// (help output on stdout for status 0, a usage error otherwise).
struct ParseExit {
  int exit_code;
  std::string message;
};
using ParseResult = std::variant<RunRequest, ParseExit>;

ParseResult parse_args(const std::vector<std::string>& args);

RunReport run(const RunRequest& request);

std::string render(const RunReport& report, Format format, bool grouped = false);

// Parses, runs, writes output (stdout or --out) and returns the exit status.
int main_entry(const std::vector<std::string>& args);

}  // namespace wsg::cli
