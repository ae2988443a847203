#include <algorithm>
#include <sstream>

#include "wsg_cli/run.hpp"

namespace wsg::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const RunReport& report) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) os << (k ? "," : "") << csv_field(fields[k]);
    os << "\n";
  };
  line(report.columns);
  for (const auto& row : report.rows) line(row);
  return os.str();
}

std::string render_table(const RunReport& report) {
  std::vector<std::size_t> width(report.columns.size(), 0);
  for (std::size_t k = 0; k < report.columns.size(); ++k) width[k] = report.columns[k].size();
  for (const auto& row : report.rows)
    for (std::size_t k = 0; k < row.size() && k < width.size(); ++k) width[k] = std::max(width[k], row[k].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (k) os << "  ";
      os << std::string(width[k] - fields[k].size(), ' ') << fields[k];
    }
    os << "\n";
  };
  line(report.columns);
  for (const auto& row : report.rows) line(row);
  return os.str();
}

}  // namespace

std::string render(const RunReport& report, Format format, bool grouped) {
  switch (format) {
    case Format::Json:
      return report.payload.dump() + "\n";
    case Format::Csv:
      return render_csv(report);
    case Format::Table:
      if (grouped && !report.grouped_lines.empty()) {
        std::string out;
        for (const auto& l : report.grouped_lines) out += l + "\n";
        return out;
      }
      return render_table(report);
  }
  return {};
}

}  // namespace wsg::cli
