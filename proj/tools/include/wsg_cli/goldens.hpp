#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsg/pole_vector.hpp"

namespace wsg::cli {

// base + k * step for k = first..last
struct GoldenFamily {
  PoleVector base;
  PoleVector step;
  Int first = 0;
  Int last = 0;

  bool contains(const PoleVector& v) const;
};

// A reference Gamma table, either listed element by element or as families
// of arithmetic progressions. Listed order is the display order.
struct GoldenTable {
  std::string id;
  std::string preset;
  Int a = 0;
  Int b = 0;
  Int m = 0;
  std::optional<Int> q;
  std::optional<Int> r;
  std::vector<PoleVector> listed;
  std::vector<GoldenFamily> families;

  std::vector<PoleVector> expand() const;  // in display order
};

GoldenTable golden_from_json(const nlohmann::json& j);
nlohmann::json golden_to_json(const GoldenTable& table);

// The five reference tables compiled into the binary.
std::vector<GoldenTable> embedded_goldens();

}  // namespace wsg::cli
