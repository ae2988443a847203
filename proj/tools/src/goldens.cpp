#include "wsg_cli/goldens.hpp"

#include "wsg/errors.hpp"

namespace wsg::cli {

namespace {

// Reference tables, one JSON document each.
constexpr const char* kEmbedded[] = {
    R"({"id": "hermitian-q5-r3-m4", "preset": "hermitian-like", "q": 5, "r": 3,
        "a": 5, "b": 126, "m": 4,
        "families": [
          {"base": [126, 0, 0, 126], "step": [-5, 1, 1, 1], "first": 1, "last": 25},
          {"base": [126, 0, 126, 0], "step": [-5, 1, 1, 1], "first": 1, "last": 25},
          {"base": [126, 126, 0, 0], "step": [-5, 1, 1, 1], "first": 1, "last": 25},
          {"base": [252, 0, 0, 0],   "step": [-5, 1, 1, 1], "first": 1, "last": 50}]})",
    R"({"id": "kummer-a5-b7-m2", "preset": "kummer", "a": 5, "b": 7, "m": 2,
        "listed": [[23,1],[18,2],[13,3],[8,4],[3,5],[16,8],
                   [11,9],[6,10],[1,11],[9,15],[4,16],[2,22]]})",
    R"({"id": "kummer-a5-b7-m3", "preset": "kummer", "a": 5, "b": 7, "m": 3,
        "listed": [[2,8,8],[2,15,1],[2,1,15],[9,8,1],[9,1,8],
                   [4,9,2],[4,2,9],[16,1,1],[11,2,2],[6,3,3],[1,4,4]]})",
    R"({"id": "kummer-a5-b7-m4", "preset": "kummer", "a": 5, "b": 7, "m": 4,
        "listed": [[2,8,1,1],[2,1,8,1],[2,1,1,8],[9,1,1,1],[4,2,2,2]]})",
    R"({"id": "kummer-a5-b7-m5", "preset": "kummer", "a": 5, "b": 7, "m": 5,
        "listed": [[2,1,1,1,1]]})",
};

PoleVector vector_from_json(const nlohmann::json& j) {
  return PoleVector(j.get<std::vector<Int>>());
}

}  // namespace

bool GoldenFamily::contains(const PoleVector& v) const {
  if (v.size() != base.size()) return false;
  for (Int k = first; k <= last; ++k) {
    bool equal = true;
    for (std::size_t c = 0; c < v.size() && equal; ++c) equal = base[c] + k * step[c] == v[c];
    if (equal) return true;
  }
  return false;
}

std::vector<PoleVector> GoldenTable::expand() const {
  std::vector<PoleVector> out = listed;
  for (const auto& f : families) {
    for (Int k = f.first; k <= f.last; ++k) {
      PoleVector v(f.base.size());
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = checked_add(f.base[c], checked_mul(k, f.step[c]));
      out.push_back(std::move(v));
    }
  }
  return out;
}

GoldenTable golden_from_json(const nlohmann::json& j) {
  try {
    GoldenTable t;
    t.id = j.at("id").get<std::string>();
    t.preset = j.value("preset", "");
    t.a = j.at("a").get<Int>();
    t.b = j.at("b").get<Int>();
    t.m = j.at("m").get<Int>();
    if (j.contains("q")) t.q = j.at("q").get<Int>();
    if (j.contains("r")) t.r = j.at("r").get<Int>();
    if (j.contains("listed"))
      for (const auto& v : j.at("listed")) t.listed.push_back(vector_from_json(v));
    if (j.contains("families")) {
      for (const auto& f : j.at("families")) {
        t.families.push_back(GoldenFamily{vector_from_json(f.at("base")), vector_from_json(f.at("step")),
                                          f.at("first").get<Int>(), f.at("last").get<Int>()});
      }
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed golden table: ") + e.what());
  }
}

nlohmann::json golden_to_json(const GoldenTable& t) {
  nlohmann::json j;
  j["id"] = t.id;
  j["preset"] = t.preset;
  j["a"] = t.a;
  j["b"] = t.b;
  j["m"] = t.m;
  if (t.q) j["q"] = *t.q;
  if (t.r) j["r"] = *t.r;
  if (!t.listed.empty()) {
    j["listed"] = nlohmann::json::array();
    for (const auto& v : t.listed) j["listed"].push_back(v.coords());
  }
  if (!t.families.empty()) {
    j["families"] = nlohmann::json::array();
    for (const auto& f : t.families)
      j["families"].push_back({{"base", f.base.coords()}, {"step", f.step.coords()},
                               {"first", f.first}, {"last", f.last}});
  }
  return j;
}

std::vector<GoldenTable> embedded_goldens() {
  std::vector<GoldenTable> out;
  for (const char* text : kEmbedded) out.push_back(golden_from_json(nlohmann::json::parse(text)));
  return out;
}

}  // namespace wsg::cli
