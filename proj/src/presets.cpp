#include "coxeter/presets.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coxeter/errors.hpp"

namespace coxeter {

namespace {

constexpr Label inf = kInfinity;

Preset make(std::string name, std::string description, std::vector<std::vector<Label>> m, Classification c) {
  return Preset{std::move(name), std::move(description), CoxeterMatrix(std::move(m)), c};
}

}  // namespace

const std::vector<Preset>& preset_catalog() {
  static const std::vector<Preset> catalog = [] {
    using C = Classification;
    std::vector<Preset> p;
    p.push_back(make("A1", "rank 1", {{1}}, C::kFinite));
    p.push_back(make("A2", "m12 = 3", {{1, 3}, {3, 1}}, C::kFinite));
    p.push_back(make("A3", "path 1-2-3, labels 3", {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}, C::kFinite));
    p.push_back(make("B2", "m12 = 4", {{1, 4}, {4, 1}}, C::kFinite));
    p.push_back(make("G2", "m12 = 6", {{1, 6}, {6, 1}}, C::kFinite));
    p.push_back(make("H3", "path 1-2-3, labels 5, 3", {{1, 5, 2}, {5, 1, 3}, {2, 3, 1}}, C::kFinite));
    p.push_back(make("affine-A1", "m12 = infinity", {{1, inf}, {inf, 1}}, C::kAffine));
    p.push_back(make("affine-A2", "triangle, labels 3", {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}, C::kAffine));
    p.push_back(make("affine-C2", "path 1-2-3, labels 4, 4", {{1, 4, 2}, {4, 1, 4}, {2, 4, 1}}, C::kAffine));
    p.push_back(make("affine-G2", "path 1-2-3, labels 6, 3", {{1, 6, 2}, {6, 1, 3}, {2, 3, 1}}, C::kAffine));
    p.push_back(make("triangle-334", "triangle, m12 = m13 = 3, m23 = 4", {{1, 3, 3}, {3, 1, 4}, {3, 4, 1}},
                     C::kIndefinite));
    p.push_back(make("path-inf-3", "path 1-2-3, labels infinity, 3", {{1, inf, 2}, {inf, 1, 3}, {2, 3, 1}},
                     C::kIndefinite));
    return p;
  }();
  return catalog;
}

std::optional<Preset> find_preset(const std::string& name) {
  for (const auto& p : preset_catalog())
    if (p.name == name) return p;
  return std::nullopt;
}

GroupContext parse_group_json(const std::string& text, const std::string& fallback_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("group file must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw InputError("group file: 'n' must be an integer");
  if (!doc.contains("m") || !doc["m"].is_array()) throw InputError("group file: 'm' must be an array of arrays");
  const auto n = doc["n"].get<long long>();
  if (n < 1) throw InputError("group file: 'n' must be >= 1");
  const auto& m = doc["m"];
  if (static_cast<long long>(m.size()) != n) throw InputError("group file: 'm' must have n rows");
  std::vector<std::vector<Label>> entries;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_array() || static_cast<long long>(m[i].size()) != n)
      throw InputError("group file: row " + std::to_string(i + 1) + " of 'm' must have n entries");
    std::vector<Label> row;
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      const auto& x = m[i][j];
      if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 1000000)
        throw InputError("group file: entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") must be a nonnegative integer");
      row.push_back(static_cast<Label>(x.get<long long>()));
    }
    entries.push_back(std::move(row));
  }
  std::string name = fallback_name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("group file: 'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  return build_context(CoxeterMatrix(std::move(entries)), name);
}

std::string group_to_json(const GroupContext& ctx) {
  nlohmann::ordered_json doc;
  doc["name"] = ctx.name();
  doc["n"] = ctx.rank();
  doc["m"] = ctx.matrix().entries();
  return doc.dump();
}

GroupContext load_group(const std::string& spec) {
  if (auto p = find_preset(spec)) return build_context(p->matrix, p->name);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(spec, ec)) {
    std::string names;
    for (const auto& p : preset_catalog()) names += (names.empty() ? "" : ", ") + p.name;
    throw InputError("'" + spec + "' is neither a preset (" + names + ") nor a readable file");
  }
  std::ifstream in(spec);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_group_json(buffer.str(), std::filesystem::path(spec).stem().string());
}

Word parse_word(const std::string& text) {
  Word out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long value = 0;
    try {
      value = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw InputError("cannot parse word '" + text + "'");
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size() || value < 1) throw InputError("cannot parse word '" + text + "' (letters are 1-based)");
    out.push_back(static_cast<Generator>(value - 1));
  }
  return out;
}

}  // namespace coxeter
