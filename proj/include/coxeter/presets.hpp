#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxeter/coxeter_context.hpp"

namespace coxeter {

struct Preset {
  std::string name;
  std::string description;
  CoxeterMatrix matrix;
  Classification expected;
};

/// The built-in catalog: finite A1 A2 A3 B2 G2 H3, affine ~A1 ~A2 ~C2 ~G2,
/// and two indefinite rank-3 groups.
const std::vector<Preset>& preset_catalog();
std::optional<Preset> find_preset(const std::string& name);

/// Parses a group file: {"name": str (optional), "n": int, "m": [[int]]}
/// with 0 standing for infinity. Throws InputError on anything malformed.
GroupContext parse_group_json(const std::string& text, const std::string& fallback_name = "");
std::string group_to_json(const GroupContext& ctx);

/// A preset name or a path to a group file.
GroupContext load_group(const std::string& spec);

/// Parses "1,2,3" into a 0-based word. Throws InputError.
Word parse_word(const std::string& text);

}  // namespace coxeter
