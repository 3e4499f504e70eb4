#pragma once

// JSON forms of the domain objects. Parsers throw InvalidSpecError with the
// offending field in the message.

#include <optional>
#include <string>

#include <json.hpp>

#include "noether/invariants.hpp"

namespace noether {

using Json = nlohmann::ordered_json;

/// Parses inline JSON, or reads the file when `text` names one.
Json load_json(const std::string& text);

/// {"abelian":[n1,...]}, a bare array of factors, or a bare integer n for Z_n.
AbelianGroup parse_abelian(const Json& j);
/// {"s":..,"r":..,"family":..,"n":..}; s and r default to 1.
GroupSpec parse_group_spec(const Json& j);

struct AnyGroup {
  std::optional<AbelianGroup> abelian;
  std::optional<GroupSpec> spec;
};
AnyGroup parse_any_group(const Json& j);

/// {"constituents":[{"induced":t}, {"char":"sign"}, {"char":{"weight":t,"b":0}}, ...]}
ModuleSpec parse_module(const Json& j);
/// A list of elements, each an integer (cyclic groups) or a coordinate list.
ZSequence parse_sequence(const Json& j, const AbelianGroup& g);
/// A list of generators, in the same element syntax.
Subgroup parse_subgroup(const Json& j, const AbelianGroup& g);

Json to_json(const AbelianGroup& g);
Json to_json(const GroupSpec& g);
Json to_json(const ModuleSpec& m);
Json to_json(const GroupElement& x);
Json to_json(const ZSequence& s);
Json to_json(const ZeroCorner& c);
Json to_json(const Contraction& c);
Json to_json(const BetaReport& r);
Json to_json(const VerifyRecord& v);
Json to_json(const Catalog& c);

}  // namespace noether
