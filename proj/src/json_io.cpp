#include "noether/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "noether/error.hpp"

namespace noether {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InvalidSpecError(where + ": " + what);
}

int get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer, got " + j.dump());
  const long long v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) bad(where, "integer out of range");
  return static_cast<int>(v);
}

void only_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) bad(where, "unknown field \"" + k + "\"");
  }
}

GroupElement parse_element(const Json& j, const AbelianGroup& g, const std::string& where) {
  std::vector<int> coords;
  if (j.is_number_integer()) {
    if (g.rank() != 1) bad(where, "integer elements need a cyclic group");
    coords.push_back(get_int(j, where));
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) coords.push_back(get_int(j[i], where + "[" + std::to_string(i) + "]"));
    if (static_cast<int>(coords.size()) != g.rank()) {
      bad(where, "expected " + std::to_string(g.rank()) + " coordinates");
    }
  } else {
    bad(where, "expected an element");
  }
  return g.reduce(coords);
}

}  // namespace

Json load_json(const std::string& text) {
  std::string body = text;
  std::error_code ec;
  if (!text.empty() && text.front() != '{' && text.front() != '[' && std::filesystem::is_regular_file(text, ec)) {
    std::ifstream in(text);
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidSpecError(std::string("malformed JSON: ") + e.what());
  }
}

AbelianGroup parse_abelian(const Json& j) {
  Json factors;
  if (j.is_object()) {
    only_keys(j, {"abelian"}, "group");
    if (!j.contains("abelian")) bad("group", "missing \"abelian\"");
    factors = j["abelian"];
  } else {
    factors = j;
  }
  if (factors.is_number_integer()) factors = Json::array({factors});
  if (!factors.is_array() || factors.empty()) bad("group.abelian", "expected a non-empty list of factors");
  std::vector<int> fs;
  for (size_t i = 0; i < factors.size(); ++i) {
    const int n = get_int(factors[i], "group.abelian[" + std::to_string(i) + "]");
    if (n < 2) bad("group.abelian[" + std::to_string(i) + "]", "factors must be >= 2");
    fs.push_back(n);
  }
  return make_group(fs);
}

GroupSpec parse_group_spec(const Json& j) {
  if (!j.is_object()) bad("group", "expected an object");
  only_keys(j, {"s", "r", "family", "n"}, "group");
  if (!j.contains("family")) bad("group", "missing \"family\"");
  if (!j.contains("n")) bad("group", "missing \"n\"");
  if (!j["family"].is_string()) bad("group.family", "expected a string");
  const int s = j.contains("s") ? get_int(j["s"], "group.s") : 1;
  const int r = j.contains("r") ? get_int(j["r"], "group.r") : 1;
  const int n = get_int(j["n"], "group.n");
  try {
    return make_spec(s, r, parse_family(j["family"].get<std::string>()), n);
  } catch (const InvalidSpecError& e) {
    bad("group", e.what());
  }
}

AnyGroup parse_any_group(const Json& j) {
  AnyGroup out;
  if (j.is_object() && j.contains("family")) {
    out.spec = parse_group_spec(j);
  } else {
    out.abelian = parse_abelian(j);
  }
  return out;
}

ModuleSpec parse_module(const Json& j) {
  if (!j.is_object()) bad("module", "expected an object");
  only_keys(j, {"constituents"}, "module");
  if (!j.contains("constituents") || !j["constituents"].is_array()) bad("module", "missing \"constituents\" list");
  ModuleSpec m;
  const Json& cs = j["constituents"];
  for (size_t i = 0; i < cs.size(); ++i) {
    const std::string where = "module.constituents[" + std::to_string(i) + "]";
    const Json& c = cs[i];
    if (!c.is_object() || c.size() != 1) bad(where, "expected {\"induced\":...} or {\"char\":...}");
    if (c.contains("induced")) {
      Json t = c["induced"];
      if (t.is_array()) {
        if (t.size() != 1) bad(where + ".induced", "A is cyclic, so weights have one coordinate");
        t = t[0];
      }
      m.constituents.push_back(induced(get_int(t, where + ".induced")));
    } else if (c.contains("char")) {
      const Json& x = c["char"];
      if (x.is_string()) {
        const auto name = x.get<std::string>();
        if (name == "trivial") {
          m.constituents.push_back(trivial_char());
        } else if (name == "sign") {
          m.constituents.push_back(sign_char());
        } else {
          bad(where + ".char", "unknown character \"" + name + "\"");
        }
      } else if (x.is_object()) {
        only_keys(x, {"weight", "b"}, where + ".char");
        if (!x.contains("weight")) bad(where + ".char", "missing \"weight\"");
        Json w = x["weight"];
        if (w.is_array() && w.size() == 1) w = w[0];
        const int b = x.contains("b") ? get_int(x["b"], where + ".char.b") : 0;
        if (b != 0 && b != 1) bad(where + ".char.b", "must be 0 or 1");
        m.constituents.push_back(character(get_int(w, where + ".char.weight"), b));
      } else {
        bad(where + ".char", "expected \"trivial\", \"sign\" or an object");
      }
    } else {
      bad(where, "expected {\"induced\":...} or {\"char\":...}");
    }
  }
  if (m.constituents.empty()) bad("module.constituents", "empty module");
  return m;
}

ZSequence parse_sequence(const Json& j, const AbelianGroup& g) {
  if (!j.is_array()) bad("sequence", "expected a list of elements");
  std::vector<GroupElement> xs;
  for (size_t i = 0; i < j.size(); ++i) xs.push_back(parse_element(j[i], g, "sequence[" + std::to_string(i) + "]"));
  return ZSequence(g, xs);
}

Subgroup parse_subgroup(const Json& j, const AbelianGroup& g) {
  if (!j.is_array()) bad("subgroup", "expected a list of generators");
  std::vector<GroupElement> gens;
  for (size_t i = 0; i < j.size(); ++i) gens.push_back(parse_element(j[i], g, "subgroup[" + std::to_string(i) + "]"));
  return Subgroup::generated(g, gens);
}

Json to_json(const AbelianGroup& g) { return Json{{"abelian", g.factors()}}; }

Json to_json(const GroupSpec& g) {
  return Json{{"s", g.s}, {"r", g.r}, {"family", family_name(g.family)}, {"n", g.n}};
}

Json to_json(const ModuleSpec& m) {
  Json cs = Json::array();
  for (const auto& c : m.constituents) {
    if (c.kind == Constituent::Kind::Induced) {
      cs.push_back(Json{{"induced", c.weight}});
    } else if (c.weight == 0) {
      cs.push_back(Json{{"char", c.b_sign ? "sign" : "trivial"}});
    } else {
      cs.push_back(Json{{"char", Json{{"weight", c.weight}, {"b", c.b_sign}}}});
    }
  }
  return Json{{"constituents", cs}};
}

Json to_json(const GroupElement& x) {
  if (x.coords.size() == 1) return Json(x.coords[0]);
  return Json(x.coords);
}

Json to_json(const ZSequence& s) {
  Json out = Json::array();
  for (const auto& x : s.entries()) out.push_back(to_json(x));
  return out;
}

Json to_json(const ZeroCorner& c) {
  return Json{{"E", to_json(c.e)}, {"F", to_json(c.f)}, {"H", to_json(c.h)}, {"diameter", c.diameter}};
}

Json to_json(const Contraction& c) {
  Json blocks = Json::array();
  for (const auto& b : c.blocks) blocks.push_back(to_json(b));
  return Json{{"blocks", blocks}, {"result", to_json(c.result)}};
}

Json to_json(const BetaReport& r) {
  Json dims = Json::array();
  for (const auto& d : r.dims) dims.push_back(Json::array({d.degree, d.dim_r, d.dim_power}));
  return Json{{"group", to_json(r.group)},
              {"group_name", r.group.name()},
              {"module", to_json(r.module)},
              {"k", r.k},
              {"primes", r.primes},
              {"beta", r.beta},
              {"witness", r.witness},
              {"beta1", r.beta1},
              {"bound", r.bound},
              {"dims", dims}};
}

Json to_json(const VerifyRecord& v) {
  Json battery = Json::array();
  for (const auto& row : v.battery) {
    battery.push_back(Json{{"module", row.module.describe()}, {"beta", row.beta}});
  }
  return Json{{"group", to_json(v.group)},
              {"group_name", v.group.name()},
              {"order", v.group.order()},
              {"k", v.k},
              {"primes", v.primes},
              {"formula", v.formula},
              {"witness_module", v.witness.module.describe()},
              {"witness_beta", v.witness.beta},
              {"witness_monomial", v.witness.witness},
              {"battery", battery},
              {"lower_bound_attained", v.lower_ok},
              {"battery_within_formula", v.upper_ok},
              {"verdict", v.pass() ? "PASS" : "FAIL"},
              {"note", "battery exhaustiveness unverified"}};
}

Json to_json(const Catalog& c) {
  Json groups = Json::array();
  for (const auto& e : c.groups) {
    groups.push_back(Json{{"name", e.name}, {"order", e.spec.order()}, {"spec", to_json(e.spec)}});
  }
  Json co = Json::array();
  for (const auto& [omitted, kept] : c.coincidences) {
    co.push_back(Json{{"omitted", to_json(omitted)}, {"isomorphic_to", to_json(kept)}, {"name", kept.name()}});
  }
  return Json{{"groups", groups}, {"coincidences", co}};
}

}  // namespace noether
