#include "noether/cli.hpp"

#include <fstream>
#include <memory>

#include <CLI11.hpp>

#include "noether/error.hpp"
#include "noether/json_io.hpp"

namespace noether {

namespace {

struct Options {
  std::string group;
  std::string module = "witness";
  std::string sequence;
  std::string subgroup;
  int k = 1;
  std::vector<uint32_t> primes;
  int max_order = 0;
  int battery_size = 4;
  long long cap = kDefaultMonomialCap;
  unsigned long long seed = 0;
  std::string out;
};

GroupSpec nonabelian_group(const std::string& text) {
  AnyGroup g = parse_any_group(load_json(text));
  if (!g.spec) throw InvalidSpecError("group: expected {\"family\":...,\"n\":...}");
  return *g.spec;
}

AbelianGroup abelian_group(const std::string& text) {
  AnyGroup g = parse_any_group(load_json(text));
  if (!g.abelian) throw InvalidSpecError("group: expected an abelian group such as {\"abelian\":[2,4]}");
  return *g.abelian;
}

ModuleSpec module_for(const GroupSpec& g, const std::string& text, int k) {
  if (text == "witness") return witness_module(g, k);
  return parse_module(load_json(text));
}

Json cmd_davenport(const Options& o) {
  AbelianGroup a = abelian_group(o.group);
  if (o.k < 1) throw InvalidSpecError("k must be >= 1");
  return Json{{"group", to_json(a)}, {"k", o.k}, {"D_k", davenport(a, o.k)}};
}

Json cmd_beta(const Options& o) {
  GroupSpec g = nonabelian_group(o.group);
  ModuleSpec m = module_for(g, o.module, o.k);
  if (o.k < 1) throw InvalidSpecError("k must be >= 1");
  auto fields = default_fields(g, o.primes);
  return to_json(beta_k(build_rep(g, m, fields[0]), o.k, fields, o.cap));
}

Json cmd_extremal(const Options& o) {
  GroupSpec g = nonabelian_group(o.group);
  ModuleSpec m = module_for(g, o.module, o.k);
  if (o.k < 1) throw InvalidSpecError("k must be >= 1");
  auto fields = default_fields(g, o.primes);
  MonomialRep rep = build_rep(g, m, fields[0]);
  const BetaReport r = beta_k(rep, o.k, fields, o.cap);
  Json seqs = Json::array();
  for (const auto& s : extremal_sequences(rep, o.k, fields, o.cap)) seqs.push_back(to_json(s));
  return Json{{"group", to_json(g)}, {"group_name", g.name()}, {"module", to_json(m)},
              {"k", o.k},          {"primes", r.primes},       {"beta", r.beta},
              {"extremal", seqs},  {"note", "canonical forms under Aut(A); this module only"}};
}

Json cmd_contract(const Options& o) {
  AbelianGroup a = abelian_group(o.group);
  if (o.sequence.empty()) throw InvalidSpecError("--sequence is required");
  if (o.subgroup.empty()) throw InvalidSpecError("--subgroup is required");
  ZSequence s = parse_sequence(load_json(o.sequence), a);
  Subgroup b = parse_subgroup(load_json(o.subgroup), a);
  Json cs = Json::array();
  for (const auto& c : contractions(s, b)) cs.push_back(to_json(c));
  Json gens = Json::array();
  for (const auto& x : b.generators()) gens.push_back(to_json(x));
  return Json{{"group", to_json(a)}, {"sequence", to_json(s)}, {"subgroup", gens}, {"contractions", cs}};
}

Json cmd_zero_corner(const Options& o) {
  AbelianGroup a = abelian_group(o.group);
  if (o.sequence.empty()) throw InvalidSpecError("--sequence is required");
  ZSequence s = parse_sequence(load_json(o.sequence), a);
  Json out{{"group", to_json(a)}, {"sequence", to_json(s)}};
  auto best = zero_corner_min_diameter(s);
  out["min_corner"] = best ? to_json(*best) : Json(nullptr);
  bool nonzero = true;
  for (const auto& x : s.entries()) nonzero = nonzero && x != a.zero();
  const int zsf = max_zsf_length(s);
  out["max_zero_sum_free_length"] = zsf;
  if (nonzero && zsf <= s.size() - 3) {
    out["extracted"] = to_json(extract_zero_corner(s));
  } else {
    out["extracted"] = nullptr;
  }
  return out;
}

Json cmd_verify(const Options& o, std::ostream& err) {
  std::vector<GroupSpec> groups;
  if (!o.group.empty() && o.max_order > 0) throw InvalidSpecError("give either --group or --max-order");
  if (!o.group.empty()) {
    groups.push_back(nonabelian_group(o.group));
  } else if (o.max_order > 0) {
    for (const auto& e : catalog(o.max_order).groups) groups.push_back(e.spec);
  } else {
    throw InvalidSpecError("--group or --max-order is required");
  }
  if (o.k < 1) throw InvalidSpecError("k must be >= 1");
  if (o.battery_size < 1 || o.battery_size > 8) throw InvalidSpecError("--battery-size must be in 1..8");
  Json rows = Json::array();
  bool all = true;
  for (const auto& g : groups) {
    VerifyRecord v = verify_group(g, o.k, o.battery_size, o.primes,
                                  [&](const std::string& msg) { err << msg << "\n"; }, o.cap);
    err << g.name() << " k=" << o.k << ": " << (v.pass() ? "PASS" : "FAIL") << "\n";
    all = all && v.pass();
    rows.push_back(to_json(v));
  }
  return Json{{"k", o.k},
              {"battery_size", o.battery_size},
              {"results", rows},
              {"all_pass", all},
              {"note", "upper bound evidence covers the listed battery only"}};
}

Json cmd_catalog(const Options& o) { return to_json(catalog(o.max_order > 0 ? o.max_order : 16)); }

int code_for(const std::exception& e) {
  if (dynamic_cast<const InvalidSpecError*>(&e)) return 2;
  if (dynamic_cast<const ResourceError*>(&e)) return 3;
  if (dynamic_cast<const ConsistencyError*>(&e)) return 4;
  if (dynamic_cast<const nlohmann::json::exception*>(&e)) return 2;
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"noether: beta_k invariants and zero-sum tools"};
  app.name("noether");
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--primes", o.primes, "Two primes p = 1 mod lcm(2|A|,4), comma separated")->delimiter(',');
    sub->add_option("--cap", o.cap, "Monomial count cap per degree")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Accepted for compatibility; no step is randomized");
    sub->add_option("--out", o.out, "Write JSON here instead of stdout");
  };
  auto* dav = app.add_subcommand("davenport", "Generalized Davenport constant D_k(A)");
  dav->add_option("--group", o.group, "Abelian group: n, [n1,n2] or {\"abelian\":[...]}")->required();
  dav->add_option("--k", o.k);
  common(dav);

  auto* beta = app.add_subcommand("beta", "beta_k(G, V) for one module");
  beta->add_option("--group", o.group, "Group spec JSON or file")->required();
  beta->add_option("--module", o.module, "'witness' or module spec JSON");
  beta->add_option("--k", o.k);
  common(beta);

  auto* ext = app.add_subcommand("extremal", "k-extremal weight sequences of one module");
  ext->add_option("--group", o.group)->required();
  ext->add_option("--module", o.module);
  ext->add_option("--k", o.k);
  common(ext);

  auto* con = app.add_subcommand("contract", "All B-contractions of a sequence");
  con->add_option("--group", o.group)->required();
  con->add_option("--sequence", o.sequence, "List of elements")->required();
  con->add_option("--subgroup", o.subgroup, "List of generators of B")->required();
  common(con);

  auto* zc = app.add_subcommand("zero-corner", "Zero-corners of a sequence");
  zc->add_option("--group", o.group)->required();
  zc->add_option("--sequence", o.sequence)->required();
  common(zc);

  auto* ver = app.add_subcommand("verify", "Check the beta_k formula on catalog groups");
  ver->add_option("--group", o.group);
  ver->add_option("--max-order", o.max_order);
  ver->add_option("--k", o.k);
  ver->add_option("--battery-size", o.battery_size);
  common(ver);

  auto* cat = app.add_subcommand("catalog", "Non-cyclic groups with a cyclic index-two subgroup");
  cat->add_option("--max-order", o.max_order);
  common(cat);

  std::vector<std::string> argv_store = {"noether"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Json result;
    if (*dav) result = cmd_davenport(o);
    else if (*beta) result = cmd_beta(o);
    else if (*ext) result = cmd_extremal(o);
    else if (*con) result = cmd_contract(o);
    else if (*zc) result = cmd_zero_corner(o);
    else if (*ver) result = cmd_verify(o, err);
    else if (*cat) result = cmd_catalog(o);
    const std::string text = result.dump(2) + "\n";
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out);
      if (!f) throw InvalidSpecError("cannot open --out file " + o.out);
      f << text;
    }
    return 0;
  } catch (const std::exception& e) {
    const int code = code_for(e);
    err << "error: " << e.what() << "\n";
    out << Json{{"error", e.what()}, {"exit_code", code}}.dump() << "\n";
    return code;
  }
}

}  // namespace noether
