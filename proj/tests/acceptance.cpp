// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "noether/error.hpp"
#include "noether/invariants.hpp"
#include "property_suites.hpp"

using namespace noether;

namespace {

constexpr uint64_t kSeed = 20240611;
constexpr int kPropertyCases = 10000;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what;
  }
}

// Dimension tables computed one prime at a time, compared directly.
std::vector<std::string> agreement_log;

BetaReport beta_checked(const GroupSpec& g, const ModuleSpec& m, int k) {
  const auto fields = default_fields(g);
  const MonomialRep rep = build_rep(g, m, fields[0]);
  const BetaReport joint = beta_k(rep, k, fields);
  const BetaReport a = beta_k(rep, k, {fields[0]});
  const BetaReport b = beta_k(rep, k, {fields[1]});
  bool same = a.beta == b.beta && a.beta1 == b.beta1 && a.dims.size() == b.dims.size();
  for (size_t i = 0; same && i < a.dims.size(); ++i) {
    same = a.dims[i].dim_r == b.dims[i].dim_r && a.dims[i].dim_power == b.dims[i].dim_power;
  }
  if (!same) {
    agreement_log.push_back(g.name() + " " + m.describe() + " k=" + std::to_string(k));
  }
  return joint;
}

GroupSpec dihedral(int n) {
  switch (n) {
    case 4: return make_spec(1, 1, Family::Dihedral, 3);
    case 6: return make_spec(1, 3, Family::Z2xZ2n1, 2);
    case 8: return make_spec(1, 1, Family::Dihedral, 4);
    default: return make_spec(1, n, Family::Dihedral, 1);
  }
}

Outcome dihedral_beta() {
  Outcome o;
  for (int n = 3; n <= 7; ++n) {
    GroupSpec g = dihedral(n);
    const int beta = beta_checked(g, witness_module(g, 1), 1).beta;
    expect(o, beta == n + 1, g.name() + " gave " + std::to_string(beta));
  }
  return o;
}

Outcome dihedral_higher_k() {
  Outcome o;
  GroupSpec g = dihedral(3);
  for (auto [k, want] : {std::pair{2, 7}, std::pair{3, 10}}) {
    const int beta = beta_checked(g, witness_module(g, k), k).beta;
    expect(o, beta == want, "k=" + std::to_string(k) + " gave " + std::to_string(beta));
  }
  return o;
}

Outcome quaternion() {
  Outcome o;
  GroupSpec g = make_spec(1, 1, Family::Dicyclic, 3);
  const MonomialRep rep = build_rep(g, ModuleSpec{{induced(1)}});
  expect(o, rep.scalars[0] * 4 == rep.m && rep.scalars[1] * 4 == rep.m, "b is not (0 i; i 0)");
  expect(o, rep.m / (rep.m / rep.a.order()) == 4, "omega does not have order 4");
  const int beta = beta_checked(g, ModuleSpec{{induced(1)}}, 1).beta;
  expect(o, beta == 6, "beta " + std::to_string(beta));
  return o;
}

Outcome semidirect_z4() {
  Outcome o;
  for (auto [r, k] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{5, 1}}) {
    GroupSpec g = make_spec(1, r, Family::Cyclic2n, 2);
    const int beta = beta_checked(g, witness_module(g, k), k).beta;
    expect(o, beta == 2 * r * k + 2,
           "r=" + std::to_string(r) + " k=" + std::to_string(k) + " gave " + std::to_string(beta));
  }
  return o;
}

Outcome dicyclic16() {
  Outcome o;
  GroupSpec g = make_spec(1, 1, Family::Dicyclic, 4);
  const int beta = beta_checked(g, witness_module(g, 1), 1).beta;
  expect(o, beta == 10, "beta " + std::to_string(beta));
  return o;
}

Outcome z3_times_q8() {
  Outcome o;
  GroupSpec g = make_spec(3, 1, Family::Dicyclic, 3);
  const int beta = beta_checked(g, witness_module(g, 1), 1).beta;
  expect(o, beta == 13, "witness gave " + std::to_string(beta));
  const auto mods = battery_modules(g, 4);
  expect(o, mods.size() >= 10, "battery too small");
  int worst = 0;
  for (const auto& m : mods) worst = std::max(worst, beta_checked(g, m, 1).beta);
  expect(o, worst <= 13, "battery reached " + std::to_string(worst));
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(mods.size()) + " battery modules, max " +
              std::to_string(worst);
  return o;
}

Outcome verify_catalog() {
  Outcome o;
  int groups = 0;
  for (int k = 1; k <= 2; ++k) {
    for (const auto& e : catalog(16).groups) {
      ++groups;
      VerifyRecord v = verify_group(e.spec, k, 4);
      expect(o, v.pass(), e.name + " k=" + std::to_string(k) + " witness " + std::to_string(v.witness.beta) +
                              " formula " + std::to_string(v.formula));
      // per-prime tables for the witness and every battery module
      beta_checked(e.spec, witness_module(e.spec, k), k);
      for (const auto& row : v.battery) beta_checked(e.spec, row.module, k);
    }
  }
  if (o.ok) o.detail = std::to_string(groups) + " group/k rows";
  return o;
}

Outcome davenport_values() {
  Outcome o;
  for (int n = 2; n <= 10; ++n) {
    expect(o, davenport(make_group({n}), 1) == n, "D(Z" + std::to_string(n) + ")");
  }
  expect(o, davenport(make_group({2, 2}), 1) == 3, "D(Z2xZ2)");
  expect(o, davenport(make_group({2, 4}), 1) == 5, "D(Z2xZ4)");
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 3; ++k) {
      expect(o, davenport(make_group({n}), k) == k * n,
             "D_" + std::to_string(k) + "(Z" + std::to_string(n) + ")");
    }
  }
  return o;
}

Outcome extremal_classes() {
  Outcome o;
  for (int n : {3, 4, 5}) {
    GroupSpec g = dihedral(n);
    const auto fields = default_fields(g);
    const auto got = extremal_sequences(build_rep(g, witness_module(g, 1), fields[0]), 1, fields);
    std::vector<int> form(n + 1, 1);
    form[0] = 0;
    const ZSequence want = canonical_form(ZSequence::from_indices(make_group({n}), form));
    expect(o, got.size() == 1 && got[0] == want, g.name() + " extremal set differs");
  }
  GroupSpec q8 = make_spec(1, 1, Family::Dicyclic, 3);
  const auto fields = default_fields(q8);
  const auto got = extremal_sequences(build_rep(q8, ModuleSpec{{induced(1)}}, fields[0]), 1, fields);
  expect(o, !got.empty(), "Q8 has no extremal sequences");
  for (const auto& s : got) {
    const auto c = s.counts();
    const bool shape = c[0] == 0 && c[2] == 0 && c[1] != c[3];
    expect(o, shape, "Q8 sequence " + s.to_string());
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  const std::pair<const char*, std::function<props::SuiteResult(uint64_t, int)>> suites[] = {
      {"subset sums over Z_p", props::subset_sums_prime},
      {"subset sums of zero-sum free sequences", props::subset_sums_zero_sum_free},
      {"zero-corner extraction", props::corner_extraction},
      {"short zero-sum or repeated element", props::short_zero_sum_or_repeat},
      {"dihedral transfer identity", props::dihedral_transfer_identity},
  };
  std::ostringstream summary;
  for (const auto& [name, run] : suites) {
    const props::SuiteResult r = run(kSeed, kPropertyCases);
    expect(o, r.cases == kPropertyCases && r.violations == 0,
           std::string(name) + ": " + std::to_string(r.violations) + " violations, first " + r.first_failure);
    summary << name << " " << r.violations << "/" << r.cases << "; ";
  }
  if (o.ok) o.detail = summary.str();
  return o;
}

Outcome prime_agreement() {
  Outcome o;
  for (const auto& s : agreement_log) expect(o, false, s);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "beta(D_2n) = n+1 for n = 3..7", 10, dihedral_beta},
      {2, "beta_2(D_6) = 7, beta_3(D_6) = 10", 30, dihedral_higher_k},
      {3, "beta(Q8) = 6 on the quaternion module", 5, quaternion},
      {4, "beta_k(Z_r : Z_4) = 2rk+2", 60, semidirect_z4},
      {5, "beta(Dic16) = 10", 60, dicyclic16},
      {6, "beta(Z3 x Q8) = 13, battery bounded", 300, z3_times_q8},
      {7, "verify order <= 16, k = 1, 2", 600, verify_catalog},
      {8, "Davenport constants", 120, davenport_values},
      {9, "extremal sequences of D6, D8, D10, Q8", 120, extremal_classes},
      {10, "randomized property suites", 300, property_suites},
      {11, "two-prime agreement of dimension tables", 1, prime_agreement},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit)";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << ")";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
