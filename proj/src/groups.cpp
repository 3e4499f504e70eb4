#include "noether/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "noether/error.hpp"

namespace noether {

namespace {

const std::pair<Family, const char*> kFamilyNames[] = {
    {Family::Cyclic2n, "Cyclic2n"},         {Family::Z2xZ2n1, "Z2xZ2n1"},
    {Family::Modular, "Modular"},           {Family::Dihedral, "Dihedral"},
    {Family::Semidihedral, "Semidihedral"}, {Family::Dicyclic, "Dicyclic"},
};

int min_n(Family f) {
  switch (f) {
    case Family::Cyclic2n: return 1;
    case Family::Z2xZ2n1: return 2;
    case Family::Modular: return 3;
    case Family::Dihedral: return 3;
    case Family::Semidihedral: return 4;
    case Family::Dicyclic: return 3;
  }
  return 1;
}

long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

// (d, c_H) modulo 2^(n-1) for the 2-group H.
std::pair<long long, long long> two_part(Family f, int n) {
  const long long half = n >= 2 ? 1LL << (n - 2) : 0;
  switch (f) {
    case Family::Cyclic2n: return {1, 1};
    case Family::Z2xZ2n1: return {1, 0};
    case Family::Modular: return {half + 1, 0};
    case Family::Dihedral: return {-1, 0};
    case Family::Semidihedral: return {half - 1, 0};
    case Family::Dicyclic: return {-1, half};
  }
  return {1, 0};
}

long long crt(long long s_val, long long s, long long r_val, long long r, long long t_val,
              long long t) {
  const long long n = s * r * t;
  for (long long x = 0; x < n; ++x) {
    if (mod(x - s_val, s) == 0 && mod(x - r_val, r) == 0 && mod(x - t_val, t) == 0) return x;
  }
  throw ConsistencyError("CRT system has no solution");
}

std::string cyclic(long long n) { return "Z" + std::to_string(n); }

}  // namespace

std::string family_name(Family f) {
  for (auto [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (auto [fam, n] : kFamilyNames) {
    if (name == n) return fam;
  }
  throw InvalidSpecError("unknown family \"" + name + "\"");
}

long long GroupSpec::order() const { return static_cast<long long>(s) * r * (1LL << n); }

int GroupSpec::a_order() const { return static_cast<int>(order() / 2); }

int GroupSpec::twist() const {
  auto [d, c_h] = two_part(family, n);
  (void)c_h;
  return static_cast<int>(crt(1, s, -1, r, d, 1LL << (n - 1)));
}

int GroupSpec::b_square() const {
  auto [d, c_h] = two_part(family, n);
  (void)d;
  return static_cast<int>(crt(0, s, 0, r, c_h, 1LL << (n - 1)));
}

bool GroupSpec::is_cyclic() const { return family == Family::Cyclic2n && r == 1; }

bool GroupSpec::is_abelian() const { return mod(twist() - 1, a_order()) == 0; }

std::string GroupSpec::name() const {
  const long long two_n = 1LL << n;
  std::string core;
  switch (family) {
    case Family::Cyclic2n:
      if (r == 1) {
        core = cyclic(two_n);
      } else if (n == 1) {
        core = "D" + std::to_string(2 * r);
      } else {
        core = cyclic(r) + ":" + cyclic(two_n);
      }
      break;
    case Family::Z2xZ2n1:
      if (r == 1) {
        core = "Z2x" + cyclic(two_n / 2);
      } else if (n == 2) {
        core = "D" + std::to_string(4 * r);
      } else {
        core = cyclic(two_n / 2) + "xD" + std::to_string(2 * r);
      }
      break;
    case Family::Modular: core = "M" + std::to_string(r * two_n); break;
    case Family::Dihedral: core = "D" + std::to_string(r * two_n); break;
    case Family::Semidihedral: core = "SD" + std::to_string(r * two_n); break;
    case Family::Dicyclic:
      core = (r == 1 && n == 3) ? "Q8" : "Dic" + std::to_string(r * two_n);
      break;
  }
  return s > 1 ? cyclic(s) + "x" + core : core;
}

GroupSpec make_spec(int s, int r, Family family, int n) {
  if (s < 1 || s % 2 == 0) throw InvalidSpecError("s must be an odd integer >= 1");
  if (r < 1 || r % 2 == 0) throw InvalidSpecError("r must be an odd integer >= 1");
  if (std::gcd(s, r) != 1) throw InvalidSpecError("r and s must be coprime");
  if (family == Family::Dihedral && (n == 1 || n == 2)) {
    family = n == 1 ? Family::Cyclic2n : Family::Z2xZ2n1;
  }
  if (n < min_n(family)) {
    throw InvalidSpecError(family_name(family) + " needs n >= " + std::to_string(min_n(family)) +
                           ", got n = " + std::to_string(n));
  }
  if (n > 20 || static_cast<long long>(s) * r * (1LL << n) > (1LL << 24)) {
    throw InvalidSpecError("group order too large");
  }
  return GroupSpec{s, r, family, n};
}

Catalog catalog(int max_order) {
  if (max_order > 256) throw InvalidSpecError("catalog max_order must be <= 256");
  Catalog out;
  std::vector<GroupSpec> specs;
  const Family families[] = {Family::Cyclic2n, Family::Z2xZ2n1,      Family::Modular,
                             Family::Dihedral, Family::Semidihedral, Family::Dicyclic};
  for (Family f : families) {
    for (int n = min_n(f); (1LL << n) <= max_order; ++n) {
      for (int r = 1; r * (1LL << n) <= max_order; r += 2) {
        for (int s = 1; static_cast<long long>(s) * r * (1LL << n) <= max_order; s += 2) {
          if (std::gcd(r, s) != 1) continue;
          GroupSpec g{s, r, f, n};
          if (g.is_cyclic()) continue;
          if (f == Family::Modular && n == 3) {
            // M_8 and D_8 share the presentation u = -1, c = 0.
            out.coincidences.emplace_back(g, GroupSpec{s, r, Family::Dihedral, 3});
            continue;
          }
          specs.push_back(g);
        }
      }
    }
  }
  std::sort(specs.begin(), specs.end(), [](const GroupSpec& x, const GroupSpec& y) {
    return std::make_tuple(x.order(), static_cast<int>(x.family), x.n, x.r, x.s) <
           std::make_tuple(y.order(), static_cast<int>(y.family), y.n, y.r, y.s);
  });
  for (const auto& g : specs) out.groups.push_back({g, g.name()});
  return out;
}

long long formula_beta(const GroupSpec& g, int k) {
  if (g.is_cyclic()) throw DomainError(g.name() + " is cyclic; the formula covers non-cyclic groups");
  if (k < 1) throw InvalidSpecError("k must be >= 1");
  const bool plus_two = (g.family == Family::Dicyclic && g.s == 1) ||
                        (g.family == Family::Cyclic2n && g.n == 2 && g.s == 1);
  return g.order() * k / 2 + (plus_two ? 2 : 1);
}

// ---------------------------------------------------------------------------
// Modules

int ModuleSpec::dimension() const {
  int d = 0;
  for (const auto& c : constituents) d += c.kind == Constituent::Kind::Induced ? 2 : 1;
  return d;
}

std::string ModuleSpec::describe() const {
  std::ostringstream os;
  for (size_t i = 0; i < constituents.size(); ++i) {
    if (i) os << "+";
    const auto& c = constituents[i];
    if (c.kind == Constituent::Kind::Induced) {
      os << "Ind(" << c.weight << ")";
    } else if (c.weight == 0) {
      os << (c.b_sign ? "sign" : "triv");
    } else {
      os << "Char(" << c.weight << "," << c.b_sign << ")";
    }
  }
  return os.str();
}

ModuleSpec witness_module(const GroupSpec& g, int k) {
  const long long extra = formula_beta(g, k) - g.order() * k / 2;
  if (extra == 2) return ModuleSpec{{induced(1)}};
  return ModuleSpec{{induced(1), sign_char()}};
}

std::vector<Constituent> irreducibles(const GroupSpec& g) {
  const int n = g.a_order();
  const long long u = g.twist();
  std::vector<Constituent> out;
  for (int t = 0; t < n; ++t) {
    if (mod((u - 1) * t, n) == 0) {
      out.push_back(character(t, 0));
      out.push_back(character(t, 1));
    }
  }
  for (int t = 0; t < n; ++t) {
    if (t < mod(u * t, n)) out.push_back(induced(t));
  }
  return out;
}

int root_order(const GroupSpec& g) { return std::lcm(2 * g.a_order(), 4); }

MonomialRep build_rep(const GroupSpec& g, const ModuleSpec& module) {
  MonomialRep rep;
  rep.group = g;
  rep.module = module;
  const int n = g.a_order();
  rep.a = n >= 2 ? AbelianGroup({n}) : AbelianGroup();
  rep.m = root_order(g);
  const long long step = rep.m / n;  // omega = zeta^step
  const long long u = g.twist();
  const long long c = g.b_square();
  if (module.constituents.empty()) throw InvalidSpecError("module has no constituents");
  if (module.dimension() > 8) throw InvalidSpecError("modules are limited to 8 variables");
  for (const auto& con : module.constituents) {
    const long long theta = mod(con.weight, n);
    // b^2 acts on a weight-theta variable by omega^(c*theta) = zeta^(step*c*theta);
    // step is even, so this exponent halves cleanly.
    const long long half = mod(step * c * theta, rep.m) / 2;
    const int base = rep.num_vars();
    if (con.kind == Constituent::Kind::Induced) {
      rep.weights.push_back(static_cast<int>(theta));
      rep.weights.push_back(static_cast<int>(mod(u * theta, n)));
      rep.perm.push_back(base + 1);
      rep.perm.push_back(base);
      rep.scalars.push_back(static_cast<int>(half));
      rep.scalars.push_back(static_cast<int>(half));
    } else {
      if (mod((u - 1) * theta, n) != 0) {
        throw InvalidSpecError("weight " + std::to_string(theta) +
                               " is not b-stable, so it does not extend to a character of " +
                               g.name());
      }
      if (con.b_sign != 0 && con.b_sign != 1) throw InvalidSpecError("character b-sign must be 0 or 1");
      rep.weights.push_back(static_cast<int>(theta));
      rep.perm.push_back(base);
      rep.scalars.push_back(static_cast<int>(mod(half + con.b_sign * (rep.m / 2), rep.m)));
    }
  }
  if (!verify_relations(rep)) {
    throw ConsistencyError("representation of " + g.name() + " violates its presentation");
  }
  return rep;
}

MonomialRep build_rep(const GroupSpec& g, const ModuleSpec& module, const FieldSpec& field) {
  const int m = root_order(g);
  if (field.m % m != 0) {
    throw FieldError("field root of unity has order " + std::to_string(field.m) + ", need a multiple of " +
                     std::to_string(m));
  }
  if (g.order() % field.p == 0) throw FieldError("field characteristic divides |G|");
  return build_rep(g, module);
}

namespace {

// x_i -> zeta^exps[i] x_perm[i]
struct MonMat {
  std::vector<int> perm;
  std::vector<long long> exps;
};

MonMat compose(const MonMat& outer, const MonMat& inner, int m) {
  MonMat r;
  const size_t v = inner.perm.size();
  r.perm.resize(v);
  r.exps.resize(v);
  for (size_t i = 0; i < v; ++i) {
    int j = inner.perm[i];
    r.perm[i] = outer.perm[j];
    r.exps[i] = mod(inner.exps[i] + outer.exps[j], m);
  }
  return r;
}

MonMat inverse(const MonMat& a, int m) {
  MonMat r;
  const size_t v = a.perm.size();
  r.perm.resize(v);
  r.exps.resize(v);
  for (size_t i = 0; i < v; ++i) {
    r.perm[a.perm[i]] = static_cast<int>(i);
    r.exps[a.perm[i]] = mod(-a.exps[i], m);
  }
  return r;
}

MonMat diagonal_power(const MonomialRep& rep, long long e) {
  const long long step = rep.m / std::max(1, rep.a.order());
  MonMat r;
  for (int i = 0; i < rep.num_vars(); ++i) {
    r.perm.push_back(i);
    r.exps.push_back(mod(step * rep.weights[i] * e, rep.m));
  }
  return r;
}

bool same(const MonMat& a, const MonMat& b) { return a.perm == b.perm && a.exps == b.exps; }

}  // namespace

bool verify_relations(const MonomialRep& rep) {
  const int v = rep.num_vars();
  if (static_cast<int>(rep.perm.size()) != v || static_cast<int>(rep.scalars.size()) != v) return false;
  std::vector<char> hit(v, 0);
  for (int p : rep.perm) {
    if (p < 0 || p >= v || hit[p]) return false;
    hit[p] = 1;
  }
  const int n = rep.a.order();
  for (int w : rep.weights) {
    if (w < 0 || w >= std::max(1, n)) return false;
  }
  if (rep.m % std::max(1, n) != 0) return false;

  MonMat b;
  b.perm = rep.perm;
  for (int sc : rep.scalars) b.exps.push_back(mod(sc, rep.m));
  MonMat id = diagonal_power(rep, 0);
  if (!same(diagonal_power(rep, n), id)) return false;
  MonMat conj = compose(compose(b, diagonal_power(rep, 1), rep.m), inverse(b, rep.m), rep.m);
  if (!same(conj, diagonal_power(rep, rep.twist()))) return false;
  if (!same(compose(b, b, rep.m), diagonal_power(rep, rep.b_square()))) return false;
  return true;
}

std::vector<int> multiplication_table(const GroupSpec& g) {
  const int n = g.a_order();
  const long long u = g.twist(), c = g.b_square();
  const int size = 2 * n;
  std::vector<int> table(static_cast<size_t>(size) * size);
  for (int x = 0; x < size; ++x) {
    const int i = x % n, j = x / n;
    for (int y = 0; y < size; ++y) {
      const int k = y % n, l = y / n;
      long long e = i + (j ? u * k : k) + (j && l ? c : 0);
      table[static_cast<size_t>(x) * size + y] = static_cast<int>(mod(e, n) + n * ((j + l) % 2));
    }
  }
  return table;
}

}  // namespace noether
