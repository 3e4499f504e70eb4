#include "noether/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "noether/error.hpp"

namespace noether {

namespace {

using Packed = uint64_t;

constexpr int kBits = 8;
constexpr int kMaxExponent = (1 << kBits) - 1;

long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

// var 0 in the most significant byte, so numeric order is lexicographic order
Packed pack(const Exponents& e) {
  Packed p = 0;
  for (int x : e) {
    if (x < 0 || x > kMaxExponent) throw ResourceError("exponent out of range");
    p = (p << kBits) | static_cast<Packed>(x);
  }
  return p;
}

Exponents unpack(Packed p, int vars) {
  Exponents e(vars);
  for (int i = vars - 1; i >= 0; --i) {
    e[i] = static_cast<int>(p & kMaxExponent);
    p >>= kBits;
  }
  return e;
}

int exponent_at(Packed p, int i, int vars) {
  return static_cast<int>((p >> (kBits * (vars - 1 - i))) & kMaxExponent);
}

Packed unit(int i, int vars) { return Packed{1} << (kBits * (vars - 1 - i)); }

// zeta_rep^e as a field element, where zeta_rep has order rep.m
uint32_t root(const FieldSpec& f, const MonomialRep& rep, long long e) {
  return f.zeta_pow(mod(e, rep.m) * (f.m / rep.m));
}

void check_field(const MonomialRep& rep, const FieldSpec& f) {
  if (f.m % rep.m != 0) {
    throw FieldError("field has roots of unity of order " + std::to_string(f.m) + ", need " +
                     std::to_string(rep.m));
  }
  if (rep.group.order() % f.p == 0) throw FieldError("field characteristic divides |G|");
}

// b(x^e) = zeta^scalar * x^image
std::pair<Packed, long long> b_image(const MonomialRep& rep, Packed p) {
  const int v = rep.num_vars();
  Packed img = 0;
  long long sc = 0;
  for (int i = 0; i < v; ++i) {
    const int e = exponent_at(p, i, v);
    if (!e) continue;
    img += static_cast<Packed>(e) * unit(rep.perm[i], v);
    sc += static_cast<long long>(e) * rep.scalars[i];
  }
  return {img, mod(sc, rep.m)};
}

long long count_monomials(int vars, int d) {
  // C(d + vars - 1, vars - 1), saturating
  long long c = 1;
  for (int i = 1; i < vars; ++i) {
    c = c * (d + i) / i;
    if (c > (1LL << 40)) return c;
  }
  return c;
}

// Degree-d monomials of weight zero, lexicographically descending.
std::vector<Packed> invariant_monomials(const MonomialRep& rep, int d, long long cap) {
  if (d < 0) throw DomainError("negative degree");
  if (d > kMaxExponent) throw ResourceError("degree " + std::to_string(d) + " exceeds the supported maximum");
  const int v = rep.num_vars();
  const int n = std::max(1, rep.a.order());
  if (count_monomials(v, d) > 64 * cap) {
    throw ResourceError("too many degree-" + std::to_string(d) + " monomials");
  }
  std::vector<Packed> out;
  std::vector<int> e(v, 0);
  std::function<void(int, int, long long)> rec = [&](int i, int left, long long w) {
    if (i == v - 1) {
      e[i] = left;
      if (mod(w + static_cast<long long>(left) * rep.weights[i], n) == 0) {
        out.push_back(pack(e));
        if (static_cast<long long>(out.size()) > cap) {
          throw ResourceError("more than " + std::to_string(cap) + " invariant monomials in degree " +
                              std::to_string(d));
        }
      }
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[i] = x;
      rec(i + 1, left - x, w + static_cast<long long>(x) * rep.weights[i]);
    }
  };
  if (v == 0) {
    if (d == 0) out.push_back(0);
    return out;
  }
  rec(0, d, 0);
  return out;
}

struct Term {
  Packed mono;
  uint32_t coef;
};

}  // namespace

GroupElement weight(const MonomialRep& rep, const Exponents& m) {
  if (static_cast<int>(m.size()) != rep.num_vars()) throw DomainError("monomial has the wrong number of variables");
  long long w = 0;
  for (int i = 0; i < rep.num_vars(); ++i) w += static_cast<long long>(m[i]) * rep.weights[i];
  return rep.a.reduce({static_cast<int>(mod(w, std::max(1, rep.a.order())))});
}

std::vector<Exponents> a_invariant_monomials(const MonomialRep& rep, int d, long long cap) {
  std::vector<Exponents> out;
  for (Packed p : invariant_monomials(rep, d, cap)) out.push_back(unpack(p, rep.num_vars()));
  return out;
}

Polynomial apply_a(const MonomialRep& rep, const FieldSpec& field, const Polynomial& f) {
  check_field(rep, field);
  const long long step = rep.m / std::max(1, rep.a.order());
  Polynomial out(field);
  for (const auto& [e, c] : f.terms()) {
    long long w = 0;
    for (int i = 0; i < rep.num_vars(); ++i) w += static_cast<long long>(e[i]) * rep.weights[i];
    out.add_term(e, field.mul(c, root(field, rep, step * w)));
  }
  return out;
}

Polynomial apply_b(const MonomialRep& rep, const FieldSpec& field, const Polynomial& f) {
  check_field(rep, field);
  Polynomial out(field);
  for (const auto& [e, c] : f.terms()) {
    Exponents img(e.size(), 0);
    long long sc = 0;
    for (size_t i = 0; i < e.size(); ++i) {
      img[rep.perm[i]] += e[i];
      sc += static_cast<long long>(e[i]) * rep.scalars[i];
    }
    out.add_term(img, field.mul(c, root(field, rep, sc)));
  }
  return out;
}

Polynomial transfer(const MonomialRep& rep, const FieldSpec& field, const Exponents& m) {
  return relative_transfer(rep, field, m, 0);
}

Polynomial relative_transfer(const MonomialRep& rep, const FieldSpec& field, const Exponents& m,
                             int b_sign) {
  if (b_sign != 0 && b_sign != 1) throw DomainError("b_sign must be 0 or 1");
  if (weight(rep, m) != rep.a.zero()) throw DomainError("transfer of a monomial that is not A-invariant");
  Polynomial f = Polynomial::monomial(field, m);
  Polynomial fb = apply_b(rep, field, f);
  return b_sign ? f - fb : f + fb;
}

// ---------------------------------------------------------------------------
// InvariantEngine

struct InvariantEngine::Degree {
  std::vector<Packed> monomials;  // all A-invariant, descending
  std::unordered_map<Packed, int> mono_index;
  // live orbits, one column each
  std::vector<std::vector<Term>> basis;  // B_o: rep first
  std::unordered_map<Packed, int> col_of;  // rep -> column
  // tau(monomial) = tau_coef * B_column, or zero when column < 0
  std::vector<int> tau_col;
  std::vector<uint32_t> tau_coef;

  int cols() const { return static_cast<int>(basis.size()); }
};

struct InvariantEngine::Impl {
  std::map<int, Degree> degrees;
  std::map<std::pair<int, int>, RowSpace> power;
  std::map<std::pair<int, int>, RowSpace> module;
  std::map<int, std::vector<int>> gens;
};

InvariantEngine::InvariantEngine(MonomialRep rep, FieldSpec field, long long cap)
    : rep_(std::move(rep)), field_(field), cap_(cap), impl_(std::make_unique<Impl>()) {
  check_field(rep_, field_);
  if (field_.p == 2) throw FieldError("characteristic 2 is excluded");
}

InvariantEngine::~InvariantEngine() = default;

InvariantEngine::Degree& InvariantEngine::degree_data(int d) {
  auto it = impl_->degrees.find(d);
  if (it != impl_->degrees.end()) return it->second;
  Degree deg;
  deg.monomials = invariant_monomials(rep_, d, cap_);
  const size_t count = deg.monomials.size();
  deg.tau_col.assign(count, -2);
  deg.tau_coef.assign(count, 0);
  for (size_t i = 0; i < count; ++i) deg.mono_index.emplace(deg.monomials[i], static_cast<int>(i));
  for (size_t i = 0; i < count; ++i) {
    if (deg.tau_col[i] != -2) continue;
    const Packed p = deg.monomials[i];
    auto [img, sc] = b_image(rep_, p);
    const uint32_t lambda = root(field_, rep_, sc);
    if (img == p) {
      if (lambda != 1) {
        if (lambda != field_.p - 1) throw ConsistencyError("b^2 does not fix an A-invariant monomial");
        deg.tau_col[i] = -1;  // m^b = -m
        continue;
      }
      deg.tau_col[i] = deg.cols();
      deg.tau_coef[i] = 2;
      deg.col_of.emplace(p, deg.cols());
      deg.basis.push_back({{p, 1}});
      continue;
    }
    auto other = deg.mono_index.find(img);
    if (other == deg.mono_index.end()) throw ConsistencyError("b does not preserve A-invariant monomials");
    const int j = other->second;
    deg.tau_col[i] = deg.cols();
    deg.tau_coef[i] = 1;
    deg.tau_col[j] = deg.cols();
    deg.tau_coef[j] = field_.inv(lambda);
    deg.col_of.emplace(p, deg.cols());
    deg.basis.push_back({{p, 1}, {img, lambda}});
  }
  return impl_->degrees.emplace(d, std::move(deg)).first->second;
}

int InvariantEngine::dim_invariants(int d) { return degree_data(d).cols(); }

GradedSlice InvariantEngine::invariant_basis(int d) {
  Degree& deg = degree_data(d);
  GradedSlice s;
  s.degree = d;
  s.power = 0;
  for (const auto& b : deg.basis) s.columns.push_back(unpack(b[0].mono, rep_.num_vars()));
  for (int c = 0; c < deg.cols(); ++c) {
    Row r(deg.cols(), 0);
    r[c] = 1;
    s.rows.push_back(std::move(r));
    s.pivots.push_back(c);
  }
  return s;
}

const RowSpace& InvariantEngine::power_space(int j, int d) {
  if (j < 1) throw DomainError("power must be >= 1");
  auto key = std::make_pair(j, d);
  auto it = impl_->power.find(key);
  if (it != impl_->power.end()) return it->second;
  Degree& deg = degree_data(d);
  RowSpace space(field_, deg.cols());
  if (d >= j) {
    if (j == 1) {
      for (int c = 0; c < deg.cols(); ++c) {
        Row r(deg.cols(), 0);
        r[c] = 1;
        space.insert(std::move(r));
      }
    } else {
      for (int e = 1; e < d && !space.full(); ++e) {
        const std::vector<int> gens = generator_columns(e);
        if (gens.empty()) continue;
        const RowSpace& lower = power_space(j - 1, d - e);
        if (lower.rank() == 0) continue;
        const Degree& ge = degree_data(e);
        const Degree& le = degree_data(d - e);
        for (int g : gens) {
          // B_g * B_o for every column o of the lower degree
          std::vector<std::vector<std::pair<int, uint32_t>>> prod(le.cols());
          for (int o = 0; o < le.cols(); ++o) {
            std::map<int, uint32_t> acc;
            for (const Term& tg : ge.basis[g]) {
              for (const Term& to : le.basis[o]) {
                auto c = deg.col_of.find(tg.mono + to.mono);
                if (c == deg.col_of.end()) continue;
                auto& slot = acc[c->second];
                slot = field_.add(slot, field_.mul(tg.coef, to.coef));
              }
            }
            for (auto [c, v] : acc) {
              if (v) prod[o].emplace_back(c, v);
            }
          }
          for (const Row& lr : lower.rows()) {
            if (space.full()) break;
            Row r(deg.cols(), 0);
            for (int o = 0; o < le.cols(); ++o) {
              if (!lr[o]) continue;
              for (auto [c, v] : prod[o]) r[c] = field_.add(r[c], field_.mul(lr[o], v));
            }
            space.insert(std::move(r));
          }
        }
      }
    }
  }
  return impl_->power.emplace(key, std::move(space)).first->second;
}

std::vector<int> InvariantEngine::generator_columns(int d) {
  if (d < 1) return {};
  auto it = impl_->gens.find(d);
  if (it != impl_->gens.end()) return it->second;
  std::vector<int> g = power_space(2, d).non_pivots();
  impl_->gens.emplace(d, g);
  return g;
}

std::vector<Exponents> InvariantEngine::generators(int d) {
  std::vector<Exponents> out;
  for (int c : generator_columns(d)) out.push_back(unpack(degree_data(d).basis[c][0].mono, rep_.num_vars()));
  return out;
}

GradedSlice InvariantEngine::power_ideal_basis(int j, int d) {
  const RowSpace& space = power_space(j, d);
  const Degree& deg = degree_data(d);
  GradedSlice s;
  s.degree = d;
  s.power = j;
  for (const auto& b : deg.basis) s.columns.push_back(unpack(b[0].mono, rep_.num_vars()));
  s.rows = space.rows();
  s.pivots = space.pivots();
  return s;
}

int InvariantEngine::power_ideal_dim(int j, int d) { return power_space(j, d).rank(); }

bool InvariantEngine::check_membership(const Exponents& m, int j) {
  if (j < 1) throw DomainError("power must be >= 1");
  if (weight(rep_, m) != rep_.a.zero()) throw DomainError("monomial is not A-invariant");
  const int d = degree(m);
  if (d == 0) return false;
  Degree& deg = degree_data(d);
  const int i = deg.mono_index.at(pack(m));
  if (deg.tau_col[i] < 0) return true;
  Row r(deg.cols(), 0);
  r[deg.tau_col[i]] = deg.tau_coef[i];
  return power_space(j, d).contains(std::move(r));
}

Polynomial InvariantEngine::basis_polynomial(int d, int column) {
  const Degree& deg = degree_data(d);
  if (column < 0 || column >= deg.cols()) throw DomainError("column out of range");
  Polynomial p(field_);
  for (const Term& t : deg.basis[column]) p.add_term(unpack(t.mono, rep_.num_vars()), t.coef);
  return p;
}

const RowSpace& InvariantEngine::module_space(int t, int d) {
  auto key = std::make_pair(t, d);
  auto it = impl_->module.find(key);
  if (it != impl_->module.end()) return it->second;
  Degree& deg = degree_data(d);
  const int cols = static_cast<int>(deg.monomials.size());
  RowSpace space(field_, cols);
  if (t == 0) {
    if (d >= 1) {
      for (int c = 0; c < cols; ++c) {
        Row r(cols, 0);
        r[c] = 1;
        space.insert(std::move(r));
      }
    }
  } else {
    for (int e = 1; e < d && !space.full(); ++e) {
      const std::vector<int> gens = generator_columns(e);
      if (gens.empty()) continue;
      const RowSpace& lower = module_space(t - 1, d - e);
      const Degree& ge = degree_data(e);
      const Degree& le = degree_data(d - e);
      for (int g : gens) {
        for (const Row& lr : lower.rows()) {
          if (space.full()) break;
          Row r(cols, 0);
          for (size_t o = 0; o < lr.size(); ++o) {
            if (!lr[o]) continue;
            for (const Term& tg : ge.basis[g]) {
              const int c = deg.mono_index.at(tg.mono + le.monomials[o]);
              r[c] = field_.add(r[c], field_.mul(lr[o], tg.coef));
            }
          }
          space.insert(std::move(r));
        }
      }
    }
  }
  return impl_->module.emplace(key, std::move(space)).first->second;
}

int InvariantEngine::module_power_dim(int k, int d) { return module_space(k, d).rank(); }

// ---------------------------------------------------------------------------
// beta computations

std::vector<FieldSpec> default_fields(const GroupSpec& g, const std::vector<uint32_t>& primes) {
  const int m = root_order(g);
  std::vector<uint32_t> ps = primes.empty() ? smallest_primes(m, g.order(), 2) : primes;
  std::vector<FieldSpec> out;
  for (uint32_t p : ps) {
    if (p == 2) throw FieldError("characteristic 2 is excluded");
    out.push_back(make_field(p, m, g.order()));
  }
  std::set<uint32_t> distinct(ps.begin(), ps.end());
  if (distinct.size() != ps.size()) throw FieldError("primes must be distinct");
  return out;
}

namespace {

struct Scan {
  int beta1 = 0;
  int beta = 0;
  int bound = 0;
  std::vector<DimRow> dims1;
  std::vector<DimRow> dims;
  Exponents witness;
};

int top_degree(const std::vector<DimRow>& rows) {
  int top = 0;
  for (const auto& r : rows) {
    if (r.dim_r > r.dim_power) top = r.degree;
  }
  return top;
}

Scan scan_one(const MonomialRep& rep, int k, const FieldSpec& field, long long cap) {
  InvariantEngine eng(rep, field, cap);
  Scan s;
  const int order = static_cast<int>(rep.group.order());
  for (int d = 1; d <= order; ++d) s.dims1.push_back({d, eng.dim_invariants(d), eng.power_ideal_dim(2, d)});
  s.beta1 = top_degree(s.dims1);
  s.bound = k * s.beta1;
  if (k == 1) {
    s.dims.assign(s.dims1.begin(), s.dims1.begin() + s.bound);
  } else {
    for (int d = 1; d <= s.bound; ++d) {
      s.dims.push_back({d, eng.dim_invariants(d), eng.power_ideal_dim(k + 1, d)});
    }
  }
  s.beta = top_degree(s.dims);
  if (s.beta == 0) throw ConsistencyError("no invariants found below the scan bound");
  // witness: first orbit representative, in descending order, whose
  // transfer is outside (R_+^{k+1})_beta
  const GradedSlice slice = eng.invariant_basis(s.beta);
  for (const Exponents& m : slice.columns) {
    if (!eng.check_membership(m, k + 1)) {
      s.witness = m;
      break;
    }
  }
  if (s.witness.empty()) throw ConsistencyError("dimension gap without a witness monomial");
  // re-check the witness through the polynomial-level transfer
  const Polynomial t = transfer(rep, field, s.witness);
  const GradedSlice pw = eng.power_ideal_basis(k + 1, s.beta);
  Row r(pw.columns.size(), 0);
  for (size_t c = 0; c < pw.columns.size(); ++c) r[c] = t.coefficient(pw.columns[c]);
  RowSpace check(field, static_cast<int>(pw.columns.size()));
  for (const Row& row : pw.rows) check.insert(row);
  if (t.is_zero() || check.contains(r)) throw ConsistencyError("witness transfer lies in the power ideal");
  return s;
}

bool same_dims(const std::vector<DimRow>& a, const std::vector<DimRow>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].degree != b[i].degree || a[i].dim_r != b[i].dim_r || a[i].dim_power != b[i].dim_power) {
      return false;
    }
  }
  return true;
}

std::string prime_pair(const std::vector<FieldSpec>& fields, size_t i) {
  return "p=" + std::to_string(fields[0].p) + " and p=" + std::to_string(fields[i].p);
}

}  // namespace

BetaReport beta_k(const MonomialRep& rep, int k, const std::vector<FieldSpec>& fields, long long cap) {
  if (k < 1) throw InvalidSpecError("k must be >= 1");
  if (fields.empty()) throw FieldError("no fields given");
  std::vector<Scan> scans;
  for (const auto& f : fields) scans.push_back(scan_one(rep, k, f, cap));
  for (size_t i = 1; i < scans.size(); ++i) {
    if (!same_dims(scans[0].dims1, scans[i].dims1) || !same_dims(scans[0].dims, scans[i].dims)) {
      throw ConsistencyError("dimension tables differ between " + prime_pair(fields, i));
    }
    if (scans[0].witness != scans[i].witness) {
      throw ConsistencyError("witness monomials differ between " + prime_pair(fields, i));
    }
  }
  BetaReport out;
  out.group = rep.group;
  out.module = rep.module;
  out.k = k;
  for (const auto& f : fields) out.primes.push_back(f.p);
  out.beta = scans[0].beta;
  out.beta1 = scans[0].beta1;
  out.bound = scans[0].bound;
  out.witness = scans[0].witness;
  out.dims = scans[0].dims;
  return out;
}

int beta_k_module(const MonomialRep& rep, int k, const std::vector<FieldSpec>& fields) {
  if (k < 1) throw InvalidSpecError("k must be >= 1");
  if (fields.empty()) throw FieldError("no fields given");
  const int bound = (2 * k + 1) * std::max(1, rep.a.order());
  std::vector<std::vector<int>> gaps;
  for (const auto& f : fields) {
    InvariantEngine eng(rep, f);
    std::vector<int> gap;
    for (int d = 1; d <= bound; ++d) {
      const int total = static_cast<int>(a_invariant_monomials(rep, d).size());
      gap.push_back(total - eng.module_power_dim(k, d));
    }
    gaps.push_back(std::move(gap));
  }
  for (size_t i = 1; i < gaps.size(); ++i) {
    if (gaps[i] != gaps[0]) throw ConsistencyError("module dimensions differ between " + prime_pair(fields, i));
  }
  int top = 0;
  for (int d = 1; d <= bound; ++d) {
    if (gaps[0][d - 1] > 0) top = d;
  }
  return top;
}

ZSequence weight_sequence(const MonomialRep& rep, const Exponents& m) {
  std::vector<GroupElement> entries;
  for (int i = 0; i < rep.num_vars(); ++i) {
    for (int t = 0; t < m[i]; ++t) entries.push_back(rep.a.reduce({rep.weights[i]}));
  }
  return ZSequence(rep.a, std::move(entries));
}

int beta_k_abelian(const MonomialRep& rep, int k) {
  if (k < 1) throw InvalidSpecError("k must be >= 1");
  const int bound = k * std::max(1, rep.a.order());
  for (int d = bound; d >= 1; --d) {
    for (const Exponents& m : a_invariant_monomials(rep, d)) {
      if (max_factorization(weight_sequence(rep, m)) <= k) return d;
    }
  }
  return 0;
}

std::vector<ZSequence> extremal_sequences(const MonomialRep& rep, int k,
                                          const std::vector<FieldSpec>& fields, long long cap) {
  const BetaReport report = beta_k(rep, k, fields, cap);
  std::vector<std::set<std::vector<int>>> per_field;
  std::map<std::vector<int>, ZSequence> forms;
  for (const auto& f : fields) {
    InvariantEngine eng(rep, f, cap);
    std::set<std::vector<int>> found;
    for (const Exponents& m : a_invariant_monomials(rep, report.beta, cap)) {
      if (eng.check_membership(m, k + 1)) continue;
      ZSequence c = canonical_form(weight_sequence(rep, m));
      found.insert(c.indices());
      forms.emplace(c.indices(), c);
    }
    per_field.push_back(std::move(found));
  }
  for (size_t i = 1; i < per_field.size(); ++i) {
    if (per_field[i] != per_field[0]) {
      throw ConsistencyError("extremal sequences differ between " + prime_pair(fields, i));
    }
  }
  std::vector<ZSequence> out;
  for (const auto& key : per_field[0]) out.push_back(forms.at(key));
  return out;
}

std::vector<ModuleSpec> battery_modules(const GroupSpec& g, int battery_size) {
  if (battery_size < 1 || battery_size > 8) throw InvalidSpecError("battery size must be in 1..8");
  const std::vector<Constituent> irr = irreducibles(g);
  std::vector<ModuleSpec> out;
  std::set<std::vector<Constituent>> seen;
  auto add = [&](std::vector<Constituent> cs) {
    ModuleSpec m{cs};
    if (m.dimension() > battery_size) return;
    std::sort(cs.begin(), cs.end());
    if (seen.insert(cs).second) out.push_back(std::move(m));
  };
  for (const auto& c : irr) add({c});
  for (size_t i = 0; i < irr.size(); ++i) {
    for (size_t j = i; j < irr.size(); ++j) add({irr[i], irr[j]});
  }
  if (!g.is_cyclic()) {
    const ModuleSpec w = witness_module(g, 1);
    for (const auto& c : irr) {
      auto cs = w.constituents;
      cs.push_back(c);
      add(cs);
    }
  }
  return out;
}

VerifyRecord verify_group(const GroupSpec& g, int k, int battery_size, const std::vector<uint32_t>& primes,
                          const Progress& progress, long long cap) {
  const std::vector<FieldSpec> fields = default_fields(g, primes);
  VerifyRecord rec;
  rec.group = g;
  rec.k = k;
  for (const auto& f : fields) rec.primes.push_back(f.p);
  rec.formula = formula_beta(g, k);
  if (progress) progress(g.name() + " k=" + std::to_string(k) + ": witness");
  rec.witness = beta_k(build_rep(g, witness_module(g, k), fields[0]), k, fields, cap);
  rec.lower_ok = rec.witness.beta == rec.formula;
  rec.upper_ok = rec.witness.beta <= rec.formula;
  const std::vector<ModuleSpec> mods = battery_modules(g, battery_size);
  for (size_t i = 0; i < mods.size(); ++i) {
    if (progress) {
      progress(g.name() + " k=" + std::to_string(k) + ": battery " + std::to_string(i + 1) + "/" +
               std::to_string(mods.size()) + " " + mods[i].describe());
    }
    const BetaReport r = beta_k(build_rep(g, mods[i], fields[0]), k, fields, cap);
    rec.battery.push_back({mods[i], r.beta});
    if (r.beta > rec.formula) rec.upper_ok = false;
  }
  return rec;
}

}  // namespace noether
