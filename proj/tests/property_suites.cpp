#include "property_suites.hpp"

#include <algorithm>
#include <random>

#include "noether/invariants.hpp"

namespace noether::props {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

void fail(SuiteResult& r, const std::string& what) {
  if (r.violations++ == 0) r.first_failure = what;
}

// Shortest non-empty zero-sum subsequence, 0 if none.
int shortest_zero_sum(const std::vector<int>& s, int n) {
  const int inf = 1 << 20;
  std::vector<int> best(n, inf);
  best[0] = 0;
  int shortest = inf;
  for (int x : s) {
    std::vector<int> next = best;
    for (int v = 0; v < n; ++v) {
      if (best[v] == inf) continue;
      const int w = (v + x) % n;
      if (w == 0) shortest = std::min(shortest, best[v] + 1);
      else next[w] = std::min(next[w], best[v] + 1);
    }
    best = next;
  }
  return shortest == inf ? 0 : shortest;
}

GroupSpec dihedral(int n) {
  switch (n) {
    case 4: return make_spec(1, 1, Family::Dihedral, 3);
    case 6: return make_spec(1, 3, Family::Z2xZ2n1, 2);
    case 8: return make_spec(1, 1, Family::Dihedral, 4);
    default: return make_spec(1, n, Family::Dihedral, 1);
  }
}

Exponents random_monomial(std::mt19937_64& rng, int vars, int max_deg) {
  Exponents e(vars, 0);
  const int d = uniform(rng, 0, max_deg);
  for (int i = 0; i < d; ++i) e[uniform(rng, 0, vars - 1)]++;
  return e;
}

Exponents with_weight(std::mt19937_64& rng, const MonomialRep& rep, const GroupElement& w, const Exponents& fallback) {
  for (int tries = 0; tries < 50; ++tries) {
    Exponents e = random_monomial(rng, rep.num_vars(), 3);
    if (weight(rep, e) == w) return e;
  }
  return fallback;
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

// b(x^e) = c * x^img
std::pair<Exponents, uint32_t> b_monomial(const MonomialRep& rep, const FieldSpec& f, const Exponents& e) {
  Polynomial p = apply_b(rep, f, Polynomial::monomial(f, e));
  const auto& [img, c] = *p.terms().begin();
  return {img, c};
}

}  // namespace

SuiteResult subset_sums_prime(uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  const int primes[] = {2, 3, 5, 7, 11, 13, 17};
  SuiteResult r;
  for (; r.cases < cases; ++r.cases) {
    const int p = primes[uniform(rng, 0, 6)];
    const int len = uniform(rng, 0, std::min(2 * p, 20));
    std::vector<int> idx;
    for (int i = 0; i < len; ++i) idx.push_back(uniform(rng, 1, p - 1));
    ZSequence s = ZSequence::from_indices(make_group({p}), idx);
    const int sigma = static_cast<int>(sigma_set(s).size());
    if (sigma < std::min(p, len + 1)) fail(r, s.to_string() + " over Z" + std::to_string(p));
  }
  return r;
}

SuiteResult subset_sums_zero_sum_free(uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  for (; r.cases < cases; ++r.cases) {
    const int n = uniform(rng, 2, 24);
    auto g = make_group({n});
    // grow a random zero-sum free sequence
    std::vector<int> idx;
    const int target = uniform(rng, 1, n - 1);
    for (int tries = 0; tries < 4 * n && static_cast<int>(idx.size()) < target; ++tries) {
      std::vector<int> next = idx;
      next.push_back(uniform(rng, 1, n - 1));
      std::sort(next.begin(), next.end());
      if (is_zero_sum_free(ZSequence::from_indices(g, next))) idx = next;
    }
    if (idx.empty()) idx.push_back(1);
    ZSequence s = ZSequence::from_indices(g, idx);
    const int d = s.size(), h = s.max_multiplicity();
    if (static_cast<int>(sigma_set(s).size()) < 2 * d - h + 1) fail(r, s.to_string() + " over Z" + std::to_string(n));
  }
  return r;
}

SuiteResult corner_extraction(uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  const std::vector<std::vector<int>> groups = {{3}, {4}, {5}, {6}, {7}, {8}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}};
  SuiteResult r;
  while (r.cases < cases) {
    auto g = make_group(groups[uniform(rng, 0, static_cast<int>(groups.size()) - 1)]);
    const int len = uniform(rng, 4, 10);
    std::vector<int> idx;
    for (int i = 0; i < len; ++i) idx.push_back(uniform(rng, 1, g.order() - 1));
    ZSequence s = ZSequence::from_indices(g, idx);
    const int d = max_zsf_length(s);
    if (d > len - 3) continue;
    ++r.cases;
    ZeroCorner c = extract_zero_corner(s);
    auto best = zero_corner_min_diameter(s);
    const bool ok = is_valid_corner(c) && s.contains(c.whole()) && c.diameter <= d + 1 && best &&
                    best->diameter <= c.diameter;
    if (!ok) fail(r, s.to_string() + " over " + g.to_string());
  }
  return r;
}

SuiteResult short_zero_sum_or_repeat(uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  for (; r.cases < cases; ++r.cases) {
    const int n = uniform(rng, 2, 20);
    const int len = uniform(rng, 1, 2 * n);
    std::vector<int> idx;
    // bias towards few distinct values, where the multiplicity branch matters
    const int distinct = uniform(rng, 1, n);
    std::vector<int> pool;
    for (int i = 0; i < distinct; ++i) pool.push_back(uniform(rng, 0, n - 1));
    for (int i = 0; i < len; ++i) idx.push_back(pool[uniform(rng, 0, distinct - 1)]);
    ZSequence s = ZSequence::from_indices(make_group({n}), idx);
    const int shortest = shortest_zero_sum(idx, n);
    const bool short_zs = shortest > 0 && shortest <= (n + 1) / 2;
    const bool repeat = s.max_multiplicity() >= len - n / 2;
    if (!short_zs && !repeat) fail(r, s.to_string() + " over Z" + std::to_string(n));
  }
  return r;
}

SuiteResult dihedral_transfer_identity(uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  const int orders[] = {3, 4, 5, 6, 7, 8};
  for (; r.cases < cases; ++r.cases) {
    const GroupSpec g = dihedral(orders[uniform(rng, 0, 5)]);
    const auto irr = irreducibles(g);
    ModuleSpec m;
    const int parts = uniform(rng, 1, 3);
    for (int i = 0; i < parts; ++i) m.constituents.push_back(irr[uniform(rng, 0, static_cast<int>(irr.size()) - 1)]);
    const auto fields = default_fields(g);
    const MonomialRep rep = build_rep(g, m, fields[0]);
    const int v = rep.num_vars();
    const Exponents e = random_monomial(rng, v, 3);
    const GroupElement target = rep.a.neg(weight(rep, e));
    const Exponents eb = b_monomial(rep, fields[0], e).first;  // weight -w(e)
    const Exponents f = with_weight(rng, rep, target, eb);
    const Exponents h = with_weight(rng, rep, target, eb);
    const Exponents rr = random_monomial(rng, v, 2);
    for (const FieldSpec& fld : fields) {
      auto mono = [&](const Exponents& x) { return Polynomial::monomial(fld, x); };
      const auto [hb, ch] = b_monomial(rep, fld, h);
      const auto [ebm, ce] = b_monomial(rep, fld, e);
      const Polynomial lhs = mono(add(add(e, f), add(h, rr))).scaled(2);
      const Polynomial rhs = transfer(rep, fld, add(e, f)) * mono(add(h, rr)) +
                             transfer(rep, fld, add(e, h)) * mono(add(f, rr)) -
                             transfer(rep, fld, add(f, hb)).scaled(fld.mul(ch, ce)) * mono(add(ebm, rr));
      if (!(lhs == rhs)) {
        fail(r, g.name() + " " + m.describe() + " p=" + std::to_string(fld.p));
      }
    }
  }
  return r;
}

}  // namespace noether::props
