#include "noether/abelian.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "noether/error.hpp"

namespace noether {

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  for (int n : factors_) {
    if (n < 2) {
      throw InvalidSpecError("cyclic factor " + std::to_string(n) + " must be >= 2");
    }
  }
  strides_.assign(factors_.size(), 1);
  long long order = 1;
  for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
    strides_[i] = static_cast<int>(order);
    order *= factors_[i];
    if (order > (1LL << 30)) throw ResourceError("abelian group order too large");
    exponent_ = std::lcm(exponent_, factors_[i]);
  }
  order_ = static_cast<int>(order);
}

AbelianGroup make_group(const std::vector<int>& factors) { return AbelianGroup(factors); }

GroupElement AbelianGroup::zero() const {
  return GroupElement(std::vector<int>(factors_.size(), 0));
}

GroupElement AbelianGroup::generator(int i) const {
  GroupElement g = zero();
  g.coords.at(i) = 1;
  return g;
}

bool AbelianGroup::contains(const GroupElement& x) const {
  if (x.coords.size() != factors_.size()) return false;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (x.coords[i] < 0 || x.coords[i] >= factors_[i]) return false;
  }
  return true;
}

GroupElement AbelianGroup::reduce(std::vector<int> coords) const {
  if (coords.size() != factors_.size()) {
    throw InvalidSpecError("element has " + std::to_string(coords.size()) +
                           " coordinates, group " + to_string() + " needs " +
                           std::to_string(factors_.size()));
  }
  for (size_t i = 0; i < coords.size(); ++i) {
    coords[i] %= factors_[i];
    if (coords[i] < 0) coords[i] += factors_[i];
  }
  return GroupElement(std::move(coords));
}

GroupElement AbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
  GroupElement r = x;
  for (size_t i = 0; i < factors_.size(); ++i) {
    r.coords[i] += y.coords[i];
    if (r.coords[i] >= factors_[i]) r.coords[i] -= factors_[i];
  }
  return r;
}

GroupElement AbelianGroup::neg(const GroupElement& x) const {
  GroupElement r = x;
  for (size_t i = 0; i < factors_.size(); ++i) {
    r.coords[i] = r.coords[i] == 0 ? 0 : factors_[i] - r.coords[i];
  }
  return r;
}

GroupElement AbelianGroup::sub(const GroupElement& x, const GroupElement& y) const {
  return add(x, neg(y));
}

GroupElement AbelianGroup::scale(long long k, const GroupElement& x) const {
  GroupElement r = x;
  for (size_t i = 0; i < factors_.size(); ++i) {
    long long v = (k % factors_[i]) * x.coords[i] % factors_[i];
    if (v < 0) v += factors_[i];
    r.coords[i] = static_cast<int>(v);
  }
  return r;
}

int AbelianGroup::order_of(const GroupElement& x) const {
  int ord = 1;
  for (size_t i = 0; i < factors_.size(); ++i) {
    int n = factors_[i];
    ord = std::lcm(ord, n / std::gcd(n, x.coords[i]));
  }
  return ord;
}

int AbelianGroup::index(const GroupElement& x) const {
  int idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) idx += x.coords[i] * strides_[i];
  return idx;
}

GroupElement AbelianGroup::element(int index) const {
  GroupElement x = zero();
  for (size_t i = 0; i < factors_.size(); ++i) {
    x.coords[i] = index / strides_[i];
    index %= strides_[i];
  }
  return x;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (int i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

int AbelianGroup::add_index(int x, int y) const {
  int r = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    int a = x / strides_[i], b = y / strides_[i];
    x %= strides_[i];
    y %= strides_[i];
    int c = a + b;
    if (c >= factors_[i]) c -= factors_[i];
    r += c * strides_[i];
  }
  return r;
}

int AbelianGroup::neg_index(int x) const { return index(neg(element(x))); }

int AbelianGroup::pairing(const GroupElement& a, const GroupElement& b) const {
  long long acc = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    acc += static_cast<long long>(a.coords[i]) * b.coords[i] % factors_[i] *
           (exponent_ / factors_[i]);
  }
  return static_cast<int>(acc % exponent_);
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << 'x';
    os << 'Z' << factors_[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Subgroups

namespace {

std::vector<char> close_under_addition(const AbelianGroup& g,
                                       const std::vector<GroupElement>& gens) {
  std::vector<char> member(g.order(), 0);
  std::vector<int> frontier{0};
  member[0] = 1;
  std::vector<int> gen_idx;
  for (const auto& x : gens) gen_idx.push_back(g.index(x));
  while (!frontier.empty()) {
    int cur = frontier.back();
    frontier.pop_back();
    for (int s : gen_idx) {
      int nxt = g.add_index(cur, s);
      if (!member[nxt]) {
        member[nxt] = 1;
        frontier.push_back(nxt);
      }
    }
  }
  return member;
}

}  // namespace

Subgroup::Subgroup(AbelianGroup parent, std::vector<GroupElement> gens,
                   std::vector<char> member)
    : parent_(std::move(parent)), generators_(std::move(gens)), member_(std::move(member)) {
  for (int i = 0; i < parent_.order(); ++i) {
    if (member_[i]) elements_.push_back(parent_.element(i));
  }
}

Subgroup Subgroup::generated(const AbelianGroup& parent,
                             const std::vector<GroupElement>& generators) {
  for (const auto& x : generators) {
    if (!parent.contains(x)) throw InvalidSpecError("generator is not an element of " + parent.to_string());
  }
  return Subgroup(parent, generators, close_under_addition(parent, generators));
}

Subgroup Subgroup::from_elements(const AbelianGroup& parent,
                                 const std::vector<GroupElement>& elements) {
  std::vector<char> member(parent.order(), 0);
  for (const auto& x : elements) {
    if (!parent.contains(x)) throw InvalidSpecError("subgroup element outside " + parent.to_string());
    member[parent.index(x)] = 1;
  }
  if (!member[0]) throw InvalidSpecError("subgroup must contain the identity");
  for (int i = 0; i < parent.order(); ++i) {
    if (!member[i]) continue;
    if (!member[parent.neg_index(i)]) throw InvalidSpecError("element set is not closed under negation");
    for (int j = 0; j < parent.order(); ++j) {
      if (member[j] && !member[parent.add_index(i, j)]) {
        throw InvalidSpecError("element set is not closed under addition");
      }
    }
  }
  return Subgroup(parent, elements, std::move(member));
}

bool Subgroup::contains(const GroupElement& x) const {
  return parent_.contains(x) && member_[parent_.index(x)] != 0;
}

// ---------------------------------------------------------------------------
// Standard form of an abstract finite abelian group

namespace {

struct AbstractGroup {
  int order;
  std::function<int(int, int)> add;  // on ids 0..order-1, id 0 is the identity
};

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<int> element_orders(const AbstractGroup& g) {
  std::vector<int> ord(g.order, 0);
  for (int x = 0; x < g.order; ++x) {
    int acc = x, k = 1;
    while (acc != 0) {
      acc = g.add(acc, x);
      ++k;
    }
    ord[x] = k;
  }
  return ord;
}

// Invariant factors, ascending with n_1 | n_2 | ... | n_t.
std::vector<int> invariant_factors(const AbstractGroup& g, const std::vector<int>& ord) {
  std::vector<std::vector<int>> parts_per_prime;  // exponents, descending
  int max_parts = 0;
  std::vector<int> primes = prime_factors(g.order);
  for (int p : primes) {
    // c_j = #{x : p^j x = 0}; the number of p-parts of size >= j is log_p(c_j/c_{j-1}).
    std::vector<int> ge;  // ge[j-1] = number of parts with exponent >= j
    long long prev = 1, pj = 1;
    while (true) {
      pj *= p;
      long long cnt = 0;
      for (int x = 0; x < g.order; ++x) {
        if (pj % ord[x] == 0) ++cnt;
      }
      if (cnt == prev) break;
      long long ratio = cnt / prev;
      int parts = 0;
      while (ratio > 1) {
        ratio /= p;
        ++parts;
      }
      ge.push_back(parts);
      prev = cnt;
    }
    std::vector<int> exps;
    int nparts = ge.empty() ? 0 : ge[0];
    for (int i = 0; i < nparts; ++i) {
      int e = 0;
      while (e < static_cast<int>(ge.size()) && ge[e] > i) ++e;
      exps.push_back(e);
    }
    max_parts = std::max(max_parts, nparts);
    parts_per_prime.push_back(exps);
  }
  std::vector<int> factors(max_parts, 1);
  for (size_t pi = 0; pi < primes.size(); ++pi) {
    const auto& exps = parts_per_prime[pi];
    for (size_t i = 0; i < exps.size(); ++i) {
      // largest exponent goes to the last (largest) factor
      int slot = max_parts - 1 - static_cast<int>(i);
      for (int e = 0; e < exps[i]; ++e) factors[slot] *= primes[pi];
    }
  }
  return factors;
}

// Returns, for each standard element index of AbelianGroup(factors), the
// abstract id it maps to under an explicit isomorphism.
std::vector<int> standard_isomorphism(const AbstractGroup& g, const std::vector<int>& ord,
                                      const std::vector<int>& factors) {
  const int t = static_cast<int>(factors.size());
  std::vector<int> gens(t, -1);
  std::function<bool(int, const std::vector<char>&)> place =
      [&](int i, const std::vector<char>& member) -> bool {
    if (i < 0) return true;
    for (int x = 0; x < g.order; ++x) {
      if (ord[x] != factors[i]) continue;
      bool disjoint = true;
      for (int acc = x; acc != 0; acc = g.add(acc, x)) {
        if (member[acc]) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      std::vector<char> next(g.order, 0);
      for (int h = 0; h < g.order; ++h) {
        if (!member[h]) continue;
        int acc = h;
        for (int j = 0; j < factors[i]; ++j) {
          next[acc] = 1;
          acc = g.add(acc, x);
        }
      }
      gens[i] = x;
      if (place(i - 1, next)) return true;
    }
    return false;
  };
  std::vector<char> start(g.order, 0);
  start[0] = 1;
  if (!place(t - 1, start)) {
    throw ConsistencyError("failed to construct invariant-factor isomorphism");
  }
  AbelianGroup std_group(factors);
  std::vector<int> map(g.order, 0);
  for (int idx = 0; idx < g.order; ++idx) {
    GroupElement e = std_group.element(idx);
    int acc = 0;
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < e.coords[i]; ++j) acc = g.add(acc, gens[i]);
    }
    map[idx] = acc;
  }
  return map;
}

}  // namespace

QuotientMap quotient(const AbelianGroup& a, const Subgroup& b) {
  if (!(b.parent() == a)) throw InvalidSpecError("subgroup does not belong to " + a.to_string());
  // Cosets numbered by their least element index; coset 0 is B itself.
  std::vector<int> coset(a.order(), -1);
  std::vector<int> rep;
  std::vector<int> b_idx;
  for (const auto& x : b.elements()) b_idx.push_back(a.index(x));
  for (int x = 0; x < a.order(); ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(rep.size());
    rep.push_back(x);
    for (int y : b_idx) coset[a.add_index(x, y)] = id;
  }
  AbstractGroup q{static_cast<int>(rep.size()),
                  [&](int i, int j) { return coset[a.add_index(rep[i], rep[j])]; }};
  auto ord = element_orders(q);
  auto factors = invariant_factors(q, ord);
  auto std_to_coset = standard_isomorphism(q, ord, factors);
  std::vector<int> coset_to_std(q.order);
  for (int s = 0; s < q.order; ++s) coset_to_std[std_to_coset[s]] = s;

  QuotientMap out{a, AbelianGroup(factors), std::vector<int>(a.order())};
  for (int x = 0; x < a.order(); ++x) out.image[x] = coset_to_std[coset[x]];
  return out;
}

SubgroupIso standardize(const Subgroup& b) {
  const AbelianGroup& a = b.parent();
  std::vector<int> ids;  // abstract id -> parent index
  std::vector<int> to_id(a.order(), -1);
  for (const auto& x : b.elements()) {
    to_id[a.index(x)] = static_cast<int>(ids.size());
    ids.push_back(a.index(x));
  }
  AbstractGroup g{static_cast<int>(ids.size()),
                  [&](int i, int j) { return to_id[a.add_index(ids[i], ids[j])]; }};
  auto ord = element_orders(g);
  auto factors = invariant_factors(g, ord);
  auto map = standard_isomorphism(g, ord, factors);
  SubgroupIso iso{AbelianGroup(factors), {}};
  for (int s = 0; s < g.order; ++s) iso.embed.push_back(a.element(ids[map[s]]));
  return iso;
}

GroupElement SubgroupIso::to_standard(const GroupElement& parent_element) const {
  for (size_t s = 0; s < embed.size(); ++s) {
    if (embed[s] == parent_element) return group.element(static_cast<int>(s));
  }
  throw DomainError("element is not in the subgroup");
}

// ---------------------------------------------------------------------------
// Automorphisms

Automorphism::Automorphism(AbelianGroup group, std::vector<GroupElement> images)
    : group_(std::move(group)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != group_.rank()) {
    throw InvalidSpecError("automorphism needs one image per generator");
  }
  for (int i = 0; i < group_.rank(); ++i) {
    if (!group_.contains(images_[i])) throw InvalidSpecError("automorphism image outside the group");
    if (group_.factors()[i] % group_.order_of(images_[i]) != 0) {
      throw DomainError("generator images do not define a homomorphism");
    }
  }
  table_.assign(group_.order(), 0);
  std::vector<char> hit(group_.order(), 0);
  for (int idx = 0; idx < group_.order(); ++idx) {
    GroupElement x = group_.element(idx);
    GroupElement img = group_.zero();
    for (int i = 0; i < group_.rank(); ++i) img = group_.add(img, group_.scale(x.coords[i], images_[i]));
    int j = group_.index(img);
    if (hit[j]) throw DomainError("generator images do not define a bijection");
    hit[j] = 1;
    table_[idx] = j;
  }
}

Automorphism Automorphism::identity(const AbelianGroup& group) {
  std::vector<GroupElement> imgs;
  for (int i = 0; i < group.rank(); ++i) imgs.push_back(group.generator(i));
  return Automorphism(group, imgs);
}

Automorphism Automorphism::multiplication(const AbelianGroup& group, int u) {
  std::vector<GroupElement> imgs;
  for (int i = 0; i < group.rank(); ++i) imgs.push_back(group.scale(u, group.generator(i)));
  return Automorphism(group, imgs);
}

GroupElement Automorphism::apply(const GroupElement& x) const {
  return group_.element(table_[group_.index(x)]);
}

Automorphism Automorphism::compose(const Automorphism& inner) const {
  std::vector<GroupElement> imgs;
  for (const auto& g : inner.images_) imgs.push_back(apply(g));
  return Automorphism(group_, imgs);
}

Automorphism Automorphism::inverse() const {
  std::vector<int> inv(group_.order());
  for (int i = 0; i < group_.order(); ++i) inv[table_[i]] = i;
  std::vector<GroupElement> imgs;
  for (int i = 0; i < group_.rank(); ++i) {
    imgs.push_back(group_.element(inv[group_.index(group_.generator(i))]));
  }
  return Automorphism(group_, imgs);
}

bool Automorphism::is_identity() const {
  for (int i = 0; i < group_.order(); ++i) {
    if (table_[i] != i) return false;
  }
  return true;
}

std::vector<Automorphism> automorphisms(const AbelianGroup& a, int order_cap) {
  if (a.order() > order_cap) {
    throw ResourceError("automorphism enumeration capped at |A| <= " + std::to_string(order_cap) +
                        ", got " + std::to_string(a.order()));
  }
  const int t = a.rank();
  std::vector<int> ord(a.order());
  for (int i = 0; i < a.order(); ++i) ord[i] = a.order_of(a.element(i));

  std::vector<Automorphism> out;
  std::vector<GroupElement> images(t);
  // Image i must have order exactly n_i and meet the span of earlier images
  // trivially; then the final span has size |A| and the map is bijective.
  std::function<void(int, const std::vector<char>&)> rec = [&](int i, const std::vector<char>& span) {
    if (i == t) {
      if (static_cast<long long>(out.size()) >= kMaxAutomorphismCount) {
        throw ResourceError("more than " + std::to_string(kMaxAutomorphismCount) + " automorphisms");
      }
      out.emplace_back(a, images);
      return;
    }
    const int n = a.factors()[i];
    for (int x = 0; x < a.order(); ++x) {
      if (ord[x] != n) continue;
      bool disjoint = true;
      for (int acc = x; acc != 0; acc = a.add_index(acc, x)) {
        if (span[acc]) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      std::vector<char> next(a.order(), 0);
      for (int h = 0; h < a.order(); ++h) {
        if (!span[h]) continue;
        int acc = h;
        for (int j = 0; j < n; ++j) {
          next[acc] = 1;
          acc = a.add_index(acc, x);
        }
      }
      images[i] = a.element(x);
      rec(i + 1, next);
    }
  };
  std::vector<char> span(a.order(), 0);
  span[0] = 1;
  rec(0, span);
  return out;
}

Subgroup annihilator(const AbelianGroup& a, const Subgroup& c) {
  if (!(c.parent() == a)) throw InvalidSpecError("subgroup does not belong to " + a.to_string());
  std::vector<GroupElement> kill;
  for (const auto& chi : a.elements()) {
    bool ok = true;
    for (const auto& x : c.elements()) {
      if (a.pairing(chi, x) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) kill.push_back(chi);
  }
  return Subgroup::from_elements(a, kill);
}

}  // namespace noether
