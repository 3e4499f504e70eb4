#include "noether/zerosum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "noether/error.hpp"

namespace noether {

// ---------------------------------------------------------------------------
// ZSequence

ZSequence::ZSequence(AbelianGroup group, std::vector<GroupElement> entries)
    : group_(std::move(group)), entries_(std::move(entries)) {
  for (const auto& x : entries_) {
    if (!group_.contains(x)) {
      throw InvalidSpecError("sequence entry is not an element of " + group_.to_string());
    }
  }
  std::sort(entries_.begin(), entries_.end());
}

ZSequence ZSequence::from_indices(const AbelianGroup& group, const std::vector<int>& indices) {
  std::vector<GroupElement> e;
  e.reserve(indices.size());
  for (int i : indices) e.push_back(group.element(i));
  return ZSequence(group, std::move(e));
}

ZSequence ZSequence::from_counts(const AbelianGroup& group, const std::vector<int>& counts) {
  std::vector<int> idx;
  for (size_t i = 0; i < counts.size(); ++i) idx.insert(idx.end(), counts[i], static_cast<int>(i));
  return from_indices(group, idx);
}

std::vector<int> ZSequence::indices() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& x : entries_) out.push_back(group_.index(x));
  return out;
}

std::vector<int> ZSequence::counts() const {
  std::vector<int> c(group_.order(), 0);
  for (const auto& x : entries_) ++c[group_.index(x)];
  return c;
}

int ZSequence::multiplicity(const GroupElement& x) const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), x));
}

int ZSequence::max_multiplicity() const {
  auto c = counts();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

ZSequence ZSequence::concat(const ZSequence& other) const {
  if (!(other.group_ == group_)) throw InvalidSpecError("concatenating sequences over different groups");
  std::vector<GroupElement> e = entries_;
  e.insert(e.end(), other.entries_.begin(), other.entries_.end());
  return ZSequence(group_, std::move(e));
}

ZSequence ZSequence::with(const GroupElement& x) const {
  std::vector<GroupElement> e = entries_;
  e.push_back(x);
  return ZSequence(group_, std::move(e));
}

bool ZSequence::contains(const ZSequence& sub) const {
  if (!(sub.group_ == group_)) return false;
  auto mine = counts();
  auto theirs = sub.counts();
  for (size_t i = 0; i < mine.size(); ++i) {
    if (theirs[i] > mine[i]) return false;
  }
  return true;
}

ZSequence ZSequence::apply(const Automorphism& phi) const {
  std::vector<GroupElement> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back(phi.apply(x));
  return ZSequence(group_, std::move(e));
}

std::string ZSequence::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    const auto& c = entries_[i].coords;
    if (c.size() == 1) {
      os << c[0];
    } else {
      os << '[';
      for (size_t j = 0; j < c.size(); ++j) os << (j ? "," : "") << c[j];
      os << ']';
    }
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Index-level helpers

namespace {

struct AddTable {
  int n = 1;
  std::vector<int> sum;
  std::vector<int> neg;

  explicit AddTable(const AbelianGroup& g) : n(g.order()), sum(n * n), neg(n) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) sum[a * n + b] = g.add_index(a, b);
      neg[a] = g.neg_index(a);
    }
  }
  int add(int a, int b) const { return sum[a * n + b]; }
};

// reach' = reach ∪ (reach + y)
void extend_reach(const AddTable& t, std::vector<char>& reach, int y) {
  std::vector<char> next = reach;
  for (int s = 0; s < t.n; ++s) {
    if (reach[s]) next[t.add(s, y)] = 1;
  }
  reach.swap(next);
}

// Calls `visit` on every zero-sum-free sub-multiset V of `avail` (counts over
// the source group) whose projected sum equals `target`. Zero-sum freeness is
// judged after projecting through `proj` into the group of `q`.
void for_each_zsf_with_sum(const AddTable& q, const std::vector<int>& proj,
                           const std::vector<int>& avail, int target,
                           const std::function<void(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(avail.size());
  std::vector<int> chosen(n, 0);
  std::vector<char> reach(q.n, 0);
  reach[0] = 1;
  std::function<void(int, int)> rec = [&](int i, int sum) {
    if (i == n) {
      if (sum == target) visit(chosen);
      return;
    }
    rec(i + 1, sum);
    if (avail[i] == 0) return;
    const int y = proj[i];
    std::vector<char> saved = reach;
    int s = sum;
    for (int c = 1; c <= avail[i]; ++c) {
      if (reach[q.neg[y]]) break;  // adding y would close a zero-sum
      extend_reach(q, reach, y);
      s = q.add(s, y);
      chosen[i] = c;
      rec(i + 1, s);
    }
    chosen[i] = 0;
    reach.swap(saved);
  };
  rec(0, 0);
}

std::vector<int> identity_projection(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Maximum number of pairwise disjoint non-empty zero-sum subsequences,
// memoized over count vectors. If x is a fixed element of T+x then either x
// is unused, or its block is V+x with V zero-sum free and theta(V) = -x.
class DisjointZeroSums {
 public:
  explicit DisjointZeroSums(const AbelianGroup& g)
      : table_(g), proj_(identity_projection(g.order())) {}

  int operator()(std::vector<int> counts) {
    int zeros = counts[0];
    counts[0] = 0;
    return zeros + solve(counts);
  }

 private:
  int solve(const std::vector<int>& counts) {
    int x = -1;
    for (int i = static_cast<int>(counts.size()) - 1; i > 0; --i) {
      if (counts[i] > 0) {
        x = i;
        break;
      }
    }
    if (x < 0) return 0;
    std::string key(counts.begin(), counts.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<int> rest = counts;
    --rest[x];
    int best = solve(rest);
    for_each_zsf_with_sum(table_, proj_, rest, table_.neg[x], [&](const std::vector<int>& v) {
      std::vector<int> remain = rest;
      for (size_t i = 0; i < v.size(); ++i) remain[i] -= v[i];
      best = std::max(best, 1 + solve(remain));
    });
    memo_.emplace(std::move(key), best);
    return best;
  }

  AddTable table_;
  std::vector<int> proj_;
  std::unordered_map<std::string, int> memo_;
};

void require_length(const ZSequence& s, int cap) {
  if (s.size() > cap) {
    throw ResourceError("sequence length " + std::to_string(s.size()) + " exceeds search cap " +
                        std::to_string(cap));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Sums

GroupElement theta(const ZSequence& s) {
  GroupElement acc = s.group().zero();
  for (const auto& x : s.entries()) acc = s.group().add(acc, x);
  return acc;
}

std::vector<GroupElement> sigma_set(const ZSequence& s) {
  AddTable t(s.group());
  std::vector<char> reach(t.n, 0);
  reach[0] = 1;
  for (int y : s.indices()) extend_reach(t, reach, y);
  std::vector<GroupElement> out;
  for (int i = 0; i < t.n; ++i) {
    if (reach[i]) out.push_back(s.group().element(i));
  }
  return out;
}

bool is_zero_sum_free(const ZSequence& s) {
  // A non-empty zero-sum subsequence with last entry s_i exists iff -s_i is a
  // subset sum of s_1..s_{i-1}.
  AddTable t(s.group());
  std::vector<char> reach(t.n, 0);
  reach[0] = 1;
  for (int y : s.indices()) {
    if (reach[t.neg[y]]) return false;
    extend_reach(t, reach, y);
  }
  return true;
}

bool is_irreducible_zero_sum(const ZSequence& s) {
  if (s.empty() || theta(s) != s.group().zero()) return false;
  // A proper zero-sum part or its complement avoids any fixed entry.
  auto idx = s.indices();
  idx.pop_back();
  return is_zero_sum_free(ZSequence::from_indices(s.group(), idx));
}

int max_disjoint_zero_sums(const ZSequence& s) {
  require_length(s, kMaxSearchLength);
  DisjointZeroSums g(s.group());
  return g(s.counts());
}

int max_factorization(const ZSequence& s) {
  require_length(s, kMaxSearchLength);
  if (s.empty() || theta(s) != s.group().zero()) return 0;
  // Leftover entries after removing disjoint zero-sum blocks sum to zero and
  // merge into any block.
  return max_disjoint_zero_sums(s);
}

int davenport(const AbelianGroup& a, int k, const DavenportCaps& caps) {
  if (k < 1) throw InvalidSpecError("davenport needs k >= 1");
  const int cap = k == 1 ? caps.max_order_k1 : caps.max_order_k;
  if (a.order() > cap) {
    throw ResourceError("davenport search capped at |A| <= " + std::to_string(cap) + " for k = " +
                        std::to_string(k));
  }
  const int n = a.order();
  AddTable t(a);
  DisjointZeroSums g(a);
  const int upper = k == 1 ? n : k * davenport(a, 1, caps);

  // Nondecreasing index sequences of length L-1; the last entry is forced to
  // be minus their sum and must not precede them.
  for (int len = upper; len >= 1; --len) {
    std::vector<int> counts(n, 0);
    std::vector<char> reach(n, 0);
    reach[0] = 1;
    bool found = false;
    std::function<void(int, int, int)> rec = [&](int placed, int lo, int sum) {
      if (found) return;
      if (placed == len - 1) {
        int last = t.neg[sum];
        if (last < lo) return;
        // For k = 1 the prefix is zero-sum free, so the completed sequence is
        // irreducible automatically.
        ++counts[last];
        bool ok = k == 1 || g(counts) <= k;
        --counts[last];
        if (ok) found = true;
        return;
      }
      for (int x = lo; x < n && !found; ++x) {
        ++counts[x];
        if (k == 1) {
          if (!reach[t.neg[x]]) {
            std::vector<char> saved = reach;
            extend_reach(t, reach, x);
            rec(placed + 1, x, t.add(sum, x));
            reach.swap(saved);
          }
        } else if (g(counts) <= k) {
          rec(placed + 1, x, t.add(sum, x));
        }
        --counts[x];
      }
    };
    rec(0, 0, 0);
    if (found) return len;
  }
  throw ConsistencyError("davenport search found no zero-sum sequence");
}

int max_zsf_length(const ZSequence& s) {
  require_length(s, kMaxSearchLength);
  AddTable t(s.group());
  auto counts = s.counts();
  std::vector<char> reach(t.n, 0);
  reach[0] = 1;
  int best = 0;
  std::function<void(int, int)> rec = [&](int i, int len) {
    best = std::max(best, len);
    for (int x = i; x < t.n; ++x) {
      if (counts[x] == 0 || reach[t.neg[x]]) continue;
      std::vector<char> saved = reach;
      extend_reach(t, reach, x);
      --counts[x];
      rec(x, len + 1);
      ++counts[x];
      reach.swap(saved);
    }
  };
  rec(0, 0);
  return best;
}

// ---------------------------------------------------------------------------
// Zero-corners

namespace {

int corner_diameter(int e, int f, int h) { return std::max({e + f, e + h, f + h}); }

}  // namespace

bool is_valid_corner(const ZeroCorner& c) {
  if (c.e.empty() || c.f.empty() || c.h.empty()) return false;
  const auto zero = c.e.group().zero();
  if (theta(c.e.concat(c.f)) != zero || theta(c.e.concat(c.h)) != zero) return false;
  return c.diameter == corner_diameter(c.e.size(), c.f.size(), c.h.size());
}

std::optional<ZeroCorner> zero_corner_min_diameter(const ZSequence& s) {
  require_length(s, kMaxCornerLength);
  if (is_zero_sum_free(s)) return std::nullopt;
  const AbelianGroup& g = s.group();
  AddTable t(g);
  auto all = s.counts();
  std::vector<int> xs, cs;
  for (int i = 0; i < t.n; ++i) {
    if (all[i]) {
      xs.push_back(i);
      cs.push_back(all[i]);
    }
  }
  const int q = static_cast<int>(xs.size());
  std::vector<int> ce(q), cf(q), ch(q);

  for (int diam = 2; diam <= s.size(); ++diam) {
    bool found = false;
    std::function<void(int, int, int, int, int, int, int)> rec =
        [&](int i, int se, int sf, int sh, int ne, int nf, int nh) {
          if (found) return;
          if (i == q) {
            if (ne && nf && nh && t.add(se, sf) == 0 && t.add(se, sh) == 0) found = true;
            return;
          }
          const int x = xs[i];
          int ex = se;
          for (int e = 0; e <= cs[i]; ++e, ex = t.add(ex, x)) {
            if (ne + e + nf > diam || ne + e + nh > diam) break;
            int fx = sf;
            for (int f = 0; e + f <= cs[i]; ++f, fx = t.add(fx, x)) {
              if (ne + e + nf + f > diam || nf + f + nh > diam) break;
              int hx = sh;
              for (int h = 0; e + f + h <= cs[i]; ++h, hx = t.add(hx, x)) {
                if (ne + e + nh + h > diam || nf + f + nh + h > diam) break;
                ce[i] = e;
                cf[i] = f;
                ch[i] = h;
                rec(i + 1, ex, fx, hx, ne + e, nf + f, nh + h);
                if (found) return;
              }
            }
          }
        };
    rec(0, 0, 0, 0, 0, 0, 0);
    if (found) {
      auto part = [&](const std::vector<int>& c) {
        std::vector<int> idx;
        for (int i = 0; i < q; ++i) idx.insert(idx.end(), c[i], xs[i]);
        return ZSequence::from_indices(g, idx);
      };
      ZeroCorner corner{part(ce), part(cf), part(ch), 0};
      corner.diameter = corner_diameter(corner.e.size(), corner.f.size(), corner.h.size());
      return corner;
    }
  }
  return std::nullopt;
}

ZeroCorner extract_zero_corner(const ZSequence& s) {
  require_length(s, kMaxSearchLength);
  const AbelianGroup& g = s.group();
  AddTable t(g);
  const auto idx = s.indices();
  for (int x : idx) {
    if (x == 0) throw DomainError("extract_zero_corner needs non-zero entries");
  }
  const int d = max_zsf_length(s);
  const int l = s.size();
  if (d > l - 3) {
    throw DomainError("extract_zero_corner needs max_zsf_length <= |S| - 3 (d = " +
                      std::to_string(d) + ", |S| = " + std::to_string(l) + ")");
  }

  // Positions of one maximum zero-sum-free subsequence J.
  std::vector<int> positions;
  {
    std::vector<int> best_take;
    std::vector<int> counts = s.counts();
    std::vector<int> take(t.n, 0);
    std::vector<char> reach(t.n, 0);
    reach[0] = 1;
    int best = -1;
    std::function<void(int, int)> rec = [&](int i, int len) {
      if (best == d) return;
      if (len > best) {
        best = len;
        best_take = take;
      }
      for (int x = i; x < t.n && best < d; ++x) {
        if (take[x] == counts[x] || reach[t.neg[x]]) continue;
        std::vector<char> saved = reach;
        extend_reach(t, reach, x);
        ++take[x];
        rec(x, len + 1);
        --take[x];
        reach.swap(saved);
      }
    };
    rec(0, 0);
    std::vector<int> used(t.n, 0);
    for (int p = 0; p < l; ++p) {
      if (used[idx[p]] < best_take[idx[p]]) {
        ++used[idx[p]];
        positions.push_back(p);
      }
    }
  }
  std::vector<char> in_j(l, 0);
  for (int p : positions) in_j[p] = 1;
  std::vector<int> extra;
  for (int p = 0; p < l && extra.size() < 3; ++p) {
    if (!in_j[p]) extra.push_back(p);
  }

  // H_i: a smallest U in J with theta(U) = -s, together with s. Minimality of
  // |U| makes S_{H_i} an irreducible zero-sum sequence.
  auto minimal_block = [&](int pos) {
    const int target = t.neg[idx[pos]];
    for (int size = 1; size <= d; ++size) {
      std::vector<int> comb(size);
      std::iota(comb.begin(), comb.end(), 0);
      while (true) {
        int sum = 0;
        for (int c : comb) sum = t.add(sum, idx[positions[c]]);
        if (sum == target) {
          std::set<int> h;
          for (int c : comb) h.insert(positions[c]);
          h.insert(pos);
          return h;
        }
        int i = size - 1;
        while (i >= 0 && comb[i] == d - size + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
    throw ConsistencyError("maximal zero-sum-free subsequence failed to absorb an entry");
  };
  std::vector<std::set<int>> hs;
  for (int p : extra) hs.push_back(minimal_block(p));

  auto seq_of = [&](const std::set<int>& ps) {
    std::vector<int> v;
    for (int p : ps) v.push_back(idx[p]);
    return ZSequence::from_indices(g, v);
  };
  auto intersects = [](const std::set<int>& a, const std::set<int>& b) {
    for (int x : a) {
      if (b.count(x)) return true;
    }
    return false;
  };

  ZeroCorner corner;
  const std::pair<int, int> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
  bool built = false;
  for (auto [i, j] : pairs) {
    if (!intersects(hs[i], hs[j])) continue;
    std::set<int> both, only_i, only_j;
    for (int x : hs[i]) (hs[j].count(x) ? both : only_i).insert(x);
    for (int x : hs[j]) {
      if (!hs[i].count(x)) only_j.insert(x);
    }
    corner = ZeroCorner{seq_of(both), seq_of(only_i), seq_of(only_j), 0};
    built = true;
    break;
  }
  if (!built) corner = ZeroCorner{seq_of(hs[0]), seq_of(hs[1]), seq_of(hs[2]), 0};
  corner.diameter = corner_diameter(corner.e.size(), corner.f.size(), corner.h.size());
  if (!is_valid_corner(corner) || corner.diameter > d + 1) {
    throw ConsistencyError("constructed zero-corner violates its guarantees");
  }
  return corner;
}

// ---------------------------------------------------------------------------
// Contractions

std::vector<Contraction> contractions(const ZSequence& s, const Subgroup& b) {
  require_length(s, kMaxSearchLength);
  const AbelianGroup& a = s.group();
  if (!(b.parent() == a)) throw InvalidSpecError("subgroup does not belong to the sequence's group");
  if (!b.contains(theta(s))) throw DomainError("theta(S) is not in B");

  QuotientMap qm = quotient(a, b);
  AddTable qt(qm.target);
  const std::vector<int>& proj = qm.image;

  std::set<std::vector<std::vector<int>>> seen;
  std::vector<Contraction> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& remain) {
    int x = -1;
    for (int i = 0; i < a.order(); ++i) {
      if (remain[i]) {
        x = i;
        break;
      }
    }
    if (x < 0) {
      auto key = blocks;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) return;
      Contraction c;
      std::vector<GroupElement> sums;
      for (const auto& blk : key) {
        c.blocks.push_back(ZSequence::from_counts(a, blk));
        sums.push_back(theta(c.blocks.back()));
      }
      c.result = ZSequence(a, sums);
      out.push_back(std::move(c));
      return;
    }
    std::vector<int> rest = remain;
    --rest[x];
    for_each_zsf_with_sum(qt, proj, rest, qt.neg[proj[x]], [&](const std::vector<int>& v) {
      std::vector<int> blk = v;
      ++blk[x];
      std::vector<int> next = rest;
      for (size_t i = 0; i < v.size(); ++i) next[i] -= v[i];
      blocks.push_back(blk);
      rec(next);
      blocks.pop_back();
    });
  };
  rec(s.counts());
  return out;
}

ZSequence restrict_to(const ZSequence& s, const SubgroupIso& b) {
  std::vector<GroupElement> e;
  for (const auto& x : s.entries()) e.push_back(b.to_standard(x));
  return ZSequence(b.group, std::move(e));
}

// ---------------------------------------------------------------------------
// Norms and similarity

int norm(const ZSequence& s, const GroupElement& e) {
  const AbelianGroup& g = s.group();
  if (!g.contains(e) || !g.is_cyclic() || g.order_of(e) != g.order()) {
    throw DomainError("norm needs a generator of a cyclic group");
  }
  int total = 0;
  for (const auto& a : s.entries()) {
    GroupElement acc = e;
    int r = 1;
    while (acc != a) {
      acc = g.add(acc, e);
      ++r;
    }
    total += r;
  }
  return total;
}

std::optional<Automorphism> similar(const ZSequence& s, const ZSequence& t, int order_cap) {
  if (!(s.group() == t.group())) throw InvalidSpecError("similarity needs a common group");
  if (s.size() != t.size()) return std::nullopt;
  for (const auto& phi : automorphisms(s.group(), order_cap)) {
    if (s.apply(phi) == t) return phi;
  }
  return std::nullopt;
}

ZSequence canonical_form(const ZSequence& s, int order_cap) {
  ZSequence best = s;
  for (const auto& phi : automorphisms(s.group(), order_cap)) {
    ZSequence img = s.apply(phi);
    if (img < best) best = img;
  }
  return best;
}

bool unique_extension(const std::vector<ZSequence>& chain, const GroupElement& b) {
  if (chain.empty()) throw DomainError("unique_extension needs a non-empty chain");
  const AbelianGroup& g = chain.front().group();
  for (size_t i = 0; i < chain.size(); ++i) {
    const ZSequence& si = chain[i];
    if (!(si.group() == g)) throw DomainError("chain mixes groups");
    if (si.size() != static_cast<int>(i) + 1) throw DomainError("chain member S_i must have length i");
    if (!is_zero_sum_free(si)) throw DomainError("chain member is not zero-sum free");
    if (i > 0) {
      if (!si.contains(chain[i - 1])) throw DomainError("chain is not increasing");
      if (sigma_set(si).size() < sigma_set(chain[i - 1]).size() + 2) {
        throw DomainError("chain violates the sigma growth condition");
      }
    }
  }
  if (!g.contains(b)) throw InvalidSpecError("extension element outside the group");
  const ZSequence& top = chain.back();
  ZSequence ext = top.with(b);
  return is_zero_sum_free(ext) && sigma_set(ext).size() == sigma_set(top).size() + 1;
}

}  // namespace noether
