#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "noether/error.hpp"
#include "noether/zerosum.hpp"

using namespace noether;

namespace {

ZSequence cyc(int n, std::vector<int> entries) {
  auto g = make_group({n});
  std::vector<GroupElement> e;
  for (int x : entries) e.push_back(GroupElement({x}));
  return ZSequence(g, e);
}

// Oracle: bitmask over positions.
bool oracle_zsf(const ZSequence& s) {
  auto idx = s.indices();
  const auto& g = s.group();
  for (unsigned mask = 1; mask < (1u << idx.size()); ++mask) {
    int sum = 0;
    for (size_t i = 0; i < idx.size(); ++i) {
      if (mask >> i & 1) sum = g.add_index(sum, idx[i]);
    }
    if (sum == 0) return false;
  }
  return true;
}

// Oracle: set partitions of positions into zero-sum blocks.
int oracle_max_factorization(const ZSequence& s) {
  auto idx = s.indices();
  const auto& g = s.group();
  const int l = static_cast<int>(idx.size());
  if (l == 0) return 0;
  int best = 0;
  std::vector<int> block_sum;
  std::function<void(int)> rec = [&](int i) {
    if (i == l) {
      for (int b : block_sum) {
        if (b != 0) return;
      }
      best = std::max(best, static_cast<int>(block_sum.size()));
      return;
    }
    for (size_t b = 0; b < block_sum.size(); ++b) {
      int saved = block_sum[b];
      block_sum[b] = g.add_index(saved, idx[i]);
      rec(i + 1);
      block_sum[b] = saved;
    }
    block_sum.push_back(idx[i]);
    rec(i + 1);
    block_sum.pop_back();
  };
  rec(0);
  return best;
}

// Oracle: D(A) = 1 + longest zero-sum-free sequence, grown one entry at a
// time while tracking the set of subset sums.
int oracle_davenport(const AbelianGroup& a) {
  int best = 0;
  std::function<void(std::vector<char>&, int, int)> rec = [&](std::vector<char>& sums, int lo,
                                                              int len) {
    best = std::max(best, len);
    for (int x = lo; x < a.order(); ++x) {
      if (sums[a.neg_index(x)]) continue;
      std::vector<char> next = sums;
      for (int s = 0; s < a.order(); ++s) {
        if (sums[s]) next[a.add_index(s, x)] = 1;
      }
      rec(next, x, len + 1);
    }
  };
  std::vector<char> start(a.order(), 0);
  start[0] = 1;
  rec(start, 0, 0);
  return best + 1;
}

}  // namespace

TEST(ZSequence, SortedStorage) {
  EXPECT_EQ(cyc(6, {3, 1, 2}), cyc(6, {1, 2, 3}));
  EXPECT_THROW(cyc(6, {7}), InvalidSpecError);
  EXPECT_EQ(cyc(6, {1, 1, 4}).max_multiplicity(), 2);
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(cyc(6, {1, 2, 3})), GroupElement({0}));
  EXPECT_EQ(theta(cyc(5, {})), GroupElement({0}));
  EXPECT_EQ(theta(cyc(4, {1, 1, 1})), GroupElement({3}));
}

TEST(SigmaSet, IncludesEmptySum) {
  auto as_ints = [](const std::vector<GroupElement>& v) {
    std::vector<int> out;
    for (const auto& x : v) out.push_back(x.coords[0]);
    return out;
  };
  EXPECT_EQ(as_ints(sigma_set(cyc(5, {1, 2}))), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(as_ints(sigma_set(cyc(5, {}))), (std::vector<int>{0}));
  EXPECT_EQ(as_ints(sigma_set(cyc(5, {1, 1}))), (std::vector<int>{0, 1, 2}));
}

TEST(ZeroSumFree, Examples) {
  EXPECT_TRUE(is_zero_sum_free(cyc(3, {1, 1})));
  EXPECT_TRUE(is_irreducible_zero_sum(cyc(3, {1, 1, 1})));
  EXPECT_TRUE(is_irreducible_zero_sum(cyc(3, {0})));
  EXPECT_FALSE(is_zero_sum_free(cyc(3, {0})));
  EXPECT_FALSE(is_irreducible_zero_sum(cyc(4, {1, 3, 2, 2})));
  EXPECT_FALSE(is_irreducible_zero_sum(cyc(4, {})));
}

TEST(ZeroSumFree, MatchesOracleOnAllSmallSequences) {
  auto g = make_group({2, 4});
  std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& idx, int lo) {
    auto s = ZSequence::from_indices(g, idx);
    ASSERT_EQ(is_zero_sum_free(s), oracle_zsf(s)) << s.to_string();
    if (idx.size() == 5) return;
    for (int x = lo; x < g.order(); ++x) {
      idx.push_back(x);
      rec(idx, x);
      idx.pop_back();
    }
  };
  std::vector<int> idx;
  rec(idx, 0);
}

TEST(MaxFactorization, Examples) {
  EXPECT_EQ(max_factorization(cyc(3, {1, 2, 1, 2})), 2);
  EXPECT_EQ(max_factorization(cyc(4, {0, 0, 0})), 3);
  EXPECT_EQ(max_factorization(cyc(3, {1, 1})), 0);
  std::vector<int> big(25, 0);
  EXPECT_THROW(max_factorization(cyc(4, big)), ResourceError);
}

TEST(MaxFactorization, MatchesPartitionOracle) {
  for (int n : {4, 5, 6}) {
    auto g = make_group({n});
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& idx, int lo) {
      auto s = ZSequence::from_indices(g, idx);
      ASSERT_EQ(max_factorization(s), oracle_max_factorization(s)) << s.to_string();
      if (idx.size() == 7) return;
      for (int x = lo; x < n; ++x) {
        idx.push_back(x);
        rec(idx, x);
        idx.pop_back();
      }
    };
    std::vector<int> idx;
    rec(idx, 0);
  }
}

TEST(MaxFactorization, MonotoneUnderIrreducibleBlocks) {
  auto s = cyc(6, {1, 5, 2, 2, 2});
  for (auto t : {cyc(6, {3, 3}), cyc(6, {0}), cyc(6, {1, 1, 4}), cyc(6, {5, 5, 5, 5, 5, 5})}) {
    ASSERT_TRUE(is_irreducible_zero_sum(t));
    EXPECT_GE(max_factorization(s.concat(t)), max_factorization(s) + 1);
  }
}

TEST(Davenport, Examples) {
  EXPECT_EQ(davenport(make_group({6}), 1), 6);
  EXPECT_EQ(davenport(make_group({2, 2}), 1), 3);
  EXPECT_EQ(davenport(make_group({3}), 2), 6);
  EXPECT_EQ(davenport(make_group({}), 1), 1);
  EXPECT_THROW(davenport(make_group({17}), 1), ResourceError);
  EXPECT_THROW(davenport(make_group({10}), 2), ResourceError);
}

TEST(Davenport, MatchesZeroSumFreeOracle) {
  for (auto f : std::vector<std::vector<int>>{
           {2}, {3}, {4}, {5}, {6}, {7}, {8}, {2, 2}, {2, 4}, {3, 3}, {2, 6}, {2, 2, 2}, {4, 4}}) {
    auto a = make_group(f);
    EXPECT_EQ(davenport(a, 1), oracle_davenport(a)) << a.to_string();
  }
}

TEST(MaxZsfLength, Examples) {
  EXPECT_EQ(max_zsf_length(cyc(3, {1, 1, 1})), 2);
  EXPECT_EQ(max_zsf_length(cyc(4, {0, 0})), 0);
  EXPECT_EQ(max_zsf_length(cyc(5, {1, 2})), 2);
}

TEST(ZeroCorner, MinDiameterExamples) {
  auto c = zero_corner_min_diameter(cyc(7, {0, 0, 0}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->diameter, 2);
  auto d = zero_corner_min_diameter(cyc(4, {1, 3, 3}));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->diameter, 2);
  EXPECT_TRUE(is_valid_corner(*d));
  EXPECT_FALSE(zero_corner_min_diameter(cyc(3, {1, 1})).has_value());
}

TEST(ZeroCorner, MinDiameterAgainstTripartitionOracle) {
  // Oracle: assign each position to E, F, H or unused.
  auto oracle = [](const ZSequence& s) {
    auto idx = s.indices();
    const auto& g = s.group();
    int best = 1 << 20;
    int l = static_cast<int>(idx.size());
    int total = 1;
    for (int i = 0; i < l; ++i) total *= 4;
    for (int code = 0; code < total; ++code) {
      int sums[3] = {0, 0, 0}, sizes[3] = {0, 0, 0};
      for (int i = 0, c = code; i < l; ++i, c /= 4) {
        int part = c % 4;
        if (part < 3) {
          sums[part] = g.add_index(sums[part], idx[i]);
          ++sizes[part];
        }
      }
      if (!sizes[0] || !sizes[1] || !sizes[2]) continue;
      if (g.add_index(sums[0], sums[1]) || g.add_index(sums[0], sums[2])) continue;
      best = std::min(best, std::max({sizes[0] + sizes[1], sizes[0] + sizes[2], sizes[1] + sizes[2]}));
    }
    return best;
  };
  for (auto s : {cyc(5, {1, 1, 2, 3, 4}), cyc(6, {1, 1, 1, 3, 5, 2}), cyc(4, {1, 1, 2, 2, 3}),
                 cyc(7, {1, 2, 4, 6, 6, 5}), cyc(8, {1, 1, 1, 1, 1, 3, 4})}) {
    auto c = zero_corner_min_diameter(s);
    int o = oracle(s);
    if (o == 1 << 20) {
      EXPECT_FALSE(c.has_value());
    } else {
      ASSERT_TRUE(c.has_value());
      EXPECT_EQ(c->diameter, o) << s.to_string();
      EXPECT_TRUE(is_valid_corner(*c));
      EXPECT_TRUE(s.contains(c->whole()));
    }
  }
}

TEST(ZeroCorner, Extraction) {
  auto s = cyc(3, {1, 1, 1, 2, 2, 2});
  auto c = extract_zero_corner(s);
  EXPECT_TRUE(is_valid_corner(c));
  EXPECT_LE(c.diameter, 3);
  EXPECT_TRUE(s.contains(c.whole()));

  auto t = cyc(4, {1, 1, 2, 1, 1, 2, 1, 1, 2});
  int d = max_zsf_length(t);
  EXPECT_LE(d, 5);
  auto ct = extract_zero_corner(t);
  EXPECT_TRUE(is_valid_corner(ct));
  EXPECT_LE(ct.diameter, d + 1);

  EXPECT_THROW(extract_zero_corner(cyc(3, {0, 1, 1, 1, 2})), DomainError);
  EXPECT_THROW(extract_zero_corner(cyc(5, {1, 1, 1})), DomainError);
}

TEST(Contractions, Examples) {
  auto z6 = make_group({6});
  auto b = Subgroup::generated(z6, {GroupElement({3})});
  auto cs = contractions(cyc(6, {1, 1, 1, 3}), b);
  bool found = false;
  for (const auto& c : cs) {
    if (c.result == cyc(6, {3, 3}) && c.blocks.size() == 2) found = true;
    GroupElement sum = z6.zero();
    for (const auto& blk : c.blocks) {
      EXPECT_TRUE(b.contains(theta(blk)));
      sum = z6.add(sum, theta(blk));
    }
    EXPECT_EQ(sum, theta(cyc(6, {1, 1, 1, 3})));
  }
  EXPECT_TRUE(found);

  auto single = contractions(cyc(6, {3, 3}), b);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].result, cyc(6, {3, 3}));

  EXPECT_THROW(contractions(cyc(6, {1}), b), DomainError);
}

TEST(Contractions, DistinctPartitionsOnly) {
  auto z4 = make_group({4});
  auto b = Subgroup::generated(z4, {GroupElement({2})});
  // (1,1,1,1) mod {0,2}: blocks must be pairs (1,1); exactly one partition.
  auto cs = contractions(cyc(4, {1, 1, 1, 1}), b);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].result, cyc(4, {2, 2}));
  // (1,3,1,3): {1,1}|{3,3} and {1,3}|{1,3}
  EXPECT_EQ(contractions(cyc(4, {1, 3, 1, 3}), b).size(), 2u);
}

TEST(Norm, Examples) {
  EXPECT_EQ(norm(cyc(5, {2, 3}), GroupElement({1})), 5);
  EXPECT_EQ(norm(cyc(5, {1}), GroupElement({2})), 3);
  EXPECT_EQ(norm(cyc(6, {1, 1, 1, 1, 1, 1}), GroupElement({1})), 6);
  EXPECT_EQ(norm(cyc(6, {0}), GroupElement({1})), 6);
  EXPECT_THROW(norm(cyc(6, {1}), GroupElement({2})), DomainError);
}

TEST(Similarity, Examples) {
  auto phi = similar(cyc(4, {0, 1, 1, 1}), cyc(4, {0, 3, 3, 3}));
  ASSERT_TRUE(phi.has_value());
  EXPECT_EQ(phi->apply(GroupElement({1})), GroupElement({3}));
  auto self = similar(cyc(6, {1, 2, 2}), cyc(6, {1, 2, 2}));
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(self->is_identity());
  EXPECT_FALSE(similar(cyc(4, {1, 1}), cyc(4, {1, 3})).has_value());
}

TEST(Similarity, CanonicalFormIsOrbitInvariant) {
  auto g = make_group({2, 4});
  for (auto idx : std::vector<std::vector<int>>{{1, 3, 5}, {2, 7, 7}, {0, 5, 6, 6}}) {
    auto s = ZSequence::from_indices(g, idx);
    auto c = canonical_form(s);
    EXPECT_EQ(canonical_form(c), c);
    for (const auto& phi : automorphisms(g)) EXPECT_EQ(canonical_form(s.apply(phi)), c);
    EXPECT_TRUE(similar(s, c).has_value());
  }
}

TEST(UniqueExtension, AtMostOneElement) {
  auto z7 = make_group({7});
  // Search every valid chain of length <= 3 over Z_7.
  int chains = 0;
  std::function<void(std::vector<ZSequence>&)> rec = [&](std::vector<ZSequence>& chain) {
    if (!chain.empty()) {
      ++chains;
      int accepted = 0;
      for (const auto& b : z7.elements()) accepted += unique_extension(chain, b);
      EXPECT_LE(accepted, 1);
    }
    if (chain.size() == 3) return;
    for (const auto& x : z7.elements()) {
      ZSequence next = chain.empty() ? ZSequence(z7, {x}) : chain.back().with(x);
      if (!is_zero_sum_free(next)) continue;
      if (!chain.empty() && sigma_set(next).size() < sigma_set(chain.back()).size() + 2) continue;
      chain.push_back(next);
      rec(chain);
      chain.pop_back();
    }
  };
  std::vector<ZSequence> chain;
  rec(chain);
  EXPECT_GT(chains, 0);
}

TEST(UniqueExtension, RejectsInvalidChains) {
  EXPECT_THROW(unique_extension({}, GroupElement({0})), DomainError);
  EXPECT_THROW(unique_extension({cyc(4, {0})}, GroupElement({1})), DomainError);
  EXPECT_THROW(unique_extension({cyc(7, {3}), cyc(7, {3, 3})}, GroupElement({3})), DomainError);
}

TEST(LongZeroSums, SplitAsTwoBlocksAndGeneratorPower) {
  // Every zero-sum S over Z_n with |S| >= kn+1 and at most k+1 blocks splits
  // as T1 T2 e^{(k-1)n} with ||T1||_e = ||T2||_e = n.
  for (int n : {3, 4, 5}) {
    auto g = make_group({n});
    for (int k : {2, 3}) {
      int checked = 0;
      for (int len = k * n + 1; len <= (k + 1) * n; ++len) {
        std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& idx, int lo) {
          if (static_cast<int>(idx.size()) == len) {
            auto s = ZSequence::from_indices(g, idx);
            if (theta(s) != g.zero() || max_factorization(s) > k + 1) return;
            ++checked;
            bool ok = false;
            for (int e = 1; e < n && !ok; ++e) {
              GroupElement ge({e});
              if (g.order_of(ge) != n) continue;
              if (s.multiplicity(ge) < (k - 1) * n) continue;
              std::vector<int> rest;
              int skip = (k - 1) * n;
              for (int x : idx) {
                if (x == e && skip > 0) {
                  --skip;
                  continue;
                }
                rest.push_back(x);
              }
              // split rest into two parts of e-norm n each
              const int r = static_cast<int>(rest.size());
              for (unsigned mask = 0; mask < (1u << r) && !ok; ++mask) {
                std::vector<int> t1, t2;
                for (int i = 0; i < r; ++i) (mask >> i & 1 ? t1 : t2).push_back(rest[i]);
                if (t1.empty() || t2.empty()) continue;
                ok = norm(ZSequence::from_indices(g, t1), ge) == n &&
                     norm(ZSequence::from_indices(g, t2), ge) == n;
              }
            }
            EXPECT_TRUE(ok) << "n=" << n << " k=" << k << " " << s.to_string();
            return;
          }
          for (int x = lo; x < n; ++x) {
            idx.push_back(x);
            rec(idx, x);
            idx.pop_back();
          }
        };
        std::vector<int> idx;
        rec(idx, 0);
      }
      EXPECT_GT(checked, 0);
    }
  }
}
