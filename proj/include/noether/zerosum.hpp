#pragma once

// Sequences (multisets) over a finite abelian group and the zero-sum
// combinatorics built on them.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "noether/abelian.hpp"

namespace noether {

class ZSequence {
 public:
  ZSequence() = default;
  ZSequence(AbelianGroup group, std::vector<GroupElement> entries);
  static ZSequence from_indices(const AbelianGroup& group, const std::vector<int>& indices);
  static ZSequence from_counts(const AbelianGroup& group, const std::vector<int>& counts);

  const AbelianGroup& group() const { return group_; }
  const std::vector<GroupElement>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  /// Element indices in nondecreasing order.
  std::vector<int> indices() const;
  /// counts[i] = multiplicity of group element i.
  std::vector<int> counts() const;
  int multiplicity(const GroupElement& x) const;
  int max_multiplicity() const;

  ZSequence concat(const ZSequence& other) const;
  ZSequence with(const GroupElement& x) const;
  bool contains(const ZSequence& sub) const;  // sub-multiset test
  ZSequence apply(const Automorphism& phi) const;

  std::string to_string() const;

  friend bool operator==(const ZSequence& a, const ZSequence& b) {
    return a.group_ == b.group_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const ZSequence& a, const ZSequence& b) {
    return a.entries_ < b.entries_;
  }

 private:
  AbelianGroup group_;
  std::vector<GroupElement> entries_;  // sorted
};

GroupElement theta(const ZSequence& s);

/// All subset sums, the empty subset included, in index order.
std::vector<GroupElement> sigma_set(const ZSequence& s);
bool is_zero_sum_free(const ZSequence& s);
bool is_irreducible_zero_sum(const ZSequence& s);

inline constexpr int kMaxSearchLength = 24;
inline constexpr int kMaxCornerLength = 18;

/// Largest l such that S is a product of l non-empty zero-sum sequences,
/// 0 when S itself is not zero-sum.
int max_factorization(const ZSequence& s);

/// Largest number of pairwise disjoint non-empty zero-sum subsequences.
int max_disjoint_zero_sums(const ZSequence& s);

struct DavenportCaps {
  int max_order_k1 = 16;
  int max_order_k = 9;
};

/// D_k(A): the longest zero-sum sequence not factoring into k+1 non-empty
/// zero-sum sequences. Lengths are scanned downward from |A| (k = 1) or
/// k*D(A) (k >= 2); the latter bound holds because every zero-sum sequence
/// splits into irreducible blocks of length at most D(A).
int davenport(const AbelianGroup& a, int k, const DavenportCaps& caps = {});

int max_zsf_length(const ZSequence& s);

struct ZeroCorner {
  ZSequence e, f, h;
  int diameter = 0;

  ZSequence whole() const { return e.concat(f).concat(h); }
};

/// Checks the defining properties, including the stored diameter.
bool is_valid_corner(const ZeroCorner& c);

std::optional<ZeroCorner> zero_corner_min_diameter(const ZSequence& s);

/// The constructive zero-corner of the H_1, H_2, H_3 argument. Requires
/// non-zero entries and max_zsf_length(S) <= |S| - 3.
ZeroCorner extract_zero_corner(const ZSequence& s);

struct Contraction {
  std::vector<ZSequence> blocks;
  ZSequence result;  // block sums, as elements of the parent group
};

/// Every B-contraction of S, blocks unordered, each distinct partition once.
std::vector<Contraction> contractions(const ZSequence& s, const Subgroup& b);

/// Re-expresses a sequence whose entries lie in B over B's standard form.
ZSequence restrict_to(const ZSequence& s, const SubgroupIso& b);

/// ||S||_e for a generator e of a cyclic group.
int norm(const ZSequence& s, const GroupElement& e);

std::optional<Automorphism> similar(const ZSequence& s, const ZSequence& t,
                                    int order_cap = kDefaultAutomorphismGroupCap);
/// Lexicographically least sequence in the Aut(A)-orbit of S.
ZSequence canonical_form(const ZSequence& s, int order_cap = kDefaultAutomorphismGroupCap);

/// For a chain S_1 < ... < S_t satisfying the sigma-growth hypothesis,
/// reports whether S_t(b) is zero-sum free with |Sigma| grown by exactly one.
bool unique_extension(const std::vector<ZSequence>& chain, const GroupElement& b);

}  // namespace noether
