#pragma once

// Finite abelian groups Z_{n_1} x ... x Z_{n_t}, written additively.
//
// Elements double as characters: the pairing <a, b> = sum_i a_i b_i / n_i
// (in Q/Z) identifies the dual group with the group itself, so every
// weight/character in the toolkit is just a GroupElement.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace noether {

struct GroupElement {
  std::vector<int> coords;

  GroupElement() = default;
  explicit GroupElement(std::vector<int> c) : coords(std::move(c)) {}

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class AbelianGroup {
 public:
  AbelianGroup() = default;  // trivial group
  explicit AbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  int order() const { return order_; }
  int exponent() const { return exponent_; }
  bool is_cyclic() const { return factors_.size() <= 1; }

  GroupElement zero() const;
  GroupElement generator(int i) const;  // i-th standard generator
  bool contains(const GroupElement& x) const;
  GroupElement reduce(std::vector<int> coords) const;

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;
  GroupElement sub(const GroupElement& x, const GroupElement& y) const;
  GroupElement scale(long long k, const GroupElement& x) const;
  int order_of(const GroupElement& x) const;

  // Elements are numbered in mixed radix with the first factor most
  // significant, so index order coincides with lexicographic coordinate order.
  int index(const GroupElement& x) const;
  GroupElement element(int index) const;
  std::vector<GroupElement> elements() const;

  // Index-level arithmetic used by the combinatorial searches.
  int add_index(int x, int y) const;
  int neg_index(int x) const;

  /// Pairing <a,b> scaled by the exponent: returns an integer mod exponent().
  int pairing(const GroupElement& a, const GroupElement& b) const;

  std::string to_string() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<int> factors_;
  std::vector<int> strides_;
  int order_ = 1;
  int exponent_ = 1;
};

AbelianGroup make_group(const std::vector<int>& factors);

class Subgroup {
 public:
  /// Subgroup generated by `generators`.
  static Subgroup generated(const AbelianGroup& parent,
                            const std::vector<GroupElement>& generators);
  /// Validates that `elements` is closed under addition and negation.
  static Subgroup from_elements(const AbelianGroup& parent,
                                const std::vector<GroupElement>& elements);

  const AbelianGroup& parent() const { return parent_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(const GroupElement& x) const;
  bool contains_index(int idx) const { return member_[idx] != 0; }

 private:
  Subgroup(AbelianGroup parent, std::vector<GroupElement> gens,
           std::vector<char> member);

  AbelianGroup parent_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;  // sorted
  std::vector<char> member_;
};

/// An automorphism given by the images of the standard generators.
class Automorphism {
 public:
  Automorphism(AbelianGroup group, std::vector<GroupElement> images);
  static Automorphism identity(const AbelianGroup& group);
  /// x -> u x; u must be a unit modulo the exponent.
  static Automorphism multiplication(const AbelianGroup& group, int u);

  const AbelianGroup& group() const { return group_; }
  const std::vector<GroupElement>& images() const { return images_; }
  GroupElement apply(const GroupElement& x) const;
  int apply_index(int idx) const { return table_[idx]; }
  Automorphism compose(const Automorphism& inner) const;  // this ∘ inner
  Automorphism inverse() const;
  bool is_identity() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.group_ == b.group_ && a.images_ == b.images_;
  }

 private:
  AbelianGroup group_;
  std::vector<GroupElement> images_;
  std::vector<int> table_;  // element index -> image index
};

/// A surjective homomorphism A -> A/B with A/B in invariant-factor form.
struct QuotientMap {
  AbelianGroup source;
  AbelianGroup target;
  std::vector<int> image;  // source element index -> target element index

  GroupElement project(const GroupElement& x) const {
    return target.element(image[source.index(x)]);
  }
};

QuotientMap quotient(const AbelianGroup& a, const Subgroup& b);

/// A subgroup viewed as an abstract group in invariant-factor form.
struct SubgroupIso {
  AbelianGroup group;
  std::vector<GroupElement> embed;  // standard element index -> parent element
  GroupElement to_standard(const GroupElement& parent_element) const;
};

SubgroupIso standardize(const Subgroup& b);

inline constexpr int kDefaultAutomorphismGroupCap = 64;
inline constexpr long long kMaxAutomorphismCount = 1'000'000;

/// Every automorphism, by backtracking over generator images. Throws
/// ResourceError if |A| exceeds `order_cap`.
std::vector<Automorphism> automorphisms(const AbelianGroup& a,
                                        int order_cap = kDefaultAutomorphismGroupCap);

/// Characters of A vanishing on C, under the fixed pairing.
Subgroup annihilator(const AbelianGroup& a, const Subgroup& c);

}  // namespace noether
