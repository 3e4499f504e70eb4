#pragma once

// Groups with a cyclic subgroup of index two, in the normal form
// Z_s x (Z_r x|_{-1} H) with H a 2-group from Burnside's list, and their
// monomial representations.
//
// Every such G is generated by a and b where A = <a> is cyclic of order
// N = s*r*2^(n-1), b a b^-1 = a^u and b^2 = a^c. In CRT coordinates
// (mod s, mod r, mod 2^(n-1)) we have u = (1, -1, d) and c = (0, 0, c_H),
// with d and c_H depending on the family.

#include <optional>
#include <string>
#include <vector>

#include "noether/abelian.hpp"
#include "noether/field.hpp"

namespace noether {

enum class Family { Cyclic2n, Z2xZ2n1, Modular, Dihedral, Semidihedral, Dicyclic };

std::string family_name(Family f);
Family parse_family(const std::string& name);  // throws InvalidSpecError

struct GroupSpec {
  int s = 1;
  int r = 1;
  Family family = Family::Dihedral;
  int n = 3;

  long long order() const;
  int a_order() const;  // N = |A|
  int twist() const;    // u, with b a b^-1 = a^u
  int b_square() const; // c, with b^2 = a^c
  bool is_cyclic() const;
  bool is_abelian() const;
  std::string name() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Validates the parameter ranges. Dihedral with n = 1 or 2 is D_{2r} or
/// D_{4r}, which the normal form lists as Cyclic2n (n = 1) and Z2xZ2n1
/// (n = 2); those inputs are rewritten accordingly.
GroupSpec make_spec(int s, int r, Family family, int n);

struct CatalogEntry {
  GroupSpec spec;
  std::string name;
};

struct Catalog {
  std::vector<CatalogEntry> groups;
  /// Normal-form specs isomorphic to an emitted entry, reported not emitted.
  std::vector<std::pair<GroupSpec, GroupSpec>> coincidences;  // (omitted, kept)
};

/// All non-cyclic groups with |G| <= max_order, ordered by (order, family, n, r, s).
Catalog catalog(int max_order);

/// beta_k(G) = |G|k/2 + 2 for Dic_{4m} (m even) and Z_r x| Z_4; +1 otherwise.
long long formula_beta(const GroupSpec& g, int k);

// ---------------------------------------------------------------------------
// Modules

struct Constituent {
  enum class Kind { Char, Induced };
  Kind kind = Kind::Char;
  int weight = 0;  // theta in A^ = Z_N
  int b_sign = 0;  // Char only: 0 or 1, selects the square root of chi(b)^2

  friend bool operator==(const Constituent&, const Constituent&) = default;
  friend auto operator<=>(const Constituent&, const Constituent&) = default;
};

struct ModuleSpec {
  std::vector<Constituent> constituents;

  int dimension() const;
  std::string describe() const;
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

inline Constituent induced(int theta) { return {Constituent::Kind::Induced, theta, 0}; }
inline Constituent character(int theta, int b_sign) {
  return {Constituent::Kind::Char, theta, b_sign};
}
inline Constituent trivial_char() { return character(0, 0); }
inline Constituent sign_char() { return character(0, 1); }

/// Lower-bound module: Induced(1) alone when the formula's extra term is 2,
/// otherwise Induced(1) + sign.
ModuleSpec witness_module(const GroupSpec& g, int k);

/// All irreducible modules: 1-dim characters, then Induced(theta) for one theta
/// from each pair {theta, u*theta} with u*theta != theta.
std::vector<Constituent> irreducibles(const GroupSpec& g);

/// Order of the root of unity zeta needed by every representation of g.
int root_order(const GroupSpec& g);

/// A monomial representation: a acts on x_i by omega^weights[i] where
/// omega = zeta^(m/N), and b sends x_i to zeta^scalars[i] * x_perm[i].
struct MonomialRep {
  GroupSpec group;
  ModuleSpec module;
  AbelianGroup a;  // Z_N, the character group of A
  int m = 4;       // order of zeta
  std::vector<int> weights;
  std::vector<int> perm;
  std::vector<int> scalars;

  int num_vars() const { return static_cast<int>(weights.size()); }
  int b_square() const { return group.b_square(); }
  int twist() const { return group.twist(); }
};

/// Builds the representation, checks it against the presentation and checks
/// that `field` supplies zeta of the needed order.
MonomialRep build_rep(const GroupSpec& g, const ModuleSpec& m, const FieldSpec& field);
MonomialRep build_rep(const GroupSpec& g, const ModuleSpec& m);

/// a^N = 1, b a b^-1 = a^u, b^2 = a^c as monomial matrices.
bool verify_relations(const MonomialRep& rep);

/// Multiplication table of G on elements a^i b^j (index i + N*j).
std::vector<int> multiplication_table(const GroupSpec& g);

}  // namespace noether
