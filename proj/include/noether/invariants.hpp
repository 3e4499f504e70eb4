#pragma once

// Graded pieces of F[V]^G for a monomial representation of a group with a
// cyclic index-two subgroup A, computed over prime fields.
//
// R_d is spanned by transfers tau(m) = m + m^b of A-invariant monomials m.
// The b-orbit {m, m'} of such a monomial gives one basis vector
// B = rep + lambda*rep' (rep the lexicographically larger member), or
// nothing when m^b = -m. Elements of R_d are stored in orbit coordinates:
// the coefficient of each orbit representative.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "noether/groups.hpp"
#include "noether/linalg.hpp"
#include "noether/polynomial.hpp"
#include "noether/zerosum.hpp"

namespace noether {

inline constexpr long long kDefaultMonomialCap = 1'000'000;

GroupElement weight(const MonomialRep& rep, const Exponents& m);

/// Degree-d monomials of weight 0, lexicographically descending.
std::vector<Exponents> a_invariant_monomials(const MonomialRep& rep, int d,
                                             long long cap = kDefaultMonomialCap);

Polynomial apply_a(const MonomialRep& rep, const FieldSpec& field, const Polynomial& f);
Polynomial apply_b(const MonomialRep& rep, const FieldSpec& field, const Polynomial& f);

/// tau(m) = m + m^b for an A-invariant monomial m.
Polynomial transfer(const MonomialRep& rep, const FieldSpec& field, const Exponents& m);
/// m + theta(b)^-1 m^b; b_sign selects theta = trivial (0) or sign (1).
Polynomial relative_transfer(const MonomialRep& rep, const FieldSpec& field, const Exponents& m,
                             int b_sign);

struct GradedSlice {
  int degree = 0;
  int power = 1;                   // j in (R_+^j)_d
  std::vector<Exponents> columns;  // orbit representatives
  std::vector<Row> rows;           // reduced echelon form in orbit coordinates
  std::vector<int> pivots;

  int dimension() const { return static_cast<int>(rows.size()); }
};

class InvariantEngine {
 public:
  InvariantEngine(MonomialRep rep, FieldSpec field, long long cap = kDefaultMonomialCap);
  ~InvariantEngine();
  InvariantEngine(const InvariantEngine&) = delete;
  InvariantEngine& operator=(const InvariantEngine&) = delete;

  const MonomialRep& rep() const { return rep_; }
  const FieldSpec& field() const { return field_; }

  int dim_invariants(int d);
  GradedSlice invariant_basis(int d);
  GradedSlice power_ideal_basis(int j, int d);
  int power_ideal_dim(int j, int d);
  bool check_membership(const Exponents& m, int j);
  /// Orbit representatives of a minimal homogeneous generating set in degree d.
  std::vector<Exponents> generators(int d);
  /// Polynomial of a basis vector B_o, o indexed by column.
  Polynomial basis_polynomial(int d, int column);

  /// dim (I_+ R_+^k)_d where I = F[V]^A, and the number of A-invariant
  /// monomials of degree d.
  int module_power_dim(int k, int d);

 private:
  struct Degree;
  struct Impl;

  Degree& degree_data(int d);
  const RowSpace& power_space(int j, int d);
  std::vector<int> generator_columns(int d);
  const RowSpace& module_space(int t, int d);

  MonomialRep rep_;
  FieldSpec field_;
  long long cap_;
  std::unique_ptr<Impl> impl_;
};

struct DimRow {
  int degree;
  int dim_r;
  int dim_power;
};

struct BetaReport {
  GroupSpec group;
  ModuleSpec module;
  int k = 1;
  std::vector<uint32_t> primes;
  int beta = 0;
  Exponents witness;
  int beta1 = 0;
  int bound = 0;
  std::vector<DimRow> dims;
};

/// The two fields used by default: the smallest primes p = 1 mod m.
std::vector<FieldSpec> default_fields(const GroupSpec& g, const std::vector<uint32_t>& primes = {});

using Progress = std::function<void(const std::string&)>;

/// beta_k(G, V): beta_1 is found by scanning d <= |G|, then beta_k by
/// scanning d <= k*beta_1. Every field must produce identical dimension
/// tables; otherwise ConsistencyError.
BetaReport beta_k(const MonomialRep& rep, int k, const std::vector<FieldSpec>& fields,
                  long long cap = kDefaultMonomialCap);

/// beta_k(I_+, R): the top degree d with (I_+)_d not inside (I_+ R_+^k)_d.
/// Scanned to (2k+1)N, past which I_+^(2k+1) lies in I_+ R_+^k.
int beta_k_module(const MonomialRep& rep, int k, const std::vector<FieldSpec>& fields);

/// beta_k(A, V) for the restriction to A: the top degree of an A-invariant
/// monomial whose weight sequence does not split into k+1 zero-sum blocks.
int beta_k_abelian(const MonomialRep& rep, int k);

/// Canonical forms of Phi(m) over the monomials of degree beta_k(G, V) that
/// are k-extremal.
std::vector<ZSequence> extremal_sequences(const MonomialRep& rep, int k,
                                          const std::vector<FieldSpec>& fields,
                                          long long cap = kDefaultMonomialCap);

ZSequence weight_sequence(const MonomialRep& rep, const Exponents& m);

struct BatteryRow {
  ModuleSpec module;
  int beta;
};

struct VerifyRecord {
  GroupSpec group;
  int k = 1;
  std::vector<uint32_t> primes;
  long long formula = 0;
  BetaReport witness;
  std::vector<BatteryRow> battery;
  bool lower_ok = false;
  bool upper_ok = false;
  bool pass() const { return lower_ok && upper_ok; }
};

/// All single irreducibles, all pairs, and witness + irreducible, each with
/// at most battery_size variables.
std::vector<ModuleSpec> battery_modules(const GroupSpec& g, int battery_size);

VerifyRecord verify_group(const GroupSpec& g, int k, int battery_size,
                          const std::vector<uint32_t>& primes = {}, const Progress& progress = {},
                          long long cap = kDefaultMonomialCap);

}  // namespace noether
