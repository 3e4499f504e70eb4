#pragma once

// Sparse polynomials over a prime field, keyed by exponent vectors.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "noether/field.hpp"

namespace noether {

using Exponents = std::vector<int>;

int degree(const Exponents& e);

class Polynomial {
 public:
  explicit Polynomial(const FieldSpec& field) : field_(field) {}
  static Polynomial monomial(const FieldSpec& field, const Exponents& e, uint32_t coef = 1);
  static Polynomial constant(const FieldSpec& field, int num_vars, uint32_t c);

  const FieldSpec& field() const { return field_; }
  const std::map<Exponents, uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  uint32_t coefficient(const Exponents& e) const;
  /// -1 for the zero polynomial; throws DomainError if not homogeneous.
  int homogeneous_degree() const;

  void add_term(const Exponents& e, uint32_t coef);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(uint32_t c) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_.p == b.field_.p && a.terms_ == b.terms_;
  }

 private:
  FieldSpec field_;
  std::map<Exponents, uint32_t> terms_;  // no zero coefficients
};

}  // namespace noether
