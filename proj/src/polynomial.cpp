#include "noether/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "noether/error.hpp"

namespace noether {

int degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

Polynomial Polynomial::monomial(const FieldSpec& field, const Exponents& e, uint32_t coef) {
  Polynomial p(field);
  p.add_term(e, coef);
  return p;
}

Polynomial Polynomial::constant(const FieldSpec& field, int num_vars, uint32_t c) {
  return monomial(field, Exponents(num_vars, 0), c);
}

uint32_t Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

int Polynomial::homogeneous_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int de = degree(e);
    if (d >= 0 && de != d) throw DomainError("polynomial is not homogeneous");
    d = de;
  }
  return d;
}

void Polynomial::add_term(const Exponents& e, uint32_t coef) {
  coef %= field_.p;
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(e, coef);
  if (!inserted) {
    it->second = field_.add(it->second, coef);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, field_.neg(c));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(field_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      if (e1.size() != e2.size()) throw DomainError("multiplying polynomials in different rings");
      Exponents e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, field_.mul(c1, c2));
    }
  }
  return r;
}

Polynomial Polynomial::scaled(uint32_t c) const {
  Polynomial r(field_);
  for (const auto& [e, v] : terms_) r.add_term(e, field_.mul(v, c));
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second;
    for (size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      os << "*x" << i;
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

}  // namespace noether
