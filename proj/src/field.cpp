#include "noether/field.hpp"

#include <string>

#include "noether/error.hpp"

namespace noether {

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
  uint64_t result = 1 % p, base = a % p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(result);
}

uint32_t FieldSpec::inv(uint32_t a) const {
  if (a % p == 0) throw DomainError("division by zero in F_" + std::to_string(p));
  return pow(a, p - 2);
}

uint32_t FieldSpec::from_int(long long v) const {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

uint32_t FieldSpec::zeta_pow(long long e) const {
  long long r = e % m;
  if (r < 0) r += m;
  return pow(zeta, static_cast<uint64_t>(r));
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::vector<uint64_t> distinct_prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldSpec make_field(uint32_t p, int m, long long group_order) {
  if (m < 1) throw InvalidSpecError("root of unity order must be positive");
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  if ((p - 1) % static_cast<uint32_t>(m) != 0) {
    throw FieldError("F_" + std::to_string(p) + " has no primitive " + std::to_string(m) +
                     "-th root of unity");
  }
  if (group_order % static_cast<long long>(p) == 0) {
    throw FieldError("characteristic " + std::to_string(p) + " divides |G| = " +
                     std::to_string(group_order));
  }
  FieldSpec f;
  f.p = p;
  f.m = m;
  auto factors = distinct_prime_factors(p - 1);
  uint32_t g = 1;  // F_2^* is trivial
  for (uint32_t cand = 2; p > 2 && cand < p; ++cand) {
    bool primitive = true;
    for (auto q : factors) {
      if (f.pow(cand, (p - 1) / q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  f.zeta = f.pow(g, (p - 1) / static_cast<uint32_t>(m));
  // exact order check
  if (f.pow(f.zeta, m) != 1) throw ConsistencyError("zeta^m != 1");
  for (auto q : distinct_prime_factors(m)) {
    if (f.pow(f.zeta, m / q) == 1) throw ConsistencyError("zeta is not primitive");
  }
  return f;
}

std::vector<uint32_t> smallest_primes(int m, long long group_order, int count) {
  std::vector<uint32_t> out;
  for (uint64_t p = static_cast<uint64_t>(m) + 1; static_cast<int>(out.size()) < count;
       p += static_cast<uint64_t>(m)) {
    if (p > 0xFFFFFFFFull) throw ResourceError("no suitable prime below 2^32");
    if (is_prime(p) && group_order % static_cast<long long>(p) != 0) {
      out.push_back(static_cast<uint32_t>(p));
    }
  }
  return out;
}

}  // namespace noether
