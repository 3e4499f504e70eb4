#pragma once

// Prime fields F_p with a distinguished primitive m-th root of unity zeta.

#include <cstdint>
#include <vector>

namespace noether {

struct FieldSpec {
  uint32_t p = 0;
  int m = 1;          // order of zeta
  uint32_t zeta = 1;  // primitive m-th root of unity

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
  }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const;
  uint32_t from_int(long long v) const;
  /// zeta^e for any integer e.
  uint32_t zeta_pow(long long e) const;
};

bool is_prime(uint64_t n);

/// Builds F_p with zeta of exact order m. Throws FieldError unless p is a
/// prime with p = 1 (mod m) and p not dividing group_order.
FieldSpec make_field(uint32_t p, int m, long long group_order);

/// The `count` smallest primes valid for make_field(p, m, group_order).
std::vector<uint32_t> smallest_primes(int m, long long group_order, int count = 2);

}  // namespace noether
