#include "vmlattice/numtheory.hpp"

#include <array>
#include <numeric>
#include <string>
#include <utility>

#include "vmlattice/errors.hpp"

namespace vmlattice {

namespace {

using Wide = unsigned __int128;

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % n);
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t n) {
  std::uint64_t result = 1 % n;
  base %= n;
  while (e > 0) {
    if (e & 1U) result = mul_mod_u64(result, base, n);
    base = mul_mod_u64(base, base, n);
    e >>= 1U;
  }
  return result;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
  std::uint64_t x = pow_mod_u64(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mul_mod_u64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

Modulus::Modulus(Integer n) : n_(n) {
  if (n < 2) throw DomainError("modulus must be at least 2, got " + std::to_string(n));
}

Integer gcd(Integer a, Integer b) { return std::gcd(a, b); }

Integer reduce(Integer a, Modulus n) {
  const Integer r = a % n.value();
  return r < 0 ? r + n.value() : r;
}

Integer mul_mod(Integer a, Integer b, Modulus n) {
  const __int128 p = static_cast<__int128>(reduce(a, n)) * reduce(b, n);
  return static_cast<Integer>(p % n.value());
}

Integer pow_mod(Integer base, std::uint64_t exponent, Modulus n) {
  return static_cast<Integer>(pow_mod_u64(static_cast<std::uint64_t>(reduce(base, n)), exponent,
                                          static_cast<std::uint64_t>(n.value())));
}

Integer mod_inverse(Integer a, Modulus n) {
  // extended Euclid on (a mod n, n)
  Integer old_r = reduce(a, n), r = n.value();
  Integer old_s = 1, s = 0;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw NotInvertible(std::to_string(a) + " is not invertible modulo " + std::to_string(n.value()) +
                        " (gcd " + std::to_string(old_r) + ")");
  }
  return reduce(old_s, n);
}

bool is_prime(Integer n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  const auto u = static_cast<std::uint64_t>(n);
  for (auto p : witnesses) {
    if (u == p) return true;
    if (u % p == 0) return false;
  }
  std::uint64_t d = u - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (auto a : witnesses) {
    if (miller_rabin_witness(u, a, d, r)) return false;
  }
  return true;
}

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> factors;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      factors.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

Integer primitive_root(Modulus n) {
  if (!is_prime(n.value())) throw NotPrime(std::to_string(n.value()) + " is not prime");
  if (n.value() < 3) throw DomainError("primitive_root requires N >= 3");
  const Integer order = n.value() - 1;
  const auto factors = prime_factors(order);
  for (Integer g = 2; g < n.value(); ++g) {
    bool generates = true;
    for (auto q : factors) {
      if (pow_mod(g, static_cast<std::uint64_t>(order / q), n) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw NumericalConsistencyError("no primitive root found for prime " + std::to_string(n.value()));
}

Integer fibonacci(int k) {
  if (k < 0) throw DomainError("fibonacci index must be non-negative");
  Integer previous = 0, current = 1;
  if (k == 0) return 0;
  for (int i = 1; i < k; ++i) {
    Integer next = 0;
    if (__builtin_add_overflow(previous, current, &next)) {
      throw Overflow("F_" + std::to_string(k) + " exceeds 64-bit range");
    }
    previous = current;
    current = next;
  }
  return current;
}

}  // namespace vmlattice
