#pragma once

#include <cstdint>
#include <vector>

namespace vmlattice {

using Integer = std::int64_t;

/// Number of lattice points. Always at least 2.
class Modulus {
 public:
  explicit Modulus(Integer n);

  constexpr Integer value() const noexcept { return n_; }
  constexpr operator Integer() const noexcept { return n_; }

 private:
  Integer n_;
};

Integer gcd(Integer a, Integer b);

/// Representative of a in {0, ..., n-1}.
Integer reduce(Integer a, Modulus n);

/// a*b mod n without intermediate overflow.
Integer mul_mod(Integer a, Integer b, Modulus n);
Integer pow_mod(Integer base, std::uint64_t exponent, Modulus n);

/// Throws NotInvertible when gcd(a, n) != 1.
Integer mod_inverse(Integer a, Modulus n);

/// Deterministic Miller-Rabin, exact over the whole int64 range.
bool is_prime(Integer n);

/// Distinct prime factors by trial division, ascending.
std::vector<Integer> prime_factors(Integer n);

/// Smallest generator of the multiplicative group mod a prime n >= 3.
Integer primitive_root(Modulus n);

/// F_0 = 0, F_1 = 1. Throws Overflow past F_92.
Integer fibonacci(int k);

}  // namespace vmlattice
