#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "vmlattice/numtheory.hpp"

using namespace vmlattice;

TEST_CASE("gcd") {
  CHECK(gcd(5, 17) == 1);
  CHECK(gcd(0, 7) == 7);
  CHECK(gcd(21, 14) == 7);
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(-21, 14) == 7);
}

TEST_CASE("Modulus rejects N < 2") {
  CHECK_THROWS_AS(Modulus(1), DomainError);
  CHECK_THROWS_AS(Modulus(0), DomainError);
  CHECK(Modulus(2).value() == 2);
}

TEST_CASE("mod_inverse examples") {
  for (Integer n : {2, 5, 13, 101}) CHECK(mod_inverse(1, Modulus(n)) == 1);
  CHECK(mod_inverse(8, Modulus(13)) == 5);
  CHECK_THROWS_AS(mod_inverse(6, Modulus(9)), NotInvertible);
  CHECK(mod_inverse(-5, Modulus(13)) == oracle::inverse_by_search(-5, 13));
}

TEST_CASE("mod_inverse matches exhaustive search and is an involution") {
  for (Integer n = 3; n <= 257; ++n) {
    if (!oracle::is_prime_trial(n)) continue;
    for (Integer a = 1; a < n; ++a) {
      const Integer inv = mod_inverse(a, Modulus(n));
      REQUIRE(inv == oracle::inverse_by_search(a, n));
      REQUIRE(mod_inverse(inv, Modulus(n)) == a);
    }
  }
}

TEST_CASE("is_prime") {
  CHECK(is_prime(17));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(4099));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(2));
  for (Integer n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
  CHECK_FALSE(is_prime(561));         // Carmichael
  CHECK_FALSE(is_prime(3215031751));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(2305843009213693951));  // 2^61 - 1
  CHECK_FALSE(is_prime(2305843009213693953));
  CHECK(is_prime(262147));
  CHECK(is_prime(9223372036854775783));  // largest prime below 2^63
}

TEST_CASE("primitive_root") {
  CHECK(primitive_root(Modulus(5)) == 2);
  CHECK(primitive_root(Modulus(7)) == 3);
  CHECK(primitive_root(Modulus(17)) == 3);
  CHECK_THROWS_AS(primitive_root(Modulus(15)), NotPrime);
  CHECK_THROWS_AS(primitive_root(Modulus(2)), DomainError);
  for (Integer n = 3; n <= 2000; ++n) {
    if (!oracle::is_prime_trial(n)) continue;
    REQUIRE(primitive_root(Modulus(n)) == oracle::primitive_root_by_search(n));
  }
}

TEST_CASE("powers of the primitive root enumerate the group") {
  for (Integer n : {3, 5, 17, 37, 257, 4099}) {
    const Modulus m(n);
    const Integer g = primitive_root(m);
    std::vector<Integer> seen;
    for (Integer beta = 0; beta < n - 1; ++beta) seen.push_back(pow_mod(g, static_cast<std::uint64_t>(beta), m));
    std::sort(seen.begin(), seen.end());
    std::vector<Integer> expected(static_cast<std::size_t>(n - 1));
    for (Integer r = 1; r < n; ++r) expected[static_cast<std::size_t>(r - 1)] = r;
    CHECK(seen == expected);
  }
}

TEST_CASE("modular helpers") {
  const Modulus m(13);
  CHECK(reduce(-1, m) == 12);
  CHECK(reduce(26, m) == 0);
  CHECK(mul_mod(12, 12, m) == 1);
  const Modulus big(9223372036854775783);
  CHECK(mul_mod(big.value() - 1, big.value() - 1, big) == 1);
  CHECK(pow_mod(2, 12, m) == 1);
  CHECK(pow_mod(7, 0, m) == 1);
  CHECK(prime_factors(360) == std::vector<Integer>{2, 3, 5});
  CHECK(prime_factors(4098) == std::vector<Integer>{2, 3, 683});
}

TEST_CASE("fibonacci") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(7) == 13);
  CHECK(fibonacci(10) == 55);
  CHECK(fibonacci(92) == 7540113804746346429);
  CHECK_THROWS_AS(fibonacci(93), Overflow);
  CHECK_THROWS_AS(fibonacci(-1), DomainError);
  for (int k = 1; k <= 40; ++k) {
    const Integer cassini = fibonacci(k - 1) * fibonacci(k + 1) - fibonacci(k) * fibonacci(k);
    REQUIRE(cassini == (k % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("mod_inverse random large moduli") {
  std::mt19937_64 rng(20240901);
  for (int trial = 0; trial < 200; ++trial) {
    const Integer n = static_cast<Integer>(rng() % 1'000'000'000'000ULL) + 3;
    const Integer a = static_cast<Integer>(rng() % static_cast<std::uint64_t>(n));
    if (gcd(a, n) != 1) {
      CHECK_THROWS_AS(mod_inverse(a, Modulus(n)), NotInvertible);
      continue;
    }
    const Integer inv = mod_inverse(a, Modulus(n));
    REQUIRE(mul_mod(a, inv, Modulus(n)) == 1);
    REQUIRE(inv >= 1);
    REQUIRE(inv < n);
  }
}
