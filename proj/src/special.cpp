#include "vmlattice/special.hpp"

#include <cmath>
#include <string>

#include "vmlattice/summation.hpp"

namespace vmlattice {

RationalNode::RationalNode(Integer num, Integer den) : numerator(num), denominator(den) {
  if (den <= 0 || num < 0 || num > den) {
    throw DomainError("rational node " + std::to_string(num) + "/" + std::to_string(den) +
                      " is outside [0,1]");
  }
}

RationalNode RationalNode::fractional(Integer k, Modulus n) { return {reduce(k, n), n.value()}; }

double harmonic(Integer n, double a) {
  if (n < 1) throw DomainError("harmonic requires N >= 1");
  CompensatedSum<double> sum;
  for (Integer h = n; h >= 1; --h) sum += std::pow(static_cast<double>(h), -a);
  return sum.value();
}

double hurwitz_zeta2(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("hurwitz_zeta2 requires a > 0");
  // zeta(2, a) = a^-2 + zeta(2, a + 1); lift into the asymptotic regime
  CompensatedSum<double> head;
  double x = a;
  while (x < 10.0) {
    head += 1.0 / (x * x);
    x += 1.0;
  }
  // Euler-Maclaurin: 1/x + 1/(2x^2) + sum_k B_{2k} / x^{2k+1}
  constexpr double bernoulli_even[] = {1.0 / 6.0,   -1.0 / 30.0,      1.0 / 42.0, -1.0 / 30.0,
                                       5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double power = inv2 * inv;
  double tail = 0.0;
  for (double b : bernoulli_even) {
    tail += b * power;
    power *= inv2;
  }
  head += tail;
  head += 0.5 * inv2;
  head += inv;
  return head.value();
}

double cot_pi_rational(Integer k, Modulus n) {
  const Integer m = reduce(k, n);
  if (m == 0) throw PoleError("cot(pi k/N) has a pole at k = 0 mod N");
  const Integer twice = 2 * m;
  if (twice == n.value()) return 0.0;
  const bool reflect = twice > n.value();
  const Integer folded = reflect ? n.value() - m : m;
  const double angle = std::numbers::pi * static_cast<double>(folded) / static_cast<double>(n.value());
  const double c = std::cos(angle) / std::sin(angle);
  return reflect ? -c : c;
}

}  // namespace vmlattice
