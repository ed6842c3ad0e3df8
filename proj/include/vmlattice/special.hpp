#pragma once

#include <numbers>

#include "vmlattice/errors.hpp"
#include "vmlattice/numtheory.hpp"

namespace vmlattice {

/// Exact point numerator/denominator in [0, 1]. Lattice coordinates stay
/// below 1; the closed end is kept so cube corners fit the same type.
struct RationalNode {
  Integer numerator = 0;
  Integer denominator = 1;

  RationalNode() = default;
  RationalNode(Integer num, Integer den);

  /// {k/n}, reduced into [0, 1).
  static RationalNode fractional(Integer k, Modulus n);

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  /// 1 - value, formed from the integer complement so that x and 1-x round
  /// symmetrically.
  double complement() const {
    return static_cast<double>(denominator - numerator) / static_cast<double>(denominator);
  }
};

template <typename Scalar>
Scalar bernoulli1(Scalar t) {
  if (!(t >= Scalar(0) && t <= Scalar(1))) throw DomainError("bernoulli1 argument outside [0,1]");
  return t - Scalar(0.5);
}

template <typename Scalar>
Scalar bernoulli2(Scalar t) {
  if (!(t >= Scalar(0) && t <= Scalar(1))) throw DomainError("bernoulli2 argument outside [0,1]");
  return t * t - t + Scalar(1) / Scalar(6);
}

/// B_1 on an exact node; antisymmetric under x -> 1-x bit for bit.
inline double bernoulli1(const RationalNode& x) {
  return 0.5 * (x.value() - x.complement());
}

/// B_2 on an exact node as 1/6 - x(1-x); symmetric under x -> 1-x bit for bit.
inline double bernoulli2(const RationalNode& x) {
  return 1.0 / 6.0 - x.value() * x.complement();
}

/// H_n(a) = sum_{h=1}^n h^{-a}, accumulated from the smallest term up.
double harmonic(Integer n, double a);

/// Hurwitz zeta zeta(2, a) = sum_{l >= 0} (l + a)^{-2}, a > 0.
double hurwitz_zeta2(double a);

/// cot(pi k / n), with the argument folded into (0, pi/2] first.
double cot_pi_rational(Integer k, Modulus n);

}  // namespace vmlattice
