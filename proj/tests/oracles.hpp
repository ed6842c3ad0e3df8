#pragma once

// Brute-force references used by the tests. Nothing here calls the library's
// number theory or special functions; the plain-double kernels are written
// out again from their defining formulas.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/special_functions/trigamma.hpp>

#include "vmlattice/rules.hpp"

namespace oracle {

using vmlattice::Integer;

inline constexpr long double kPi = std::numbers::pi_v<long double>;

inline Integer inverse_by_search(Integer a, Integer n) {
  a = ((a % n) + n) % n;
  for (Integer b = 1; b < n; ++b) {
    if ((a * b) % n == 1) return b;
  }
  return 0;
}

inline bool is_prime_trial(Integer n) {
  if (n < 2) return false;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline Integer order_of(Integer g, Integer n) {
  Integer x = g % n;
  Integer k = 1;
  while (x != 1) {
    x = (x * g) % n;
    ++k;
  }
  return k;
}

inline Integer primitive_root_by_search(Integer n) {
  for (Integer g = 2; g < n; ++g) {
    if (order_of(g, n) == n - 1) return g;
  }
  return 0;
}

// zeta(2, a): 10^6 terms, then the Euler-Maclaurin tail after them.
inline double zeta2_direct(double a) {
  constexpr long L = 1'000'000;
  long double s = 0.0L;
  for (long l = L - 1; l >= 0; --l) {
    const long double t = static_cast<long double>(l) + a;
    s += 1.0L / (t * t);
  }
  const long double x = static_cast<long double>(L) + a;
  s += 1.0L / x + 1.0L / (2.0L * x * x) + 1.0L / (6.0L * x * x * x);
  return static_cast<double>(s);
}

inline double zeta2_trigamma(double a) { return boost::math::trigamma(a); }

inline long double b1(long double x) { return x - 0.5L; }
inline long double b2(long double x) { return x * x - x + 1.0L / 6.0L; }
inline long double frac(long double x) { return x - std::floor(x); }

enum class Kind { korobov, multilinear, sobolev };

// Kernel written as the literal product, in long double.
inline long double kernel(Kind kind, const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                          const Eigen::VectorXd& gamma) {
  long double p = 1.0L;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const long double g = gamma(j);
    const long double d = frac(static_cast<long double>(x(j)) - y(j));
    switch (kind) {
      case Kind::korobov:
        p *= 1.0L + 2.0L * kPi * kPi * g * b2(d);
        break;
      case Kind::multilinear:
        p *= 1.0L + 12.0L * g * b1(x(j)) * b1(y(j));
        break;
      case Kind::sobolev:
        p *= 1.0L + g * b1(x(j)) * b1(y(j)) + g * b2(d) / 2.0L;
        break;
    }
  }
  return p;
}

// sum_{k,l} w_k w_l K(x_k, x_l) - 1 over the rule's nodes.
inline double wce_squared(const vmlattice::WeightedRule& rule, Kind kind, const Eigen::VectorXd& gamma) {
  long double s = 0.0L;
  const Eigen::Index m = rule.size();
  std::vector<Eigen::VectorXd> nodes;
  for (Eigen::Index i = 0; i < m; ++i) nodes.push_back(rule.node(i));
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index l = 0; l < m; ++l) {
      s += static_cast<long double>(rule.weight(i)) * rule.weight(l) * kernel(kind, nodes[i], nodes[l], gamma);
    }
  }
  return static_cast<double>(s - 1.0L);
}

// Corner weights from the monomial exactness conditions
//   sum_a w(a) prod_{j in v} a_j + (1/N) sum_{k>=1} prod_{j in v} x_kj = 2^-|v|
// solved as a dense linear system.
inline Eigen::VectorXd optimal_weights_by_solve(const vmlattice::LatticeRule& rule) {
  const Eigen::Index s = rule.dimension();
  const Integer n = rule.size();
  const Eigen::Index c = Eigen::Index{1} << s;
  Eigen::MatrixXd a(c, c);
  Eigen::VectorXd rhs(c);
  for (Eigen::Index v = 0; v < c; ++v) {
    for (Eigen::Index corner = 0; corner < c; ++corner) a(v, corner) = ((v & corner) == v) ? 1.0 : 0.0;
    long double interior = 0.0L;
    for (Integer k = 1; k < n; ++k) {
      long double p = 1.0L;
      for (Eigen::Index j = 0; j < s; ++j) {
        if (v & (Eigen::Index{1} << j)) p *= static_cast<long double>((k * rule.generator(j)) % n) / n;
      }
      interior += p;
    }
    rhs(v) = static_cast<double>(std::pow(0.5L, std::popcount(static_cast<unsigned>(v))) - interior / n);
  }
  return a.fullPivLu().solve(rhs);
}

// (1/N) sum_{k=1}^{N-1} B1({z k / N}) e^{2 pi i theta k / N}, long double.
inline std::complex<double> exp_b1_direct(Integer z, Integer theta, Integer n) {
  std::complex<long double> s{0.0L, 0.0L};
  for (Integer k = 1; k < n; ++k) {
    const long double x = static_cast<long double>(((z * k) % n + n) % n) / n;
    const long double phase = 2.0L * kPi * static_cast<long double>((theta * k) % n) / n;
    s += b1(x) * std::complex<long double>(std::cos(phase), std::sin(phase));
  }
  s /= static_cast<long double>(n);
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

inline long double cot(long double x) { return std::cos(x) / std::sin(x); }

// sum_{k,l=1}^{N-1} B1(k/N) B2(<z (k-l)>/N) B1(l/N), long double.
inline double conjecture_double_sum(Integer z, Integer n) {
  long double s = 0.0L;
  for (Integer k = 1; k < n; ++k) {
    for (Integer l = 1; l < n; ++l) {
      const Integer r = ((z * (k - l)) % n + n) % n;
      s += b1(static_cast<long double>(k) / n) * b2(static_cast<long double>(r) / n) *
           b1(static_cast<long double>(l) / n);
    }
  }
  return static_cast<double>(s);
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace oracle
