#pragma once

#include <complex>

#include "vmlattice/kernels.hpp"
#include "vmlattice/rules.hpp"

namespace vmlattice {

/// Squared worst-case error in the unanchored Sobolev space split into the
/// multilinear part (weights gamma/12), the Korobov part (weights
/// gamma/(2 pi)^2) and the mixture of both.
struct WceBreakdown {
  double sq_multilinear = 0.0;
  double sq_korobov = 0.0;
  double mixture = 0.0;
  double sq_total = 0.0;
};

/// Absolute slack below zero tolerated on a squared worst-case error before
/// it is treated as a numerical failure.
inline constexpr double kNegativeSquareTolerance = 1e-12;
inline constexpr double kWeightSumTolerance = 1e-12;

/// sum_{k,l} w_k w_l K(x_k, x_l) - 1 (plus (1 - sum w)^2, which vanishes for
/// a normalised rule). Quadratic in the number of nodes.
double wce_generic_squared(const WeightedRule& rule, KernelKind kind, const ProductWeights& gamma);
double wce_generic(const WeightedRule& rule, KernelKind kind, const ProductWeights& gamma);

/// Korobov (alpha = 1) error of a plain lattice rule in O(s N).
double wce_korobov_lattice_squared(const LatticeRule& rule, const ProductWeights& gamma);
double wce_korobov_lattice(const LatticeRule& rule, const ProductWeights& gamma);

/// Korobov error of a general rule as a quadratic form.
double wce_korobov_squared(const WeightedRule& rule, const ProductWeights& gamma);

/// Multilinear-space error from per-subset weighted B1 moments, O(M 2^s s).
double wce_multilinear_squared(const WeightedRule& rule, const ProductWeights& gamma);
double wce_multilinear(const WeightedRule& rule, const ProductWeights& gamma);

/// Mixture term by direct enumeration of nested subset pairs, O(M^2 3^s).
double mixture_direct(const WeightedRule& rule, const ProductWeights& gamma);

WceBreakdown wce_decomposition(const WeightedRule& rule, const ProductWeights& gamma);

/// (1/N) sum_{k=1}^{N-1} B1({z k / N}) exp(2 pi i theta k / N) in closed form.
std::complex<double> exp_b1_sum(Integer z, Integer theta, Modulus n);
/// The same sum evaluated term by term.
std::complex<double> exp_b1_sum_direct(Integer z, Integer theta, Modulus n);

/// (1/N^2) sum_{h=1}^{N-1} cot^2(pi h w / N) / h^2.
double cot2_sum_truncated(Integer w, Modulus n);
/// (1/N^2) sum_{h >= 1, h != 0 mod N} cot^2(pi h w / N) / h^2, with the tail
/// for each residue h summed exactly as zeta(2, h/N) / N^2.
double cot2_sum_exact(Integer w, Modulus n);

/// The two two-dimensional mixture contributions of an optimal vertex
/// modified rule, one per w_j = z_j^{-1} z_j' mod N.
struct MixturePair {
  Integer w1 = 0;
  Integer w2 = 0;
  double term_w1 = 0.0;
  double term_w2 = 0.0;

  double total() const { return term_w1 + term_w2; }
};

MixturePair mixture_term_s2(const LatticeRule& rule, const ProductWeights& gamma);

struct MixtureBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Brackets for the s = 2 mixture using the truncated cot^2 sums.
MixtureBounds mixture_bounds_s2(const LatticeRule& rule, const ProductWeights& gamma);

/// Unanchored Sobolev error of the one-dimensional trapezoidal rule.
double wce_trapezoid_1d(Integer n, double gamma1);

struct AverageIdentities {
  double avg_cot2 = 0.0;      // (1/(N-1)) sum_w cot^2(pi w / N)
  double rhs_dedekind = 0.0;  // (N-2)/3
  double avg_S = 0.0;         // average of cot2_sum_truncated over w
  double rhs_avg = 0.0;       // (N-2)/(3N^2) H_{N-1}(2)
  double avg_abscot = 0.0;    // average of (1/N) sum_h |cot(pi h w / N)| / h
  double bound_abscot = 0.0;  // H_{N-1}(1)/N * (6/pi) log N
};

AverageIdentities average_identities(Modulus n);

/// Existence bound for s = 2 with z = (1, w):
/// kor_wce + 11 sqrt(2 gamma_1 gamma_2) / (pi sqrt(48) log 3) * log^2(N) / N.
double prop4_bound(Modulus n, const ProductWeights& gamma, double kor_wce);

/// The two double sums
///   sum_{k,l=1}^{N-1} B1(k/N) B2(<z^{+-1} (k-l)>/N) B1(l/N)
/// in O(N) each through the cot^2 identity.
struct ConjectureSums {
  double with_z = 0.0;
  double with_inverse = 0.0;
  double deviation() const;
};

ConjectureSums conjecture_sums(Integer z, Modulus n);
ConjectureSums conjecture_sums_direct(Integer z, Modulus n);

/// |difference| of the two conjectured-equal double sums (O(N)).
double check_conjecture(Integer z, Modulus n);

}  // namespace vmlattice
