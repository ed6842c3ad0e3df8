#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "vmlattice/errors.hpp"
#include "vmlattice/special.hpp"
#include "vmlattice/summation.hpp"
#include "vmlattice/types.hpp"

namespace vmlattice {

/// Rank-1 lattice {k z / N}, k = 0..N-1, with every z_j coprime to N.
class LatticeRule {
 public:
  LatticeRule(IntegerVector z, Modulus n);
  LatticeRule(std::initializer_list<Integer> z, Integer n) : LatticeRule(to_vector(z), Modulus(n)) {}

  const IntegerVector& generator() const { return z_; }
  Integer generator(Eigen::Index j) const { return z_(j); }
  Modulus modulus() const { return n_; }
  Integer size() const { return n_.value(); }
  Eigen::Index dimension() const { return z_.size(); }

  /// Numerator of coordinate j of point k, i.e. k z_j mod N.
  Integer numerator(Integer k, Eigen::Index j) const;

 private:
  static IntegerVector to_vector(std::initializer_list<Integer> z);

  IntegerVector z_;
  Modulus n_;
};

/// Nodes stored as a (count x s) numerator matrix over one denominator.
struct RationalPointSet {
  IntegerMatrix numerators;
  Integer denominator = 1;

  Eigen::Index size() const { return numerators.rows(); }
  Eigen::Index dimension() const { return numerators.cols(); }
  RationalPoint point(Eigen::Index i) const { return {numerators.row(i).transpose(), denominator}; }
  RationalNode coordinate(Eigen::Index i, Eigen::Index j) const { return {numerators(i, j), denominator}; }
};

RationalPointSet lattice_points(const LatticeRule& rule);

/// Weights of the 2^s cube corners. Corner index bit j-1 holds a_j, so the
/// corners are enumerated by binary counting with a_1 least significant.
struct VertexWeights {
  Eigen::Index dimension = 0;
  Eigen::VectorXd weights;

  std::size_t corner_count() const { return std::size_t{1} << dimension; }
  double operator[](unsigned corner) const { return weights(corner); }
  static std::vector<int> corner_coordinates(unsigned corner, Eigen::Index dimension);
};

VertexWeights trapezoidal_weights(Eigen::Index s, Modulus n);

/// Weights making the vertex modified rule exact for every multilinear
/// polynomial: w*(a) = 2^-s - (1/N) sum_{k=1}^{N-1} l_u({k z / N}), u the
/// support of a. The sums over l_u are carried out in exact integers.
VertexWeights optimal_vertex_weights(const LatticeRule& rule);

enum class Scheme { plain, trapezoidal, optimal };

std::string_view to_string(Scheme scheme);
Scheme parse_scheme(std::string_view name);

/// A cubature rule sum_k w_k f(x_k) with exact nodes in [0,1]^s.
class WeightedRule {
 public:
  WeightedRule(RationalPointSet nodes, Eigen::VectorXd weights);

  Eigen::Index size() const { return nodes_.size(); }
  Eigen::Index dimension() const { return nodes_.dimension(); }
  Integer denominator() const { return nodes_.denominator; }
  const RationalPointSet& nodes() const { return nodes_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  double weight(Eigen::Index i) const { return weights_(i); }
  Eigen::VectorXd node(Eigen::Index i) const;
  /// Weight sum with compensated accumulation.
  double weight_sum() const;

 private:
  RationalPointSet nodes_;
  Eigen::VectorXd weights_;
};

/// Vertex modified rule: the 2^s corners (in corner order) followed by the
/// interior lattice points k = 1..N-1 at weight 1/N.
WeightedRule vertex_modified_rule(const LatticeRule& rule, const VertexWeights& corners);

/// plain: the N lattice points at 1/N; trapezoidal/optimal: vertex modified.
WeightedRule build_rule(const LatticeRule& rule, Scheme scheme);

/// Corner weights of a scheme; the plain rule puts 1/N on the origin only.
VertexWeights scheme_vertex_weights(const LatticeRule& rule, Scheme scheme);

template <typename F>
double apply_rule(const WeightedRule& rule, F&& f) {
  CompensatedSum<double> sum;
  for (Eigen::Index i = 0; i < rule.size(); ++i) {
    const Eigen::VectorXd x = rule.node(i);
    sum += rule.weight(i) * static_cast<double>(f(x));
  }
  return sum.value();
}

}  // namespace vmlattice
