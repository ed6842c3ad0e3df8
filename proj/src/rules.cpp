#include "vmlattice/rules.hpp"

#include <cmath>
#include <string>

namespace vmlattice {

namespace {

using Wide = __int128;

Wide checked_power(Integer base, Eigen::Index exponent) {
  Wide result = 1;
  for (Eigen::Index i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(result, static_cast<Wide>(base), &result)) {
      throw Overflow("N^(s+1) exceeds 128-bit range in vertex weight computation");
    }
  }
  return result;
}

}  // namespace

LatticeRule::LatticeRule(IntegerVector z, Modulus n) : z_(std::move(z)), n_(n) {
  if (z_.size() < 1) throw DimensionError("generating vector must have at least one component");
  for (Eigen::Index j = 0; j < z_.size(); ++j) {
    z_(j) = reduce(z_(j), n_);
    if (gcd(z_(j), n_.value()) != 1) {
      throw NotInvertible("generating vector component z_" + std::to_string(j + 1) + " = " +
                          std::to_string(z_(j)) + " is not coprime to N = " + std::to_string(n_.value()));
    }
  }
}

IntegerVector LatticeRule::to_vector(std::initializer_list<Integer> z) {
  IntegerVector v(static_cast<Eigen::Index>(z.size()));
  Eigen::Index j = 0;
  for (auto zj : z) v(j++) = zj;
  return v;
}

Integer LatticeRule::numerator(Integer k, Eigen::Index j) const { return mul_mod(k, z_(j), n_); }

RationalPointSet lattice_points(const LatticeRule& rule) {
  RationalPointSet points{IntegerMatrix(rule.size(), rule.dimension()), rule.size()};
  for (Integer k = 0; k < rule.size(); ++k) {
    for (Eigen::Index j = 0; j < rule.dimension(); ++j) points.numerators(k, j) = rule.numerator(k, j);
  }
  return points;
}

std::vector<int> VertexWeights::corner_coordinates(unsigned corner, Eigen::Index dimension) {
  std::vector<int> a(static_cast<std::size_t>(dimension));
  for (Eigen::Index j = 0; j < dimension; ++j) a[static_cast<std::size_t>(j)] = (corner >> j) & 1U;
  return a;
}

VertexWeights trapezoidal_weights(Eigen::Index s, Modulus n) {
  if (s < 1 || s > 30) throw DimensionError("dimension must be in 1..30");
  const auto corners = Eigen::Index{1} << s;
  return {s, Eigen::VectorXd::Constant(corners, 1.0 / (std::ldexp(1.0, static_cast<int>(s)) *
                                                      static_cast<double>(n.value())))};
}

VertexWeights optimal_vertex_weights(const LatticeRule& rule) {
  const Eigen::Index s = rule.dimension();
  if (s > 30) throw DimensionError("dimension must be at most 30");
  const Integer n = rule.size();
  const auto corners = std::size_t{1} << s;
  // N^(s+1) bounds every subset sum; 2^s times it must also fit
  const Wide denominator_core = checked_power(n, s + 1);
  Wide scaled_denominator = 0;
  if (__builtin_mul_overflow(denominator_core, static_cast<Wide>(corners), &scaled_denominator)) {
    throw Overflow("2^s N^(s+1) exceeds 128-bit range in vertex weight computation");
  }

  // sums[u] = sum_{k=1}^{N-1} prod_{j in u} n_kj prod_{j not in u} (N - n_kj)
  std::vector<Wide> sums(corners, 0);
  std::vector<Wide> partial(corners);
  for (Integer k = 1; k < n; ++k) {
    partial[0] = 1;
    std::size_t filled = 1;
    for (Eigen::Index j = 0; j < s; ++j) {
      const Integer x = rule.numerator(k, j);
      for (std::size_t u = 0; u < filled; ++u) {
        partial[u + filled] = partial[u] * x;
        partial[u] *= (n - x);
      }
      filled *= 2;
    }
    for (std::size_t u = 0; u < corners; ++u) sums[u] += partial[u];
  }

  VertexWeights result{s, Eigen::VectorXd(static_cast<Eigen::Index>(corners))};
  for (std::size_t u = 0; u < corners; ++u) {
    // w*_u = (N^(s+1) - 2^s S_u) / (2^s N^(s+1))
    const Wide numerator = denominator_core - static_cast<Wide>(corners) * sums[u];
    result.weights(static_cast<Eigen::Index>(u)) =
        static_cast<double>(static_cast<long double>(numerator) / static_cast<long double>(scaled_denominator));
  }
  return result;
}

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::plain:
      return "plain";
    case Scheme::trapezoidal:
      return "trapezoidal";
    case Scheme::optimal:
      return "optimal";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "plain") return Scheme::plain;
  if (name == "trapezoidal") return Scheme::trapezoidal;
  if (name == "optimal") return Scheme::optimal;
  throw DomainError("unknown scheme '" + std::string(name) + "'");
}

WeightedRule::WeightedRule(RationalPointSet nodes, Eigen::VectorXd weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() != weights_.size()) throw LengthMismatch("node and weight counts differ");
  if (nodes_.size() < 1 || nodes_.dimension() < 1) throw DimensionError("empty cubature rule");
  if (nodes_.denominator < 1) throw DomainError("node denominator must be positive");
  if ((nodes_.numerators.array() < 0).any() || (nodes_.numerators.array() > nodes_.denominator).any()) {
    throw DomainError("cubature node outside [0,1]^s");
  }
}

Eigen::VectorXd WeightedRule::node(Eigen::Index i) const {
  return nodes_.numerators.row(i).transpose().cast<double>() / static_cast<double>(nodes_.denominator);
}

double WeightedRule::weight_sum() const {
  CompensatedSum<double> sum;
  for (Eigen::Index i = 0; i < weights_.size(); ++i) sum += weights_(i);
  return sum.value();
}

WeightedRule vertex_modified_rule(const LatticeRule& rule, const VertexWeights& corners) {
  const Eigen::Index s = rule.dimension();
  if (corners.dimension != s) throw DimensionError("vertex weights and lattice differ in dimension");
  const Integer n = rule.size();
  const auto corner_count = static_cast<Eigen::Index>(corners.corner_count());
  const Eigen::Index m = corner_count + n - 1;
  RationalPointSet nodes{IntegerMatrix(m, s), n};
  Eigen::VectorXd weights(m);
  for (Eigen::Index c = 0; c < corner_count; ++c) {
    for (Eigen::Index j = 0; j < s; ++j) nodes.numerators(c, j) = ((c >> j) & 1) ? n : 0;
    weights(c) = corners.weights(c);
  }
  for (Integer k = 1; k < n; ++k) {
    const Eigen::Index row = corner_count + k - 1;
    for (Eigen::Index j = 0; j < s; ++j) nodes.numerators(row, j) = rule.numerator(k, j);
    weights(row) = 1.0 / static_cast<double>(n);
  }
  return {std::move(nodes), std::move(weights)};
}

VertexWeights scheme_vertex_weights(const LatticeRule& rule, Scheme scheme) {
  switch (scheme) {
    case Scheme::plain: {
      VertexWeights w{rule.dimension(), Eigen::VectorXd::Zero(Eigen::Index{1} << rule.dimension())};
      w.weights(0) = 1.0 / static_cast<double>(rule.size());
      return w;
    }
    case Scheme::trapezoidal:
      return trapezoidal_weights(rule.dimension(), rule.modulus());
    case Scheme::optimal:
      return optimal_vertex_weights(rule);
  }
  throw DomainError("unknown scheme");
}

WeightedRule build_rule(const LatticeRule& rule, Scheme scheme) {
  if (scheme == Scheme::plain) {
    return {lattice_points(rule),
            Eigen::VectorXd::Constant(rule.size(), 1.0 / static_cast<double>(rule.size()))};
  }
  return vertex_modified_rule(rule, scheme_vertex_weights(rule, scheme));
}

}  // namespace vmlattice
