#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "goswf/jacobi.hpp"

namespace goswf {

/// n-point Gauss-Jacobi rule for the weight of `params`: nodes are the zeros
/// of P_n, strictly increasing in (-1, 1), weights positive. Immutable.
class QuadratureRule {
 public:
  QuadratureRule(WeightParams params, std::vector<double> nodes, std::vector<double> weights);

  const WeightParams& params() const noexcept { return params_; }
  std::size_t order() const noexcept { return nodes_.size(); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// sum_j w_j f(y_j) for values sampled at the nodes.
  double integrate(std::span<const double> values) const;

 private:
  WeightParams params_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Golub-Welsch nodes (eigenvalues of the symmetric Jacobi matrix, one Newton
/// polish step) with Christoffel weights w_j = 1 / sum_{k<n} P_k(y_j)^2.
QuadratureRule gauss_jacobi(const WeightParams& params, std::size_t n);

inline constexpr std::size_t kDefaultQuadOrder = 40;
inline constexpr std::size_t kKEpsilonCap = 1000;

/// Smallest admissible working order for bandwidth c: ceil(2 e c) + 1.
std::size_t min_quad_order(double c);

/// log of the interpolation error bound at quadrature order K.
double k_epsilon_log_bound(const WeightParams& params, double c, std::size_t k);

/// Smallest K >= 1 whose error bound is <= epsilon * mu_abs. Throws
/// PrecisionError when no K up to `cap` qualifies.
std::size_t k_epsilon(const WeightParams& params, double c, double epsilon, double mu_abs,
                      std::size_t cap = kKEpsilonCap);

/// max(min_quad_order(c), k_epsilon(...)).
std::size_t working_quad_order(const WeightParams& params, double c, double epsilon,
                               double mu_abs);

}  // namespace goswf
