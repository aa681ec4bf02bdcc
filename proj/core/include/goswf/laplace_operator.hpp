#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "goswf/eigencore.hpp"
#include "goswf/jacobi.hpp"
#include "goswf/quadrature.hpp"

namespace goswf {

/// Weight, bandwidth c > 0 and quadrature order of the transform
///   F_c[phi](x) = int_{-1}^{1} e^{c(xy - 1)} phi(y) w(y) dy.
class OperatorParams {
 public:
  /// quad_order 0 selects max(kDefaultQuadOrder, min_quad_order(c)).
  OperatorParams(WeightParams weight, double c, std::size_t quad_order = 0);

  const WeightParams& weight() const noexcept { return weight_; }
  double c() const noexcept { return c_; }
  std::size_t quad_order() const noexcept { return quad_order_; }

  friend bool operator==(const OperatorParams&, const OperatorParams&) = default;

 private:
  WeightParams weight_;
  double c_;
  std::size_t quad_order_;
};

/// Values of a function at the nodes of a quadrature rule.
class SampledFunction {
 public:
  SampledFunction(std::shared_ptr<const QuadratureRule> rule, std::vector<double> values);

  /// Samples f at the nodes of `rule`.
  static SampledFunction sample(std::shared_ptr<const QuadratureRule> rule,
                                const std::function<double(double)>& f);

  const QuadratureRule& rule() const noexcept { return *rule_; }
  const std::shared_ptr<const QuadratureRule>& rule_ptr() const noexcept { return rule_; }
  std::span<const double> values() const noexcept { return values_; }

  /// L^2(w) norm by the attached rule.
  double l2_norm() const;

 private:
  std::shared_ptr<const QuadratureRule> rule_;
  std::vector<double> values_;
};

enum class KernelMethod { direct, whittaker };

/// F_c and Q_c = F_c* F_c discretized on the Gauss-Jacobi rule of order
/// params.quad_order(). Immutable; safe to share between threads.
class LaplaceOperator {
 public:
  explicit LaplaceOperator(const OperatorParams& params);

  const OperatorParams& params() const noexcept { return params_; }
  const QuadratureRule& rule() const noexcept { return *rule_; }
  const std::shared_ptr<const QuadratureRule>& rule_ptr() const noexcept { return rule_; }

  SampledFunction sample(const std::function<double(double)>& f) const;

  /// sum_j w_j e^{c(x y_j - 1)} g(y_j), on the rule g is sampled on.
  double apply_f(const SampledFunction& g, double x) const;

  /// sum_j w_j K(x, y_j) g(y_j), K evaluated directly on the operator's rule.
  double apply_q(const SampledFunction& g, double x) const;

  /// K(x, y) = e^{-2c} int e^{ct(x+y)} w(t) dt. The whittaker method uses the
  /// closed form for x + y > 0, the limit value at x + y = 0 and falls back
  /// to the direct sum for x + y < 0.
  double kernel(double x, double y, KernelMethod method = KernelMethod::direct) const;

 private:
  void check_sample(const SampledFunction& g) const;

  OperatorParams params_;
  std::shared_ptr<const QuadratureRule> rule_;
};

/// B_jk = sqrt(w_j w_k) e^{i c y_j y_k} on the n_quad-point Gauss-Legendre
/// rule. Complex symmetric (not Hermitian for c > 0).
DenseMatrix<Complex> fourier_matrix(double c_tilde, std::size_t n_quad);

}  // namespace goswf
