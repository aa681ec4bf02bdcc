#include "goswf/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "goswf/eigencore.hpp"
#include "goswf/errors.hpp"
#include "goswf/special_functions.hpp"

namespace goswf {

QuadratureRule::QuadratureRule(WeightParams params, std::vector<double> nodes,
                               std::vector<double> weights)
    : params_(params), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.empty() || nodes_.size() != weights_.size()) {
    throw ContractError("QuadratureRule: nodes and weights must be non-empty and equal length");
  }
}

double QuadratureRule::integrate(std::span<const double> values) const {
  if (values.size() != nodes_.size()) {
    throw ContractError("QuadratureRule::integrate: expected " + std::to_string(order()) +
                        " samples, got " + std::to_string(values.size()));
  }
  double s = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) s += weights_[j] * values[j];
  return s;
}

QuadratureRule gauss_jacobi(const WeightParams& params, std::size_t n) {
  if (n == 0) throw DomainError("gauss_jacobi: order must be at least 1");

  JacobiTable table(params, n);
  SymmetricMatrix jac(n);
  for (std::size_t k = 0; k < n; ++k) {
    jac.set(k, k, table[k].lower_beta);
    if (k + 1 < n) jac.set(k + 1, k, table[k].lower_alpha);
  }
  std::vector<double> nodes = sym_eig(jac).values;

  std::vector<double> p(n + 1), dp(n + 1);
  for (double& y : nodes) {
    table.eval_with_derivatives(y, p, dp, {});
    if (dp[n] != 0.0) {
      const double polished = y - p[n] / dp[n];
      if (polished > -1.0 && polished < 1.0) y = polished;
    }
  }
  if (params.symmetric()) {
    for (std::size_t j = 0; j < n / 2; ++j) {
      const double h = 0.5 * (nodes[n - 1 - j] - nodes[j]);
      nodes[j] = -h;
      nodes[n - 1 - j] = h;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
  }

  std::vector<double> weights(n);
  for (std::size_t j = 0; j < n; ++j) {
    table.eval(nodes[j], std::span<double>(p).first(n));
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += p[k] * p[k];
    weights[j] = 1.0 / s;
  }
  if (params.symmetric()) {
    for (std::size_t j = 0; j < n / 2; ++j) {
      const double w = 0.5 * (weights[j] + weights[n - 1 - j]);
      weights[j] = w;
      weights[n - 1 - j] = w;
    }
  }
  return QuadratureRule(params, std::move(nodes), std::move(weights));
}

std::size_t min_quad_order(double c) {
  return static_cast<std::size_t>(std::ceil(2.0 * std::numbers::e * c)) + 1;
}

double k_epsilon_log_bound(const WeightParams& params, double c, std::size_t k) {
  const double a = params.alpha();
  const double b = params.beta();
  const double kk = static_cast<double>(k);
  return 2.0 * c - 0.5 * std::log(2.0 * kk * std::numbers::pi) +
         (a + b + 1.0) * std::numbers::ln2 + ln_gamma(kk + 1.0) + ln_gamma(kk + a + b + 1.0) +
         ln_gamma(kk + a + 1.0) + ln_gamma(kk + b + 1.0) - std::log(2.0 * kk + a + b + 1.0) -
         2.0 * ln_gamma(2.0 * kk + a + b + 1.0);
}

std::size_t k_epsilon(const WeightParams& params, double c, double epsilon, double mu_abs,
                      std::size_t cap) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("k_epsilon: epsilon must lie in (0, 1)");
  }
  if (!(mu_abs > 0.0)) throw DomainError("k_epsilon: mu_abs must be positive");
  if (!(c > 0.0)) throw DomainError("k_epsilon: c must be positive");
  const double target = std::log(epsilon) + std::log(mu_abs);
  for (std::size_t k = 1; k <= cap; ++k) {
    if (k_epsilon_log_bound(params, c, k) <= target) return k;
  }
  throw PrecisionError("k_epsilon: requested accuracy unreachable below order " +
                           std::to_string(cap),
                       std::exp(k_epsilon_log_bound(params, c, cap) - target));
}

std::size_t working_quad_order(const WeightParams& params, double c, double epsilon,
                               double mu_abs) {
  return std::max(min_quad_order(c), k_epsilon(params, c, epsilon, mu_abs));
}

}  // namespace goswf
