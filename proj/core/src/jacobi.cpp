#include "goswf/jacobi.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "goswf/errors.hpp"
#include "goswf/special_functions.hpp"

namespace goswf {

WeightParams::WeightParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    throw DomainError("WeightParams: alpha and beta must be finite and > -1");
  }
}

double WeightParams::weight(double x) const {
  return std::pow(1.0 - x, alpha_) * std::pow(1.0 + x, beta_);
}

double WeightParams::total_mass() const {
  return std::exp2(alpha_ + beta_ + 1.0) * beta_fn(alpha_ + 1.0, beta_ + 1.0);
}

double log_norm_constant(const WeightParams& params, std::size_t n) {
  const double a = params.alpha();
  const double b = params.beta();
  const double nn = static_cast<double>(n);
  // (2n + a + b + 1) Gamma(n + a + b + 1), folded into Gamma(a + b + 2) at
  // n = 0 so that a + b = -1 stays finite.
  const double tail = n == 0 ? ln_gamma(a + b + 2.0)
                             : std::log(2.0 * nn + a + b + 1.0) + ln_gamma(nn + a + b + 1.0);
  return (a + b + 1.0) * std::numbers::ln2 + ln_gamma(nn + a + 1.0) +
         ln_gamma(nn + b + 1.0) - ln_gamma(nn + 1.0) - tail;
}

double norm_constant(const WeightParams& params, std::size_t n) {
  return std::exp(log_norm_constant(params, n));
}

double leading_coefficient(const WeightParams& params, std::size_t n) {
  if (n == 0) return 1.0;
  const double s = params.alpha() + params.beta() + 1.0;
  const double nn = static_cast<double>(n);
  return std::exp(ln_gamma(2.0 * nn + s) - nn * std::numbers::ln2 -
                  ln_gamma(nn + 1.0) - ln_gamma(nn + s));
}

JacobiRecurrence recurrence(const WeightParams& params, std::size_t n) {
  const double a = params.alpha();
  const double b = params.beta();
  const double nn = static_cast<double>(n);
  const double ab = a + b;
  const double log_an = log_norm_constant(params, n);
  const double ratio_up = std::exp(0.5 * (log_an - log_norm_constant(params, n + 1)));

  JacobiRecurrence r{};
  r.order = n;
  r.a_norm = std::exp(log_an);
  if (n == 0) {
    r.cap_a = ratio_up * 0.5 * (ab + 2.0);
    r.cap_b = ratio_up * 0.5 * (b - a);
    r.cap_c = 0.0;
  } else {
    const double denom = 2.0 * (nn + 1.0) * (nn + ab + 1.0);
    r.cap_a = ratio_up * (2.0 * nn + ab + 1.0) * (2.0 * nn + ab + 2.0) / denom;
    r.cap_b = ratio_up * (b * b - a * a) * (2.0 * nn + ab + 1.0) / (denom * (2.0 * nn + ab));
    const double ratio_two =
        std::exp(0.5 * (log_norm_constant(params, n - 1) - log_norm_constant(params, n + 1)));
    r.cap_c = ratio_two * (a + nn) * (b + nn) * (2.0 * nn + ab + 2.0) /
              ((nn + 1.0) * (nn + ab + 1.0) * (2.0 * nn + ab));
  }
  r.lower_alpha = 1.0 / r.cap_a;
  r.lower_beta = r.cap_b / r.cap_a;
  r.lower_gamma = r.cap_c / r.cap_a;
  return r;
}

JacobiTable::JacobiTable(const WeightParams& params, std::size_t max_order)
    : params_(params) {
  rec_.reserve(max_order + 1);
  for (std::size_t n = 0; n <= max_order; ++n) rec_.push_back(recurrence(params, n));
}

void JacobiTable::check(double x, std::size_t count) const {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw DomainError("Jacobi evaluation requires x in [-1, 1], got " + std::to_string(x));
  }
  if (count > rec_.size()) {
    throw DomainError("JacobiTable: requested " + std::to_string(count) +
                      " orders, table holds " + std::to_string(rec_.size()));
  }
}

void JacobiTable::eval(double x, std::span<double> values) const {
  check(x, values.size());
  if (values.empty()) return;
  values[0] = 1.0 / std::sqrt(rec_[0].a_norm);
  for (std::size_t n = 0; n + 1 < values.size(); ++n) {
    const auto& r = rec_[n];
    const double prev = n == 0 ? 0.0 : values[n - 1];
    values[n + 1] = (r.cap_a * x - r.cap_b) * values[n] - r.cap_c * prev;
  }
}

void JacobiTable::eval_with_derivatives(double x, std::span<double> values,
                                        std::span<double> d1,
                                        std::span<double> d2) const {
  check(x, values.size());
  const bool second = !d2.empty();
  if (d1.size() != values.size() || (second && d2.size() != values.size())) {
    throw ContractError("eval_with_derivatives: span sizes differ");
  }
  if (values.empty()) return;
  values[0] = 1.0 / std::sqrt(rec_[0].a_norm);
  d1[0] = 0.0;
  if (second) d2[0] = 0.0;
  for (std::size_t n = 0; n + 1 < values.size(); ++n) {
    const auto& r = rec_[n];
    const double lin = r.cap_a * x - r.cap_b;
    const double p0 = n == 0 ? 0.0 : values[n - 1];
    const double q0 = n == 0 ? 0.0 : d1[n - 1];
    values[n + 1] = lin * values[n] - r.cap_c * p0;
    d1[n + 1] = r.cap_a * values[n] + lin * d1[n] - r.cap_c * q0;
    if (second) {
      const double s0 = n == 0 ? 0.0 : d2[n - 1];
      d2[n + 1] = 2.0 * r.cap_a * d1[n] + lin * d2[n] - r.cap_c * s0;
    }
  }
}

double JacobiTable::sum_series(std::span<const double> coeffs, double x) const {
  check(x, coeffs.size());
  if (coeffs.empty()) return 0.0;
  double b1 = 0.0;  // b_{k+1}
  double b2 = 0.0;  // b_{k+2}
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const auto& r = rec_[k];
    const double c_next = k + 1 < rec_.size() ? rec_[k + 1].cap_c : 0.0;
    const double bk = coeffs[k] + (r.cap_a * x - r.cap_b) * b1 - c_next * b2;
    b2 = b1;
    b1 = bk;
  }
  return b1 / std::sqrt(rec_[0].a_norm);
}

double eval_normalized(const WeightParams& params, std::size_t n, double x) {
  JacobiTable table(params, n);
  std::vector<double> v(n + 1);
  table.eval(x, v);
  return v[n];
}

double eval_derivative(const WeightParams& params, std::size_t n, double x) {
  JacobiTable table(params, n);
  std::vector<double> v(n + 1), d(n + 1);
  table.eval_with_derivatives(x, v, d, {});
  return d[n];
}

std::array<double, 3> x_action(const WeightParams& params, std::size_t k) {
  const auto r = recurrence(params, k);
  return {r.lower_alpha, r.lower_beta, r.lower_gamma};
}

std::array<double, 5> x_squared_action(const WeightParams& params, std::size_t k) {
  const auto cur = x_action(params, k);
  const auto next = x_action(params, k + 1);
  const std::array<double, 3> prev = k >= 1 ? x_action(params, k - 1)
                                            : std::array<double, 3>{0.0, 0.0, 0.0};
  const auto [ak, bk, gk] = cur;
  return {
      ak * next[0],
      ak * (next[1] + bk),
      ak * next[2] + bk * bk + gk * prev[0],
      k >= 1 ? gk * (bk + prev[1]) : 0.0,
      k >= 2 ? gk * prev[2] : 0.0,
  };
}

double chi_zero(const WeightParams& params, std::size_t k) {
  const double kk = static_cast<double>(k);
  return kk * (kk + params.alpha() + params.beta() + 1.0);
}

}  // namespace goswf
