#include "goswf/laplace_operator.hpp"

#include <cmath>
#include <string>

#include "goswf/errors.hpp"
#include "goswf/special_functions.hpp"

namespace goswf {

OperatorParams::OperatorParams(WeightParams weight, double c, std::size_t quad_order)
    : weight_(weight), c_(c), quad_order_(quad_order) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("OperatorParams: c must be > 0");
  const std::size_t floor = min_quad_order(c);
  if (quad_order_ == 0) quad_order_ = std::max(kDefaultQuadOrder, floor);
  if (quad_order_ < floor) {
    throw DomainError("OperatorParams: quad_order " + std::to_string(quad_order_) +
                      " below ceil(2ec)+1 = " + std::to_string(floor));
  }
}

SampledFunction::SampledFunction(std::shared_ptr<const QuadratureRule> rule,
                                 std::vector<double> values)
    : rule_(std::move(rule)), values_(std::move(values)) {
  if (!rule_) throw ContractError("SampledFunction: null rule");
  if (values_.size() != rule_->order()) {
    throw ContractError("SampledFunction: " + std::to_string(values_.size()) +
                        " values for a rule of order " + std::to_string(rule_->order()));
  }
}

SampledFunction SampledFunction::sample(std::shared_ptr<const QuadratureRule> rule,
                                        const std::function<double(double)>& f) {
  if (!rule) throw ContractError("SampledFunction: null rule");
  std::vector<double> v;
  v.reserve(rule->order());
  for (double y : rule->nodes()) v.push_back(f(y));
  return SampledFunction(std::move(rule), std::move(v));
}

double SampledFunction::l2_norm() const {
  double s = 0.0;
  const auto w = rule_->weights();
  for (std::size_t j = 0; j < values_.size(); ++j) s += w[j] * values_[j] * values_[j];
  return std::sqrt(s);
}

LaplaceOperator::LaplaceOperator(const OperatorParams& params)
    : params_(params),
      rule_(std::make_shared<const QuadratureRule>(
          gauss_jacobi(params.weight(), params.quad_order()))) {}

SampledFunction LaplaceOperator::sample(const std::function<double(double)>& f) const {
  return SampledFunction::sample(rule_, f);
}

void LaplaceOperator::check_sample(const SampledFunction& g) const {
  if (!(g.rule().params() == params_.weight())) {
    throw ContractError("LaplaceOperator: sampled function lives on a different weight");
  }
}

namespace {

void check_point(double x, const char* who) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw DomainError(std::string(who) + ": point outside [-1, 1]");
  }
}

}  // namespace

double LaplaceOperator::apply_f(const SampledFunction& g, double x) const {
  check_sample(g);
  check_point(x, "apply_f");
  const double c = params_.c();
  const auto y = g.rule().nodes();
  const auto w = g.rule().weights();
  const auto v = g.values();
  double s = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) s += w[j] * std::exp(c * (x * y[j] - 1.0)) * v[j];
  return s;
}

double LaplaceOperator::apply_q(const SampledFunction& g, double x) const {
  check_sample(g);
  check_point(x, "apply_q");
  const auto y = g.rule().nodes();
  const auto w = g.rule().weights();
  const auto v = g.values();
  double s = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) s += w[j] * kernel(x, y[j]) * v[j];
  return s;
}

double LaplaceOperator::kernel(double x, double y, KernelMethod method) const {
  check_point(x, "kernel");
  check_point(y, "kernel");
  const double c = params_.c();
  const double s = x + y;
  if (method == KernelMethod::whittaker && s >= 0.0) {
    const double a = params_.weight().alpha();
    const double b = params_.weight().beta();
    const double scale = std::exp(-2.0 * c) * params_.weight().total_mass();
    if (s == 0.0) return scale;
    const double z = 2.0 * c * s;
    const WhittakerArgs args{0.5 * (a - b), 0.5 * (a + b + 1.0), z};
    return scale * whittaker_m(args) / std::pow(z, 0.5 * (a + b + 2.0));
  }
  const auto t = rule_->nodes();
  const auto w = rule_->weights();
  double sum = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) sum += w[j] * std::exp(c * (t[j] * s - 2.0));
  return sum;
}

DenseMatrix<Complex> fourier_matrix(double c_tilde, std::size_t n_quad) {
  if (!(c_tilde > 0.0)) throw DomainError("fourier_matrix: c_tilde must be > 0");
  const QuadratureRule rule = gauss_jacobi(WeightParams(0.0, 0.0), n_quad);
  const auto y = rule.nodes();
  const auto w = rule.weights();
  DenseMatrix<Complex> b(n_quad, n_quad);
  for (std::size_t j = 0; j < n_quad; ++j) {
    for (std::size_t k = 0; k < n_quad; ++k) {
      b(j, k) = std::sqrt(w[j] * w[k]) * std::polar(1.0, c_tilde * y[j] * y[k]);
    }
  }
  return b;
}

}  // namespace goswf
