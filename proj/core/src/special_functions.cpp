#include "goswf/special_functions.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "goswf/errors.hpp"

namespace goswf {

double ln_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("ln_gamma: argument must be positive and finite, got " +
                      std::to_string(x));
  }
  return boost::math::lgamma(x);
}

double beta_fn(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("beta_fn: arguments must be positive");
  }
  return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

double kummer_m(double a, double b, double z) {
  if (b <= 0.0 && b == std::floor(b)) {
    throw DomainError("kummer_m: b must not be a non-positive integer, got " +
                      std::to_string(b));
  }
  double term = 1.0;
  double sum = 1.0;
  double residual = 1.0;
  // Terms may grow before they decay; only test once past the peak.
  const double settle = std::abs(a) + std::abs(z);
  for (int k = 0; k < kKummerTermCap; ++k) {
    term *= (a + k) * z / ((b + k) * (k + 1));
    sum += term;
    if (!std::isfinite(sum)) {
      throw PrecisionError("kummer_m: series overflowed before converging", residual);
    }
    if (term == 0.0) return sum;
    residual = std::abs(term) / std::abs(sum);
    if (k + 1 >= settle && residual < 1e-16) return sum;
  }
  throw PrecisionError("kummer_m: series did not converge within the term cap",
                       residual);
}

double whittaker_m(const WhittakerArgs& args) {
  const auto [lambda, mu, z] = args;
  if (!(mu + 0.5 > std::abs(lambda))) {
    throw DomainError("whittaker_m: requires mu + 1/2 > |lambda|");
  }
  if (!(z > 0.0)) {
    throw DomainError("whittaker_m: requires z > 0");
  }
  return std::exp(-0.5 * z) * std::pow(z, 0.5 + mu) *
         kummer_m(0.5 + mu - lambda, 1.0 + 2.0 * mu, z);
}

}  // namespace goswf
