#pragma once

namespace goswf {

/// Indices and argument of the Whittaker function M_{lambda,mu}(z).
/// Valid when mu + 1/2 > |lambda| and z > 0.
struct WhittakerArgs {
  double lambda;
  double mu;
  double z;
};

/// log Gamma(x) for x > 0.
double ln_gamma(double x);

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), for a, b > 0.
double beta_fn(double a, double b);

/// Term cap of the Kummer series.
inline constexpr int kKummerTermCap = 500;

/// Kummer's confluent hypergeometric function M(a, b, z), summed as its
/// Taylor series. Throws DomainError when b is a non-positive integer and
/// PrecisionError (carrying the last relative term) when the series has not
/// converged after kKummerTermCap terms.
double kummer_m(double a, double b, double z);

/// M_{lambda,mu}(z) = e^{-z/2} z^{1/2+mu} M(1/2 + mu - lambda, 1 + 2 mu, z).
double whittaker_m(const WhittakerArgs& args);

}  // namespace goswf
