#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace goswf {

/// Exponents of the Jacobi weight (1 - x)^alpha (1 + x)^beta on (-1, 1).
/// Both must exceed -1.
class WeightParams {
 public:
  WeightParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// (1 - x)^alpha (1 + x)^beta.
  double weight(double x) const;

  /// Integral of the weight over (-1, 1): 2^{alpha+beta+1} B(alpha+1, beta+1).
  double total_mass() const;

  bool symmetric() const noexcept { return alpha_ == beta_; }

  friend bool operator==(const WeightParams&, const WeightParams&) = default;

 private:
  double alpha_;
  double beta_;
};

/// Coefficients of the orthonormal three-term recurrence at one order n:
///   P_{n+1} = (A_n x - B_n) P_n - C_n P_{n-1}
///   x P_n   = alpha_n P_{n+1} + beta_n P_n + gamma_n P_{n-1}
/// with P the polynomials normalized in L^2(w).
struct JacobiRecurrence {
  std::size_t order;
  double a_norm;  ///< squared L^2(w) norm of the classical P_n
  double cap_a;
  double cap_b;
  double cap_c;  ///< 0 at order 0
  double lower_alpha;
  double lower_beta;
  double lower_gamma;  ///< 0 at order 0
};

/// log of the squared norm of the classical Jacobi polynomial P_n.
double log_norm_constant(const WeightParams& params, std::size_t n);
double norm_constant(const WeightParams& params, std::size_t n);

/// Leading coefficient of the classical P_n.
double leading_coefficient(const WeightParams& params, std::size_t n);

JacobiRecurrence recurrence(const WeightParams& params, std::size_t n);

/// Recurrence coefficients precomputed for orders 0..max_order.
class JacobiTable {
 public:
  JacobiTable(const WeightParams& params, std::size_t max_order);

  const WeightParams& params() const noexcept { return params_; }
  std::size_t max_order() const noexcept { return rec_.size() - 1; }
  const JacobiRecurrence& operator[](std::size_t n) const { return rec_[n]; }

  /// Orthonormal polynomials of orders 0..values.size()-1 at x.
  void eval(double x, std::span<double> values) const;

  /// Values plus first and (optionally) second derivatives, via the
  /// differentiated recurrence. All spans must share one size; d2 may be empty.
  void eval_with_derivatives(double x, std::span<double> values,
                             std::span<double> d1, std::span<double> d2) const;

  /// sum_k coeffs[k] P_k(x), by Clenshaw's backward recurrence.
  double sum_series(std::span<const double> coeffs, double x) const;

 private:
  void check(double x, std::size_t count) const;

  WeightParams params_;
  std::vector<JacobiRecurrence> rec_;
};

/// Orthonormal P_n(x) for x in [-1, 1].
double eval_normalized(const WeightParams& params, std::size_t n, double x);

/// d/dx of the orthonormal P_n at x in [-1, 1].
double eval_derivative(const WeightParams& params, std::size_t n, double x);

/// (alpha_k, beta_k, gamma_k): the action of multiplication by x.
std::array<double, 3> x_action(const WeightParams& params, std::size_t k);

/// Coefficients of P_{k+2}, P_{k+1}, P_k, P_{k-1}, P_{k-2} in x^2 P_k.
/// Entries that would refer to negative orders are 0.
std::array<double, 5> x_squared_action(const WeightParams& params, std::size_t k);

/// Eigenvalue k (k + alpha + beta + 1) of the Jacobi operator.
double chi_zero(const WeightParams& params, std::size_t k);

}  // namespace goswf
