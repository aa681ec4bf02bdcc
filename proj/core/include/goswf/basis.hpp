#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "goswf/dense_matrix.hpp"
#include "goswf/eigencore.hpp"
#include "goswf/jacobi.hpp"
#include "goswf/laplace_operator.hpp"
#include "goswf/quadrature.hpp"

namespace goswf {

inline constexpr double kPrecisionFloor = 1e-14;
inline constexpr std::size_t kTruncMargin = 20;
inline constexpr std::size_t kTruncCap = 1024;
inline constexpr double kTailTolerance = 1e-12;
inline constexpr double kChiSeparation = 1e-10;

/// Default Jacobi truncation: n_max + max(20, ceil(2c)).
std::size_t default_trunc_order(double c, std::size_t n_max);

/// K x K matrix of the commuting differential operator
///   -[(1-x^2) d^2 + (b - a - (a+b+2) x) d + c^2 x^2 + c (b - a) x]
/// in the orthonormal Jacobi basis. Bandwidth 2; eigenvalues are chi_n(c).
BandedSymmetricMatrix build_ode_matrix(const OperatorParams& op, std::size_t trunc);

/// The first n_max GOSWFs as Jacobi series, with chi_n(c) and mu_n(c).
/// psi_n has unit L^2(w) norm; its largest-magnitude coefficient is positive.
class GoswfBasis {
 public:
  GoswfBasis(OperatorParams op, DenseMatrix<double> coeffs, std::vector<double> chi,
             double precision_floor);

  const OperatorParams& params() const noexcept { return op_; }
  std::size_t size() const noexcept { return coeffs_.rows(); }
  std::size_t trunc_order() const noexcept { return coeffs_.cols(); }
  double precision_floor() const noexcept { return floor_; }

  /// coeffs(n, k) = d_k^{(n)}.
  const DenseMatrix<double>& coeffs() const noexcept { return coeffs_; }
  std::span<const double> coeffs(std::size_t n) const;
  std::span<const double> chi() const noexcept { return chi_; }
  std::span<const double> mu() const noexcept { return mu_; }
  double mu(std::size_t n) const;
  /// |mu_n| below the precision floor.
  bool below_floor(std::size_t n) const;

  const JacobiTable& table() const noexcept { return *table_; }
  const LaplaceOperator& op() const noexcept { return *laplace_; }

 private:
  OperatorParams op_;
  DenseMatrix<double> coeffs_;
  std::vector<double> chi_;
  std::vector<double> mu_;
  double floor_;
  std::shared_ptr<const JacobiTable> table_;
  std::shared_ptr<const LaplaceOperator> laplace_;
};

/// Method 1: eigendecomposition of build_ode_matrix. trunc 0 selects
/// default_trunc_order; explicit values must be >= n_max + kTruncMargin.
/// The order is doubled (up to kTruncCap) while the last 5 coefficients of
/// any retained eigenvector exceed kTailTolerance.
GoswfBasis solve_method1(const OperatorParams& op, std::size_t n_max, std::size_t trunc = 0,
                         double precision_floor = kPrecisionFloor);

double eval_psi(const GoswfBasis& basis, std::size_t n, double x);

struct PsiDerivatives {
  double value;
  double d1;
  double d2;
};

PsiDerivatives eval_psi_derivatives(const GoswfBasis& basis, std::size_t n, double x);

/// psi_n at the nodes of `rule`.
std::vector<double> sample_psi(const GoswfBasis& basis, std::size_t n, const QuadratureRule& rule);

/// Rayleigh quotient sum_jk w_j w_k e^{c(y_j y_k - 1)} v_j v_k on `rule`,
/// accumulated in 113-bit arithmetic.
double rayleigh_mu(const QuadratureRule& rule, double c, std::span<const double> values);

/// mu_n recomputed from the series on the operator's rule.
double compute_mu(const GoswfBasis& basis, std::size_t n);

/// Candidate expressions for d mu_n / dc.
struct MuDerivative {
  double i_unit;     ///< int v psi psi' w dv with ||psi|| = 1
  double variant_a;  ///< (1/mu)(I/c - mu^2), I taken with ||psi|| = mu
  double variant_b;  ///< (1/mu)(I/c - 1), I taken with ||psi|| = 1
  double corrected;  ///< mu (I_unit/c - 1)
};

/// Throws PrecisionError when mu_n is below the precision floor.
MuDerivative mu_derivative(const GoswfBasis& basis, std::size_t n);

/// [mu_n(c+h) - mu_n(c-h)] / 2h through Method 1 at the trunc order of `basis`.
double mu_central_difference(const GoswfBasis& basis, std::size_t n, double h = 1e-4);

}  // namespace goswf
