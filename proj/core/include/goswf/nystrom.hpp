#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "goswf/basis.hpp"
#include "goswf/dense_matrix.hpp"
#include "goswf/laplace_operator.hpp"
#include "goswf/quadrature.hpp"

namespace goswf {

/// Method 2: the symmetrized matrix B_jk = sqrt(w_j w_k) e^{c(y_j y_k - 1)}
/// on an n_quad-point Gauss-Jacobi rule and its eigenpairs, mu descending.
/// Decomposition and interpolation run in 113-bit arithmetic; accessors
/// round to double. Immutable and shareable.
class NystromSystem {
 public:
  const OperatorParams& params() const noexcept;
  const QuadratureRule& rule() const noexcept;
  std::size_t order() const noexcept;

  double mu(std::size_t n) const;
  std::vector<double> mu_values() const;

  /// Unit eigenvector v_n of B (largest-magnitude component positive).
  std::vector<double> eigenvector(std::size_t n) const;

  /// psi_n(y_j) = v_n[j] / sqrt(w_j).
  std::vector<double> node_values(std::size_t n) const;

  /// psi_n(x) = (1/mu_n) sum_j w_j e^{c(x y_j - 1)} psi_n(y_j).
  double eval(std::size_t n, double x) const;

  /// B rounded to double.
  SymmetricMatrix matrix() const;

  struct Impl;

 private:
  friend NystromSystem solve_method2_nystrom(const OperatorParams&, std::size_t);
  explicit NystromSystem(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  void check(std::size_t n) const;

  std::shared_ptr<const Impl> impl_;
};

/// n_quad 0 uses op.quad_order().
NystromSystem solve_method2_nystrom(const OperatorParams& op, std::size_t n_quad = 0);

/// Largest |v_n^T B v_m| over m != n, m, n < count, where v_n are the
/// Method 1 functions sampled at the Nystrom nodes scaled by sqrt(w_j) and
/// normalized to unit length.
double commutation_defect(const GoswfBasis& basis, const NystromSystem& system,
                          std::size_t count);

/// (c~ / 2 pi) |lambda_k|^2 for the eigenvalues of fourier_matrix(c~, n_quad),
/// descending, first n_max entries.
std::vector<double> pswf_eigenvalues(double c_tilde, std::size_t n_max, std::size_t n_quad);

}  // namespace goswf
