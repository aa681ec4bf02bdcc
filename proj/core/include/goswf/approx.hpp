#pragma once

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "goswf/basis.hpp"
#include "goswf/laplace_operator.hpp"

namespace goswf {

inline constexpr std::size_t kL2RuleOrder = 60;
inline constexpr std::size_t kSupGridPoints = 201;

/// f = F_c g for a g sampled at the operator's quadrature nodes.
class BandlimitedFunction {
 public:
  BandlimitedFunction(LaplaceOperator op, SampledFunction source);

  const OperatorParams& params() const noexcept { return op_.params(); }
  const LaplaceOperator& op() const noexcept { return op_; }
  const SampledFunction& source() const noexcept { return source_; }

  double operator()(double x) const { return op_.apply_f(source_, x); }

 private:
  LaplaceOperator op_;
  SampledFunction source_;
};

namespace gspec {
struct Constant {
  double value;
};
/// Monomial coefficients, lowest degree first.
struct Polynomial {
  std::vector<double> coeffs;
};
/// Values at the operator's quadrature nodes.
struct NodeSamples {
  std::vector<double> values;
};
}  // namespace gspec

using GSpec = std::variant<gspec::Constant, gspec::Polynomial, gspec::NodeSamples>;

BandlimitedFunction make_bandlimited(const OperatorParams& op, const GSpec& g);

/// alpha_n = int f psi_n w, n < n_terms, on the kL2RuleOrder-point rule.
std::vector<double> goswf_expand(const BandlimitedFunction& f, const GoswfBasis& basis,
                                 std::size_t n_terms);

/// alpha_n = int f P_n w, n < n_terms.
std::vector<double> jacobi_expand(const BandlimitedFunction& f, std::size_t n_terms);
std::vector<double> jacobi_expand(const WeightParams& weight,
                                  const std::function<double(double)>& f, std::size_t n_terms,
                                  std::size_t rule_order = kL2RuleOrder);

struct ApproxReport {
  std::vector<std::size_t> n_values;
  std::vector<double> goswf_err_l2;
  std::vector<double> jacobi_err_l2;
  std::vector<double> goswf_err_sup;
  std::vector<double> jacobi_err_sup;
  /// (sum_{n>N} mu_n^2)^{1/2} ||g|| over the basis, per N.
  std::vector<double> tail_bound;
  /// Coefficients for n = 0..max(N); f_N uses the first N + 1.
  std::vector<double> goswf_coeffs;
  std::vector<double> jacobi_coeffs;
  /// mu_n ||g||, the bound on |goswf_coeffs[n]|.
  std::vector<double> coeff_bound;
  double f_norm = 0.0;
  double g_norm = 0.0;
};

/// Errors of f_N = sum_{n=0}^{N} alpha_n phi_n for each N in n_list.
/// Requires basis.size() > max(N) + 1.
ApproxReport compare_truncations(const BandlimitedFunction& f, const GoswfBasis& basis,
                                 const std::vector<std::size_t>& n_list);

/// Points of the uniform grid on [-1, 1].
std::vector<double> uniform_grid(std::size_t points);

}  // namespace goswf
