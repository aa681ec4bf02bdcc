#include "goswf/nystrom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "extended_real.hpp"
#include "goswf/eigencore.hpp"
#include "goswf/errors.hpp"

namespace goswf {

using detail::Quad;

struct NystromSystem::Impl {
  OperatorParams op;
  QuadratureRule rule;
  std::vector<Quad> nodes;
  std::vector<Quad> weights;
  BasicSymmetricMatrix<Quad> b;
  std::vector<Quad> mu;           // descending
  DenseMatrix<Quad> vectors;      // column n pairs with mu[n]
};

const OperatorParams& NystromSystem::params() const noexcept { return impl_->op; }
const QuadratureRule& NystromSystem::rule() const noexcept { return impl_->rule; }
std::size_t NystromSystem::order() const noexcept { return impl_->rule.order(); }

void NystromSystem::check(std::size_t n) const {
  if (n >= order()) {
    throw DomainError("NystromSystem: index " + std::to_string(n) + " out of range");
  }
}

double NystromSystem::mu(std::size_t n) const {
  check(n);
  return static_cast<double>(impl_->mu[n]);
}

std::vector<double> NystromSystem::mu_values() const {
  std::vector<double> out;
  out.reserve(order());
  for (const Quad& m : impl_->mu) out.push_back(static_cast<double>(m));
  return out;
}

std::vector<double> NystromSystem::eigenvector(std::size_t n) const {
  check(n);
  std::vector<double> out(order());
  for (std::size_t j = 0; j < order(); ++j) out[j] = static_cast<double>(impl_->vectors(j, n));
  return out;
}

std::vector<double> NystromSystem::node_values(std::size_t n) const {
  check(n);
  std::vector<double> out(order());
  for (std::size_t j = 0; j < order(); ++j) {
    out[j] = static_cast<double>(impl_->vectors(j, n) / sqrt(impl_->weights[j]));
  }
  return out;
}

double NystromSystem::eval(std::size_t n, double x) const {
  check(n);
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("NystromSystem::eval: x outside [-1, 1]");
  const Impl& s = *impl_;
  const Quad c(s.op.c());
  const Quad xq(x);
  Quad sum = 0;
  for (std::size_t j = 0; j < order(); ++j) {
    // w_j psi(y_j) = sqrt(w_j) v_j
    sum += sqrt(s.weights[j]) * s.vectors(j, n) * exp(c * (xq * s.nodes[j] - 1));
  }
  return static_cast<double>(sum / s.mu[n]);
}

SymmetricMatrix NystromSystem::matrix() const {
  SymmetricMatrix out(order());
  for (std::size_t j = 0; j < order(); ++j) {
    for (std::size_t k = 0; k <= j; ++k) out.set(j, k, static_cast<double>(impl_->b(j, k)));
  }
  return out;
}

NystromSystem solve_method2_nystrom(const OperatorParams& op, std::size_t n_quad) {
  if (n_quad == 0) n_quad = op.quad_order();
  auto impl = std::make_shared<NystromSystem::Impl>(NystromSystem::Impl{
      op, gauss_jacobi(op.weight(), n_quad), {}, {}, BasicSymmetricMatrix<Quad>(n_quad), {}, {}});
  const auto y = impl->rule.nodes();
  const auto w = impl->rule.weights();
  impl->nodes.assign(y.begin(), y.end());
  impl->weights.assign(w.begin(), w.end());

  const Quad c(op.c());
  for (std::size_t j = 0; j < n_quad; ++j) {
    for (std::size_t k = 0; k <= j; ++k) {
      impl->b.set(j, k,
                  sqrt(impl->weights[j] * impl->weights[k]) *
                      exp(c * (impl->nodes[j] * impl->nodes[k] - 1)));
    }
  }
  const BasicEigenDecomposition<Quad> dec = sym_eig(impl->b);
  impl->mu.resize(n_quad);
  impl->vectors = DenseMatrix<Quad>(n_quad, n_quad);
  for (std::size_t n = 0; n < n_quad; ++n) {
    const std::size_t src = n_quad - 1 - n;
    impl->mu[n] = dec.values[src];
    for (std::size_t j = 0; j < n_quad; ++j) impl->vectors(j, n) = dec.vectors(j, src);
  }
  return NystromSystem(std::move(impl));
}

double commutation_defect(const GoswfBasis& basis, const NystromSystem& system,
                          std::size_t count) {
  if (count > basis.size() || count > system.order()) {
    throw ContractError("commutation_defect: count exceeds the available functions");
  }
  if (!(basis.params().weight() == system.params().weight()) ||
      basis.params().c() != system.params().c()) {
    throw ContractError("commutation_defect: basis and Nystrom system disagree on parameters");
  }
  const QuadratureRule& rule = system.rule();
  const auto w = rule.weights();
  const std::size_t m = rule.order();
  std::vector<std::vector<double>> v(count);
  for (std::size_t n = 0; n < count; ++n) {
    v[n] = sample_psi(basis, n, rule);
    double norm = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      v[n][j] *= std::sqrt(w[j]);
      norm += v[n][j] * v[n][j];
    }
    norm = std::sqrt(norm);
    for (double& t : v[n]) t /= norm;
  }
  const SymmetricMatrix b = system.matrix();
  double worst = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<double> bv(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) bv[j] += b(j, k) * v[n][k];
    }
    for (std::size_t p = 0; p < count; ++p) {
      if (p == n) continue;
      double s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += v[p][j] * bv[j];
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

std::vector<double> pswf_eigenvalues(double c_tilde, std::size_t n_max, std::size_t n_quad) {
  if (n_max == 0 || n_max > n_quad) {
    throw DomainError("pswf_eigenvalues: need 1 <= n_max <= n_quad");
  }
  const DenseMatrix<Complex> b = fourier_matrix(c_tilde, n_quad);
  // The Gauss-Legendre rule is symmetric, so B commutes with the reflection
  // j -> n-1-j. On the even and odd subspaces it acts as 2 s cos(c y y') and
  // 2 i s sin(c y y'); both are Hermitian up to the factor i.
  const std::size_t half = n_quad / 2;
  const bool centre = n_quad % 2 == 1;
  HermitianMatrix even(half + (centre ? 1 : 0), half + (centre ? 1 : 0));
  HermitianMatrix odd(half, half);
  for (std::size_t j = 0; j < half; ++j) {
    for (std::size_t k = 0; k < half; ++k) {
      const Complex direct = b(j, k);
      const Complex mirror = b(j, n_quad - 1 - k);
      even(j, k) = direct + mirror;
      odd(j, k) = (direct - mirror) * Complex(0.0, -1.0);
    }
  }
  if (centre) {
    for (std::size_t j = 0; j < half; ++j) {
      const Complex v = std::sqrt(2.0) * b(j, half);
      even(j, half) = v;
      even(half, j) = v;
    }
    even(half, half) = b(half, half);
  }

  std::vector<double> lambda;
  lambda.reserve(n_quad);
  const double scale = c_tilde / (2.0 * std::numbers::pi);
  for (double v : herm_eig(even).values) lambda.push_back(scale * v * v);
  if (half > 0) {
    for (double v : herm_eig(odd).values) lambda.push_back(scale * v * v);
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  lambda.resize(n_max);
  return lambda;
}

}  // namespace goswf
