#include "goswf/basis.hpp"

#include <cmath>
#include <string>

#include "extended_real.hpp"
#include "goswf/errors.hpp"

namespace goswf {

namespace {

using detail::Quad;

// e^{c(y_j y_k - 1)} on the rule, row-major, in extended precision.
std::vector<Quad> extended_kernel(const QuadratureRule& rule, double c) {
  const auto y = rule.nodes();
  const std::size_t n = y.size();
  const Quad cq(c);
  std::vector<Quad> k(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      const Quad v = exp(cq * (Quad(y[j]) * Quad(y[i]) - 1));
      k[j * n + i] = v;
      k[i * n + j] = v;
    }
  }
  return k;
}

double rayleigh_on_kernel(const QuadratureRule& rule, const std::vector<Quad>& kernel,
                          std::span<const double> values) {
  const std::size_t n = rule.order();
  if (values.size() != n) {
    throw ContractError("rayleigh_mu: sample count does not match the rule order");
  }
  const auto w = rule.weights();
  std::vector<Quad> f(n);
  for (std::size_t j = 0; j < n; ++j) f[j] = Quad(w[j]) * Quad(values[j]);
  Quad s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Quad row = 0;
    for (std::size_t k = 0; k < n; ++k) row += kernel[j * n + k] * f[k];
    s += f[j] * row;
  }
  return static_cast<double>(s);
}

}  // namespace

std::size_t default_trunc_order(double c, std::size_t n_max) {
  return n_max + std::max<std::size_t>(kTruncMargin, static_cast<std::size_t>(std::ceil(2.0 * c)));
}

BandedSymmetricMatrix build_ode_matrix(const OperatorParams& op, std::size_t trunc) {
  if (trunc < 4) throw DomainError("build_ode_matrix: truncation order must be at least 4");
  const WeightParams& w = op.weight();
  const double c = op.c();
  const double drift = c * (w.beta() - w.alpha());
  BandedSymmetricMatrix m(trunc, 2);
  for (std::size_t k = 0; k < trunc; ++k) {
    const auto x1 = x_action(w, k);
    const auto x2 = x_squared_action(w, k);
    m.set(k, k, chi_zero(w, k) - c * c * x2[2] - drift * x1[1]);
    if (k + 1 < trunc) m.set(k + 1, k, -c * c * x2[1] - drift * x1[0]);
    if (k + 2 < trunc) m.set(k + 2, k, -c * c * x2[0]);
  }
  return m;
}

GoswfBasis::GoswfBasis(OperatorParams op, DenseMatrix<double> coeffs, std::vector<double> chi,
                       double precision_floor)
    : op_(op),
      coeffs_(std::move(coeffs)),
      chi_(std::move(chi)),
      floor_(precision_floor),
      table_(std::make_shared<const JacobiTable>(op.weight(), coeffs_.cols() - 1)),
      laplace_(std::make_shared<const LaplaceOperator>(op)) {
  if (coeffs_.rows() == 0 || chi_.size() != coeffs_.rows()) {
    throw ContractError("GoswfBasis: coefficient rows and chi must agree and be non-empty");
  }
  const QuadratureRule& rule = laplace_->rule();
  const auto kernel = extended_kernel(rule, op_.c());
  mu_.resize(size());
  for (std::size_t n = 0; n < size(); ++n) {
    mu_[n] = rayleigh_on_kernel(rule, kernel, sample_psi(*this, n, rule));
  }
}

std::span<const double> GoswfBasis::coeffs(std::size_t n) const {
  if (n >= size()) throw DomainError("GoswfBasis: index " + std::to_string(n) + " out of range");
  return std::span<const double>(coeffs_.data()).subspan(n * trunc_order(), trunc_order());
}

double GoswfBasis::mu(std::size_t n) const {
  if (n >= size()) throw DomainError("GoswfBasis: index " + std::to_string(n) + " out of range");
  return mu_[n];
}

bool GoswfBasis::below_floor(std::size_t n) const { return std::abs(mu(n)) < floor_; }

GoswfBasis solve_method1(const OperatorParams& op, std::size_t n_max, std::size_t trunc,
                         double precision_floor) {
  if (n_max == 0) throw DomainError("solve_method1: n_max must be at least 1");
  if (trunc != 0 && trunc < n_max + kTruncMargin) {
    throw ContractError("solve_method1: trunc " + std::to_string(trunc) + " below n_max + " +
                        std::to_string(kTruncMargin));
  }
  std::size_t k = trunc != 0 ? trunc : default_trunc_order(op.c(), n_max);

  while (true) {
    const EigenDecomposition dec = sym_eig(build_ode_matrix(op, k));
    std::size_t bad = n_max;
    double worst = 0.0;
    for (std::size_t n = 0; n < n_max && bad == n_max; ++n) {
      for (std::size_t i = k - 5; i < k; ++i) {
        const double t = std::abs(dec.vectors(i, n));
        if (t >= kTailTolerance) {
          bad = n;
          worst = t;
          break;
        }
      }
    }
    if (bad == n_max) {
      for (std::size_t n = 0; n + 1 < n_max; ++n) {
        if (dec.values[n + 1] - dec.values[n] < kChiSeparation) {
          throw PrecisionError("solve_method1: chi_" + std::to_string(n) + " and chi_" +
                                   std::to_string(n + 1) + " are not separated",
                               dec.values[n + 1] - dec.values[n], n);
        }
      }
      DenseMatrix<double> coeffs(n_max, k);
      for (std::size_t n = 0; n < n_max; ++n) {
        for (std::size_t i = 0; i < k; ++i) coeffs(n, i) = dec.vectors(i, n);
      }
      std::vector<double> chi(dec.values.begin(), dec.values.begin() + static_cast<long>(n_max));
      return GoswfBasis(op, std::move(coeffs), std::move(chi), precision_floor);
    }
    if (2 * k > kTruncCap) {
      throw PrecisionError("solve_method1: coefficient tail of psi_" + std::to_string(bad) +
                               " does not decay below the truncation cap",
                           worst, bad);
    }
    k *= 2;
  }
}

double eval_psi(const GoswfBasis& basis, std::size_t n, double x) {
  return basis.table().sum_series(basis.coeffs(n), x);
}

PsiDerivatives eval_psi_derivatives(const GoswfBasis& basis, std::size_t n, double x) {
  const auto d = basis.coeffs(n);
  const std::size_t k = d.size();
  std::vector<double> p(k), p1(k), p2(k);
  basis.table().eval_with_derivatives(x, p, p1, p2);
  PsiDerivatives out{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < k; ++i) {
    out.value += d[i] * p[i];
    out.d1 += d[i] * p1[i];
    out.d2 += d[i] * p2[i];
  }
  return out;
}

std::vector<double> sample_psi(const GoswfBasis& basis, std::size_t n, const QuadratureRule& rule) {
  std::vector<double> v;
  v.reserve(rule.order());
  for (double y : rule.nodes()) v.push_back(eval_psi(basis, n, y));
  return v;
}

double rayleigh_mu(const QuadratureRule& rule, double c, std::span<const double> values) {
  return rayleigh_on_kernel(rule, extended_kernel(rule, c), values);
}

double compute_mu(const GoswfBasis& basis, std::size_t n) {
  const QuadratureRule& rule = basis.op().rule();
  return rayleigh_mu(rule, basis.params().c(), sample_psi(basis, n, rule));
}

MuDerivative mu_derivative(const GoswfBasis& basis, std::size_t n) {
  const double mu = basis.mu(n);
  if (basis.below_floor(n)) {
    throw PrecisionError("mu_derivative: mu_" + std::to_string(n) + " is below the precision floor",
                         mu, n);
  }
  // v psi psi' has degree below 2K, so K + 1 points integrate it exactly.
  const QuadratureRule rule = gauss_jacobi(basis.params().weight(), basis.trunc_order() + 1);
  const auto y = rule.nodes();
  const auto w = rule.weights();
  double i_unit = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const PsiDerivatives p = eval_psi_derivatives(basis, n, y[j]);
    i_unit += w[j] * y[j] * p.value * p.d1;
  }
  const double c = basis.params().c();
  const double mu2 = mu * mu;
  MuDerivative out{};
  out.i_unit = i_unit;
  out.variant_a = (mu2 * i_unit / c - mu2) / mu;
  out.variant_b = (i_unit / c - 1.0) / mu;
  out.corrected = mu * (i_unit / c - 1.0);
  return out;
}

double mu_central_difference(const GoswfBasis& basis, std::size_t n, double h) {
  const OperatorParams& op = basis.params();
  if (!(h > 0.0 && h < op.c())) throw DomainError("mu_central_difference: need 0 < h < c");
  const std::size_t count = std::max(n + 1, basis.size());
  const std::size_t trunc = std::max(basis.trunc_order(), count + kTruncMargin);
  const auto at = [&](double c) {
    return solve_method1(OperatorParams(op.weight(), c, op.quad_order()), count, trunc,
                         basis.precision_floor())
        .mu(n);
  };
  return (at(op.c() + h) - at(op.c() - h)) / (2.0 * h);
}

}  // namespace goswf
