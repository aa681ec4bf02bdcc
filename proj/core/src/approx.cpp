#include "goswf/approx.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <type_traits>

#include "goswf/errors.hpp"
#include "goswf/jacobi.hpp"

namespace goswf {

BandlimitedFunction::BandlimitedFunction(LaplaceOperator op, SampledFunction source)
    : op_(std::move(op)), source_(std::move(source)) {
  if (!(source_.rule().params() == op_.params().weight())) {
    throw ContractError("BandlimitedFunction: source sampled on a different weight");
  }
}

BandlimitedFunction make_bandlimited(const OperatorParams& op, const GSpec& g) {
  LaplaceOperator lop(op);
  SampledFunction source = std::visit(
      [&](const auto& spec) -> SampledFunction {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, gspec::Constant>) {
          const double v = spec.value;
          return lop.sample([v](double) { return v; });
        } else if constexpr (std::is_same_v<T, gspec::Polynomial>) {
          const std::vector<double> c = spec.coeffs;
          return lop.sample([c](double y) {
            double s = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * y + *it;
            return s;
          });
        } else {
          return SampledFunction(lop.rule_ptr(), spec.values);
        }
      },
      g);
  return BandlimitedFunction(std::move(lop), std::move(source));
}

std::vector<double> jacobi_expand(const WeightParams& weight,
                                  const std::function<double(double)>& f, std::size_t n_terms,
                                  std::size_t rule_order) {
  if (n_terms == 0) return {};
  const QuadratureRule rule = gauss_jacobi(weight, rule_order);
  const JacobiTable table(weight, n_terms - 1);
  std::vector<double> out(n_terms, 0.0);
  std::vector<double> p(n_terms);
  const auto y = rule.nodes();
  const auto w = rule.weights();
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double fw = f(y[j]) * w[j];
    table.eval(y[j], p);
    for (std::size_t n = 0; n < n_terms; ++n) out[n] += fw * p[n];
  }
  return out;
}

std::vector<double> jacobi_expand(const BandlimitedFunction& f, std::size_t n_terms) {
  return jacobi_expand(f.params().weight(), [&f](double x) { return f(x); }, n_terms);
}

namespace {

void check_basis(const BandlimitedFunction& f, const GoswfBasis& basis) {
  if (!(f.params() == basis.params())) {
    throw ContractError("goswf_expand: basis built for different operator parameters");
  }
}

}  // namespace

std::vector<double> goswf_expand(const BandlimitedFunction& f, const GoswfBasis& basis,
                                 std::size_t n_terms) {
  check_basis(f, basis);
  if (n_terms > basis.size()) {
    throw ContractError("goswf_expand: " + std::to_string(n_terms) + " terms requested, basis has " +
                        std::to_string(basis.size()));
  }
  const QuadratureRule rule = gauss_jacobi(f.params().weight(), kL2RuleOrder);
  const auto y = rule.nodes();
  const auto w = rule.weights();
  std::vector<double> out(n_terms, 0.0);
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double fw = f(y[j]) * w[j];
    for (std::size_t n = 0; n < n_terms; ++n) out[n] += fw * eval_psi(basis, n, y[j]);
  }
  return out;
}

std::vector<double> uniform_grid(std::size_t points) {
  if (points < 2) throw DomainError("uniform_grid: need at least 2 points");
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) {
    g[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  g.back() = 1.0;
  return g;
}

ApproxReport compare_truncations(const BandlimitedFunction& f, const GoswfBasis& basis,
                                 const std::vector<std::size_t>& n_list) {
  check_basis(f, basis);
  ApproxReport r;
  if (n_list.empty()) return r;
  const std::size_t n_top = *std::max_element(n_list.begin(), n_list.end());
  if (n_top + 1 >= basis.size()) {
    throw ContractError("compare_truncations: basis must hold more than N + 1 functions");
  }
  const std::size_t terms = n_top + 1;
  const WeightParams& weight = f.params().weight();
  r.n_values = n_list;
  r.goswf_coeffs = goswf_expand(f, basis, terms);
  r.jacobi_coeffs = jacobi_expand(f, terms);
  r.g_norm = f.source().l2_norm();
  for (std::size_t n = 0; n < terms; ++n) r.coeff_bound.push_back(basis.mu(n) * r.g_norm);

  const QuadratureRule rule = gauss_jacobi(weight, kL2RuleOrder);
  const std::vector<double> grid = uniform_grid(kSupGridPoints);
  const JacobiTable table(weight, n_top);

  // Per point: f, psi_0..psi_top, P_0..P_top.
  struct Samples {
    std::vector<double> f;
    std::vector<std::vector<double>> psi;
    std::vector<std::vector<double>> p;
  };
  const auto take = [&](std::span<const double> xs) {
    Samples s;
    std::vector<double> p(terms);
    for (double x : xs) {
      s.f.push_back(f(x));
      std::vector<double> psi(terms);
      for (std::size_t n = 0; n < terms; ++n) psi[n] = eval_psi(basis, n, x);
      s.psi.push_back(std::move(psi));
      table.eval(x, p);
      s.p.push_back(p);
    }
    return s;
  };
  const Samples at_nodes = take(rule.nodes());
  const Samples at_grid = take(grid);

  const auto w = rule.weights();
  double f2 = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) f2 += w[j] * at_nodes.f[j] * at_nodes.f[j];
  r.f_norm = std::sqrt(f2);

  const auto partial = [](const std::vector<double>& c, const std::vector<double>& phi,
                          std::size_t upto) {
    double s = 0.0;
    for (std::size_t n = 0; n <= upto; ++n) s += c[n] * phi[n];
    return s;
  };
  for (std::size_t big_n : n_list) {
    double gl2 = 0.0, jl2 = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      const double eg = at_nodes.f[j] - partial(r.goswf_coeffs, at_nodes.psi[j], big_n);
      const double ej = at_nodes.f[j] - partial(r.jacobi_coeffs, at_nodes.p[j], big_n);
      gl2 += w[j] * eg * eg;
      jl2 += w[j] * ej * ej;
    }
    double gsup = 0.0, jsup = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      gsup = std::max(gsup, std::abs(at_grid.f[i] - partial(r.goswf_coeffs, at_grid.psi[i], big_n)));
      jsup = std::max(jsup, std::abs(at_grid.f[i] - partial(r.jacobi_coeffs, at_grid.p[i], big_n)));
    }
    double tail = 0.0;
    for (std::size_t n = big_n + 1; n < basis.size(); ++n) tail += basis.mu(n) * basis.mu(n);
    r.goswf_err_l2.push_back(std::sqrt(gl2));
    r.jacobi_err_l2.push_back(std::sqrt(jl2));
    r.goswf_err_sup.push_back(gsup);
    r.jacobi_err_sup.push_back(jsup);
    r.tail_bound.push_back(std::sqrt(tail) * r.g_norm);
  }
  return r;
}

}  // namespace goswf
