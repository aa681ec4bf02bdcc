#include <cmath>
#include <tuple>

#include "doctest.h"
#include "goswf/errors.hpp"
#include "goswf/nystrom.hpp"
#include "oracles.hpp"

using namespace goswf;

TEST_CASE("one-point rule") {
  for (auto [a, b, c] : {std::tuple{0.0, 0.0, 1.0}, {2.0, 5.0, 0.5}}) {
    const WeightParams w(a, b);
    const NystromSystem s = solve_method2_nystrom(OperatorParams(w, c), 1);
    const double y = (b - a) / (a + b + 2);
    CHECK(s.order() == 1);
    CHECK(s.rule().nodes()[0] == doctest::Approx(y).epsilon(1e-15).scale(1));
    CHECK(s.mu(0) == doctest::Approx(w.total_mass() * std::exp(c * (y * y - 1))).epsilon(1e-14));
  }
}

TEST_CASE("leading eigenvalue and agreement with the ODE route") {
  const OperatorParams op(WeightParams(5, 5), 6.0);
  const NystromSystem s = solve_method2_nystrom(op);
  CHECK(oracle::sig_digits_match(s.mu(0), 0.211037689e-2, 6));
  const auto mu = s.mu_values();
  for (std::size_t n = 1; n < mu.size(); ++n) CHECK(mu[n] <= mu[n - 1]);

  for (auto [a, b, c] : {std::tuple{0.0, 0.0, 1.0}, {3.0, 3.0, 1.0}, {6.0, 7.0, 6.0}}) {
    const OperatorParams p(WeightParams(a, b), c);
    const GoswfBasis basis = solve_method1(p, 16);
    const NystromSystem sys = solve_method2_nystrom(p);
    for (std::size_t n = 0; n < 16; ++n) {
      if (basis.mu(n) < 1e-10) break;
      CHECK(std::abs(sys.mu(n) - basis.mu(n)) <= 1e-8 * basis.mu(n));
    }
  }
}

TEST_CASE("interpolation reproduces node values and the ODE eigenfunctions") {
  const OperatorParams p(WeightParams(2, 3), 1.5);
  const NystromSystem sys = solve_method2_nystrom(p);
  const GoswfBasis basis = solve_method1(p, 6);
  for (std::size_t n = 0; n < 6; ++n) {
    const auto nodes = sys.rule().nodes();
    const auto vals = sys.node_values(n);
    for (std::size_t j = 0; j < nodes.size(); j += 7) {
      CHECK(sys.eval(n, nodes[j]) == doctest::Approx(vals[j]).epsilon(1e-10).scale(1));
    }
    double dot = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) dot += vals[j] * eval_psi(basis, n, nodes[j]);
    const double sign = dot < 0 ? -1.0 : 1.0;
    for (double x : {-1.0, -0.5, 0.0, 0.3, 1.0}) {
      CHECK(std::abs(sign * sys.eval(n, x) - eval_psi(basis, n, x)) <= 1e-8);
    }
    double norm = 0.0;
    for (double v : sys.eigenvector(n)) norm += v * v;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(sys.mu(sys.order()), DomainError);
  CHECK_THROWS_AS(sys.eval(0, 1.01), DomainError);
}

TEST_CASE("commutation with the Nystrom matrix") {
  const OperatorParams p(WeightParams(6, 7), 6.0);
  const GoswfBasis basis = solve_method1(p, 10);
  const NystromSystem sys = solve_method2_nystrom(p);
  CHECK(commutation_defect(basis, sys, 10) <= 1e-8);
  CHECK_THROWS_AS(commutation_defect(basis, sys, 11), ContractError);
  const NystromSystem other = solve_method2_nystrom(OperatorParams(WeightParams(6, 7), 5.0));
  CHECK_THROWS_AS(commutation_defect(basis, other, 4), ContractError);
}

TEST_CASE("finite Fourier transform eigenvalues") {
  struct Row {
    std::size_t n;
    double values[3];
  };
  const double cs[3] = {2.0, 4.0, 6.0};
  const Row rows[] = {{0, {0.8805599223, 0.9958854904, 0.9999018826}},
                      {5, {1.9358522020e-7, 0.3812917217e-3, 0.2738716624e-1}},
                      {10, {2.1680118965e-19, 4.5252284693e-13, 2.2189805452e-9}}};
  for (int k = 0; k < 3; ++k) {
    const auto lambda = pswf_eigenvalues(cs[k], 21, 60);
    for (std::size_t n = 1; n < lambda.size(); ++n) CHECK(lambda[n] <= lambda[n - 1]);
    for (const Row& r : rows) {
      if (r.values[k] >= 1e-13) CHECK(oracle::sig_digits_match(lambda[r.n], r.values[k], 6));
    }
    for (double l : lambda) CHECK(l <= 1.0 + 1e-12);
  }
  CHECK(pswf_eigenvalues(3.0, 4, 41).size() == 4);
  CHECK_THROWS_AS(pswf_eigenvalues(2.0, 0, 40), DomainError);
  CHECK_THROWS_AS(pswf_eigenvalues(2.0, 41, 40), DomainError);
  CHECK_THROWS_AS(pswf_eigenvalues(-1.0, 4, 40), DomainError);
}

TEST_CASE("odd and even quadrature orders agree") {
  const auto even = pswf_eigenvalues(4.0, 8, 50);
  const auto odd = pswf_eigenvalues(4.0, 8, 51);
  for (std::size_t n = 0; n < 8; ++n) CHECK(std::abs(even[n] - odd[n]) <= 1e-13);
}
