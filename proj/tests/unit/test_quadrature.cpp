#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "goswf/errors.hpp"
#include "goswf/quadrature.hpp"
#include "goswf/special_functions.hpp"
#include "oracles.hpp"

using namespace goswf;

TEST_CASE("small Gauss-Legendre rules") {
  const QuadratureRule one = gauss_jacobi(WeightParams(0, 0), 1);
  CHECK(one.order() == 1);
  CHECK(std::abs(one.nodes()[0]) < 1e-16);
  CHECK(one.weights()[0] == doctest::Approx(2.0).epsilon(1e-15));

  const QuadratureRule two = gauss_jacobi(WeightParams(0, 0), 2);
  CHECK(two.nodes()[0] == doctest::Approx(-1 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(two.nodes()[1] == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(two.weights()[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(two.weights()[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("weights sum to the total mass") {
  const QuadratureRule r = gauss_jacobi(WeightParams(1, 2), 4);
  double s = 0.0;
  for (double w : r.weights()) s += w;
  CHECK(s == doctest::Approx(16.0 / 12).epsilon(1e-12));
  for (auto [a, b] : {std::pair{0.0, 0.0}, {3.0, 3.0}, {6.0, 7.0}, {-0.5, 0.5}}) {
    for (std::size_t n : {5u, 40u, 120u}) {
      const WeightParams p(a, b);
      const QuadratureRule q = gauss_jacobi(p, n);
      double t = 0.0;
      for (double w : q.weights()) t += w;
      CHECK(t == doctest::Approx(p.total_mass()).epsilon(1e-12));
    }
  }
}

TEST_CASE("nodes and weights match an independent Newton construction") {
  struct Case {
    double a, b;
    int n;
  };
  for (const Case& c : {Case{0, 0, 20}, Case{3, 3, 40}, Case{6, 7, 40}, Case{2, 1, 60}, Case{-0.5, 0.5, 15},
                        Case{5, 5, 34}}) {
    const QuadratureRule r = gauss_jacobi(WeightParams(c.a, c.b), c.n);
    const auto ref = oracle::gauss_jacobi(c.n, c.a, c.b);
    for (int j = 0; j < c.n; ++j) {
      CHECK(std::abs(r.nodes()[j] - static_cast<double>(ref.x[j])) <= 1e-13);
      CHECK(r.weights()[j] == doctest::Approx(static_cast<double>(ref.w[j])).epsilon(1e-11));
    }
  }
}

TEST_CASE("structure: ordering, positivity, symmetry, interlacing") {
  for (auto [a, b] : {std::pair{0.0, 0.0}, {3.0, 3.0}, {6.0, 7.0}, {2.0, 1.0}}) {
    const WeightParams p(a, b);
    for (std::size_t n : {7u, 40u, 256u}) {
      const QuadratureRule r = gauss_jacobi(p, n);
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(r.nodes()[j] > -1.0);
        CHECK(r.nodes()[j] < 1.0);
        CHECK(r.weights()[j] > 0.0);
        if (j > 0) CHECK(r.nodes()[j] > r.nodes()[j - 1]);
        if (p.symmetric()) CHECK(r.nodes()[j] == -r.nodes()[n - 1 - j]);
      }
      const QuadratureRule prev = gauss_jacobi(p, n - 1);
      for (std::size_t j = 0; j + 1 < n; ++j) {
        CHECK(r.nodes()[j] < prev.nodes()[j]);
        CHECK(prev.nodes()[j] < r.nodes()[j + 1]);
      }
    }
  }
}

TEST_CASE("exactness for monomials up to degree 2n-1") {
  for (auto [a, b] : {std::pair{0.0, 0.0}, {1.0, 2.0}, {3.5, 0.5}}) {
    const WeightParams p(a, b);
    const int n = 6;
    const QuadratureRule r = gauss_jacobi(p, n);
    for (int m = 0; m <= 2 * n - 1; ++m) {
      // x = 2t - 1 turns the moment into a sum of beta integrals
      long double exact = 0, magnitude = 0;
      for (int j = 0; j <= m; ++j) {
        const long double binom = std::exp(std::lgamma(m + 1.0L) - std::lgamma(j + 1.0L) -
                                           std::lgamma(m - j + 1.0L));
        const long double beta = std::exp(std::lgamma(b + j + 1.0L) + std::lgamma(a + 1.0L) -
                                          std::lgamma(a + b + j + 2.0L));
        const long double term = binom * std::pow(2.0L, j) * ((m - j) % 2 ? -1 : 1) * beta;
        exact += term;
        magnitude += std::fabs(term);
      }
      exact *= std::pow(2.0L, a + b + 1);
      magnitude *= std::pow(2.0L, a + b + 1);
      double q = 0.0;
      for (int j = 0; j < n; ++j) q += r.weights()[j] * std::pow(r.nodes()[j], m);
      CHECK(std::abs(q - static_cast<double>(exact)) <= 1e-12 * static_cast<double>(magnitude));
    }
  }
}

TEST_CASE("convergence for a smooth integrand") {
  for (auto [a, b] : {std::pair{0.0, 0.0}, {3.0, 3.0}, {6.0, 7.0}}) {
    const WeightParams p(a, b);
    std::vector<double> e30, e40;
    const QuadratureRule r30 = gauss_jacobi(p, 30), r40 = gauss_jacobi(p, 40);
    for (double y : r30.nodes()) e30.push_back(std::exp(y));
    for (double y : r40.nodes()) e40.push_back(std::exp(y));
    const double i30 = r30.integrate(e30), i40 = r40.integrate(e40);
    CHECK(std::abs(i30 - i40) <= 1e-13 * std::abs(i40));
  }
  const QuadratureRule r = gauss_jacobi(WeightParams(0, 0), 3);
  CHECK_THROWS_AS(r.integrate(std::vector<double>(2, 1.0)), ContractError);
}

TEST_CASE("order zero is rejected") {
  CHECK_THROWS_AS(gauss_jacobi(WeightParams(0, 0), 0), DomainError);
}

namespace {

long double bound_oracle(double a, double b, double c, int k) {
  const long double kk = k;
  return 2.0L * c - 0.5L * std::log(2.0L * kk * std::numbers::pi_v<long double>) +
         (a + b + 1) * std::log(2.0L) + std::lgamma(kk + 1) + std::lgamma(kk + a + b + 1) +
         std::lgamma(kk + a + 1) + std::lgamma(kk + b + 1) - std::log(2 * kk + a + b + 1) -
         2 * std::lgamma(2 * kk + a + b + 1);
}

}  // namespace

TEST_CASE("k_epsilon bound decreases past ceil(2ec)") {
  for (double a : {0.0, 1.0, 3.0}) {
    for (double b : {0.0, 1.0, 3.0}) {
      for (double c : {1.0, 6.0}) {
        const WeightParams p(a, b);
        const std::size_t start = static_cast<std::size_t>(std::ceil(2 * std::numbers::e * c));
        for (std::size_t k = start; k < 200; ++k) {
          CHECK(k_epsilon_log_bound(p, c, k + 1) < k_epsilon_log_bound(p, c, k));
        }
      }
    }
  }
}

TEST_CASE("k_epsilon equals a direct scan") {
  const double target = std::log(1e-8L * 0.78L);
  int expected = 0;
  for (int k = 1; k <= 1000; ++k) {
    if (bound_oracle(0, 0, 1, k) <= target) {
      expected = k;
      break;
    }
  }
  REQUIRE(expected > 0);
  CHECK(k_epsilon(WeightParams(0, 0), 1.0, 1e-8, 0.78) == static_cast<std::size_t>(expected));
  for (int k = 1; k < 50; ++k) {
    CHECK(k_epsilon_log_bound(WeightParams(2, 3), 4.0, k) ==
          doctest::Approx(static_cast<double>(bound_oracle(2, 3, 4.0, k))).epsilon(1e-12));
  }
}

TEST_CASE("k_epsilon monotonicity and errors") {
  const WeightParams p(1, 2);
  std::size_t last = 0;
  for (double eps : {1e-14, 1e-10, 1e-6, 1e-2}) {
    const std::size_t k = k_epsilon(p, 3.0, eps, 0.1);
    if (last != 0) CHECK(k <= last);
    last = k;
  }
  last = 0;
  for (double mu : {1e-12, 1e-8, 1e-3, 1.0}) {
    const std::size_t k = k_epsilon(p, 3.0, 1e-8, mu);
    if (last != 0) CHECK(k <= last);
    last = k;
  }
  CHECK_THROWS_AS(k_epsilon(p, 3.0, 1e-10, 1e-300, 5), PrecisionError);
  CHECK_THROWS_AS(k_epsilon(p, 3.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(k_epsilon(p, 3.0, 1.5, 1.0), DomainError);
  CHECK_THROWS_AS(k_epsilon(p, 3.0, 0.1, 0.0), DomainError);
  CHECK(working_quad_order(p, 6.0, 1e-8, 0.5) >= min_quad_order(6.0));
  CHECK(min_quad_order(1.0) == 7);
}
