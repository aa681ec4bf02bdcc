#include <cmath>
#include <random>

#include "doctest.h"
#include "goswf/eigencore.hpp"

using namespace goswf;

namespace {

SymmetricMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m.set(i, j, u(rng));
  }
  return m;
}

HermitianMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HermitianMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = u(rng);
    for (std::size_t j = 0; j < i; ++j) {
      m(i, j) = Complex(u(rng), u(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

double frobenius(const SymmetricMatrix& m) {
  double s = 0.0;
  for (double v : m.dense().data()) s += v * v;
  return std::sqrt(s);
}

void check_decomposition(const SymmetricMatrix& m, const EigenDecomposition& d) {
  const std::size_t n = m.dim();
  const double fro = frobenius(m);
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) CHECK(d.values[k] >= d.values[k - 1]);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = -d.values[k] * d.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) r += m(i, j) * d.vectors(j, k);
      res += r * r;
    }
    CHECK(std::sqrt(res) <= 1e-12 * fro);
    for (std::size_t l = 0; l < n; ++l) {
      double g = 0.0;
      for (std::size_t i = 0; i < n; ++i) g += d.vectors(i, k) * d.vectors(i, l);
      CHECK(std::abs(g - (k == l ? 1.0 : 0.0)) <= 1e-12);
    }
  }
}

}  // namespace

TEST_CASE("trivial spectra") {
  SymmetricMatrix id(3);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1.0);
  for (double v : sym_eig(id).values) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));

  SymmetricMatrix diag(3);
  for (std::size_t i = 0; i < 3; ++i) diag.set(i, i, static_cast<double>(i + 1));
  const EigenDecomposition d = sym_eig(diag);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(d.values[k] == doctest::Approx(k + 1.0).epsilon(1e-15));
    for (std::size_t i = 0; i < 3; ++i) CHECK(d.vectors(i, k) == doctest::Approx(i == k ? 1.0 : 0.0));
  }

  SymmetricMatrix swap(2);
  swap.set(1, 0, 1.0);
  const EigenDecomposition s = sym_eig(swap);
  CHECK(s.values[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(s.values[1] == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(sym_eig(SymmetricMatrix(0)), DomainError);
}

TEST_CASE("random symmetric matrices: residual and orthogonality") {
  for (std::size_t n : {1u, 2u, 5u, 32u, 128u}) {
    const SymmetricMatrix m = random_symmetric(n, 1234 + n);
    check_decomposition(m, sym_eig(m));
  }
}

TEST_CASE("sign convention and determinism") {
  const SymmetricMatrix m = random_symmetric(24, 99);
  const EigenDecomposition a = sym_eig(m);
  const EigenDecomposition b = sym_eig(m);
  CHECK(a.values == b.values);
  CHECK(a.vectors == b.vectors);
  for (std::size_t k = 0; k < 24; ++k) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < 24; ++i) {
      if (std::abs(a.vectors(i, k)) > std::abs(a.vectors(arg, k))) arg = i;
    }
    CHECK(a.vectors(arg, k) > 0.0);
  }
}

TEST_CASE("banded storage") {
  const std::size_t n = 40;
  BandedSymmetricMatrix b(n, 2);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i >= 2 ? i - 2 : 0; j <= i; ++j) b.set(i, j, u(rng));
  }
  CHECK_THROWS_AS(b.set(5, 1, 1.0), ContractError);
  CHECK(b(1, 5) == 0.0);
  CHECK(b(3, 4) == b(4, 3));
  const EigenDecomposition banded = sym_eig(b);
  const EigenDecomposition dense = sym_eig(b.to_dense());
  for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(banded.values[k] - dense.values[k]) <= 1e-12);
  check_decomposition(b.to_dense(), banded);
}

TEST_CASE("herm_eig agrees with sym_eig on real input") {
  const SymmetricMatrix m = random_symmetric(12, 5);
  HermitianMatrix h(12, 12);
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t j = 0; j < 12; ++j) h(i, j) = m(i, j);
  }
  const auto hv = herm_eig(h).values;
  const auto sv = sym_eig(m).values;
  for (std::size_t k = 0; k < 12; ++k) CHECK(std::abs(hv[k] - sv[k]) <= 1e-13);
}

TEST_CASE("herm_eig on a Pauli-type matrix") {
  HermitianMatrix h(2, 2);
  h(0, 1) = Complex(0, 1);
  h(1, 0) = Complex(0, -1);
  const auto d = herm_eig(h);
  CHECK(d.values[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(d.values[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("random Hermitian matrices") {
  for (std::size_t n : {4u, 16u, 40u}) {
    const HermitianMatrix h = random_hermitian(n, 77 + n);
    const auto d = herm_eig(h);
    double fro = 0.0;
    for (const Complex& z : h.data()) fro += std::norm(z);
    fro = std::sqrt(fro);
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) CHECK(d.values[k] >= d.values[k - 1]);
      double res = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        Complex r = -d.values[k] * d.vectors(i, k);
        for (std::size_t j = 0; j < n; ++j) r += h(i, j) * d.vectors(j, k);
        res += std::norm(r);
      }
      CHECK(std::sqrt(res) <= 1e-12 * fro);
      for (std::size_t l = 0; l < n; ++l) {
        Complex g = 0.0;
        for (std::size_t i = 0; i < n; ++i) g += std::conj(d.vectors(i, k)) * d.vectors(i, l);
        CHECK(std::abs(g - (k == l ? 1.0 : 0.0)) <= 1e-12);
      }
    }
    // The transpose is the complex conjugate and has the same spectrum.
    HermitianMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t(i, j) = h(j, i);
    }
    const auto dt = herm_eig(t);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(dt.values[k] - d.values[k]) <= 1e-12 * fro);
  }
  CHECK_THROWS_AS(herm_eig(HermitianMatrix(0, 0)), DomainError);
}
