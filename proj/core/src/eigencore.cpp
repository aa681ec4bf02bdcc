#include "goswf/eigencore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace goswf {

template BasicEigenDecomposition<double> sym_eig(const BasicSymmetricMatrix<double>&);

EigenDecomposition sym_eig(const BandedSymmetricMatrix& m) { return sym_eig(m.to_dense()); }

namespace {

constexpr int kJacobiSweepCap = 100;

double off_diagonal_norm2(const DenseMatrix<Complex>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return s;
}

}  // namespace

HermitianEigenDecomposition herm_eig(const HermitianMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) throw DomainError("herm_eig: need a non-empty square matrix");

  DenseMatrix<Complex> a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Complex(m(i, i).real(), 0.0);
    for (std::size_t j = 0; j < i; ++j) {
      a(i, j) = m(i, j);
      a(j, i) = std::conj(m(i, j));
    }
  }
  DenseMatrix<Complex> v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) total += std::norm(a(i, j));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double target = eps * eps * total;

  int sweep = 0;
  while (off_diagonal_norm2(a) > target) {
    if (++sweep > kJacobiSweepCap) {
      std::size_t worst = 0;
      double worst_val = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && std::abs(a(i, j)) > worst_val) {
            worst_val = std::abs(a(i, j));
            worst = i;
          }
        }
      }
      throw InternalError("herm_eig: Jacobi sweeps did not converge", worst);
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        // Rotate the phase of index q so that a(p, q) becomes real positive.
        const Complex phase = a(p, q) / r;
        const Complex conj_phase = std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          a(k, q) *= conj_phase;
          v(k, q) *= conj_phase;
        }
        for (std::size_t k = 0; k < n; ++k) a(q, k) *= phase;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = cs * akp - sn * akq;
          a(k, q) = sn * akp + cs * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = cs * apk - sn * aqk;
          a(q, k) = sn * apk + cs * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(app - t * r, 0.0);
        a(q, q) = Complex(aqq + t * r, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = cs * vkp - sn * vkq;
          v(k, q) = sn * vkp + cs * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  HermitianEigenDecomposition out{std::vector<double>(n), DenseMatrix<Complex>(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.values[j] = a(src, src).real();
    std::size_t arg = 0;
    for (std::size_t r = 1; r < n; ++r) {
      if (std::abs(v(r, src)) > std::abs(v(arg, src))) arg = r;
    }
    const Complex unit = std::conj(v(arg, src)) / std::abs(v(arg, src));
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, j) = v(r, src) * unit;
  }
  return out;
}

}  // namespace goswf
