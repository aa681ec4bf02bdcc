#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "goswf/dense_matrix.hpp"
#include "goswf/errors.hpp"

namespace goswf {

/// Dense symmetric matrix. Writes go to both triangles, so the stored
/// array is exactly symmetric.
template <class Real>
class BasicSymmetricMatrix {
 public:
  BasicSymmetricMatrix() = default;
  explicit BasicSymmetricMatrix(std::size_t dim) : m_(dim, dim) {}

  std::size_t dim() const noexcept { return m_.rows(); }
  const Real& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  void set(std::size_t i, std::size_t j, const Real& v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }

  const DenseMatrix<Real>& dense() const noexcept { return m_; }

 private:
  DenseMatrix<Real> m_;
};

using SymmetricMatrix = BasicSymmetricMatrix<double>;

/// Symmetric band matrix; only the lower band (i - j in [0, bandwidth]) is stored.
class BandedSymmetricMatrix {
 public:
  BandedSymmetricMatrix(std::size_t dim, std::size_t bandwidth)
      : dim_(dim), bw_(bandwidth), band_(dim * (bandwidth + 1), 0.0) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t bandwidth() const noexcept { return bw_; }

  double operator()(std::size_t i, std::size_t j) const {
    if (i < j) std::swap(i, j);
    return i - j > bw_ ? 0.0 : band_[i * (bw_ + 1) + (i - j)];
  }

  /// Sets entries (i, j) and (j, i); |i - j| must not exceed the bandwidth.
  void set(std::size_t i, std::size_t j, double v) {
    if (i < j) std::swap(i, j);
    if (i - j > bw_) {
      throw ContractError("BandedSymmetricMatrix::set outside the band");
    }
    band_[i * (bw_ + 1) + (i - j)] = v;
  }

  SymmetricMatrix to_dense() const {
    SymmetricMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i >= bw_ ? i - bw_ : 0; j <= i; ++j) out.set(i, j, (*this)(i, j));
    }
    return out;
  }

 private:
  std::size_t dim_;
  std::size_t bw_;
  std::vector<double> band_;
};

/// Eigenvalues in ascending order; column k of `vectors` pairs with values[k].
template <class Real>
struct BasicEigenDecomposition {
  std::vector<Real> values;
  DenseMatrix<Real> vectors;

  std::vector<Real> vector(std::size_t k) const { return vectors.column(k); }
};

using EigenDecomposition = BasicEigenDecomposition<double>;

using Complex = std::complex<double>;
using HermitianMatrix = DenseMatrix<Complex>;

struct HermitianEigenDecomposition {
  std::vector<double> values;
  DenseMatrix<Complex> vectors;

  std::vector<Complex> vector(std::size_t k) const { return vectors.column(k); }
};

namespace detail {

inline constexpr int kQlIterationCap = 60;

template <class Real>
Real hypot_scaled(const Real& a, const Real& b) {
  using std::abs;
  using std::sqrt;
  const Real x = abs(a);
  const Real y = abs(b);
  const Real big = x > y ? x : y;
  if (big == Real(0)) return Real(0);
  const Real rx = x / big;
  const Real ry = y / big;
  return big * sqrt(rx * rx + ry * ry);
}

// Householder reduction to tridiagonal form. On return v holds the
// accumulated orthogonal transform, d the diagonal, e the subdiagonal in
// e[1..n-1].
template <class Real>
void tridiagonalize(DenseMatrix<Real>& v, std::vector<Real>& d, std::vector<Real>& e) {
  using std::abs;
  using std::sqrt;
  const std::size_t n = v.rows();
  for (std::size_t j = 0; j < n; ++j) d[j] = v(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    Real scale(0);
    Real h(0);
    for (std::size_t k = 0; k < i; ++k) scale += abs(d[k]);
    if (scale == Real(0)) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = v(i - 1, j);
        v(i, j) = Real(0);
        v(j, i) = Real(0);
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      Real f = d[i - 1];
      Real g = sqrt(h);
      if (f > Real(0)) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = Real(0);

      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        v(j, i) = f;
        g = e[j] + v(j, j) * f;
        for (std::size_t k = j + 1; k <= i - 1; ++k) {
          g += v(k, j) * d[k];
          e[k] += v(k, j) * f;
        }
        e[j] = g;
      }
      f = Real(0);
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const Real hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k <= i - 1; ++k) v(k, j) -= (f * e[k] + g * d[k]);
        d[j] = v(i - 1, j);
        v(i, j) = Real(0);
      }
    }
    d[i] = h;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = Real(1);
    const Real h = d[i + 1];
    if (h != Real(0)) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        Real g(0);
        for (std::size_t k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (std::size_t k = 0; k <= i; ++k) v(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) v(k, i + 1) = Real(0);
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = v(n - 1, j);
    v(n - 1, j) = Real(0);
  }
  v(n - 1, n - 1) = Real(1);
  e[0] = Real(0);
}

// Implicit-shift QL on the tridiagonal (d, e), accumulating into v.
template <class Real>
void tridiagonal_ql(DenseMatrix<Real>& v, std::vector<Real>& d, std::vector<Real>& e) {
  using std::abs;
  const std::size_t n = v.rows();
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = Real(0);

  Real f(0);
  Real tst1(0);
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    const Real t = abs(d[l]) + abs(e[l]);
    if (t > tst1) tst1 = t;
    std::size_t m = l;
    while (m < n) {
      if (abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > kQlIterationCap) {
          throw InternalError("sym_eig: QL iteration did not converge for eigenvalue " +
                                  std::to_string(l),
                              l);
        }
        Real g = d[l];
        Real p = (d[l + 1] - g) / (Real(2) * e[l]);
        Real r = hypot_scaled(p, Real(1));
        if (p < Real(0)) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const Real dl1 = d[l + 1];
        Real h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        Real c(1), c2(1), c3(1);
        const Real el1 = e[l + 1];
        Real s(0), s2(0);
        for (std::size_t i = m; i-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = hypot_scaled(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (std::size_t k = 0; k < n; ++k) {
            h = v(k, i + 1);
            v(k, i + 1) = s * v(k, i) + c * h;
            v(k, i) = c * v(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (abs(e[l]) > eps * tst1);
    }
    d[l] = d[l] + f;
    e[l] = Real(0);
  }
}

}  // namespace detail

/// Full eigendecomposition of a real symmetric matrix. Output is
/// deterministic: eigenvalues ascending, each eigenvector's
/// largest-magnitude component made positive.
template <class Real>
BasicEigenDecomposition<Real> sym_eig(const BasicSymmetricMatrix<Real>& m) {
  using std::abs;
  const std::size_t n = m.dim();
  if (n == 0) throw DomainError("sym_eig: dimension must be at least 1");

  DenseMatrix<Real> v = m.dense();
  std::vector<Real> d(n), e(n);
  detail::tridiagonalize(v, d, e);
  detail::tridiagonal_ql(v, d, e);

  // Selection sort keeps the permutation deterministic.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t k = i;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d[j] < d[k]) k = j;
    }
    if (k != i) {
      std::swap(d[i], d[k]);
      for (std::size_t r = 0; r < n; ++r) std::swap(v(r, i), v(r, k));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t arg = 0;
    for (std::size_t r = 1; r < n; ++r) {
      if (abs(v(r, j)) > abs(v(arg, j))) arg = r;
    }
    if (v(arg, j) < Real(0)) {
      for (std::size_t r = 0; r < n; ++r) v(r, j) = -v(r, j);
    }
  }
  return {std::move(d), std::move(v)};
}

/// Banded input is expanded to dense storage before decomposition.
EigenDecomposition sym_eig(const BandedSymmetricMatrix& m);

/// Eigendecomposition of a complex Hermitian matrix. Only the lower
/// triangle is read. Eigenvalues ascending; each eigenvector is scaled by a
/// unit phase so its largest-magnitude component is real and positive.
HermitianEigenDecomposition herm_eig(const HermitianMatrix& m);

}  // namespace goswf
