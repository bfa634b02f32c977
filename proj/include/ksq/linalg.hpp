// Copyright 2026 The ksq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KSQ_LINALG_HPP
#define KSQ_LINALG_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ksq/config.hpp"

namespace ksq {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDim = 8;

/// Dense square complex matrix with inline storage for dim <= 8.
///
/// Entries are stored row-major with stride `dim`. The type does not restrict
/// `dim` beyond the storage cap; callers in this library only use 2, 3, 4
/// and 8.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim) : dim_(dim) {
    if (dim == 0 || dim > kMaxDim) {
      throw UsageError("ComplexMatrix: dimension " + std::to_string(dim) +
                       " outside [1, 8]");
    }
    data_.fill(Complex{0.0, 0.0});
  }

  /// Builds a matrix from nested row lists; rejects ragged or non-finite input.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : ComplexMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw UsageError("ComplexMatrix: ragged rows");
      std::size_t j = 0;
      for (const Complex& v : row) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
          throw UsageError("ComplexMatrix: non-finite entry");
        }
        (*this)(i, j++) = v;
      }
      ++i;
    }
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::initializer_list<Complex> entries) {
    ComplexMatrix m(entries.size());
    std::size_t i = 0;
    for (const Complex& v : entries) {
      m(i, i) = v;
      ++i;
    }
    return m;
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  ComplexMatrix& operator+=(const ComplexMatrix& other) {
    require_same_dim(other, "operator+=");
    for (std::size_t k = 0; k < dim_ * dim_; ++k) data_[k] += other.data_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& other) {
    require_same_dim(other, "operator-=");
    for (std::size_t k = 0; k < dim_ * dim_; ++k) data_[k] -= other.data_[k];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (std::size_t k = 0; k < dim_ * dim_; ++k) data_[k] *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

 private:
  void require_same_dim(const ComplexMatrix& other, const char* op) const {
    if (other.dim_ != dim_) {
      throw UsageError(std::string("ComplexMatrix::") + op + ": dimension mismatch");
    }
  }

  std::size_t dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

inline ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw UsageError("mat_mul: dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r(j, i) = std::conj(a(i, j));
  }
  return r;
}

/// Kronecker product, row-major block convention:
/// entry (i*b.dim + k, j*b.dim + l) = a(i,j) * b(k,l).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (na * nb > kMaxDim) throw UsageError("kron: result dimension exceeds 8");
  ComplexMatrix r(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
      }
    }
  }
  return r;
}

inline Complex trace(const ComplexMatrix& a) {
  Complex t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) s += std::norm(a(i, j));
  }
  return std::sqrt(s);
}

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw UsageError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  }
  return m;
}

inline double hermiticity_defect(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return m;
}

namespace detail {

inline constexpr std::size_t kMaxEmbed = 2 * kMaxDim;
inline constexpr int kJacobiSweeps = 50;

/// Eigenvalues of a real symmetric matrix (row-major, n <= 16) by cyclic
/// Jacobi rotations. Returns them unsorted.
inline std::vector<double> jacobi_symmetric(std::array<double, kMaxEmbed * kMaxEmbed> m,
                                            std::size_t n) {
  auto at = [&m, n](std::size_t i, std::size_t j) -> double& { return m[i * n + j]; };

  double total = 0.0;
  for (std::size_t k = 0; k < n * n; ++k) total += m[k] * m[k];
  const double scale = std::sqrt(total);
  const double threshold = 1e-14 * scale;

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += at(i, j) * at(i, j);
      }
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > threshold) {
    if (sweep++ == kJacobiSweeps) {
      throw NumericError("hermitian_eigenvalues: Jacobi did not converge in 50 sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  return eig;
}

}  // namespace detail

/// All eigenvalues of a Hermitian matrix, ascending, with multiplicity.
///
/// H = X + iY is embedded as the real symmetric [[X, -Y], [Y, X]], whose
/// spectrum is that of H with every eigenvalue doubled; the doubled list is
/// paired back up after diagonalization.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                                 double tol = default_tolerances().hermiticity) {
  if (hermiticity_defect(a) > tol) {
    throw UsageError("hermitian_eigenvalues: input is not Hermitian within tolerance");
  }
  const std::size_t n = a.dim();
  const std::size_t m = 2 * n;
  std::array<double, detail::kMaxEmbed * detail::kMaxEmbed> emb{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Symmetrize so tolerance-level anti-Hermitian noise cannot break the rotations.
      const Complex h = 0.5 * (a(i, j) + std::conj(a(j, i)));
      emb[i * m + j] = h.real();
      emb[(i + n) * m + (j + n)] = h.real();
      emb[i * m + (j + n)] = -h.imag();
      emb[(i + n) * m + j] = h.imag();
    }
  }
  std::vector<double> doubled = detail::jacobi_symmetric(emb, m);
  std::sort(doubled.begin(), doubled.end());

  // Greedy nearest-match pairing of the doubled spectrum.
  const double pair_tol = 1e-8 * std::max(1.0, frobenius_norm(a));
  std::vector<double> out;
  out.reserve(n);
  std::vector<bool> used(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::size_t best = m;
    double best_gap = 0.0;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (used[j]) continue;
      const double gap = std::abs(doubled[j] - doubled[i]);
      if (best == m || gap < best_gap) {
        best = j;
        best_gap = gap;
      }
    }
    if (best == m || best_gap > pair_tol) {
      throw NumericError("hermitian_eigenvalues: doubled spectrum does not pair up");
    }
    used[best] = true;
    out.push_back(0.5 * (doubled[i] + doubled[best]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline double min_eigenvalue(const ComplexMatrix& a,
                             double tol = default_tolerances().hermiticity) {
  return hermitian_eigenvalues(a, tol).front();
}

/// True iff H + shift*I admits a Cholesky factorization with strictly positive
/// pivots, i.e. min eigenvalue(H) > -shift. Input must be Hermitian; only the
/// lower triangle is read.
inline bool cholesky_positive(const ComplexMatrix& h, double shift) {
  const std::size_t n = h.dim();
  std::array<Complex, kMaxDim * kMaxDim> l{};
  for (std::size_t j = 0; j < n; ++j) {
    double d = h(j, j).real() + shift;
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l[j * n + k]);
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    l[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = h(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * std::conj(l[j * n + k]);
      l[i * n + j] = s / ljj;
    }
  }
  return true;
}

}  // namespace ksq

#endif  // KSQ_LINALG_HPP
