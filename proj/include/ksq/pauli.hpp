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

#ifndef KSQ_PAULI_HPP
#define KSQ_PAULI_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "ksq/linalg.hpp"

namespace ksq {

using Vec3 = std::array<Complex, 3>;
using RealVec3 = std::array<double, 3>;

// ---------------------------------------------------------------------------
// ℂ³ helpers

inline Vec3 to_complex(const RealVec3& v) { return {v[0], v[1], v[2]}; }

inline Vec3 conj(const Vec3& v) { return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])}; }

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(Complex s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

/// ||v|| = sqrt(|v1|² + |v2|² + |v3|²).
inline double norm(const Vec3& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}
inline double norm(const RealVec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

/// ⟨a, b⟩ = Σ a_k conj(b_k), conjugate-linear in the second slot.
inline Complex inner(const Vec3& a, const Vec3& b) {
  return a[0] * std::conj(b[0]) + a[1] * std::conj(b[1]) + a[2] * std::conj(b[2]);
}

/// The bracket [u, v] = u × v (complex-bilinear, no conjugation). With this
/// convention (u·σ)(v·σ) − (v·σ)(u·σ) = 2i [u, v]·σ.
inline Vec3 bracket(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline double max_abs_diff(const Vec3& a, const Vec3& b) {
  return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
}

// ---------------------------------------------------------------------------
// Pauli matrices

inline const ComplexMatrix& identity2() {
  static const ComplexMatrix m = ComplexMatrix::identity(2);
  return m;
}

/// σ1, σ2, σ3 for k = 1, 2, 3.
inline const ComplexMatrix& sigma(std::size_t k) {
  using namespace std::complex_literals;
  static const std::array<ComplexMatrix, 3> s = {
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, -1.0i}, {1.0i, 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  if (k < 1 || k > 3) throw UsageError("sigma: index must be 1, 2 or 3");
  return s[k - 1];
}

/// v·σ as a 2×2 matrix.
inline ComplexMatrix sigma_dot(const Vec3& v) {
  ComplexMatrix m(2);
  m(0, 0) = v[2];
  m(1, 1) = -v[2];
  m(0, 1) = v[0] - Complex{0.0, 1.0} * v[1];
  m(1, 0) = v[0] + Complex{0.0, 1.0} * v[1];
  return m;
}

// ---------------------------------------------------------------------------
// PauliElement

/// x = w0·𝟙 + w·σ in M₂(ℂ).
struct PauliElement {
  Complex w0{};
  Vec3 w{};

  friend bool operator==(const PauliElement&, const PauliElement&) = default;
};

inline bool is_self_adjoint(const PauliElement& x, double tol = default_tolerances().hermiticity) {
  return std::abs(x.w0.imag()) <= tol && std::abs(x.w[0].imag()) <= tol &&
         std::abs(x.w[1].imag()) <= tol && std::abs(x.w[2].imag()) <= tol;
}

inline ComplexMatrix to_matrix(const PauliElement& x) {
  ComplexMatrix m = sigma_dot(x.w);
  m(0, 0) += x.w0;
  m(1, 1) += x.w0;
  return m;
}

/// Inverse basis expansion: w0 = tr(m)/2, w_k = tr(σ_k m)/2.
inline PauliElement from_matrix(const ComplexMatrix& m) {
  if (m.dim() != 2) throw UsageError("from_matrix: expected a 2x2 matrix");
  const Complex i{0.0, 1.0};
  PauliElement x;
  x.w0 = 0.5 * (m(0, 0) + m(1, 1));
  x.w[0] = 0.5 * (m(0, 1) + m(1, 0));
  x.w[1] = 0.5 * i * (m(0, 1) - m(1, 0));
  x.w[2] = 0.5 * (m(0, 0) - m(1, 1));
  return x;
}

inline PauliElement adjoint(const PauliElement& x) { return {std::conj(x.w0), conj(x.w)}; }

/// Coefficients of x*x:
/// (|w0|² + ||w||²) 𝟙 + (w0 w̄ + w̄0 w − i[w, w̄])·σ.
inline PauliElement star_square(const PauliElement& x) {
  const Vec3 wbar = conj(x.w);
  const Complex i{0.0, 1.0};
  PauliElement r;
  const double n = norm(x.w);
  r.w0 = std::norm(x.w0) + n * n;
  r.w = x.w0 * wbar + std::conj(x.w0) * x.w - i * bracket(x.w, wbar);
  return r;
}

/// x ≥ 0 iff w0 ≥ 0 and ||w|| ≤ w0 (boundary elements count as positive).
inline bool is_positive_qubit(const PauliElement& x, double tol = default_tolerances().positivity) {
  if (!is_self_adjoint(x)) throw UsageError("is_positive_qubit: element is not self-adjoint");
  const double w0 = x.w0.real();
  return w0 >= -tol && norm(x.w) <= w0 + tol;
}

// ---------------------------------------------------------------------------
// States

/// A state on M₂(ℂ) given by its Bloch vector f, ||f|| ≤ 1.
class BlochState {
 public:
  explicit BlochState(const RealVec3& f) : f_(f) {
    if (norm(f) > 1.0 + 1e-12) throw UsageError("BlochState: ||f|| must not exceed 1");
  }
  [[nodiscard]] const RealVec3& f() const { return f_; }

 private:
  RealVec3 f_;
};

/// φ(w0𝟙 + w·σ) = w0 + Σ w_k f_k.
inline Complex eval_state(const BlochState& state, const PauliElement& x) {
  const RealVec3& f = state.f();
  return x.w0 + x.w[0] * f[0] + x.w[1] * f[1] + x.w[2] * f[2];
}

// ---------------------------------------------------------------------------
// Tensor square M₂ ⊗ M₂

/// The tensor product with the first leg on the inner (fast) index, which is
/// the layout of the explicit 4×4 and 8×8 matrices this library reproduces.
inline ComplexMatrix tensor_legs(const ComplexMatrix& first, const ComplexMatrix& second) {
  return kron(second, first);
}

/// x = w0 𝟙⊗𝟙 + w·σ⊗𝟙 + 𝟙⊗r·σ.
struct TensorPauliElement {
  Complex w0{};
  Vec3 w{};
  Vec3 r{};
};

inline bool is_self_adjoint(const TensorPauliElement& x,
                            double tol = default_tolerances().hermiticity) {
  auto real = [tol](const Vec3& v) {
    return std::abs(v[0].imag()) <= tol && std::abs(v[1].imag()) <= tol &&
           std::abs(v[2].imag()) <= tol;
  };
  return std::abs(x.w0.imag()) <= tol && real(x.w) && real(x.r);
}

inline ComplexMatrix to_matrix(const TensorPauliElement& x) {
  ComplexMatrix m = x.w0 * ComplexMatrix::identity(4);
  m += tensor_legs(sigma_dot(x.w), identity2());
  m += tensor_legs(identity2(), sigma_dot(x.r));
  return m;
}

/// Closed-form spectrum {w0 ± ||r|| ± ||w||}, ascending.
inline std::vector<double> tensor_simple_spectrum(const TensorPauliElement& x) {
  if (!is_self_adjoint(x)) {
    throw UsageError("tensor_simple_spectrum: element is not self-adjoint");
  }
  const double w0 = x.w0.real();
  const double nw = norm(x.w);
  const double nr = norm(x.r);
  std::vector<double> s = {w0 - nr + nw, w0 - nr - nw, w0 + nr + nw, w0 + nr - nw};
  std::sort(s.begin(), s.end());
  return s;
}

inline bool is_positive_tensor_element(const TensorPauliElement& x,
                                       double tol = default_tolerances().positivity) {
  return tensor_simple_spectrum(x).front() >= -tol;
}

}  // namespace ksq

#endif  // KSQ_PAULI_HPP
