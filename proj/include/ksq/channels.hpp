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

#ifndef KSQ_CHANNELS_HPP
#define KSQ_CHANNELS_HPP

#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "ksq/linalg.hpp"
#include "ksq/pauli.hpp"

namespace ksq {

using RealMat3 = std::array<std::array<double, 3>, 3>;

inline RealMat3 diag3(double a, double b, double c) {
  return {{{a, 0.0, 0.0}, {0.0, b, 0.0}, {0.0, 0.0, c}}};
}
inline RealMat3 scaled_identity3(double s) { return diag3(s, s, s); }

inline Vec3 apply(const RealMat3& m, const Vec3& v) {
  Vec3 r{};
  for (std::size_t i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return r;
}
inline RealVec3 apply(const RealMat3& m, const RealVec3& v) {
  RealVec3 r{};
  for (std::size_t i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return r;
}

inline RealMat3 scale(const RealMat3& m, double s) {
  RealMat3 r = m;
  for (auto& row : r)
    for (double& v : row) v *= s;
  return r;
}

inline RealMat3 transpose(const RealMat3& m) {
  RealMat3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

inline RealMat3 mul(const RealMat3& a, const RealMat3& b) {
  RealMat3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline bool is_diagonal(const RealMat3& m) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j && m[i][j] != 0.0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parameter records

/// Φ(w0𝟙 + w·σ) = w0𝟙 + (Tw)·σ with T a real 3×3 matrix.
struct QubitChannel {
  RealMat3 t{};

  [[nodiscard]] PauliElement apply(const PauliElement& x) const { return {x.w0, ksq::apply(t, x.w)}; }
  [[nodiscard]] ComplexMatrix operator()(const PauliElement& x) const { return to_matrix(apply(x)); }

  static QubitChannel identity() { return {scaled_identity3(1.0)}; }
};

namespace detail {
inline void require_box(const std::array<double, 3>& v, double bound, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x) || std::abs(x) > bound) {
      throw UsageError(std::string(what) + ": parameters must lie in [-" +
                       (bound == 1.0 ? "1, 1]" : "1/2, 1/2]"));
    }
  }
}
}  // namespace detail

/// The diagonal channel Φ_(λ1,λ2,λ3), |λk| ≤ 1.
struct DiagonalParams {
  std::array<double, 3> lambda{};

  DiagonalParams() = default;
  DiagonalParams(double l1, double l2, double l3) : lambda{l1, l2, l3} {
    detail::require_box(lambda, 1.0, "DiagonalParams");
  }
  [[nodiscard]] QubitChannel channel() const { return {diag3(lambda[0], lambda[1], lambda[2])}; }
};

/// T(w0𝟙 + w·σ) = w0 𝟙⊗𝟙 + Aw·σ⊗𝟙 + 𝟙⊗Cw·σ.
struct TensorMap {
  RealMat3 a{};
  RealMat3 c{};

  [[nodiscard]] ComplexMatrix operator()(const PauliElement& x) const {
    ComplexMatrix m = x.w0 * ComplexMatrix::identity(4);
    m += tensor_legs(sigma_dot(ksq::apply(a, x.w)), identity2());
    m += tensor_legs(identity2(), sigma_dot(ksq::apply(c, x.w)));
    return m;
  }
};

/// T_(λ1,λ2,λ3): A = C = diag(λ1,λ2,λ3), |λk| ≤ 1/2.
struct DiagonalTensorParams {
  std::array<double, 3> lambda{};

  DiagonalTensorParams() = default;
  DiagonalTensorParams(double l1, double l2, double l3) : lambda{l1, l2, l3} {
    detail::require_box(lambda, 0.5, "DiagonalTensorParams");
  }
  [[nodiscard]] TensorMap tensor_map() const {
    const RealMat3 d = diag3(lambda[0], lambda[1], lambda[2]);
    return {d, d};
  }
};

/// T_{λ,µ}: A = λ𝟙, C = µ𝟙. Any reals are admitted; classifiers decide.
struct ScalarPairParams {
  double lambda = 0.0;
  double mu = 0.0;

  [[nodiscard]] TensorMap tensor_map() const {
    return {scaled_identity3(lambda), scaled_identity3(mu)};
  }
};

// ---------------------------------------------------------------------------
// Evaluable maps

/// A linear map from M₂(ℂ) into M_n(ℂ), n ∈ {2, 4}, given by evaluation on
/// Pauli coefficients. The callable must be free of interior mutation so
/// copies can be shared across threads.
struct EvaluableMap {
  std::size_t out_dim = 2;
  std::function<ComplexMatrix(const PauliElement&)> eval;

  ComplexMatrix operator()(const PauliElement& x) const { return eval(x); }
};

inline EvaluableMap as_map(const QubitChannel& ch) { return {2, ch}; }
inline EvaluableMap as_map(const TensorMap& m) { return {4, m}; }

inline PauliElement apply_qubit_channel(const QubitChannel& ch, const PauliElement& x) {
  return ch.apply(x);
}

inline ComplexMatrix apply_tensor_map(const TensorMap& m, const PauliElement& x) { return m(x); }

/// T = ½(Φ⊗𝟙 + 𝟙⊗Ψ) with Φ ↔ 2A and Ψ ↔ 2C.
inline std::pair<QubitChannel, QubitChannel> split_phi_psi(const TensorMap& m) {
  return {QubitChannel{scale(m.a, 2.0)}, QubitChannel{scale(m.c, 2.0)}};
}

// ---------------------------------------------------------------------------
// Choi matrices

/// Matrix units e11, e12, e21, e22 in Pauli coordinates.
inline PauliElement matrix_unit(std::size_t i, std::size_t j) {
  const Complex h{0.5, 0.0};
  const Complex ih{0.0, 0.5};
  if (i == 0 && j == 0) return {h, {0.0, 0.0, h}};
  if (i == 0 && j == 1) return {0.0, {h, ih, 0.0}};
  if (i == 1 && j == 0) return {0.0, {h, -ih, 0.0}};
  if (i == 1 && j == 1) return {h, {0.0, 0.0, -h}};
  throw UsageError("matrix_unit: index out of range");
}

/// Block matrix [[Φ(e11), Φ(e12)], [Φ(e21), Φ(e22)]] of any evaluable map.
inline ComplexMatrix choi_matrix(const EvaluableMap& map) {
  const std::size_t n = map.out_dim;
  ComplexMatrix choi(2 * n);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const ComplexMatrix block = map(matrix_unit(i, j));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) choi(i * n + r, j * n + c) = block(r, c);
    }
  }
  return choi;
}

inline ComplexMatrix choi_matrix_qubit(const QubitChannel& ch) { return choi_matrix(as_map(ch)); }
inline ComplexMatrix choi_matrix_tensor(const TensorMap& m) { return choi_matrix(as_map(m)); }

// ---------------------------------------------------------------------------
// Combinators

inline bool is_unitary(const ComplexMatrix& u, double tol = 1e-10) {
  return max_abs_diff(mat_mul(adjoint(u), u), ComplexMatrix::identity(u.dim())) <= tol;
}

/// x ↦ U Φ(V x V*) U*.
inline EvaluableMap conjugate_by_unitaries(const QubitChannel& ch, const ComplexMatrix& u,
                                           const ComplexMatrix& v) {
  if (u.dim() != 2 || v.dim() != 2 || !is_unitary(u) || !is_unitary(v)) {
    throw UsageError("conjugate_by_unitaries: U and V must be 2x2 unitaries");
  }
  const ComplexMatrix u_adj = adjoint(u);
  const ComplexMatrix v_adj = adjoint(v);
  return {2, [ch, u, v, u_adj, v_adj](const PauliElement& x) {
            const ComplexMatrix inner = mat_mul(mat_mul(v, to_matrix(x)), v_adj);
            return mat_mul(mat_mul(u, ch(from_matrix(inner))), u_adj);
          }};
}

inline void require_unit_interval(double weight) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw UsageError("convex_combination: weight must lie in [0, 1]");
  }
}

/// x ↦ λ a(x) + (1 − λ) b(x).
inline EvaluableMap convex_combination(const EvaluableMap& a, const EvaluableMap& b,
                                       double weight) {
  require_unit_interval(weight);
  if (a.out_dim != b.out_dim) throw UsageError("convex_combination: codomain mismatch");
  return {a.out_dim, [a, b, weight](const PauliElement& x) {
            return weight * a(x) + (1.0 - weight) * b(x);
          }};
}

inline QubitChannel convex_combination(const QubitChannel& a, const QubitChannel& b,
                                       double weight) {
  require_unit_interval(weight);
  QubitChannel r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.t[i][j] = weight * a.t[i][j] + (1.0 - weight) * b.t[i][j];
  return r;
}

}  // namespace ksq

#endif  // KSQ_CHANNELS_HPP
