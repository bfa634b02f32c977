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

#ifndef KSQ_CLASSIFY_HPP
#define KSQ_CLASSIFY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <variant>

#include "ksq/channels.hpp"
#include "ksq/descriptor.hpp"
#include "ksq/linalg.hpp"
#include "ksq/oracle.hpp"
#include "ksq/pauli.hpp"

namespace ksq {

enum class Status { HoldsExact, HoldsSufficient, Fails, Inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::HoldsExact: return "HoldsExact";
    case Status::HoldsSufficient: return "HoldsSufficient";
    case Status::Fails: return "Fails";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

/// Outcome of one test at one level of the positive / KS / CP hierarchy.
///
/// `Fails` always carries either a witness input or the identifier of the
/// violated inequality.
struct TriState {
  Status status = Status::Inconclusive;
  std::optional<PauliElement> witness;
  /// Violation magnitude or deciding eigenvalue, when one exists.
  std::optional<double> value;
  std::string violated;
  std::string note;

  [[nodiscard]] bool holds() const {
    return status == Status::HoldsExact || status == Status::HoldsSufficient;
  }
};

struct Verdict {
  TriState positive;
  TriState kadison_schwarz;
  TriState completely_positive;
};

// ---------------------------------------------------------------------------
// Diagonal channels Φ_(λ1,λ2,λ3)

/// α, β, γ and A, B, C of the KS bound for diagonal channels.
struct DiagKsTerms {
  double alpha = 0, beta = 0, gamma = 0;
  double a = 0, b = 0, c = 0;
};

inline DiagKsTerms diag_ks_terms(const DiagonalParams& p) {
  const auto [l1, l2, l3] = p.lambda;
  return {std::abs(1 - l1 * l1), std::abs(1 - l2 * l2), std::abs(1 - l3 * l3),
          std::pow(l1 - l2 * l3, 2), std::pow(l2 - l1 * l3, 2), std::pow(l3 - l1 * l2, 2)};
}

/// Quartic form in r_k = |w_k|² whose non-negativity the KS bound reduces to.
inline double diag_ks_quartic(const DiagKsTerms& t, const RealVec3& r) {
  return r[0] * r[0] * (t.alpha * t.alpha - t.b - t.c) +
         r[1] * r[1] * (t.beta * t.beta - t.a - t.c) +
         r[2] * r[2] * (t.gamma * t.gamma - t.a - t.b) +
         2 * r[0] * r[1] * (t.alpha * t.beta - t.c) + 2 * r[0] * r[2] * (t.alpha * t.gamma - t.b) +
         2 * r[1] * r[2] * (t.beta * t.gamma - t.a);
}

/// Right-hand minus left-hand side of the three cyclic inequalities
/// (1+λi²)(3+λj²+λk²−λi²) ≤ 4(1+λ1λ2λ3). Non-negative means satisfied.
inline std::array<double, 3> ks_diag_margins(const DiagonalParams& p) {
  const auto& l = p.lambda;
  const double prod = l[0] * l[1] * l[2];
  std::array<double, 3> m{};
  for (std::size_t i = 0; i < 3; ++i) {
    const double li = l[i];
    const double lj = l[(i + 1) % 3];
    const double lk = l[(i + 2) % 3];
    m[i] = 4 * (1 + prod) - (1 + li * li) * (3 + lj * lj + lk * lk - li * li);
  }
  return m;
}

/// λ1² + λ2² + λ3² ≤ 1 + 2λ1λ2λ3 (implied by the three cyclic inequalities).
inline bool ks_diag_cross_condition(const DiagonalParams& p, double tol = default_tolerances().inequality) {
  const auto& l = p.lambda;
  return l[0] * l[0] + l[1] * l[1] + l[2] * l[2] <= 1 + 2 * l[0] * l[1] * l[2] + tol;
}

inline TriState ks_phi_diag_exact(const DiagonalParams& p,
                                  const Tolerances& tol = default_tolerances()) {
  const auto margins = ks_diag_margins(p);
  for (std::size_t i = 0; i < 3; ++i) {
    if (margins[i] < -tol.inequality) {
      TriState t;
      t.status = Status::Fails;
      t.value = margins[i];
      t.violated = "ks-diag-cyclic-" + std::to_string(i + 1);
      t.note = "closed-form KS criterion for diagonal channels";
      return t;
    }
  }
  return {Status::HoldsExact, std::nullopt, std::nullopt, "",
          "closed-form KS criterion for diagonal channels"};
}

/// KS on the scalar line Φ_(2λ,2λ,2λ): λ ∈ [−1/4, 1/2].
inline TriState ks_phi_scalar_interval(double lambda,
                                       const Tolerances& tol = default_tolerances()) {
  if (lambda >= -0.25 - tol.inequality && lambda <= 0.5 + tol.inequality) {
    return {Status::HoldsExact, std::nullopt, std::nullopt, "", "scalar KS interval [-1/4, 1/2]"};
  }
  return {Status::Fails, std::nullopt, lambda, "ks-scalar-interval", "scalar KS interval [-1/4, 1/2]"};
}

/// The (λ1+λ2)², (λ1−λ2)² and determinant conditions for CP of Φ_(λ1,λ2,λ3).
inline TriState cp_phi_exact(const DiagonalParams& p,
                             const Tolerances& tol = default_tolerances()) {
  const auto [l1, l2, l3] = p.lambda;
  const double eps = tol.inequality;
  const char* note = "closed-form CP criterion for diagonal channels";
  auto fail = [note](const char* id, double margin) {
    return TriState{Status::Fails, std::nullopt, margin, id, note};
  };
  const double m1 = (1 + l3) * (1 + l3) - (l1 + l2) * (l1 + l2);
  if (m1 < -eps) return fail("cp-diag-sum", m1);
  const double m2 = (1 - l3) * (1 - l3) - (l1 - l2) * (l1 - l2);
  if (m2 < -eps) return fail("cp-diag-difference", m2);
  const double s = 1 - (l1 * l1 + l2 * l2 + l3 * l3);
  const double m3 = s * s - 4 * (l1 * l1 * l2 * l2 + l2 * l2 * l3 * l3 + l1 * l1 * l3 * l3 -
                                 2 * l1 * l2 * l3);
  if (m3 < -eps) return fail("cp-diag-determinant", m3);
  return {Status::HoldsExact, std::nullopt, std::nullopt, "", note};
}

/// ||Tw|| ≤ ||w|| for all real w, i.e. the largest singular value of T is at most 1.
inline TriState positive_phi_exact(const QubitChannel& ch,
                                   const Tolerances& tol = default_tolerances()) {
  const RealMat3 gram = mul(transpose(ch.t), ch.t);
  ComplexMatrix g(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) g(i, j) = gram[i][j];
  const double opnorm = std::sqrt(std::max(0.0, hermitian_eigenvalues(g).back()));
  TriState t;
  t.value = opnorm;
  t.note = "operator norm of the Bloch matrix";
  if (opnorm <= 1.0 + tol.positivity) {
    t.status = Status::HoldsExact;
  } else {
    t.status = Status::Fails;
    t.violated = "bloch-operator-norm";
  }
  return t;
}

/// Pointwise check of ||T[w,w̄] − [Tw, T̄w̄]|| ≤ ||w||² − ||Tw||² over the probe
/// inputs plus n_samples random complex unit vectors. A clean pass is only
/// sampled evidence, so it reports HoldsSufficient.
inline TriState ks_phi_general(const QubitChannel& ch, std::size_t n_samples, std::uint64_t seed) {
  auto check = [&ch](const Vec3& w) -> std::optional<double> {
    const Vec3 tw = ksq::apply(ch.t, w);
    const double nw = norm(w);
    const double ntw = norm(tw);
    if (ntw > nw * (1 + 1e-12)) return nw - ntw;
    const Vec3 wbar = conj(w);
    const double lhs = norm(ksq::apply(ch.t, bracket(w, wbar)) - bracket(tw, conj(tw)));
    const double rhs = nw * nw - ntw * ntw;
    if (lhs > rhs + 1e-10) return rhs - lhs;
    return std::nullopt;
  };
  const char* note = "pointwise KS inequality on sampled Bloch vectors";
  for (const Vec3& w : detail::probe_vectors()) {
    if (auto v = check(w)) return {Status::Fails, PauliElement{0.0, w}, *v, "ks-pointwise", note};
  }
  std::optional<TriState> failure;
  const std::size_t chunks = (n_samples + detail::kChunkSize - 1) / detail::kChunkSize;
  for (std::size_t c = 0; c < chunks && !failure; ++c) {
    std::mt19937_64 rng = detail::substream(seed, c);
    const std::size_t end = std::min(n_samples, (c + 1) * detail::kChunkSize);
    for (std::size_t s = c * detail::kChunkSize; s < end; ++s) {
      const Vec3 w = detail::random_unit_complex<3>(rng);
      if (auto v = check(w)) {
        failure = TriState{Status::Fails, PauliElement{0.0, w}, *v, "ks-pointwise", note};
        break;
      }
    }
  }
  if (failure) return *failure;
  return {Status::HoldsSufficient, std::nullopt, std::nullopt, "", note};
}

// ---------------------------------------------------------------------------
// Maxima over the real unit sphere

struct SphereMax {
  double value = 0.0;
  RealVec3 argmax{1.0, 0.0, 0.0};
};

/// Maximizes f over the unit sphere: Fibonacci lattice of `grid` points, then
/// derivative-free coordinate ascent (step halving, at most 200 iterations)
/// from the four best lattice points.
inline SphereMax sphere_maximize(const std::function<double(const RealVec3&)>& f,
                                 std::size_t grid) {
  if (grid < 1) throw UsageError("sphere_maximize: grid must be positive");
  std::vector<std::pair<double, RealVec3>> pts;
  pts.reserve(grid);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < grid; ++i) {
    const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(grid);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    const RealVec3 w{r * std::cos(phi), r * std::sin(phi), z};
    pts.emplace_back(f(w), w);
  }
  // Axis directions are cheap and frequently optimal for diagonal maps.
  for (std::size_t k = 0; k < 3; ++k) {
    RealVec3 e{};
    e[k] = 1.0;
    pts.emplace_back(f(e), e);
  }
  const std::size_t starts = std::min<std::size_t>(4, pts.size());
  std::partial_sort(pts.begin(), pts.begin() + starts, pts.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first; });

  SphereMax best{pts.front().first, pts.front().second};
  const double initial_step = std::min(0.5, 4.0 / std::sqrt(static_cast<double>(grid)));
  for (std::size_t s = 0; s < starts; ++s) {
    RealVec3 w = pts[s].second;
    double fw = pts[s].first;
    double step = initial_step;
    for (int iter = 0; iter < 200 && step > 1e-12; ++iter) {
      bool moved = false;
      for (std::size_t k = 0; k < 3; ++k) {
        for (double sign : {1.0, -1.0}) {
          RealVec3 c = w;
          c[k] += sign * step;
          const double n = norm(c);
          for (double& v : c) v /= n;
          const double fc = f(c);
          if (fc > fw) {
            w = c;
            fw = fc;
            moved = true;
          }
        }
      }
      if (!moved) step *= 0.5;
    }
    if (fw > best.value) best = {fw, w};
  }
  return best;
}

namespace detail {

inline std::optional<double> scalar_gram(const RealMat3& m) {
  const RealMat3 g = mul(transpose(m), m);
  const double s = g[0][0];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (std::abs(g[i][j] - (i == j ? s : 0.0)) > 1e-15) return std::nullopt;
  return s;
}

inline double largest_singular_value(const RealMat3& m) {
  const RealMat3 g = mul(transpose(m), m);
  ComplexMatrix h(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h(i, j) = g[i][j];
  return std::sqrt(std::max(0.0, hermitian_eigenvalues(h).back()));
}

}  // namespace detail

/// Positivity of T: sup over real unit w of ||Aw|| + ||Cw|| must not exceed 1.
inline TriState positive_tensor(const TensorMap& m, std::size_t grid = 2000,
                                const Tolerances& tol = default_tolerances()) {
  if (grid < 64) throw UsageError("positive_tensor: grid must be at least 64");
  auto f = [&m](const RealVec3& w) { return norm(ksq::apply(m.a, w)) + norm(ksq::apply(m.c, w)); };
  const SphereMax found = sphere_maximize(f, grid);
  const double limit = 1.0 + tol.positivity;
  const PauliElement witness{1.0, to_complex(found.argmax)};

  std::optional<double> exact;
  const char* exact_note = "";
  if (m.a == m.c) {
    exact = 2.0 * detail::largest_singular_value(m.a);
    exact_note = "A = C: twice the operator norm of A";
  } else if (auto ga = detail::scalar_gram(m.a), gc = detail::scalar_gram(m.c); ga && gc) {
    exact = std::sqrt(std::max(0.0, *ga)) + std::sqrt(std::max(0.0, *gc));
    exact_note = "||Aw|| + ||Cw|| constant on the sphere";
  }

  TriState t;
  if (exact) {
    t.value = *exact;
    t.note = exact_note;
    if (*exact <= limit) {
      t.status = Status::HoldsExact;
    } else {
      t.status = Status::Fails;
      t.violated = "tensor-positivity-norm";
      t.witness = witness;
    }
    return t;
  }
  t.value = found.value;
  t.note = "sphere maximization of ||Aw|| + ||Cw||";
  if (found.value > limit) {
    t.status = Status::Fails;
    t.witness = witness;
    t.violated = "tensor-positivity-norm";
  } else {
    t.status = Status::HoldsSufficient;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Tensor maps: KS sufficient conditions

/// Returns (rhs, lhs) of ||A[w,w̄] − 2[Aw,Āw̄]|| + ||C[w,w̄] − 2[Cw,C̄w̄]|| ≤
/// ||w||² − 2||Aw||² − 2||Cw||².
inline std::pair<double, double> tensor_ks_sides(const TensorMap& m, const Vec3& w) {
  const Vec3 wbar = conj(w);
  const Vec3 b = bracket(w, wbar);
  auto term = [&](const RealMat3& op) {
    const Vec3 ow = ksq::apply(op, w);
    return norm(ksq::apply(op, b) - 2.0 * bracket(ow, conj(ow)));
  };
  const double nw = norm(w);
  const double na = norm(ksq::apply(m.a, w));
  const double nc = norm(ksq::apply(m.c, w));
  return {nw * nw - 2 * na * na - 2 * nc * nc, term(m.a) + term(m.c)};
}

inline TriState ks_tensor_sufficient(const TensorMap& m, std::size_t n_samples, std::uint64_t seed,
                                     const Tolerances& tol = default_tolerances()) {
  const char* note = "sufficient KS bound for tensor maps";
  auto check = [&](const Vec3& w) -> std::optional<TriState> {
    const auto [rhs, lhs] = tensor_ks_sides(m, w);
    if (rhs < -tol.inequality) {
      return TriState{Status::Inconclusive, PauliElement{0.0, w}, rhs, "tensor-ks-norm", note};
    }
    if (lhs > rhs + tol.inequality) {
      return TriState{Status::Inconclusive, PauliElement{0.0, w}, rhs - lhs, "tensor-ks-bracket",
                      note};
    }
    return std::nullopt;
  };
  for (const Vec3& w : detail::probe_vectors()) {
    if (auto t = check(w)) return *t;
  }
  const std::size_t chunks = (n_samples + detail::kChunkSize - 1) / detail::kChunkSize;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::mt19937_64 rng = detail::substream(seed, c);
    const std::size_t end = std::min(n_samples, (c + 1) * detail::kChunkSize);
    for (std::size_t s = c * detail::kChunkSize; s < end; ++s) {
      if (auto t = check(detail::random_unit_complex<3>(rng))) return *t;
    }
  }
  return {Status::HoldsSufficient, std::nullopt, std::nullopt, "", note};
}

/// A1..A3, B1..B3 of the KS bound for T_(λ1,λ2,λ3).
struct TensorKsTerms {
  double a1 = 0, a2 = 0, a3 = 0;
  double b1 = 0, b2 = 0, b3 = 0;
};

inline TensorKsTerms tensor_ks_terms(const DiagonalTensorParams& p) {
  const auto [l1, l2, l3] = p.lambda;
  return {std::pow(l1 - 2 * l2 * l3, 2), std::pow(l2 - 2 * l1 * l3, 2), std::pow(l3 - 2 * l1 * l2, 2),
          1 - 4 * l1 * l1, 1 - 4 * l2 * l2, 1 - 4 * l3 * l3};
}

/// 4(1+8λ1λ2λ3) − (1+4λi²)(3+4λj²+4λk²−4λi²) for i = 1, 2, 3.
inline std::array<double, 3> tensor_diag_ks_margins(const DiagonalTensorParams& p) {
  const auto& l = p.lambda;
  const double prod = l[0] * l[1] * l[2];
  std::array<double, 3> m{};
  for (std::size_t i = 0; i < 3; ++i) {
    const double li = l[i];
    const double lj = l[(i + 1) % 3];
    const double lk = l[(i + 2) % 3];
    m[i] = 4 * (1 + 8 * prod) - (1 + 4 * li * li) * (3 + 4 * lj * lj + 4 * lk * lk - 4 * li * li);
  }
  return m;
}

/// 1 + 16λ1λ2λ3 ≥ 4(λ1² + λ2² + λ3²) (implied by the three cyclic inequalities).
inline bool tensor_diag_ks_cross_condition(const DiagonalTensorParams& p,
                                           double tol = default_tolerances().inequality) {
  const auto& l = p.lambda;
  return 1 + 16 * l[0] * l[1] * l[2] + tol >= 4 * (l[0] * l[0] + l[1] * l[1] + l[2] * l[2]);
}

inline TriState ks_tensor_diag_sufficient(const DiagonalTensorParams& p,
                                          const Tolerances& tol = default_tolerances()) {
  const char* note = "sufficient KS inequalities for diagonal tensor maps";
  const auto margins = tensor_diag_ks_margins(p);
  for (std::size_t i = 0; i < 3; ++i) {
    if (margins[i] < -tol.inequality) {
      return {Status::Inconclusive, std::nullopt, margins[i],
              "tensor-ks-diag-cyclic-" + std::to_string(i + 1), note};
    }
  }
  return {Status::HoldsSufficient, std::nullopt, std::nullopt, "", note};
}

inline TriState ks_tlm_sufficient(const ScalarPairParams& p,
                                  const Tolerances& tol = default_tolerances()) {
  const double l = p.lambda;
  const double u = p.mu;
  const double lhs = std::abs(l) * std::abs(1 - 2 * l) + std::abs(u) * std::abs(1 - 2 * u);
  const double rhs = 1 - 2 * l * l - 2 * u * u;
  const char* note = "sufficient KS inequality for scalar tensor maps";
  if (lhs <= rhs + tol.inequality) return {Status::HoldsSufficient, std::nullopt, rhs - lhs, "", note};
  return {Status::Inconclusive, std::nullopt, rhs - lhs, "tensor-ks-scalar", note};
}

// ---------------------------------------------------------------------------
// Complete positivity of tensor maps

/// Radicand (λ1² + λ2²)² − 4λ1λ2λ3 + λ3², never negative on the parameter box.
inline double tensor_diag_radicand(const DiagonalTensorParams& p) {
  const auto [l1, l2, l3] = p.lambda;
  const double s = l1 * l1 + l2 * l2;
  return s * s - 4 * l1 * l2 * l3 + l3 * l3;
}

/// s1..s4: spectrum of the reduced 4×4 positivity test for |λ3| < 1/2.
inline std::array<double, 4> tensor_diag_reduced_eigenvalues(const DiagonalTensorParams& p) {
  const auto [l1, l2, l3] = p.lambda;
  const double root = std::sqrt(std::max(0.0, tensor_diag_radicand(p)));
  const double base = 1 - 2 * l1 * l1 - 2 * l2 * l2;
  return {1.0,
          (4 * l1 * l1 + 4 * l2 * l2 + 4 * l3 * l3 - 16 * l1 * l2 * l3 - 1) / (4 * l3 * l3 - 1),
          base + 2 * root, base - 2 * root};
}

namespace detail {

inline std::optional<TriState> tensor_diag_interior_cp(const DiagonalTensorParams& p,
                                                       const Tolerances& tol, const char* note) {
  const auto [l1, l2, l3] = p.lambda;
  const double eps = tol.inequality;
  if (!(std::abs(l3) < 0.5)) return std::nullopt;
  const double m1 = 1 + 16 * l1 * l2 * l3 - 4 * (l1 * l1 + l2 * l2 + l3 * l3);
  if (m1 < -eps) return TriState{Status::Fails, std::nullopt, m1, "cp-tensor-diag-cubic", note};
  const double m2 = 0.5 - (l1 * l1 + l2 * l2 + std::sqrt(std::max(0.0, tensor_diag_radicand(p))));
  if (m2 < -eps) return TriState{Status::Fails, std::nullopt, m2, "cp-tensor-diag-root", note};
  return TriState{Status::HoldsExact, std::nullopt, std::nullopt, "", note};
}

}  // namespace detail

/// CP of T_(λ1,λ2,λ3).
///
/// Interior (|λ3| < 1/2): the cubic and square-root inequalities. On the
/// faces the Choi matrix has a zero diagonal entry, and positivity forces the
/// matching off-diagonal entry λ1 ∓ λ2 to vanish: λ3 = 1/2 needs λ1 = λ2,
/// λ3 = −1/2 needs λ1 = −λ2.
inline TriState cp_tensor_diag_exact(const DiagonalTensorParams& p,
                                     const Tolerances& tol = default_tolerances()) {
  const auto [l1, l2, l3] = p.lambda;
  const char* note = "closed-form CP criterion for diagonal tensor maps";
  if (std::abs(l3 - 0.5) <= tol.boundary) {
    if (std::abs(l1 - l2) <= tol.boundary) return {Status::HoldsExact, std::nullopt, std::nullopt, "", note};
    return {Status::Fails, std::nullopt, l1 - l2, "cp-tensor-diag-upper-face", note};
  }
  if (std::abs(l3 + 0.5) <= tol.boundary) {
    if (std::abs(l1 + l2) <= tol.boundary) return {Status::HoldsExact, std::nullopt, std::nullopt, "", note};
    return {Status::Fails, std::nullopt, l1 + l2, "cp-tensor-diag-lower-face", note};
  }
  return *detail::tensor_diag_interior_cp(p, tol, note);
}

/// Naive face conditions (λ3 = 1/2 with any λ1, λ2;
/// λ3 = −1/2 only at (±1/2, ∓1/2)). Disagrees with the Choi spectrum on both
/// faces; kept for comparison.
inline TriState cp_tensor_diag_naive_faces(const DiagonalTensorParams& p,
                                         const Tolerances& tol = default_tolerances()) {
  const auto [l1, l2, l3] = p.lambda;
  const double b = tol.boundary;
  const char* note = "naive face conditions for diagonal tensor maps";
  if (std::abs(l3 - 0.5) <= b) return {Status::HoldsExact, std::nullopt, std::nullopt, "", note};
  if (std::abs(l3 + 0.5) <= b) {
    const bool corner = (std::abs(l1 - 0.5) <= b && std::abs(l2 + 0.5) <= b) ||
                        (std::abs(l1 + 0.5) <= b && std::abs(l2 - 0.5) <= b);
    if (corner) return {Status::HoldsExact, std::nullopt, std::nullopt, "", note};
    return {Status::Fails, std::nullopt, std::nullopt, "cp-tensor-diag-lower-face", note};
  }
  return *detail::tensor_diag_interior_cp(p, tol, note);
}

/// Spectrum of 2·Choi(T_{λ,µ}): λ+µ+1 ± 2√(λ²−λµ+µ²) and 1−λ−µ.
inline std::array<double, 3> tlm_choi_spectrum(const ScalarPairParams& p) {
  const double l = p.lambda;
  const double u = p.mu;
  const double root = 2 * std::sqrt(std::max(0.0, l * l - l * u + u * u));
  return {l + u + 1 + root, l + u + 1 - root, 1 - l - u};
}

inline TriState cp_tlm_exact(const ScalarPairParams& p,
                             const Tolerances& tol = default_tolerances()) {
  const auto s = tlm_choi_spectrum(p);
  const char* note = "closed-form CP criterion for scalar tensor maps";
  if (s[1] < -tol.inequality) return {Status::Fails, std::nullopt, s[1], "cp-tlm-root", note};
  if (s[2] < -tol.inequality) return {Status::Fails, std::nullopt, s[2], "cp-tlm-sum", note};
  return {Status::HoldsExact, std::nullopt, std::min(s[1], s[2]), "", note};
}

/// Choi's criterion: CP iff the Choi matrix is positive semidefinite.
inline TriState cp_choi_numeric(const ComplexMatrix& choi, double tol = default_tolerances().positivity) {
  if (hermiticity_defect(choi) > default_tolerances().hermiticity) {
    throw UsageError("cp_choi_numeric: Choi matrix is not Hermitian");
  }
  const double lo = min_eigenvalue(choi);
  const char* note = "Choi matrix spectrum";
  if (lo >= -tol) return {Status::HoldsExact, std::nullopt, lo, "", note};
  return {Status::Fails, std::nullopt, lo, "choi-negative-eigenvalue", note};
}

// ---------------------------------------------------------------------------
// Dispatcher

struct ClassifyOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::size_t sphere_grid = 2000;
  Tolerances tol{};
};

namespace detail {

inline SampleConfig oracle_config(const ClassifyOptions& opt) {
  SampleConfig cfg;
  cfg.n_samples = opt.samples;
  cfg.seed = opt.seed;
  cfg.tol = opt.tol.oracle;
  return cfg;
}

/// Resolves a KS level that no closed form settled by running the oracle.
inline TriState ks_by_oracle(const EvaluableMap& map, const ClassifyOptions& opt,
                             const std::string& prefix) {
  const auto w = ks_violation_search(map, oracle_config(opt));
  if (w) {
    return {Status::Fails, w->x, w->violation, "ks-defect",
            prefix + "oracle found a KS defect witness"};
  }
  return {Status::HoldsSufficient, std::nullopt, std::nullopt, "",
          prefix + "oracle found no violation in " + std::to_string(opt.samples) + " samples"};
}

inline void enforce_hierarchy(Verdict& v) {
  // CP ⊂ KS ⊂ positive.
  if (v.completely_positive.status == Status::HoldsExact) {
    if (v.kadison_schwarz.status == Status::Inconclusive) {
      v.kadison_schwarz.status = Status::HoldsSufficient;
      v.kadison_schwarz.note += "; implied by complete positivity";
    } else if (v.kadison_schwarz.status == Status::Fails) {
      v.kadison_schwarz.status = Status::Inconclusive;
      v.kadison_schwarz.note += "; conflicts with complete positivity";
    }
  }
  if (v.kadison_schwarz.holds()) {
    if (v.positive.status == Status::Inconclusive) {
      v.positive.status = Status::HoldsSufficient;
      v.positive.note += "; implied by KS";
    } else if (v.positive.status == Status::Fails &&
               v.kadison_schwarz.status != Status::HoldsExact) {
      v.kadison_schwarz.status = Status::Inconclusive;
      v.kadison_schwarz.note += "; conflicts with a positivity failure";
    }
  }
}

}  // namespace detail

inline Verdict classify_full(const FamilyDescriptor& d, const ClassifyOptions& opt = {}) {
  Verdict v;
  const EvaluableMap map = descriptor_map(d);
  if (const auto* p = std::get_if<DiagonalParams>(&d)) {
    v.positive = positive_phi_exact(p->channel(), opt.tol);
    v.kadison_schwarz = ks_phi_diag_exact(*p, opt.tol);
    if (v.kadison_schwarz.status == Status::Fails) {
      // The closed form's failure direction is cross-checked before it is reported.
      const auto w = ks_violation_search(map, detail::oracle_config(opt));
      if (w) {
        v.kadison_schwarz.witness = w->x;
        v.kadison_schwarz.value = w->violation;
        v.kadison_schwarz.note += "; confirmed by oracle witness";
      } else {
        v.kadison_schwarz.status = Status::Inconclusive;
        v.kadison_schwarz.note +=
            "; closed-form/oracle discrepancy: inequality " + v.kadison_schwarz.violated +
            " fails but no violation was found in " + std::to_string(opt.samples) + " samples";
      }
    }
    v.completely_positive = cp_phi_exact(*p, opt.tol);
  } else if (const auto* p = std::get_if<DiagonalTensorParams>(&d)) {
    const TensorMap m = p->tensor_map();
    v.positive = positive_tensor(m, opt.sphere_grid, opt.tol);
    v.kadison_schwarz = ks_tensor_diag_sufficient(*p, opt.tol);
    if (v.kadison_schwarz.status == Status::Inconclusive) {
      v.kadison_schwarz = detail::ks_by_oracle(map, opt, "sufficient inequalities inconclusive; ");
    }
    v.completely_positive = cp_tensor_diag_exact(*p, opt.tol);
  } else if (const auto* p = std::get_if<ScalarPairParams>(&d)) {
    const TensorMap m = p->tensor_map();
    v.positive = positive_tensor(m, opt.sphere_grid, opt.tol);
    v.kadison_schwarz = ks_tlm_sufficient(*p, opt.tol);
    if (v.kadison_schwarz.status == Status::Inconclusive) {
      v.kadison_schwarz = detail::ks_by_oracle(map, opt, "sufficient inequality inconclusive; ");
    }
    v.completely_positive = cp_tlm_exact(*p, opt.tol);
  } else {
    const TensorMap& m = std::get<TensorMap>(d);
    v.positive = positive_tensor(m, opt.sphere_grid, opt.tol);
    v.kadison_schwarz = ks_tensor_sufficient(m, opt.samples, opt.seed, opt.tol);
    if (v.kadison_schwarz.status == Status::Inconclusive) {
      v.kadison_schwarz = detail::ks_by_oracle(map, opt, "sufficient bound inconclusive; ");
    }
    v.completely_positive = cp_choi_numeric(choi_matrix_tensor(m), opt.tol.positivity);
  }
  detail::enforce_hierarchy(v);
  return v;
}

inline Verdict classify_full(std::string_view descriptor, const ClassifyOptions& opt = {}) {
  return classify_full(parse_descriptor(descriptor), opt);
}

}  // namespace ksq

#endif  // KSQ_CLASSIFY_HPP
