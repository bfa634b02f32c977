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

#ifndef KSQ_ORACLE_HPP
#define KSQ_ORACLE_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ksq/channels.hpp"
#include "ksq/linalg.hpp"
#include "ksq/parallel.hpp"
#include "ksq/pauli.hpp"

// Brute-force checks that work from the definitions alone:
//   KS:        Φ(x)*Φ(x) ≤ Φ(x*x) for every x,
//   positive:  Φ(x) ≥ 0 for every x ≥ 0.
// Nothing here consults a closed-form criterion.

namespace ksq {

struct SampleConfig {
  std::size_t n_samples = 10000;
  std::uint64_t seed = 0;
  double tol = default_tolerances().oracle;
  bool probe_set_enabled = true;
  unsigned threads = 1;

  void validate() const {
    if (n_samples < 1) throw UsageError("SampleConfig: n_samples must be >= 1");
    if (!(tol > 0.0)) throw UsageError("SampleConfig: tol must be > 0");
  }
};

enum class DefectKind { KS, Positivity };

struct Witness {
  PauliElement x;
  /// Most negative eigenvalue of the defect (KS) or of the output (positivity).
  double violation = 0.0;
  DefectKind defect_kind = DefectKind::KS;
};

/// Φ(x*x) − Φ(x)*Φ(x).
inline ComplexMatrix ks_defect(const EvaluableMap& map, const PauliElement& x) {
  const ComplexMatrix fx = map(x);
  return map(star_square(x)) - mat_mul(adjoint(fx), fx);
}

namespace detail {

inline constexpr std::size_t kChunkSize = 1024;

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent generator for chunk `chunk` of the stream rooted at `seed`.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t chunk) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(chunk + 1)));
}

/// Uniform on the unit sphere of ℂ^n (n real Gaussian pairs, normalized).
template <std::size_t N>
std::array<Complex, N> random_unit_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<Complex, N> v{};
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (auto& c : v) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      c = {re, im};
      n2 += re * re + im * im;
    }
  } while (n2 < 1e-300);
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : v) c *= inv;
  return v;
}

/// w = e_j and w = (e_j ± i e_k)/√2 for j ≠ k: the inputs at which the
/// imaginary-part bound |w_i w̄_j − w_j w̄_i| ≤ |w_i|² + |w_j|² is tight.
inline std::vector<Vec3> probe_vectors() {
  std::vector<Vec3> probes;
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 0; j < 3; ++j) {
    Vec3 e{};
    e[j] = 1.0;
    probes.push_back(e);
  }
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (j == k) continue;
      for (double sign : {1.0, -1.0}) {
        Vec3 v{};
        v[j] = r;
        v[k] = Complex{0.0, sign * r};
        probes.push_back(v);
      }
    }
  }
  return probes;
}

struct Candidate {
  double violation = 0.0;
  std::size_t index = 0;
  PauliElement x;
  bool found = false;

  void offer(double v, std::size_t idx, const PauliElement& at) {
    if (!found || v < violation || (v == violation && idx < index)) {
      violation = v;
      index = idx;
      x = at;
      found = true;
    }
  }
  void merge(const Candidate& other) {
    if (other.found) offer(other.violation, other.index, other.x);
  }
};

/// Runs `test(x, index, candidate)` over the probe inputs followed by
/// n_samples random inputs drawn chunk-wise from seed-derived substreams.
/// The merged result does not depend on cfg.threads.
template <class Draw, class Test>
Candidate sample_search(const SampleConfig& cfg, const std::vector<PauliElement>& probes,
                        Draw draw, Test test) {
  Candidate best;
  for (std::size_t i = 0; i < probes.size(); ++i) test(probes[i], i, best);

  const std::size_t chunks = (cfg.n_samples + kChunkSize - 1) / kChunkSize;
  std::vector<Candidate> per_chunk(chunks);
  parallel_for(chunks, cfg.threads, [&](std::size_t c) {
    std::mt19937_64 rng = substream(cfg.seed, c);
    const std::size_t begin = c * kChunkSize;
    const std::size_t end = std::min(cfg.n_samples, begin + kChunkSize);
    for (std::size_t s = begin; s < end; ++s) {
      test(draw(rng), probes.size() + s, per_chunk[c]);
    }
  });
  for (const Candidate& c : per_chunk) best.merge(c);
  return best;
}

}  // namespace detail

/// Numerically confirms the two reductions that justify sampling only
/// w0 = 0, ||w|| = 1: D(x + c𝟙) = D(x) and D(s·x) = |s|² D(x).
inline bool ks_sampling_reduction_holds(const EvaluableMap& map, std::uint64_t seed,
                                        std::size_t trials = 8, double tol = 1e-10) {
  std::mt19937_64 rng = detail::substream(seed, 0xfeedULL);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto v = detail::random_unit_complex<5>(rng);
    const PauliElement x{v[0], {v[1], v[2], v[3]}};
    const Complex c = 3.0 * v[4];
    const Complex s = Complex{1.7, -0.6} * (1.0 + std::abs(v[4]));
    const ComplexMatrix d = ks_defect(map, x);
    const ComplexMatrix shifted = ks_defect(map, {x.w0 + c, x.w});
    const ComplexMatrix scaled = ks_defect(map, {s * x.w0, s * x.w});
    if (max_abs_diff(shifted, d) > tol * (1.0 + std::norm(c))) return false;
    if (max_abs_diff(scaled, std::norm(s) * d) > tol * std::norm(s)) return false;
  }
  return true;
}

/// Searches for x with min eig(Φ(x*x) − Φ(x)*Φ(x)) < −tol. Returns the worst
/// witness found, or nothing. Deterministic for a fixed seed.
inline std::optional<Witness> ks_violation_search(const EvaluableMap& map,
                                                  const SampleConfig& cfg) {
  cfg.validate();
  const bool reduced = ks_sampling_reduction_holds(map, cfg.seed);

  std::vector<PauliElement> probes;
  if (cfg.probe_set_enabled) {
    for (const Vec3& w : detail::probe_vectors()) probes.push_back({0.0, w});
  }

  auto draw = [reduced](std::mt19937_64& rng) -> PauliElement {
    if (reduced) {
      const auto w = detail::random_unit_complex<3>(rng);
      return {0.0, w};
    }
    const auto v = detail::random_unit_complex<4>(rng);
    return {v[0], {v[1], v[2], v[3]}};
  };
  auto test = [&map, &cfg](const PauliElement& x, std::size_t idx, detail::Candidate& best) {
    const ComplexMatrix d = ks_defect(map, x);
    if (cholesky_positive(d, cfg.tol)) return;
    const double v = min_eigenvalue(d, 1e-8);
    if (v < -cfg.tol) best.offer(v, idx, x);
  };

  const detail::Candidate best = detail::sample_search(cfg, probes, draw, test);
  if (!best.found) return std::nullopt;
  return Witness{best.x, best.violation, DefectKind::KS};
}

/// Samples positive inputs x = 𝟙 + w·σ, w uniform in the closed unit ball,
/// and reports the worst output eigenvalue below −tol.
inline std::optional<Witness> positivity_violation_search(const EvaluableMap& map,
                                                          const SampleConfig& cfg) {
  cfg.validate();
  std::vector<PauliElement> probes;
  if (cfg.probe_set_enabled) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (double sign : {1.0, -1.0}) {
        PauliElement x{1.0, {}};
        x.w[j] = sign;
        probes.push_back(x);
      }
    }
  }
  auto draw = [](std::mt19937_64& rng) -> PauliElement {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    RealVec3 d{};
    double n = 0.0;
    do {
      for (double& c : d) c = gauss(rng);
      n = norm(d);
    } while (n < 1e-300);
    const double radius = std::cbrt(unif(rng));
    return {1.0, {radius * d[0] / n, radius * d[1] / n, radius * d[2] / n}};
  };
  auto test = [&map, &cfg](const PauliElement& x, std::size_t idx, detail::Candidate& best) {
    const ComplexMatrix out = map(x);
    if (cholesky_positive(out, cfg.tol)) return;
    const double v = min_eigenvalue(out, 1e-8);
    if (v < -cfg.tol) best.offer(v, idx, x);
  };

  const detail::Candidate best = detail::sample_search(cfg, probes, draw, test);
  if (!best.found) return std::nullopt;
  return Witness{best.x, best.violation, DefectKind::Positivity};
}

}  // namespace ksq

#endif  // KSQ_ORACLE_HPP
