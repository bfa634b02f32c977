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

#ifndef KSQ_HARNESS_HPP
#define KSQ_HARNESS_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ksq/channels.hpp"
#include "ksq/classify.hpp"
#include "ksq/descriptor.hpp"
#include "ksq/oracle.hpp"
#include "ksq/parallel.hpp"

namespace ksq {

enum class HarnessFamily { Phi, TensorDiag, ScalarPair };

inline HarnessFamily parse_harness_family(std::string_view name) {
  if (name == "phi") return HarnessFamily::Phi;
  if (name == "tdiag") return HarnessFamily::TensorDiag;
  if (name == "tlm") return HarnessFamily::ScalarPair;
  throw UsageError("harness: unknown family '" + std::string(name) + "' (expected phi, tdiag or tlm)");
}

struct LevelCounts {
  std::size_t agree = 0;
  std::size_t resolved_by_oracle = 0;
  std::size_t discrepancy = 0;
};

struct Discrepancy {
  std::string descriptor;
  std::string level;
  std::string detail;
};

struct HarnessReport {
  HarnessFamily family = HarnessFamily::Phi;
  std::size_t resolution = 0;
  std::size_t points = 0;
  LevelCounts positive;
  LevelCounts kadison_schwarz;
  LevelCounts completely_positive;
  /// Scalar pairs where T is oracle-clean but one of the split maps Φ, Ψ is not.
  std::size_t split_separations = 0;
  std::vector<Discrepancy> discrepancies;

  [[nodiscard]] std::size_t total_discrepancies() const {
    return positive.discrepancy + kadison_schwarz.discrepancy + completely_positive.discrepancy;
  }
};

/// `n` evenly spaced points from lo to hi, both endpoints included.
inline std::vector<double> inclusive_grid(double lo, double hi, std::size_t n) {
  if (n < 2) throw UsageError("harness: resolution must be at least 2");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = std::clamp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1), lo, hi);
  }
  return g;
}

namespace detail {

enum class Outcome { Agree, Resolved, Discrepancy };

struct PointResult {
  Outcome positive = Outcome::Agree;
  Outcome ks = Outcome::Agree;
  Outcome cp = Outcome::Agree;
  bool split_separation = false;
  std::vector<Discrepancy> notes;
};

inline Outcome compare(const TriState& claim, bool oracle_clean) {
  switch (claim.status) {
    case Status::HoldsExact:
    case Status::HoldsSufficient: return oracle_clean ? Outcome::Agree : Outcome::Discrepancy;
    case Status::Fails: return oracle_clean ? Outcome::Discrepancy : Outcome::Agree;
    case Status::Inconclusive: return Outcome::Resolved;
  }
  return Outcome::Discrepancy;
}

inline void tally(LevelCounts& c, Outcome o) {
  if (o == Outcome::Agree) ++c.agree;
  else if (o == Outcome::Resolved) ++c.resolved_by_oracle;
  else ++c.discrepancy;
}

/// Positivity verdicts are cross-checked by the sampling oracle, and a
/// failure is also accepted when the classifier's own witness produces a
/// negative output eigenvalue.
inline bool positivity_clean(const EvaluableMap& map, const TriState& claim,
                             const SampleConfig& cfg) {
  if (claim.status == Status::Fails && claim.witness) {
    if (min_eigenvalue(map(*claim.witness)) < -cfg.tol) return false;
  }
  return !positivity_violation_search(map, cfg).has_value();
}

inline PointResult run_point(const FamilyDescriptor& d, const SampleConfig& cfg) {
  PointResult r;
  const EvaluableMap map = descriptor_map(d);
  TriState pos, ks, cp;
  bool cp_clean = false;
  if (const auto* p = std::get_if<DiagonalParams>(&d)) {
    pos = positive_phi_exact(p->channel());
    ks = ks_phi_diag_exact(*p);
    cp = cp_phi_exact(*p);
    cp_clean = cp_choi_numeric(choi_matrix_qubit(p->channel())).holds();
  } else if (const auto* p = std::get_if<DiagonalTensorParams>(&d)) {
    pos = positive_tensor(p->tensor_map());
    ks = ks_tensor_diag_sufficient(*p);
    cp = cp_tensor_diag_exact(*p);
    cp_clean = cp_choi_numeric(choi_matrix_tensor(p->tensor_map())).holds();
  } else {
    const auto& sp = std::get<ScalarPairParams>(d);
    pos = positive_tensor(sp.tensor_map());
    ks = ks_tlm_sufficient(sp);
    cp = cp_tlm_exact(sp);
    cp_clean = cp_choi_numeric(choi_matrix_tensor(sp.tensor_map())).holds();
  }

  const bool ks_clean = !ks_violation_search(map, cfg).has_value();
  const bool pos_clean = positivity_clean(map, pos, cfg);
  r.positive = compare(pos, pos_clean);
  r.ks = compare(ks, ks_clean);
  r.cp = compare(cp, cp_clean);

  const std::string name = format_descriptor(d);
  auto note = [&](Outcome o, const char* level, const TriState& t, bool clean) {
    if (o != Outcome::Discrepancy) return;
    r.notes.push_back({name, level,
                       std::string(to_string(t.status)) +
                           (t.violated.empty() ? "" : " (" + t.violated + ")") + " vs " +
                           (clean ? "clean" : "violated") + " reference"});
  };
  note(r.positive, "positive", pos, pos_clean);
  note(r.ks, "ks", ks, ks_clean);
  note(r.cp, "cp", cp, cp_clean);

  if (const auto* p = std::get_if<ScalarPairParams>(&d); p && ks_clean) {
    const auto [phi, psi] = split_phi_psi(p->tensor_map());
    r.split_separation = ks_violation_search(as_map(phi), cfg).has_value() ||
                         ks_violation_search(as_map(psi), cfg).has_value();
  }
  return r;
}

}  // namespace detail

/// Cross-validates the closed-form classifiers of one family against the
/// oracles (KS, positivity) and the Choi spectrum (CP) on an inclusive grid.
/// Points are processed on cfg.threads workers; the report is
/// schedule-independent.
inline HarnessReport agreement_harness(HarnessFamily family, std::size_t resolution,
                                       const SampleConfig& cfg) {
  cfg.validate();
  std::vector<FamilyDescriptor> points;
  if (family == HarnessFamily::Phi || family == HarnessFamily::TensorDiag) {
    const double h = family == HarnessFamily::Phi ? 1.0 : 0.5;
    const auto g = inclusive_grid(-h, h, resolution);
    for (double x : g)
      for (double y : g)
        for (double z : g) {
          if (family == HarnessFamily::Phi) points.emplace_back(DiagonalParams(x, y, z));
          else points.emplace_back(DiagonalTensorParams(x, y, z));
        }
  } else {
    const auto g = inclusive_grid(-1.0, 1.0, resolution);
    for (double x : g)
      for (double y : g) points.emplace_back(ScalarPairParams{x, y});
  }

  SampleConfig inner = cfg;
  inner.threads = 1;
  std::vector<detail::PointResult> results(points.size());
  parallel_for(points.size(), cfg.threads,
               [&](std::size_t i) { results[i] = detail::run_point(points[i], inner); });

  HarnessReport report;
  report.family = family;
  report.resolution = resolution;
  report.points = points.size();
  for (const auto& r : results) {
    detail::tally(report.positive, r.positive);
    detail::tally(report.kadison_schwarz, r.ks);
    detail::tally(report.completely_positive, r.cp);
    if (r.split_separation) ++report.split_separations;
    report.discrepancies.insert(report.discrepancies.end(), r.notes.begin(), r.notes.end());
  }
  return report;
}

}  // namespace ksq

#endif  // KSQ_HARNESS_HPP
