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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ksq/channels.hpp"
#include "ksq/classify.hpp"
#include "ksq/oracle.hpp"
#include "test_support.hpp"

namespace ksq {
namespace {

SampleConfig oracle_cfg(std::size_t samples, std::uint64_t seed = 1) {
  SampleConfig cfg;
  cfg.n_samples = samples;
  cfg.seed = seed;
  return cfg;
}

bool oracle_clean(const EvaluableMap& map, std::size_t samples = 4000) {
  return !ks_violation_search(map, oracle_cfg(samples)).has_value();
}

// ---------------------------------------------------------------------------
// Diagonal channels

TEST(DiagKsTerms, Values) {
  const DiagKsTerms t = diag_ks_terms(DiagonalParams(0.6, 0.5, -0.2));
  EXPECT_DOUBLE_EQ(t.alpha, 1 - 0.36);
  EXPECT_DOUBLE_EQ(t.beta, 1 - 0.25);
  EXPECT_DOUBLE_EQ(t.gamma, 1 - 0.04);
  EXPECT_NEAR(t.a, std::pow(0.6 + 0.1, 2), 1e-15);
  EXPECT_NEAR(t.b, std::pow(0.5 + 0.12, 2), 1e-15);
  EXPECT_NEAR(t.c, std::pow(-0.2 - 0.3, 2), 1e-15);
}

TEST(KsPhiDiagExact, Examples) {
  EXPECT_EQ(ks_phi_diag_exact(DiagonalParams(1, 1, 1)).status, Status::HoldsExact);

  const TriState transpose = ks_phi_diag_exact(DiagonalParams(1, -1, 1));
  EXPECT_EQ(transpose.status, Status::Fails);
  EXPECT_EQ(transpose.violated, "ks-diag-cyclic-1");

  const DiagonalParams p(0.6, 0.5, 0.0);
  EXPECT_EQ(ks_phi_diag_exact(p).status, Status::HoldsExact);
  const auto m = ks_diag_margins(p);
  EXPECT_NEAR(m[0], 4 - 3.9304, 1e-12);
  EXPECT_NEAR(m[1], 4 - 3.8875, 1e-12);
  EXPECT_NEAR(m[2], 4 - 3.61, 1e-12);
}

TEST(KsPhiDiagExact, CyclicInequalitiesImplyCrossCondition) {
  std::mt19937_64 rng(1);
  int held = 0;
  for (int t = 0; t < 100000; ++t) {
    const auto l = testing::random_real_vec3(rng);
    const DiagonalParams p(l[0], l[1], l[2]);
    if (ks_phi_diag_exact(p).status != Status::HoldsExact) continue;
    ++held;
    ASSERT_TRUE(ks_diag_cross_condition(p)) << l[0] << ' ' << l[1] << ' ' << l[2];
  }
  EXPECT_GT(held, 1000);
}

// Whenever the closed form says KS, the oracle agrees.
TEST(KsPhiDiagExact, HoldsImpliesOracleClean) {
  std::mt19937_64 rng(2);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const auto l = testing::random_real_vec3(rng);
    const DiagonalParams p(l[0], l[1], l[2]);
    if (ks_phi_diag_exact(p).status != Status::HoldsExact) continue;
    ++checked;
    EXPECT_TRUE(oracle_clean(as_map(p.channel()))) << format_descriptor(p);
  }
  EXPECT_GT(checked, 20);
}

// The closed form rejects Φ_(−0.8,−0.2,−0.2), yet its KS defect stays
// positive semidefinite: the failure direction is not exact.
TEST(KsPhiDiagExact, FailureDirectionHasCounterexample) {
  const DiagonalParams p(-0.8, -0.2, -0.2);
  const TriState t = ks_phi_diag_exact(p);
  ASSERT_EQ(t.status, Status::Fails);
  EXPECT_NEAR(*t.value, -0.1296, 1e-12);
  EXPECT_TRUE(oracle_clean(as_map(p.channel()), 100000));
  EXPECT_EQ(ks_phi_general(p.channel(), 100000, 3).status, Status::HoldsSufficient);
}

TEST(KsPhiGeneral, Examples) {
  EXPECT_EQ(ks_phi_general(QubitChannel::identity(), 1000, 1).status, Status::HoldsSufficient);

  const TriState transpose = ks_phi_general(DiagonalParams(1, -1, 1).channel(), 1000, 1);
  ASSERT_EQ(transpose.status, Status::Fails);
  ASSERT_TRUE(transpose.witness.has_value());
  EXPECT_EQ(transpose.witness->w0, Complex(0.0));
  // A probe input: exactly two non-zero components, one of them imaginary.
  int nonzero = 0;
  for (const Complex& c : transpose.witness->w) nonzero += std::abs(c) > 0.0;
  EXPECT_EQ(nonzero, 2);
  EXPECT_LT(min_eigenvalue(ks_defect(as_map(DiagonalParams(1, -1, 1).channel()), *transpose.witness)),
            -1e-3);

  EXPECT_EQ(ks_phi_general(DiagonalParams(0.6, 0.5, 0.0).channel(), 100000, 1).status,
            Status::HoldsSufficient);
}

// The pointwise inequality is an exact restatement of the defect condition, so
// it must agree with the oracle on general (non-diagonal) real T.
TEST(KsPhiGeneral, AgreesWithOracleOnRandomChannels) {
  std::mt19937_64 rng(4);
  int fails = 0, holds = 0;
  for (int t = 0; t < 200; ++t) {
    QubitChannel ch;
    const double s = testing::uniform(rng, 0.2, 1.0);
    for (auto& row : ch.t)
      for (double& v : row) v = testing::uniform(rng, -s, s);
    const TriState g = ks_phi_general(ch, 3000, 5);
    const auto w = ks_violation_search(as_map(ch), oracle_cfg(3000, 5));
    if (g.status == Status::Fails) {
      ++fails;
      // The pointwise check flags norm growth and bracket excess; both are
      // genuine defects, but the oracle may need the exact witness.
      EXPECT_LT(min_eigenvalue(ks_defect(as_map(ch), *g.witness)), 1e-9);
    } else {
      ++holds;
      if (w) {
        EXPECT_GT(w->violation, -1e-6) << "oracle witness missed by the pointwise test";
      }
    }
  }
  EXPECT_GT(fails, 10);
  EXPECT_GT(holds, 10);
}

TEST(PositivePhiExact, OperatorNorm) {
  EXPECT_EQ(positive_phi_exact(DiagonalParams(1, -1, 1).channel()).status, Status::HoldsExact);
  QubitChannel big;
  big.t = {{{0.8, 0.8, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}};
  EXPECT_EQ(positive_phi_exact(big).status, Status::Fails);
}

TEST(CpPhiExact, Examples) {
  EXPECT_EQ(cp_phi_exact(DiagonalParams(1, 1, 1)).status, Status::HoldsExact);
  EXPECT_EQ(cp_phi_exact(DiagonalParams(1, -1, 1)).status, Status::Fails);
  const TriState t = cp_phi_exact(DiagonalParams(0.6, 0.5, 0.0));
  EXPECT_EQ(t.status, Status::Fails);
  EXPECT_FALSE(t.violated.empty());
  EXPECT_LT(min_eigenvalue(choi_matrix_qubit(DiagonalParams(0.6, 0.5, 0.0).channel())), 0.0);
}

TEST(CpPhiExact, AgreesWithChoiSpectrum) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20000; ++t) {
    const auto l = testing::random_real_vec3(rng);
    const DiagonalParams p(l[0], l[1], l[2]);
    const double lo = min_eigenvalue(choi_matrix_qubit(p.channel()));
    if (std::abs(lo) < 1e-9) continue;
    ASSERT_EQ(cp_phi_exact(p).holds(), lo > 0.0) << format_descriptor(p);
  }
}

TEST(KsPhiScalarInterval, Examples) {
  EXPECT_EQ(ks_phi_scalar_interval(0.5).status, Status::HoldsExact);
  EXPECT_EQ(ks_phi_scalar_interval(-0.25).status, Status::HoldsExact);
  EXPECT_EQ(ks_phi_scalar_interval(-0.3).status, Status::Fails);
  EXPECT_EQ(ks_phi_scalar_interval(0.51).status, Status::Fails);
}

// On λ ∈ [−1/4, (1−√2)/2) the scalar interval and the cyclic inequalities at
// (2λ,2λ,2λ) disagree; the oracle sides with the interval.
TEST(KsPhiScalarInterval, DisagreementBandIsOracleClean) {
  const double edge = (1 - std::sqrt(2.0)) / 2;
  for (double l : {-0.25, -0.24, -0.22, edge - 1e-3}) {
    const DiagonalParams p(2 * l, 2 * l, 2 * l);
    EXPECT_EQ(ks_phi_scalar_interval(l).status, Status::HoldsExact);
    EXPECT_EQ(ks_phi_diag_exact(p).status, Status::Fails) << l;
    EXPECT_TRUE(oracle_clean(as_map(p.channel()), 20000)) << l;
  }
  for (double l : {edge + 1e-3, 0.0, 0.5}) {
    EXPECT_EQ(ks_phi_diag_exact(DiagonalParams(2 * l, 2 * l, 2 * l)).status, Status::HoldsExact) << l;
  }
  for (double l : {-0.26, -0.3, -0.5}) {
    EXPECT_FALSE(oracle_clean(as_map(DiagonalParams(2 * l, 2 * l, 2 * l).channel()), 20000)) << l;
  }
}

// ---------------------------------------------------------------------------
// Tensor maps

TEST(PositiveTensor, Examples) {
  TensorMap half{scaled_identity3(0.5), scaled_identity3(0.5)};
  const TriState h = positive_tensor(half);
  EXPECT_EQ(h.status, Status::HoldsExact);
  EXPECT_NEAR(*h.value, 1.0, 1e-12);

  const TensorMap axis{diag3(0.8, 0, 0), diag3(0.3, 0, 0)};
  const TriState a = positive_tensor(axis);
  ASSERT_EQ(a.status, Status::Fails);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_NEAR(*a.value, 1.1, 1e-9);
  EXPECT_NEAR(std::abs(a.witness->w[0].real()), 1.0, 1e-6);

  EXPECT_EQ(positive_tensor(TensorMap{}).status, Status::HoldsExact);
  EXPECT_THROW(positive_tensor(TensorMap{}, 10), UsageError);
}

TEST(PositiveTensor, AscentReachesSampledMaximum) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    TensorMap m;
    for (auto* mat : {&m.a, &m.c})
      for (auto& row : *mat)
        for (double& v : row) v = testing::uniform(rng, -0.4, 0.4);
    auto f = [&m](const RealVec3& w) { return norm(ksq::apply(m.a, w)) + norm(ksq::apply(m.c, w)); };
    double sampled = 0.0;
    std::normal_distribution<double> g;
    for (int s = 0; s < 50000; ++s) {
      RealVec3 w{g(rng), g(rng), g(rng)};
      const double n = norm(w);
      for (double& v : w) v /= n;
      sampled = std::max(sampled, f(w));
    }
    const TriState r = positive_tensor(m);
    EXPECT_GE(*r.value, sampled - 1e-9);
    EXPECT_EQ(r.status == Status::Fails, *r.value > 1.0 + 1e-9);
  }
}

TEST(PositiveTensor, FailureWitnessIsNegativeOutput) {
  const TensorMap m{diag3(0.1, 0.7, 0.2), diag3(0.2, 0.5, 0.6)};
  const TriState r = positive_tensor(m);
  ASSERT_EQ(r.status, Status::Fails);
  EXPECT_LT(min_eigenvalue(m(*r.witness)), -0.1);
}

TEST(KsTensorSufficient, Examples) {
  EXPECT_EQ(ks_tensor_sufficient(TensorMap{}, 1000, 1).status, Status::HoldsSufficient);
  EXPECT_EQ(ks_tensor_sufficient(ScalarPairParams{-0.25, -0.25}.tensor_map(), 1000, 1).status,
            Status::HoldsSufficient);
  const TriState t = ks_tensor_sufficient(ScalarPairParams{0.5, -0.3}.tensor_map(), 1000, 1);
  EXPECT_EQ(t.status, Status::Inconclusive);
  EXPECT_FALSE(t.violated.empty());
}

TEST(TensorKsTerms, Values) {
  const TensorKsTerms t = tensor_ks_terms(DiagonalTensorParams(0.1, 0.2, 0.3));
  EXPECT_NEAR(t.a1, std::pow(0.1 - 0.12, 2), 1e-15);
  EXPECT_NEAR(t.a2, std::pow(0.2 - 0.06, 2), 1e-15);
  EXPECT_NEAR(t.a3, std::pow(0.3 - 0.04, 2), 1e-15);
  EXPECT_NEAR(t.b1, 1 - 0.04, 1e-15);
  EXPECT_NEAR(t.b2, 1 - 0.16, 1e-15);
  EXPECT_NEAR(t.b3, 1 - 0.36, 1e-15);
}

TEST(KsTensorDiagSufficient, Examples) {
  EXPECT_EQ(ks_tensor_diag_sufficient(DiagonalTensorParams(0.5, 0.5, 0.5)).status, Status::HoldsSufficient);
  EXPECT_EQ(ks_tensor_diag_sufficient(DiagonalTensorParams(0, 0, 0)).status, Status::HoldsSufficient);
  EXPECT_EQ(ks_tensor_diag_sufficient(DiagonalTensorParams(0.5, -0.5, 0.5)).status, Status::Inconclusive);
}

TEST(KsTensorDiagSufficient, CyclicInequalitiesImplyCrossCondition) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100000; ++t) {
    const auto l = testing::random_real_vec3(rng, -0.5, 0.5);
    const DiagonalTensorParams p(l[0], l[1], l[2]);
    if (ks_tensor_diag_sufficient(p).holds()) ASSERT_TRUE(tensor_diag_ks_cross_condition(p));
  }
}

TEST(KsTensorDiagSufficient, HoldsImpliesOracleClean) {
  std::mt19937_64 rng(9);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const auto l = testing::random_real_vec3(rng, -0.5, 0.5);
    const DiagonalTensorParams p(l[0], l[1], l[2]);
    if (!ks_tensor_diag_sufficient(p).holds()) continue;
    ++checked;
    EXPECT_TRUE(oracle_clean(as_map(p.tensor_map()), 2000)) << format_descriptor(p);
  }
  EXPECT_GT(checked, 20);
}

TEST(CpTensorDiagExact, Examples) {
  EXPECT_EQ(cp_tensor_diag_exact(DiagonalTensorParams(0, 0, 0)).status, Status::HoldsExact);
  EXPECT_EQ(cp_tensor_diag_exact(DiagonalTensorParams(0.3, 0.3, -0.5)).status, Status::Fails);
  EXPECT_EQ(cp_tensor_diag_exact(DiagonalTensorParams(0.3, 0.3, 0.5)).status, Status::HoldsExact);
  EXPECT_EQ(cp_tensor_diag_exact(DiagonalTensorParams(0.3, -0.3, -0.5)).status, Status::HoldsExact);
  EXPECT_EQ(cp_tensor_diag_exact(DiagonalTensorParams(0.5, -0.5, -0.5)).status, Status::HoldsExact);
}

// On the λ3 = ±1/2 faces the naive conditions and the Choi spectrum part
// ways; the exact classifier follows the spectrum.
TEST(CpTensorDiagExact, FacesFollowChoiSpectrumNotNaiveConditions) {
  std::mt19937_64 rng(10);
  int upper_disagreements = 0;
  for (int t = 0; t < 200; ++t) {
    const double l1 = testing::uniform(rng, -0.5, 0.5), l2 = testing::uniform(rng, -0.5, 0.5);
    const DiagonalTensorParams up(l1, l2, 0.5);
    EXPECT_EQ(cp_tensor_diag_naive_faces(up).status, Status::HoldsExact);
    const double lo = min_eigenvalue(choi_matrix_tensor(up.tensor_map()));
    EXPECT_LT(lo, -1e-6);
    EXPECT_EQ(cp_tensor_diag_exact(up).status, Status::Fails);
    upper_disagreements += cp_tensor_diag_naive_faces(up).status != cp_tensor_diag_exact(up).status;
  }
  EXPECT_EQ(upper_disagreements, 200);

  const DiagonalTensorParams anti(0.2, -0.2, -0.5);
  EXPECT_EQ(cp_tensor_diag_naive_faces(anti).status, Status::Fails);
  EXPECT_EQ(cp_tensor_diag_exact(anti).status, Status::HoldsExact);
  EXPECT_GE(min_eigenvalue(choi_matrix_tensor(anti.tensor_map())), -1e-12);
}

TEST(CpTensorDiagExact, AgreesWithChoiSpectrumOnGrid) {
  int disagreements = 0;
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j)
      for (int k = 0; k <= 20; ++k) {
        const DiagonalTensorParams p(-0.5 + i / 20.0, -0.5 + j / 20.0, -0.5 + k / 20.0);
        const bool choi = cp_choi_numeric(choi_matrix_tensor(p.tensor_map())).holds();
        disagreements += choi != cp_tensor_diag_exact(p).holds();
      }
  EXPECT_EQ(disagreements, 0);
}

TEST(CpTensorDiagExact, ReducedEigenvalueSignsMatchInterior) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20000; ++t) {
    const auto l = testing::random_real_vec3(rng, -0.5, 0.5);
    const DiagonalTensorParams p(l[0], l[1], l[2]);
    const auto s = tensor_diag_reduced_eigenvalues(p);
    EXPECT_EQ(s[0], 1.0);
    EXPECT_GE(s[2], s[3]);
    const double margin = std::min(s[1], s[3]);
    if (std::abs(margin) < 1e-9) continue;
    ASSERT_EQ(margin > 0, cp_tensor_diag_exact(p).holds());
    EXPECT_GE(tensor_diag_radicand(p), 0.0);
  }
}

TEST(CpTlmExact, Examples) {
  EXPECT_EQ(cp_tlm_exact({0, 0}).status, Status::HoldsExact);
  EXPECT_EQ(cp_tlm_exact({0.5, 0.5}).status, Status::HoldsExact);
  EXPECT_EQ(cp_tlm_exact({1, 1}).status, Status::Fails);
}

TEST(CpTlmExact, SpectrumMatchesChoi) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 2000; ++t) {
    const ScalarPairParams p{testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)};
    const auto s = tlm_choi_spectrum(p);
    const auto ev = hermitian_eigenvalues(choi_matrix_tensor(p.tensor_map()));
    for (double v : s) {
      const bool present = std::any_of(ev.begin(), ev.end(), [v](double e) { return std::abs(2 * e - v) < 1e-9; });
      ASSERT_TRUE(present) << v;
    }
    if (std::abs(ev.front()) > 1e-9) ASSERT_EQ(cp_tlm_exact(p).holds(), ev.front() > 0);
  }
}

TEST(KsTlmSufficient, Examples) {
  EXPECT_EQ(ks_tlm_sufficient({0, 0}).status, Status::HoldsSufficient);
  EXPECT_EQ(ks_tlm_sufficient({0.5, 0.5}).status, Status::HoldsSufficient);
  const TriState t = ks_tlm_sufficient({0.5, -0.3});
  EXPECT_EQ(t.status, Status::Inconclusive);
  EXPECT_NEAR(*t.value, 0.32 - 0.48, 1e-12);
}

TEST(CpChoiNumeric, Examples) {
  EXPECT_EQ(cp_choi_numeric(0.5 * ComplexMatrix::identity(8)).status, Status::HoldsExact);
  EXPECT_EQ(cp_choi_numeric(choi_matrix_qubit(DiagonalParams(1, -1, 1).channel())).status, Status::Fails);
  const TriState t = cp_choi_numeric(choi_matrix_tensor(ScalarPairParams{0.3, 0.1}.tensor_map()));
  EXPECT_EQ(t.status, Status::HoldsExact);
  EXPECT_NEAR(*t.value, 0.3, 1e-9);
  ComplexMatrix bad = ComplexMatrix::identity(4);
  bad(0, 3) = 1.0;
  EXPECT_THROW(cp_choi_numeric(bad), UsageError);
}

// ---------------------------------------------------------------------------
// Dispatcher

TEST(ClassifyFull, Examples) {
  const Verdict id = classify_full("phi:1,1,1");
  EXPECT_EQ(id.positive.status, Status::HoldsExact);
  EXPECT_EQ(id.kadison_schwarz.status, Status::HoldsExact);
  EXPECT_EQ(id.completely_positive.status, Status::HoldsExact);

  const Verdict tr = classify_full("phi:1,-1,1");
  EXPECT_EQ(tr.positive.status, Status::HoldsExact);
  EXPECT_EQ(tr.kadison_schwarz.status, Status::Fails);
  EXPECT_TRUE(tr.kadison_schwarz.witness.has_value());
  EXPECT_EQ(tr.completely_positive.status, Status::Fails);

  const Verdict tlm = classify_full("tlm:0.5,0.5");
  EXPECT_EQ(tlm.kadison_schwarz.status, Status::HoldsSufficient);
  EXPECT_EQ(tlm.completely_positive.status, Status::HoldsExact);

  const Verdict ksnotcp = classify_full("phi:0.6,0.5,0.0");
  EXPECT_EQ(ksnotcp.kadison_schwarz.status, Status::HoldsExact);
  EXPECT_EQ(ksnotcp.completely_positive.status, Status::Fails);

  EXPECT_THROW(classify_full("phi:2,0,0"), UsageError);
}

TEST(ClassifyFull, UnconfirmedClosedFormFailureIsInconclusive) {
  const Verdict v = classify_full("phi:-0.8,-0.2,-0.2");
  EXPECT_EQ(v.kadison_schwarz.status, Status::Inconclusive);
  EXPECT_NE(v.kadison_schwarz.note.find("discrepancy"), std::string::npos);
}

TEST(ClassifyFull, OracleResolvesInconclusiveTensorLevels) {
  const Verdict v = classify_full("tdiag:0.5,-0.5,0.5");
  EXPECT_EQ(v.kadison_schwarz.status, Status::Fails);
  EXPECT_TRUE(v.kadison_schwarz.witness.has_value());
  const Verdict w = classify_full("tlm:0.5,-0.3");
  EXPECT_NE(w.kadison_schwarz.status, Status::Inconclusive);
}

void expect_consistent(const Verdict& v, const std::string& name) {
  for (const TriState* t : {&v.positive, &v.kadison_schwarz, &v.completely_positive}) {
    if (t->status == Status::Fails) {
      EXPECT_TRUE(t->witness.has_value() || !t->violated.empty()) << name;
    }
  }
  if (v.completely_positive.status == Status::HoldsExact) {
    EXPECT_NE(v.kadison_schwarz.status, Status::Fails) << name;
  }
  if (v.kadison_schwarz.holds()) EXPECT_TRUE(v.positive.holds()) << name;
}

TEST(ClassifyFull, HierarchyAndFailureEvidence) {
  std::mt19937_64 rng(13);
  ClassifyOptions opt;
  opt.samples = 1000;
  for (int t = 0; t < 150; ++t) {
    FamilyDescriptor d;
    switch (t % 4) {
      case 0: {
        const auto l = testing::random_real_vec3(rng);
        d = DiagonalParams(l[0], l[1], l[2]);
        break;
      }
      case 1: {
        const auto l = testing::random_real_vec3(rng, -0.5, 0.5);
        d = DiagonalTensorParams(l[0], l[1], l[2]);
        break;
      }
      case 2: d = ScalarPairParams{testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)}; break;
      default: {
        TensorMap m;
        for (auto* mat : {&m.a, &m.c})
          for (auto& row : *mat)
            for (double& v : row) v = testing::uniform(rng, -0.3, 0.3);
        d = m;
      }
    }
    expect_consistent(classify_full(d, opt), format_descriptor(d));
  }
}

}  // namespace
}  // namespace ksq
