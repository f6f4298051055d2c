// Copyright 2026 The cnotsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "cnotsim/optimize.hpp"
#include "cnotsim/pulse.hpp"

namespace cnotsim {
namespace {

SweepConfig small_config() {
  SweepConfig cfg;
  cfg.times = {20e-9};
  cfg.omegas = omega_grid(Frequency::mhz(200), Frequency::mhz(260), Frequency::mhz(20));
  cfg.workers = 1;
  return cfg;
}

TEST(Grids, Defaults) {
  const std::vector<double> t = table_times();
  ASSERT_EQ(t.size(), 15u);
  EXPECT_DOUBLE_EQ(t.front(), 10e-9);
  EXPECT_DOUBLE_EQ(t.back(), 50e-9);
  EXPECT_EQ(table_times(4), t);
  EXPECT_THROW(table_times(5), std::invalid_argument);
  const std::vector<Frequency> w = default_omega_grid();
  ASSERT_EQ(w.size(), 46u);
  EXPECT_NEAR(w.front().mhz(), 50.0, 1e-9);
  EXPECT_NEAR(w.back().mhz(), 500.0, 1e-9);
  EXPECT_THROW(omega_grid(Frequency::mhz(10), Frequency::mhz(5), Frequency::mhz(1)),
               std::invalid_argument);
}

TEST(SweepConfig, Validation) {
  SweepConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.times = {20e-9, 10e-9};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.times = {};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = SweepConfig{};
  cfg.omegas = {Frequency::mhz(600)};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = SweepConfig{};
  cfg.ensemble = EnsembleSpec{2.0, 1, 1, 0.01};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(OptimizePoint, PointSatisfiesGateTimeBudget) {
  const SweepConfig cfg = small_config();
  const CurvePoint p = optimize_point(canonical_form("xy"), 20e-9, cfg);
  EXPECT_NEAR(cnot_gate_time(p.g, 1.0, 0.0, p.omega) / 20e-9, 1.0, 1e-9);
  EXPECT_GT(p.fidelity_percent, 99.0);
  EXPECT_LE(p.fidelity_percent, 100.0);
}

TEST(OptimizePoint, PicksBestGridPoint) {
  SweepConfig cfg = small_config();
  const CurvePoint best = optimize_point(canonical_form("heisenberg"), 20e-9, cfg);
  for (Frequency w : cfg.omegas) {
    SweepConfig one = cfg;
    one.omegas = {w};
    const CurvePoint p = optimize_point(canonical_form("heisenberg"), 20e-9, one);
    EXPECT_EQ(p.omega, w);
    EXPECT_LE(p.fidelity_percent, best.fidelity_percent + 1e-4);
  }
}

TEST(OptimizePoint, DeterministicAcrossWorkerCounts) {
  SweepConfig a = small_config();
  SweepConfig b = a;
  b.workers = 3;
  const CurvePoint pa = optimize_point(canonical_form("heisenberg"), 20e-9, a);
  const CurvePoint pb = optimize_point(canonical_form("heisenberg"), 20e-9, b);
  EXPECT_EQ(pa.fidelity_percent, pb.fidelity_percent);
  EXPECT_EQ(pa.omega, pb.omega);
  EXPECT_EQ(pa.g, pb.g);
}

TEST(OptimizePoint, Errors) {
  const SweepConfig cfg = small_config();
  EXPECT_THROW(optimize_point(canonical_form("ising"), 20e-9, cfg), IsingLimitError);
  EXPECT_THROW(optimize_point(canonical_form("xy"), 2e-9, cfg), InfeasiblePointError);
  EXPECT_THROW(fidelity_curve(canonical_form("ising"), cfg), IsingLimitError);
}

TEST(OptimizePoint, DecoherenceLowersFidelity) {
  SweepConfig cfg = small_config();
  const double clean = optimize_point(canonical_form("heisenberg"), 20e-9, cfg).fidelity_percent;
  cfg.decoherence = DecoherenceParams{500e-9, DampingScope::kEntanglingOnly};
  const double damped = optimize_point(canonical_form("heisenberg"), 20e-9, cfg).fidelity_percent;
  EXPECT_LT(damped, clean - 1.0);
}

TEST(FidelityCurve, NondecreasingForHeisenberg) {
  SweepConfig cfg;
  cfg.times = {10e-9, 20e-9, 50e-9};
  cfg.omegas = omega_grid(Frequency::mhz(300), Frequency::mhz(440), Frequency::mhz(20));
  const FidelityCurve c = fidelity_curve(canonical_form("heisenberg"), cfg, "heisenberg");
  ASSERT_EQ(c.points.size(), 3u);
  for (std::size_t i = 1; i < c.points.size(); ++i) {
    EXPECT_GE(c.points[i].fidelity_percent, c.points[i - 1].fidelity_percent - 0.05);
  }
  EXPECT_EQ(c.meta.coupling, "heisenberg");
  EXPECT_DOUBLE_EQ(c.meta.eta, 1.0);
}

TEST(Ensemble, SingleSampleMatchesItsCurve) {
  SweepConfig cfg = small_config();
  cfg.ensemble = EnsembleSpec{1.0, 1, 5, 0.01};
  const EnsembleResult r = ensemble_curves(cfg);
  ASSERT_EQ(r.samples.size(), 1u);
  const FidelityCurve direct = fidelity_curve(r.samples[0].jstar, cfg);
  ASSERT_TRUE(r.samples[0].points[0]);
  EXPECT_EQ(r.mean.points[0].fidelity_percent, direct.points[0].fidelity_percent);
  EXPECT_NEAR(eta_of(r.samples[0].jstar), 1.0, 0.01);
}

TEST(Ensemble, DeterministicAndWorkerIndependent) {
  SweepConfig cfg = small_config();
  cfg.ensemble = EnsembleSpec{0.5, 3, 11, 0.01};
  const EnsembleResult a = ensemble_curves(cfg);
  cfg.workers = 2;
  const EnsembleResult b = ensemble_curves(cfg);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(a.samples[k].jstar, b.samples[k].jstar);
  EXPECT_EQ(a.mean.points[0].fidelity_percent, b.mean.points[0].fidelity_percent);
}

TEST(Ensemble, FailuresAreExcludedAndReported) {
  SweepConfig cfg = small_config();
  cfg.times = {2e-9, 20e-9};
  cfg.ensemble = EnsembleSpec{1.0, 2, 3, 0.01};
  const EnsembleResult r = ensemble_curves(cfg);
  EXPECT_EQ(r.contributing[0], 0u);
  EXPECT_EQ(r.contributing[1], 2u);
  EXPECT_EQ(r.failures.size(), 2u);
  EXPECT_TRUE(std::isnan(r.mean.points[0].fidelity_percent));
  EXPECT_FALSE(std::isnan(r.mean.points[1].fidelity_percent));
}

TEST(Ensemble, RequiresSpec) {
  EXPECT_THROW(ensemble_curves(small_config()), std::invalid_argument);
}

}  // namespace
}  // namespace cnotsim
