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
#include <numbers>

#include "cnotsim/fidelity.hpp"
#include "cnotsim/propagate.hpp"
#include "support/oracles.hpp"

namespace cnotsim {
namespace {

constexpr double kPi = std::numbers::pi;

CouplingTensor uncoupled() {
  return {Frequency::mhz(1.0), FormFactor::Zero()};
}

Segment drive_segment(int qubit, Frequency omega, double phase, double duration) {
  Segment s;
  s.kind = SegmentKind::kDrive;
  s.duration = duration;
  s.qubit2_frequency = DeviceParams{}.eps_detuned_q2;
  s.drives[qubit] = Drive{omega, phase};
  return s;
}

Segment idle_segment(Frequency q2, double duration) {
  Segment s;
  s.kind = SegmentKind::kEntangle;
  s.duration = duration;
  s.qubit2_frequency = q2;
  return s;
}

PulseSchedule schedule_of(std::vector<Segment> segs) {
  PulseSchedule p;
  for (const Segment& s : segs) p.total_time += s.duration;
  p.segments = std::move(segs);
  return p;
}

TEST(Propagate, FreeEvolutionClosedForm) {
  const DeviceParams d;
  const double t = 1.234e-9;
  const Segment s = idle_segment(d.eps_detuned_q2, t);
  const SegmentPropagator p = propagate_segment(s, uncoupled(), d, 1e-13);
  auto phase = [](Frequency f, double t) {
    Op2 m = Op2::Zero();
    m(0, 0) = std::polar(1.0, 0.5 * f.angular() * t);
    m(1, 1) = std::polar(1.0, -0.5 * f.angular() * t);
    return m;
  };
  const Op4 expected = kron(phase(d.eps_tuned, t), phase(d.eps_detuned_q2, t));
  EXPECT_LT((p.u_lab - expected).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((to_rotating_frame(p.u_lab, p.frame) - Op4::Identity()).cwiseAbs().maxCoeff(),
            1e-10);
}

TEST(Propagate, FrameBookkeepingAcrossRetuning) {
  const DeviceParams d;
  const PulseSchedule sched = schedule_of(
      {idle_segment(d.eps_tuned, 0.37e-9), idle_segment(Frequency::ghz(11.0), 1.1e-9),
       idle_segment(Frequency::ghz(10.5), 0.2e-9), idle_segment(d.eps_tuned, 2.3e-9)});
  StepControl sc;
  const GateResult r = propagate_unitary(sched, d, uncoupled(), sc, Op4::Identity());
  EXPECT_LT((r.gate - Op4::Identity()).cwiseAbs().maxCoeff(), 1e-10);
  // Frame angles accumulate continuously.
  const double expected2 =
      2 * kPi * (10e9 * 0.37e-9 + 11e9 * 1.1e-9 + 10.5e9 * 0.2e-9 + 10e9 * 2.3e-9);
  EXPECT_NEAR(r.frame.theta2, expected2, 1e-9);
  EXPECT_NEAR(r.frame.theta1, 2 * kPi * 10e9 * sched.total_time, 1e-9);
  EXPECT_NEAR(r.frame.t, sched.total_time, 1e-21);
}

TEST(Propagate, ZeroDurationIsIdentity) {
  const DeviceParams d;
  const SegmentPropagator p =
      propagate_segment(drive_segment(0, Frequency::mhz(100), 0.0, 0.0),
                        uncoupled(), d, 1e-13);
  EXPECT_EQ(p.u_lab, Op4::Identity());
  const PulseSchedule empty;
  EXPECT_EQ(realize_gate(empty, uncoupled(), d, 1e-13), Op4::Identity());
}

TEST(Propagate, ResonantPiPulse) {
  const DeviceParams d;
  const Frequency omega = Frequency::mhz(100);
  const PulseSchedule sched =
      schedule_of({drive_segment(0, omega, 0.0, kPi / omega.angular())});
  const Op4 want = ideal_rotation({0, Axis::kX, kPi});
  const GateResult r = propagate_unitary(sched, d, uncoupled(), {}, want);
  // Counter-rotating terms leave an O(Omega / 4 eps) residual.
  EXPECT_LT(testing::phase_aligned_distance(r.gate, want), 5e-3);
}

TEST(Propagate, OppositeRotationsCancel) {
  const DeviceParams d;
  const Frequency omega = Frequency::mhz(200);
  const double tau = 0.5 * kPi / omega.angular();
  const PulseSchedule sched =
      schedule_of({drive_segment(0, omega, drive_phase(Axis::kX, kPi / 2), tau),
                   drive_segment(0, omega, drive_phase(Axis::kX, -kPi / 2), tau)});
  const GateResult r = propagate_unitary(sched, d, uncoupled(), {}, Op4::Identity());
  EXPECT_LT(testing::phase_aligned_distance(r.gate, Op4::Identity()), 1e-2);
}

TEST(Propagate, UnitarityAfterLongSchedule) {
  const DeviceParams d;
  const Frequency omega = Frequency::mhz(340);
  const Frequency g = g_for_gate_time(50e-9, omega, 1.0, 0.0);
  const CouplingTensor c(g, canonical_form("heisenberg"));
  const PulseSchedule sched = compile_cnot_schedule(c, omega, d);
  const Op4 u = realize_gate(sched, c, d, StepControl{}.initial_step(d));
  EXPECT_LE(unitarity_error(u), 1e-9);
  for (const Segment& seg : sched.segments) {
    EXPECT_LE(unitarity_error(propagate_segment(seg, c, d, 1e-13).u_lab), 1e-9);
  }
}

TEST(Propagate, SecondOrderConvergence) {
  const DeviceParams d;
  const Frequency omega = Frequency::mhz(430);
  const CouplingTensor c(Frequency::mhz(10.8586), canonical_form("heisenberg"));
  const PulseSchedule sched = compile_cnot_schedule(c, omega, d);
  const double h = 1.0 / (64 * 11e9);
  double f[3];
  for (int k = 0; k < 3; ++k) {
    f[k] = average_fidelity_unitary(ideal_cnot(),
                                    realize_gate(sched, c, d, h / std::pow(2.0, k)));
  }
  const double ratio = (f[1] - f[0]) / (f[2] - f[1]);
  EXPECT_NEAR(ratio, 4.0, 0.5);
}

TEST(Propagate, ConvergesWithinTolerance) {
  const DeviceParams d;
  const CouplingTensor c(Frequency::mhz(10.8586), canonical_form("heisenberg"));
  const PulseSchedule sched = compile_cnot_schedule(c, Frequency::mhz(430), d);
  const GateResult r = propagate_unitary(sched, d, c);
  EXPECT_LT(r.last_change, 1e-6);
  EXPECT_GE(r.halvings, 1);
  EXPECT_GT(r.fidelity, 0.99);
}

TEST(Propagate, ReportsNonConvergence) {
  const DeviceParams d;
  const CouplingTensor c(Frequency::mhz(10.8586), canonical_form("heisenberg"));
  const PulseSchedule sched = compile_cnot_schedule(c, Frequency::mhz(430), d);
  StepControl sc;
  sc.initial_subdivisions = 4;
  sc.tolerance = 1e-15;
  sc.max_halvings = 1;
  try {
    propagate_unitary(sched, d, c, sc);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_NE(e.previous(), e.last());
  }
}

TEST(Propagate, IntegratorsAgree) {
  const DeviceParams d;
  const CouplingTensor c(Frequency::mhz(20.0), canonical_form("heisenberg"));
  const Frequency omega = Frequency::mhz(300);
  const PulseSchedule sched = schedule_of(
      {drive_segment(1, omega, drive_phase(Axis::kY, kPi / 2), 0.5 * kPi / omega.angular())});
  const double h = 1.0 / (1024 * 11e9);
  const Op4 split = realize_gate(sched, c, d, h, StepControl::Integrator::kSplitStep);
  const Op4 mid =
      realize_gate(sched, c, d, h, StepControl::Integrator::kMidpointExponential);
  EXPECT_LT((split - mid).cwiseAbs().maxCoeff(), 1e-5);
}

TEST(Lindblad, GeneratorWithoutDampingIsVonNeumann) {
  std::mt19937_64 rng(2);
  const Op4 h = testing::random_hermitian(4, rng);
  const Superop s = expm_general(lindblad_generator(h, 0.0), 0.8);
  const Superop u = conjugation_superop(expm_hermitian_generator(h, 0.8));
  EXPECT_LT((s - u).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Lindblad, UnitaryLimitMatchesPropagateUnitary) {
  const DeviceParams d;
  const CouplingTensor c(Frequency::mhz(10.8586), canonical_form("heisenberg"));
  const PulseSchedule sched = compile_cnot_schedule(c, Frequency::mhz(430), d);
  const GateResult u = propagate_unitary(sched, d, c);

  const ChannelResult off = propagate_superoperator(sched, d, c, DecoherenceParams{});
  EXPECT_LT((off.s - conjugation_superop(u.gate)).cwiseAbs().maxCoeff(), 1e-8);

  // A negligible rate exercises the damped code path for every segment.
  DecoherenceParams tiny;
  tiny.t1 = 1e30;
  tiny.scope = DampingScope::kAllSegments;
  StepControl sc;
  sc.max_halvings = 0;
  const ChannelResult on = propagate_superoperator(sched, d, c, tiny, sc);
  const Op4 fixed = realize_gate(sched, c, d, sc.initial_step(d));
  EXPECT_LT((on.s - conjugation_superop(fixed)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Lindblad, ExcitedPopulationDecays) {
  const DeviceParams d;
  DecoherenceParams dec;
  dec.t1 = 100e-9;
  const double t = 37e-9;
  const PulseSchedule sched = schedule_of({idle_segment(d.eps_tuned, t)});
  StepControl sc;
  sc.max_halvings = 0;
  const ChannelResult r =
      propagate_superoperator(sched, d, uncoupled(), dec, sc, Op4::Identity());
  Op4 rho = Op4::Zero();
  rho(3, 3) = 1.0;  // |11>
  const Op4 out = testing::unvec(r.s * testing::vec(rho));
  const double p = std::exp(-t / dec.t1);
  // P(qubit 1 excited) = rho_22 + rho_33
  EXPECT_NEAR((out(2, 2) + out(3, 3)).real(), p, 1e-12);
  EXPECT_NEAR(out(3, 3).real(), p * p, 1e-12);
  EXPECT_NEAR(out.trace().real(), 1.0, 1e-12);
}

TEST(Lindblad, TracePreservingAndPositive) {
  const DeviceParams d;
  const CouplingTensor c(Frequency::mhz(12.892), canonical_form("heisenberg"));
  const PulseSchedule sched = compile_cnot_schedule(c, Frequency::mhz(370), d);
  for (DampingScope scope : {DampingScope::kEntanglingOnly, DampingScope::kAllSegments}) {
    DecoherenceParams dec;
    dec.t1 = 500e-9;
    dec.scope = scope;
    StepControl sc;
    sc.max_halvings = 0;
    const ChannelResult r = propagate_superoperator(sched, d, c, dec, sc);
    EXPECT_LE(trace_preservation_error(r.s), 1e-8);
    EXPECT_GE(choi_min_eigenvalue(r.s), -1e-7);
    EXPECT_LT(r.fidelity, 0.99);
  }
}

TEST(Lindblad, RejectsNonPositiveT1) {
  DecoherenceParams dec;
  dec.t1 = -1.0;
  EXPECT_THROW(dec.validate(), std::invalid_argument);
  EXPECT_THROW(propagate_superoperator({}, {}, uncoupled(), dec), std::invalid_argument);
}

}  // namespace
}  // namespace cnotsim
