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

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cnotsim/model.hpp"
#include "cnotsim/pulse.hpp"
#include "cnotsim/qmath.hpp"

namespace cnotsim {

/// Accumulated rotating-frame angles theta_i = int eps_i dt (rad) and the
/// elapsed time (s).
struct FrameState {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double t = 0.0;
};

struct StepControl {
  enum class Integrator {
    /// Strang splitting: exact free+coupling half steps around a midpoint
    /// drive kick. Second order, exactly unitary.
    kSplitStep,
    /// exp(-i H(t_mid) dt) per micro-step. Second order, exactly unitary,
    /// much slower; kept as a cross-check.
    kMidpointExponential,
  };

  /// Micro-steps per period of the fastest qubit frequency for the first
  /// pass (dt0 = 1 / (subdivisions * nu_max)).
  unsigned initial_subdivisions = 512;
  /// Absolute fidelity change between successive halvings that counts as
  /// converged.
  double tolerance = 1e-6;
  int max_halvings = 8;
  Integrator integrator = Integrator::kSplitStep;

  double initial_step(const DeviceParams& d) const;
};

/// Thrown when step halving does not converge. Carries the last two
/// fidelity iterates.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(double previous, double last, int halvings);
  double previous() const { return previous_; }
  double last() const { return last_; }

 private:
  double previous_;
  double last_;
};

/// Lab-frame propagator of one segment, integrated from local time 0 with
/// carriers cos(eps_i s + phase_i), and the frame angles over the segment.
struct SegmentPropagator {
  Op4 u_lab;
  FrameState frame;
};

SegmentPropagator propagate_segment(
    const Segment& seg, const CouplingTensor& c, const DeviceParams& d,
    double max_step,
    StepControl::Integrator integrator = StepControl::Integrator::kSplitStep);

/// W(theta)^dagger u_lab with W = exp(i theta1 sz/2) (x) exp(i theta2 sz/2).
Op4 to_rotating_frame(const Op4& u_lab, const FrameState& frame);

/// Rotating-frame gate at a fixed micro-step: each segment is propagated in
/// the lab frame, moved to its own rotating frame, and the results are
/// multiplied in execution order.
Op4 realize_gate(
    const PulseSchedule& sched, const CouplingTensor& c, const DeviceParams& d,
    double max_step,
    StepControl::Integrator integrator = StepControl::Integrator::kSplitStep);

struct GateResult {
  Op4 gate;           // rotating frame
  FrameState frame;   // angles accumulated over the whole schedule
  double fidelity = 0.0;
  double last_change = 0.0;
  int halvings = 0;
  double step = 0.0;  // micro-step of the accepted pass
};

/// realize_gate with step halving until the fidelity against `target`
/// changes by less than control.tolerance.
GateResult propagate_unitary(const PulseSchedule& sched, const DeviceParams& d,
                             const CouplingTensor& c,
                             const StepControl& control = {},
                             const Op4& target = ideal_cnot());

enum class DampingScope {
  /// Damping acts only while the qubits are tuned together.
  kEntanglingOnly,
  /// Damping acts during every segment.
  kAllSegments,
};

struct DecoherenceParams {
  /// Amplitude-damping time of each qubit in seconds; infinity disables it.
  double t1 = std::numeric_limits<double>::infinity();
  DampingScope scope = DampingScope::kEntanglingOnly;

  bool enabled() const { return std::isfinite(t1); }
  /// Throws std::invalid_argument unless t1 > 0.
  void validate() const;
};

/// Column-stacking generator of d rho/dt = -i[h, rho] + gamma sum_i D[sigma-_i].
Superop lindblad_generator(const Op4& h, double gamma);

struct ChannelResult {
  Superop s;          // rotating frame
  FrameState frame;
  double fidelity = 0.0;
  double last_change = 0.0;
  int halvings = 0;
  double step = 0.0;
};

/// Superoperator of the schedule under amplitude damping, with the same
/// per-segment frames and step control as propagate_unitary.
ChannelResult propagate_superoperator(const PulseSchedule& sched,
                                      const DeviceParams& d,
                                      const CouplingTensor& c,
                                      const DecoherenceParams& dec,
                                      const StepControl& control = {},
                                      const Op4& target = ideal_cnot());

}  // namespace cnotsim
