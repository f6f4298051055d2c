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

#include <optional>
#include <stdexcept>
#include <vector>

#include "cnotsim/model.hpp"
#include "cnotsim/qmath.hpp"

namespace cnotsim {

enum class Axis { kX, kY };

/// R_axis(angle) on one qubit (0 = qubit 1, 1 = qubit 2),
/// R = exp(-i angle sigma_axis / 2).
struct Rotation {
  int qubit = 0;
  Axis axis = Axis::kX;
  double angle = 0.0;
};

enum class SegmentKind { kDrive, kEntangle };

/// One piece of the schedule with constant qubit frequencies. Drive segments
/// carry the rotations they realize; entangling segments carry none.
struct Segment {
  SegmentKind kind = SegmentKind::kDrive;
  double duration = 0.0;  // seconds
  DrivePair drives;
  Frequency qubit2_frequency;
  std::vector<Rotation> rotations;
};

struct PulseSchedule {
  std::vector<Segment> segments;  // execution order
  double total_time = 0.0;        // seconds
  DerivedCoupling derived;
  Frequency omega;
};

/// Thrown when a gate time is too short for the single-qubit rotations.
class InfeasibleGateTimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Op4 ideal_rotation(const Rotation& r);

/// Drive phase that realizes the rotation's axis and sign in the rotating
/// frame, where a drive with phase p generates (Omega/2)(cos p X - sin p Y).
double drive_phase(Axis axis, double angle);

/// |angle| / Omega in seconds.
double rotation_duration(double angle, Frequency omega);

/// Total single-qubit time (3 pi + 2|phi|) / Omega.
double single_qubit_budget(double phi, Frequency omega);

/// t_gate = pi hbar / (4 g eta) + (3 pi + 2|phi|) hbar / Omega.
/// Throws IsingLimitError when eta == 0.
double cnot_gate_time(Frequency g, double eta, double phi, Frequency omega);

/// Inverse of cnot_gate_time in g. Throws InfeasibleGateTimeError when
/// t_gate does not exceed the single-qubit budget and IsingLimitError when
/// eta == 0.
Frequency g_for_gate_time(double t_gate, Frequency omega, double eta,
                          double phi);

/// g for (t_gate, Omega) when it exists and lies within the device bounds.
std::optional<Frequency> feasible_coupling(double t_gate, Frequency omega,
                                           double eta, double phi,
                                           const DeviceParams& device);

/// The ideal CNOT sequence as rotations and entangler markers, execution
/// order. Each inner vector holds simultaneous rotations; an empty inner
/// vector is an entangling interval. Zero-angle rotations are dropped.
std::vector<std::vector<Rotation>> cnot_sequence(double phi);

/// Compile the CNOT sequence into timed segments. Throws IsingLimitError for
/// eta == 0 and std::invalid_argument when omega is outside device bounds.
PulseSchedule compile_cnot_schedule(const CouplingTensor& c, Frequency omega,
                                    const DeviceParams& device);

/// Canonical CNOT with qubit 1 as control.
Op4 ideal_cnot();

/// Product of the exact sequence matrices: ideal rotations and
/// exp(-i H_rwa delta_t) entanglers.
Op4 ideal_sequence_product(const CouplingTensor& c);

/// Average fidelity of ideal_sequence_product against ideal_cnot.
double verify_sequence_identity(const CouplingTensor& c);

}  // namespace cnotsim
