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

#include "cnotsim/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cnotsim/fidelity.hpp"

namespace cnotsim {

namespace {

constexpr double kPi = std::numbers::pi;

void require_entangling(double eta) {
  if (!(eta > 0.0)) {
    throw IsingLimitError(
        "coupling is in the Ising limit (eta = 0): no finite entangling time");
  }
}

// One rotation of the sequence: angle = half_turns * pi/2 + phis * phi.
struct RotationTemplate {
  int qubit;
  Axis axis;
  double quarter_turns;
  double phis;
};

struct StepTemplate {
  bool entangle;
  std::vector<RotationTemplate> rotations;
};

// Execution order. Every step is an exact identity with the entanglers
// exp(-i H_rwa delta_t); simultaneous pairs share one drive segment.
const std::vector<StepTemplate>& sequence_template() {
  static const std::vector<StepTemplate> steps = {
      {false, {{0, Axis::kY, 1.0, 0.0}}},
      {false, {{1, Axis::kY, 0.0, 1.0}}},
      {false, {{0, Axis::kX, 1.0, 0.0}, {1, Axis::kX, 1.0, 0.0}}},
      {true, {}},
      {false, {{0, Axis::kX, 2.0, 0.0}}},
      {true, {}},
      {false, {{1, Axis::kX, 1.0, 0.0}}},
      {false, {{1, Axis::kY, 0.0, 1.0}}},
      {false, {{0, Axis::kY, -1.0, 0.0}, {1, Axis::kX, 1.0, 0.0}}},
  };
  return steps;
}

}  // namespace

Op4 ideal_rotation(const Rotation& r) {
  const Op2 sigma = r.axis == Axis::kX ? pauli::x() : pauli::y();
  const Op2 single = std::cos(0.5 * r.angle) * pauli::identity() -
                     kI * std::sin(0.5 * r.angle) * sigma;
  return r.qubit == 0 ? Op4(kron(single, pauli::identity()))
                      : Op4(kron(pauli::identity(), single));
}

double drive_phase(Axis axis, double angle) {
  const bool positive = angle >= 0.0;
  if (axis == Axis::kX) return positive ? 0.0 : kPi;
  return positive ? 1.5 * kPi : 0.5 * kPi;
}

double rotation_duration(double angle, Frequency omega) {
  return std::abs(angle) / omega.angular();
}

double single_qubit_budget(double phi, Frequency omega) {
  return (3.0 * kPi + 2.0 * std::abs(phi)) / omega.angular();
}

double cnot_gate_time(Frequency g, double eta, double phi, Frequency omega) {
  require_entangling(eta);
  return kPi / (4.0 * g.angular() * eta) + single_qubit_budget(phi, omega);
}

Frequency g_for_gate_time(double t_gate, Frequency omega, double eta,
                          double phi) {
  require_entangling(eta);
  const double entangling = t_gate - single_qubit_budget(phi, omega);
  if (!(entangling > 0.0)) {
    throw InfeasibleGateTimeError(
        "gate time below single-qubit floor: t_gate = " +
        std::to_string(t_gate * 1e9) + " ns, rotations need " +
        std::to_string(single_qubit_budget(phi, omega) * 1e9) + " ns");
  }
  return Frequency::angular(kPi / (4.0 * eta * entangling));
}

std::optional<Frequency> feasible_coupling(double t_gate, Frequency omega,
                                           double eta, double phi,
                                           const DeviceParams& device) {
  if (!(eta > 0.0) || !(t_gate > single_qubit_budget(phi, omega))) {
    return std::nullopt;
  }
  const Frequency g = g_for_gate_time(t_gate, omega, eta, phi);
  if (g < device.g_min || g > device.g_max) return std::nullopt;
  return g;
}

std::vector<std::vector<Rotation>> cnot_sequence(double phi) {
  std::vector<std::vector<Rotation>> out;
  for (const StepTemplate& step : sequence_template()) {
    if (step.entangle) {
      out.emplace_back();
      continue;
    }
    std::vector<Rotation> rotations;
    for (const RotationTemplate& t : step.rotations) {
      const double angle = t.quarter_turns * 0.5 * kPi + t.phis * phi;
      if (angle != 0.0) rotations.push_back({t.qubit, t.axis, angle});
    }
    if (!rotations.empty()) out.push_back(std::move(rotations));
  }
  return out;
}

PulseSchedule compile_cnot_schedule(const CouplingTensor& c, Frequency omega,
                                    const DeviceParams& device) {
  if (omega < device.omega_min || omega > device.omega_max) {
    throw std::invalid_argument("Rabi frequency " +
                                std::to_string(omega.mhz()) +
                                " MHz outside the allowed range");
  }
  PulseSchedule sched;
  sched.derived = derive(c);
  sched.omega = omega;
  require_entangling(sched.derived.eta);
  const double delta_t = *sched.derived.delta_t;

  for (std::vector<Rotation>& step : cnot_sequence(sched.derived.phi)) {
    Segment seg;
    if (step.empty()) {
      seg.kind = SegmentKind::kEntangle;
      seg.duration = delta_t;
      seg.qubit2_frequency = device.eps_tuned;
    } else {
      seg.kind = SegmentKind::kDrive;
      seg.qubit2_frequency = device.eps_detuned_q2;
      for (const Rotation& r : step) {
        seg.duration = std::max(seg.duration, rotation_duration(r.angle, omega));
        seg.drives[r.qubit] = Drive{omega, drive_phase(r.axis, r.angle)};
      }
      seg.rotations = std::move(step);
    }
    sched.total_time += seg.duration;
    sched.segments.push_back(std::move(seg));
  }
  return sched;
}

Op4 ideal_cnot() {
  Op4 m = Op4::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

Op4 ideal_sequence_product(const CouplingTensor& c) {
  const DerivedCoupling d = derive(c);
  require_entangling(d.eta);
  const Op4 entangler = expm_hermitian_generator(rwa_interaction(c), *d.delta_t);
  Op4 u = Op4::Identity();
  for (const std::vector<Rotation>& step : cnot_sequence(d.phi)) {
    if (step.empty()) {
      u = entangler * u;
      continue;
    }
    for (const Rotation& r : step) u = ideal_rotation(r) * u;
  }
  return u;
}

double verify_sequence_identity(const CouplingTensor& c) {
  return average_fidelity_unitary(ideal_cnot(), ideal_sequence_product(c));
}

}  // namespace cnotsim
