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

#include "cnotsim/propagate.hpp"

#include <cmath>
#include <string>

#include "cnotsim/fidelity.hpp"

namespace cnotsim {

namespace {

bool has_drive(const Segment& seg) { return seg.drives[0] || seg.drives[1]; }

QubitFrequencies segment_frequencies(const Segment& seg,
                                     const DeviceParams& d) {
  return {d.eps_tuned, seg.qubit2_frequency};
}

// Static part of the lab Hamiltonian over a segment.
Op4 static_hamiltonian(const Segment& seg, const CouplingTensor& c,
                       const DeviceParams& d) {
  return free_hamiltonian(segment_frequencies(seg, d)) + coupling_operator(c);
}

// exp(-i a h X) for a single qubit.
Op2 x_kick(double a, double h) {
  Op2 k;
  const double co = std::cos(a * h);
  const Complex s = -kI * std::sin(a * h);
  k << co, s, s, co;
  return k;
}

double drive_amplitude(const std::optional<Drive>& drive, double eps,
                       double s) {
  if (!drive) return 0.0;
  return drive->amplitude.angular() * std::cos(eps * s + drive->phase);
}

struct Grid {
  long n;
  double h;
};

Grid make_grid(double duration, double max_step) {
  if (!(max_step > 0.0)) {
    throw std::invalid_argument("micro-step must be positive");
  }
  const long n = std::max(1L, static_cast<long>(std::ceil(duration / max_step)));
  return {n, duration / static_cast<double>(n)};
}

Op4 split_step(const Segment& seg, const Op4& h_static, double e1, double e2,
               double max_step) {
  const Grid grid = make_grid(seg.duration, max_step);
  Eigen::SelfAdjointEigenSolver<Op4> solver(0.5 * (h_static + h_static.adjoint()));
  const auto& v = solver.eigenvectors();
  Eigen::Vector4cd half;
  for (int k = 0; k < 4; ++k) {
    half(k) = std::polar(1.0, -0.5 * solver.eigenvalues()(k) * grid.h);
  }
  const Op4 e_half = v * half.asDiagonal() * v.adjoint();
  const Op4 e_full = e_half * e_half;

  Op4 u = e_half;
  for (long s = 0; s < grid.n; ++s) {
    const double mid = (static_cast<double>(s) + 0.5) * grid.h;
    const double a = drive_amplitude(seg.drives[0], e1, mid);
    const double b = drive_amplitude(seg.drives[1], e2, mid);
    const Op4 kick = kron(x_kick(a, grid.h), x_kick(b, grid.h));
    u = (s + 1 == grid.n ? e_half : e_full) * (kick * u);
  }
  return u;
}

Op4 midpoint_exponential(const Segment& seg, const CouplingTensor& c,
                         const DeviceParams& d, double e1, double e2,
                         double max_step) {
  const Grid grid = make_grid(seg.duration, max_step);
  const QubitFrequencies f = segment_frequencies(seg, d);
  Op4 u = Op4::Identity();
  for (long s = 0; s < grid.n; ++s) {
    const double mid = (static_cast<double>(s) + 0.5) * grid.h;
    const Op4 h = lab_hamiltonian(f, c, seg.drives, {e1 * mid, e2 * mid});
    u = expm_hermitian_generator(h, grid.h) * u;
  }
  return u;
}

Op2 z_phase(double theta) {
  Op2 m = Op2::Zero();
  m(0, 0) = std::polar(1.0, 0.5 * theta);
  m(1, 1) = std::polar(1.0, -0.5 * theta);
  return m;
}

Op4 frame_operator(const FrameState& frame) {
  return kron(z_phase(frame.theta1), z_phase(frame.theta2));
}

FrameState advance(FrameState frame, const FrameState& seg) {
  frame.theta1 += seg.theta1;
  frame.theta2 += seg.theta2;
  frame.t += seg.t;
  return frame;
}

FrameState schedule_frame(const PulseSchedule& sched, const DeviceParams& d) {
  FrameState total;
  for (const Segment& seg : sched.segments) {
    total = advance(total, {d.eps_tuned.angular() * seg.duration,
                            seg.qubit2_frequency.angular() * seg.duration,
                            seg.duration});
  }
  return total;
}

// Runs evaluate(step) at halving steps until the fidelity settles.
template <typename Result, typename Evaluate>
Result converge(const StepControl& control, const DeviceParams& d,
                Evaluate&& evaluate) {
  double step = control.initial_step(d);
  Result best = evaluate(step);
  best.step = step;
  for (int k = 1; k <= control.max_halvings; ++k) {
    step *= 0.5;
    Result next = evaluate(step);
    next.step = step;
    next.halvings = k;
    next.last_change = std::abs(next.fidelity - best.fidelity);
    const bool done = next.last_change < control.tolerance;
    if (done) return next;
    if (k == control.max_halvings) {
      throw ConvergenceError(best.fidelity, next.fidelity, k);
    }
    best = std::move(next);
  }
  // max_halvings == 0: a single pass is accepted as is.
  return best;
}

}  // namespace

double StepControl::initial_step(const DeviceParams& d) const {
  if (initial_subdivisions == 0) {
    throw std::invalid_argument("StepControl: initial_subdivisions must be > 0");
  }
  return 1.0 / (static_cast<double>(initial_subdivisions) *
                d.max_qubit_frequency().hz());
}

ConvergenceError::ConvergenceError(double previous, double last, int halvings)
    : std::runtime_error("step halving did not converge after " +
                         std::to_string(halvings) +
                         " halvings: last fidelities " +
                         std::to_string(previous) + ", " +
                         std::to_string(last)),
      previous_(previous),
      last_(last) {}

SegmentPropagator propagate_segment(const Segment& seg,
                                    const CouplingTensor& c,
                                    const DeviceParams& d, double max_step,
                                    StepControl::Integrator integrator) {
  if (!(seg.duration >= 0.0)) {
    throw std::invalid_argument("segment duration must be non-negative");
  }
  const double e1 = d.eps_tuned.angular();
  const double e2 = seg.qubit2_frequency.angular();
  SegmentPropagator out;
  out.frame = {e1 * seg.duration, e2 * seg.duration, seg.duration};
  if (seg.duration == 0.0) {
    out.u_lab = Op4::Identity();
    return out;
  }
  const Op4 h_static = static_hamiltonian(seg, c, d);
  if (!has_drive(seg)) {
    out.u_lab = expm_hermitian_generator(h_static, seg.duration);
  } else if (integrator == StepControl::Integrator::kSplitStep) {
    out.u_lab = split_step(seg, h_static, e1, e2, max_step);
  } else {
    out.u_lab = midpoint_exponential(seg, c, d, e1, e2, max_step);
  }
  return out;
}

Op4 to_rotating_frame(const Op4& u_lab, const FrameState& frame) {
  return frame_operator(frame).adjoint() * u_lab;
}

Op4 realize_gate(const PulseSchedule& sched, const CouplingTensor& c,
                 const DeviceParams& d, double max_step,
                 StepControl::Integrator integrator) {
  Op4 gate = Op4::Identity();
  for (const Segment& seg : sched.segments) {
    const SegmentPropagator p = propagate_segment(seg, c, d, max_step, integrator);
    gate = to_rotating_frame(p.u_lab, p.frame) * gate;
  }
  return gate;
}

GateResult propagate_unitary(const PulseSchedule& sched, const DeviceParams& d,
                             const CouplingTensor& c,
                             const StepControl& control, const Op4& target) {
  GateResult r = converge<GateResult>(control, d, [&](double step) {
    GateResult g;
    g.gate = realize_gate(sched, c, d, step, control.integrator);
    g.fidelity = average_fidelity_unitary(target, g.gate);
    return g;
  });
  r.frame = schedule_frame(sched, d);
  return r;
}

void DecoherenceParams::validate() const {
  if (!(t1 > 0.0)) {
    throw std::invalid_argument("DecoherenceParams: t1 must be positive");
  }
}

Superop lindblad_generator(const Op4& h, double gamma) {
  const Op4 id = Op4::Identity();
  Superop l = -kI * (kron(id, h) - kron(h.transpose(), id));
  if (gamma == 0.0) return l;
  const Op2 lower = pauli::lowering();
  const Op4 jumps[2] = {kron(lower, pauli::identity()),
                        kron(pauli::identity(), lower)};
  for (const Op4& j : jumps) {
    const Op4 jdj = j.adjoint() * j;
    l += gamma * (kron(j.conjugate(), j) - 0.5 * kron(id, jdj) -
                  0.5 * kron(jdj.transpose(), id));
  }
  return l;
}

namespace {

Superop damped_segment(const Segment& seg, const CouplingTensor& c,
                       const DeviceParams& d, double gamma, double max_step) {
  const Superop gen = lindblad_generator(static_hamiltonian(seg, c, d), gamma);
  if (!has_drive(seg)) return expm_general(gen, seg.duration);

  const double e1 = d.eps_tuned.angular();
  const double e2 = seg.qubit2_frequency.angular();
  const Grid grid = make_grid(seg.duration, max_step);
  const Superop e_half = expm_general(gen, 0.5 * grid.h);
  const Superop e_full = e_half * e_half;
  Superop s = e_half;
  for (long k = 0; k < grid.n; ++k) {
    const double mid = (static_cast<double>(k) + 0.5) * grid.h;
    const Op4 kick = kron(x_kick(drive_amplitude(seg.drives[0], e1, mid), grid.h),
                          x_kick(drive_amplitude(seg.drives[1], e2, mid), grid.h));
    s = (k + 1 == grid.n ? e_half : e_full) * (conjugation_superop(kick) * s);
  }
  return s;
}

}  // namespace

ChannelResult propagate_superoperator(const PulseSchedule& sched,
                                      const DeviceParams& d,
                                      const CouplingTensor& c,
                                      const DecoherenceParams& dec,
                                      const StepControl& control,
                                      const Op4& target) {
  const double gamma = dec.enabled() ? (dec.validate(), 1.0 / dec.t1) : 0.0;
  ChannelResult r = converge<ChannelResult>(control, d, [&](double step) {
    ChannelResult out;
    out.s = Superop::Identity();
    for (const Segment& seg : sched.segments) {
      const FrameState frame{d.eps_tuned.angular() * seg.duration,
                             seg.qubit2_frequency.angular() * seg.duration,
                             seg.duration};
      const bool damped =
          gamma > 0.0 && seg.duration > 0.0 &&
          (seg.kind == SegmentKind::kEntangle ||
           dec.scope == DampingScope::kAllSegments);
      Superop lab;
      if (damped) {
        lab = damped_segment(seg, c, d, gamma, step);
      } else {
        lab = conjugation_superop(
            propagate_segment(seg, c, d, step, control.integrator).u_lab);
      }
      // The dissipator commutes with the Z frame, so the frame acts as a
      // unitary conjugation on the lab-frame map.
      out.s = conjugation_superop(frame_operator(frame).adjoint()) * lab * out.s;
    }
    out.fidelity = average_fidelity_channel(target, out.s);
    return out;
  });
  r.frame = schedule_frame(sched, d);
  return r;
}

}  // namespace cnotsim
