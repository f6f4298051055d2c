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

#include "cnotsim/optimize.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>

#include "cnotsim/fidelity.hpp"
#include "cnotsim/pulse.hpp"

namespace cnotsim {

namespace {

constexpr double kNs = 1e-9;

std::vector<double> ns_list(std::initializer_list<double> values) {
  std::vector<double> out;
  for (double v : values) out.push_back(v * kNs);
  return out;
}

// Fidelity at a fixed micro-step, used for the grid scan.
double scan_fidelity(const CouplingTensor& c, Frequency omega,
                     const SweepConfig& cfg) {
  const PulseSchedule sched = compile_cnot_schedule(c, omega, cfg.device);
  const double step = cfg.steps.initial_step(cfg.device);
  StepControl single = cfg.steps;
  single.max_halvings = 0;
  if (cfg.decoherence && cfg.decoherence->enabled()) {
    return propagate_superoperator(sched, cfg.device, c, *cfg.decoherence, single)
        .fidelity;
  }
  return average_fidelity_unitary(
      ideal_cnot(), realize_gate(sched, c, cfg.device, step, cfg.steps.integrator));
}

}  // namespace

std::vector<double> table_times(int which) {
  if (which < 2 || which > 4) {
    throw std::invalid_argument("table_times: which must be 2, 3 or 4");
  }
  return ns_list({10.0, 11.25, 12.5, 13.75, 15.0, 16.25, 17.5, 18.75, 20.0,
                  22.5, 25.0, 27.5, 30.0, 40.0, 50.0});
}

std::vector<Frequency> omega_grid(Frequency min, Frequency max, Frequency step) {
  if (!(step.hz() > 0.0) || !(min.hz() > 0.0) || max < min) {
    throw std::invalid_argument("omega grid: need 0 < min <= max and step > 0");
  }
  std::vector<Frequency> out;
  const long n = std::lround(std::floor((max.hz() - min.hz()) / step.hz() + 1e-9));
  for (long k = 0; k <= n; ++k) {
    out.push_back(Frequency::hz(min.hz() + static_cast<double>(k) * step.hz()));
  }
  return out;
}

std::vector<Frequency> default_omega_grid() {
  return omega_grid(Frequency::mhz(50.0), Frequency::mhz(500.0),
                    Frequency::mhz(10.0));
}

void SweepConfig::validate() const {
  device.validate();
  if (times.empty()) throw std::invalid_argument("SweepConfig: no gate times");
  if (omegas.empty()) throw std::invalid_argument("SweepConfig: empty omega grid");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0) || (i > 0 && !(times[i] > times[i - 1]))) {
      throw std::invalid_argument(
          "SweepConfig: gate times must be positive and increasing");
    }
  }
  for (Frequency w : omegas) {
    if (w < device.omega_min || w > device.omega_max) {
      throw std::invalid_argument("SweepConfig: omega " +
                                  std::to_string(w.mhz()) +
                                  " MHz outside the allowed range");
    }
  }
  if (decoherence && decoherence->enabled()) decoherence->validate();
  if (ensemble) {
    if (ensemble->samples == 0) {
      throw std::invalid_argument("SweepConfig: ensemble needs >= 1 sample");
    }
    if (!(ensemble->target_eta > 0.0) || ensemble->target_eta > std::sqrt(2.0)) {
      throw std::invalid_argument("SweepConfig: ensemble eta must be in (0, sqrt 2]");
    }
  }
}

double simulate_fidelity(const CouplingTensor& c, Frequency omega,
                         const SweepConfig& cfg) {
  const PulseSchedule sched = compile_cnot_schedule(c, omega, cfg.device);
  if (cfg.decoherence && cfg.decoherence->enabled()) {
    return propagate_superoperator(sched, cfg.device, c, *cfg.decoherence,
                                   cfg.steps)
        .fidelity;
  }
  return propagate_unitary(sched, cfg.device, c, cfg.steps).fidelity;
}

CurvePoint optimize_point(const FormFactor& jstar, double t_gate,
                          const SweepConfig& cfg) {
  const double eta = eta_of(jstar);
  const double phi = phi_of(jstar);
  if (!(eta > 0.0)) {
    throw IsingLimitError("coupling is in the Ising limit (eta = 0)");
  }

  struct Candidate {
    Frequency omega;
    Frequency g;
    double fidelity = -1.0;
  };
  std::vector<Candidate> candidates;
  for (Frequency w : cfg.omegas) {
    if (auto g = feasible_coupling(t_gate, w, eta, phi, cfg.device)) {
      candidates.push_back({w, *g});
    }
  }
  if (candidates.empty()) {
    std::ostringstream msg;
    msg << "no feasible Rabi frequency at t_gate = " << t_gate / kNs
        << " ns: every grid point needs g outside [" << cfg.device.g_min.mhz()
        << ", " << cfg.device.g_max.mhz()
        << "] MHz or exceeds the single-qubit floor";
    throw InfeasiblePointError(msg.str());
  }

  parallel_for(candidates.size(), cfg.workers, [&](std::size_t i) {
    candidates[i].fidelity = scan_fidelity(
        CouplingTensor(candidates[i].g, jstar), candidates[i].omega, cfg);
  });

  // Grid is increasing in omega, so a strict comparison keeps the smaller one.
  const Candidate* best = &candidates.front();
  for (const Candidate& c : candidates) {
    if (c.fidelity > best->fidelity) best = &c;
  }
  const double f =
      simulate_fidelity(CouplingTensor(best->g, jstar), best->omega, cfg);
  return {t_gate, 100.0 * f, best->g, best->omega};
}

FidelityCurve fidelity_curve(const FormFactor& jstar, const SweepConfig& cfg,
                             const std::string& description) {
  cfg.validate();
  FidelityCurve curve;
  curve.meta.coupling = description;
  curve.meta.jstar = jstar;
  curve.meta.eta = eta_of(jstar);
  curve.meta.phi = phi_of(jstar);
  curve.meta.decoherence = cfg.decoherence;
  if (!(curve.meta.eta > 0.0)) {
    throw IsingLimitError("coupling is in the Ising limit (eta = 0)");
  }
  for (double t : cfg.times) curve.points.push_back(optimize_point(jstar, t, cfg));
  return curve;
}

EnsembleResult ensemble_curves(const SweepConfig& cfg) {
  cfg.validate();
  if (!cfg.ensemble) {
    throw std::invalid_argument("ensemble_curves: no ensemble configured");
  }
  const EnsembleSpec& spec = *cfg.ensemble;
  EnsembleResult out;
  out.samples.resize(spec.samples);

  SweepConfig inner = cfg;
  inner.workers = 1;
  std::vector<std::vector<std::string>> errors(spec.samples);

  parallel_for(spec.samples, cfg.workers, [&](std::size_t k) {
    std::seed_seq seq{spec.seed, static_cast<std::uint64_t>(k)};
    std::mt19937_64 mixer(seq);
    TensorSampler sampler(mixer());
    SampleCurve& sample = out.samples[k];
    sample.jstar = sampler.sample(spec.target_eta, spec.tolerance);
    for (double t : cfg.times) {
      try {
        sample.points.push_back(optimize_point(sample.jstar, t, inner));
      } catch (const std::exception& e) {
        sample.points.emplace_back();
        std::ostringstream msg;
        msg << "sample " << k << " t_gate=" << t / kNs << "ns: " << e.what();
        errors[k].push_back(msg.str());
      }
    }
  });

  out.mean.meta.coupling = "ensemble";
  out.mean.meta.eta = spec.target_eta;
  out.mean.meta.decoherence = cfg.decoherence;
  out.mean.meta.ensemble = spec;
  out.contributing.assign(cfg.times.size(), 0);
  for (std::size_t i = 0; i < cfg.times.size(); ++i) {
    double f = 0.0, g = 0.0, w = 0.0;
    unsigned n = 0;
    for (const SampleCurve& s : out.samples) {
      if (!s.points[i]) continue;
      f += s.points[i]->fidelity_percent;
      g += s.points[i]->g.hz();
      w += s.points[i]->omega.hz();
      ++n;
    }
    out.contributing[i] = n;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.mean.points.push_back(
        {cfg.times[i], n ? f / n : nan, Frequency::hz(n ? g / n : nan),
         Frequency::hz(n ? w / n : nan)});
  }
  for (auto& list : errors) {
    for (auto& e : list) {
      std::clog << "cnotsim: excluded " << e << '\n';
      out.failures.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace cnotsim
