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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnotsim/model.hpp"
#include "cnotsim/parallel.hpp"
#include "cnotsim/propagate.hpp"

namespace cnotsim {

/// Gate-time grid (seconds) of the reference tables 2, 3 and 4; all three
/// use the same fifteen times from 10 to 50 ns.
std::vector<double> table_times(int which = 2);

/// 50..500 MHz in 10 MHz steps.
std::vector<Frequency> default_omega_grid();
std::vector<Frequency> omega_grid(Frequency min, Frequency max, Frequency step);

struct EnsembleSpec {
  double target_eta = 1.0;
  unsigned samples = 20;
  std::uint64_t seed = 1;
  double tolerance = 0.01;
};

struct SweepConfig {
  std::vector<double> times = table_times(2);
  std::vector<Frequency> omegas = default_omega_grid();
  DeviceParams device;
  std::optional<DecoherenceParams> decoherence;
  std::optional<EnsembleSpec> ensemble;
  StepControl steps;
  unsigned workers = default_workers();

  /// Throws std::invalid_argument on empty grids, non-increasing or
  /// non-positive times, or invalid device/decoherence settings.
  void validate() const;
};

struct CurvePoint {
  double t_gate = 0.0;            // seconds
  double fidelity_percent = 0.0;
  Frequency g;
  Frequency omega;
};

struct CurveMetadata {
  std::string coupling;
  FormFactor jstar = FormFactor::Zero();
  double eta = 0.0;
  double phi = 0.0;
  std::optional<DecoherenceParams> decoherence;
  std::optional<EnsembleSpec> ensemble;
};

struct FidelityCurve {
  std::vector<CurvePoint> points;
  CurveMetadata meta;
};

/// No Rabi frequency in the grid gives a coupling within bounds.
class InfeasiblePointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fidelity (0..1) of the full CNOT schedule for the given coupling and Rabi
/// frequency, unitary or decoherent per cfg, with step-halving convergence.
double simulate_fidelity(const CouplingTensor& c, Frequency omega,
                         const SweepConfig& cfg);

/// Best fidelity over the Omega grid at fixed total gate time, with g forced
/// by the gate-time budget. The grid is scanned at the initial micro-step and
/// the winner is re-run to convergence. Ties go to the smaller Omega.
CurvePoint optimize_point(const FormFactor& jstar, double t_gate,
                          const SweepConfig& cfg);

FidelityCurve fidelity_curve(const FormFactor& jstar, const SweepConfig& cfg,
                             const std::string& description = "custom");

struct SampleCurve {
  FormFactor jstar;
  /// One entry per grid time; empty where optimize_point failed.
  std::vector<std::optional<CurvePoint>> points;
};

struct EnsembleResult {
  std::vector<SampleCurve> samples;
  /// Pointwise mean over the samples that succeeded at each time. g and
  /// Omega are the sample means and are informational only.
  FidelityCurve mean;
  std::vector<unsigned> contributing;
  std::vector<std::string> failures;
};

/// Draws cfg.ensemble->samples tensors at the target eta and computes each
/// curve. Sample k uses seed (ensemble.seed, k), so results do not depend on
/// the worker count.
EnsembleResult ensemble_curves(const SweepConfig& cfg);

}  // namespace cnotsim
