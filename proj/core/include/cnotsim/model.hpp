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

#include <array>
#include <compare>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "cnotsim/qmath.hpp"

namespace cnotsim {

/// A frequency nu = E/h. All propagation code works with the angular value
/// 2*pi*nu in rad/s (H/hbar), so energies never carry hbar explicitly.
class Frequency {
 public:
  constexpr Frequency() = default;

  static constexpr Frequency hz(double v) { return Frequency(v); }
  static constexpr Frequency mhz(double v) { return Frequency(v * 1e6); }
  static constexpr Frequency ghz(double v) { return Frequency(v * 1e9); }
  static constexpr Frequency angular(double rad_per_s) {
    return Frequency(rad_per_s / (2.0 * std::numbers::pi));
  }

  constexpr double hz() const { return hz_; }
  constexpr double mhz() const { return hz_ * 1e-6; }
  constexpr double ghz() const { return hz_ * 1e-9; }
  constexpr double angular() const { return 2.0 * std::numbers::pi * hz_; }

  constexpr auto operator<=>(const Frequency&) const = default;

 private:
  constexpr explicit Frequency(double hz) : hz_(hz) {}
  double hz_ = 0.0;
};

/// Fixed device parameters. Defaults are the 10 GHz superconducting-style
/// values used throughout this project.
struct DeviceParams {
  Frequency eps_tuned = Frequency::ghz(10.0);
  Frequency eps_detuned_q2 = Frequency::ghz(11.0);
  Frequency omega_min = Frequency::mhz(50.0);
  Frequency omega_max = Frequency::mhz(500.0);
  Frequency g_min = Frequency::mhz(1.0);
  Frequency g_max = Frequency::mhz(500.0);

  /// Throws std::invalid_argument on inconsistent bounds.
  void validate() const;
  /// True when omega_max / eps_tuned exceeds 0.1, i.e. the weak-driving
  /// assumption is doubtful.
  bool weak_drive_violated() const;
  /// Largest qubit frequency seen by the integrator.
  Frequency max_qubit_frequency() const;
};

/// Normalized 3x3 form of the coupling, rows/cols ordered x, y, z.
using FormFactor = Eigen::Matrix3d;

enum class CanonicalCoupling { kHeisenberg, kIsing, kXY };

FormFactor canonical_form(CanonicalCoupling kind);
/// Accepts "heisenberg", "ising", "xy". Throws std::invalid_argument otherwise.
FormFactor canonical_form(std::string_view name);

/// J_{mu nu} = g * J*_{mu nu} with g > 0 and max |J*| <= 1.
class CouplingTensor {
 public:
  CouplingTensor(Frequency g, const FormFactor& jstar);

  /// Factor a full coupling matrix (entries in Hz, as E/h) with
  /// g = max |J_{mu nu}|, so the form factor has max entry 1.
  static CouplingTensor from_matrix_hz(const Eigen::Matrix3d& j_hz);

  Frequency g() const { return g_; }
  const FormFactor& jstar() const { return jstar_; }
  /// g * J* in rad/s.
  Eigen::Matrix3d angular_matrix() const { return g_.angular() * jstar_; }

  CouplingTensor with_strength(Frequency g) const { return {g, jstar_}; }

 private:
  Frequency g_;
  FormFactor jstar_;
};

/// Quantities derived from a coupling tensor. Energies are stored as E/h and
/// may be negative.
struct DerivedCoupling {
  Frequency j;       // (J_xx + J_yy) / 2
  Frequency jprime;  // (J_xy - J_yx) / 2
  Frequency jzz;
  double phi = 0.0;  // arg(J + i J') in (-pi, pi]
  double eta = 0.0;  // sqrt(J^2 + J'^2) / g
  /// Duration of one entangling interval, pi*hbar / (8 sqrt(J^2 + J'^2)).
  /// Empty for Ising-like couplings (eta == 0).
  std::optional<double> delta_t;
};

DerivedCoupling derive(const CouplingTensor& c);

/// Ising-closeness parameter of a form factor; scale invariant.
double eta_of(const FormFactor& jstar);
/// Phase arg(J + iJ') of a form factor in (-pi, pi].
double phi_of(const FormFactor& jstar);

/// Thrown when a coupling has eta == 0 and no entangling time exists.
class IsingLimitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Instantaneous qubit frequencies.
struct QubitFrequencies {
  Frequency q1;
  Frequency q2;
};

/// One qubit's microwave drive, Omega cos(theta + phase) sigma_x.
struct Drive {
  Frequency amplitude;
  double phase = 0.0;
};

using DrivePair = std::array<std::optional<Drive>, 2>;

/// sum_{mu nu} J_{mu nu} sigma^mu_1 sigma^nu_2 in rad/s.
Op4 coupling_operator(const CouplingTensor& c);

/// Free part -(eps_1/2) sigma^z_1 - (eps_2/2) sigma^z_2 in rad/s.
Op4 free_hamiltonian(const QubitFrequencies& f);

/// Lab-frame H(t)/hbar in rad/s. `carrier_angles` are the accumulated drive
/// angles theta_i(t) supplied by the propagator.
Op4 lab_hamiltonian(const QubitFrequencies& f, const CouplingTensor& c,
                    const DrivePair& drives,
                    const std::array<double, 2>& carrier_angles);

/// Rotating-frame interaction for tuned qubits, in rad/s:
/// J(xx + yy) + J_zz zz + J'(xy - yx).
Op4 rwa_interaction(const CouplingTensor& c);

/// Thrown when rejection sampling cannot hit the requested eta.
class SamplingBudgetError : public std::runtime_error {
 public:
  SamplingBudgetError(std::uint64_t attempts, double target_eta);
  std::uint64_t attempts() const { return attempts_; }

 private:
  std::uint64_t attempts_;
};

/// Draws random coupling forms. One sampler per thread.
class TensorSampler {
 public:
  explicit TensorSampler(std::uint64_t seed) : rng_(seed) {}

  /// Nine i.i.d. U[-1, 1] entries normalized by the largest magnitude,
  /// accepted when |eta - target_eta| <= tol.
  FormFactor sample(double target_eta, double tol = 0.01,
                    std::uint64_t max_attempts = 10'000'000);

  /// Nine i.i.d. U[-1, 1] entries without normalization.
  FormFactor sample_unconstrained();

 private:
  double uniform_symmetric();

  std::mt19937_64 rng_;
};

/// Convenience wrapper around TensorSampler::sample.
FormFactor sample_random_tensor(std::uint64_t seed, double target_eta,
                                double tol = 0.01);

struct EtaStatistics {
  double mean = 0.0;
  double std_error = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::uint64_t samples = 0;
};

/// Monte Carlo mean of eta over J* with i.i.d. U[-1, 1] entries, eta taken
/// relative to the distribution's bound (g = 1). Requires samples >= 1e4.
EtaStatistics mean_eta_unconstrained(std::uint64_t samples,
                                     std::uint64_t seed);

}  // namespace cnotsim
