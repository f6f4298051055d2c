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

#include "cnotsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cnotsim {

namespace {

constexpr double kPi = std::numbers::pi;

const std::array<Op2, 3>& paulis() {
  static const std::array<Op2, 3> p = {pauli::x(), pauli::y(), pauli::z()};
  return p;
}

}  // namespace

void DeviceParams::validate() const {
  if (!(omega_min < omega_max)) {
    throw std::invalid_argument("DeviceParams: omega_min must be < omega_max");
  }
  if (!(g_min < g_max)) {
    throw std::invalid_argument("DeviceParams: g_min must be < g_max");
  }
  if (eps_detuned_q2 == eps_tuned) {
    throw std::invalid_argument(
        "DeviceParams: detuned qubit-2 frequency equals the tuned frequency");
  }
  if (eps_tuned.hz() <= 0.0 || eps_detuned_q2.hz() <= 0.0 ||
      omega_min.hz() <= 0.0 || g_min.hz() <= 0.0) {
    throw std::invalid_argument("DeviceParams: frequencies must be positive");
  }
}

bool DeviceParams::weak_drive_violated() const {
  return omega_max.hz() / eps_tuned.hz() > 0.1;
}

Frequency DeviceParams::max_qubit_frequency() const {
  return std::max(eps_tuned, eps_detuned_q2);
}

FormFactor canonical_form(CanonicalCoupling kind) {
  switch (kind) {
    case CanonicalCoupling::kHeisenberg:
      return FormFactor::Identity();
    case CanonicalCoupling::kIsing: {
      FormFactor f = FormFactor::Zero();
      f(2, 2) = 1.0;
      return f;
    }
    case CanonicalCoupling::kXY: {
      FormFactor f = FormFactor::Zero();
      f(0, 0) = 1.0;
      f(1, 1) = 1.0;
      return f;
    }
  }
  throw std::invalid_argument("canonical_form: unknown coupling kind");
}

FormFactor canonical_form(std::string_view name) {
  if (name == "heisenberg") return canonical_form(CanonicalCoupling::kHeisenberg);
  if (name == "ising") return canonical_form(CanonicalCoupling::kIsing);
  if (name == "xy") return canonical_form(CanonicalCoupling::kXY);
  throw std::invalid_argument("unknown coupling name '" + std::string(name) +
                              "' (expected heisenberg, ising or xy)");
}

CouplingTensor::CouplingTensor(Frequency g, const FormFactor& jstar)
    : g_(g), jstar_(jstar) {
  if (!(g.hz() > 0.0) || !std::isfinite(g.hz())) {
    throw std::invalid_argument("CouplingTensor: g must be positive");
  }
  if (!jstar.allFinite()) {
    throw std::invalid_argument("CouplingTensor: J* has non-finite entries");
  }
  if (jstar.cwiseAbs().maxCoeff() > 1.0 + 1e-12) {
    throw std::invalid_argument("CouplingTensor: |J*_{mu nu}| must be <= 1");
  }
}

CouplingTensor CouplingTensor::from_matrix_hz(const Eigen::Matrix3d& j_hz) {
  const double g = j_hz.cwiseAbs().maxCoeff();
  if (!(g > 0.0)) {
    throw std::invalid_argument("CouplingTensor: coupling matrix is zero");
  }
  return {Frequency::hz(g), j_hz / g};
}

double eta_of(const FormFactor& jstar) {
  const double j = 0.5 * (jstar(0, 0) + jstar(1, 1));
  const double jp = 0.5 * (jstar(0, 1) - jstar(1, 0));
  return std::hypot(j, jp);
}

double phi_of(const FormFactor& jstar) {
  const double j = 0.5 * (jstar(0, 0) + jstar(1, 1));
  const double jp = 0.5 * (jstar(0, 1) - jstar(1, 0));
  // atan2 returns [-pi, pi]; fold -pi onto +pi.
  const double phi = std::atan2(jp, j);
  return phi == -kPi ? kPi : phi;
}

DerivedCoupling derive(const CouplingTensor& c) {
  const FormFactor& s = c.jstar();
  const double g = c.g().hz();
  DerivedCoupling d;
  d.j = Frequency::hz(0.5 * g * (s(0, 0) + s(1, 1)));
  d.jprime = Frequency::hz(0.5 * g * (s(0, 1) - s(1, 0)));
  d.jzz = Frequency::hz(g * s(2, 2));
  d.phi = phi_of(s);
  d.eta = eta_of(s);
  const double magnitude = std::hypot(d.j.angular(), d.jprime.angular());
  if (magnitude > 0.0) d.delta_t = kPi / (8.0 * magnitude);
  return d;
}

Op4 coupling_operator(const CouplingTensor& c) {
  const Eigen::Matrix3d j = c.angular_matrix();
  Op4 h = Op4::Zero();
  for (int mu = 0; mu < 3; ++mu) {
    for (int nu = 0; nu < 3; ++nu) {
      if (j(mu, nu) != 0.0) h += j(mu, nu) * kron(paulis()[mu], paulis()[nu]);
    }
  }
  return h;
}

Op4 free_hamiltonian(const QubitFrequencies& f) {
  Op4 h = Op4::Zero();
  const double e1 = 0.5 * f.q1.angular();
  const double e2 = 0.5 * f.q2.angular();
  h(0, 0) = -e1 - e2;
  h(1, 1) = -e1 + e2;
  h(2, 2) = e1 - e2;
  h(3, 3) = e1 + e2;
  return h;
}

Op4 lab_hamiltonian(const QubitFrequencies& f, const CouplingTensor& c,
                    const DrivePair& drives,
                    const std::array<double, 2>& carrier_angles) {
  Op4 h = free_hamiltonian(f) + coupling_operator(c);
  const Op2 id = pauli::identity();
  const Op2 sx = pauli::x();
  if (drives[0]) {
    const double a = drives[0]->amplitude.angular() *
                     std::cos(carrier_angles[0] + drives[0]->phase);
    h += a * kron(sx, id);
  }
  if (drives[1]) {
    const double b = drives[1]->amplitude.angular() *
                     std::cos(carrier_angles[1] + drives[1]->phase);
    h += b * kron(id, sx);
  }
  return h;
}

Op4 rwa_interaction(const CouplingTensor& c) {
  const DerivedCoupling d = derive(c);
  const Op2 x = pauli::x();
  const Op2 y = pauli::y();
  const Op2 z = pauli::z();
  return d.j.angular() * (kron(x, x) + kron(y, y)) +
         d.jzz.angular() * kron(z, z) +
         d.jprime.angular() * (kron(x, y) - kron(y, x));
}

SamplingBudgetError::SamplingBudgetError(std::uint64_t attempts,
                                         double target_eta)
    : std::runtime_error("random tensor sampling exhausted its budget after " +
                         std::to_string(attempts) +
                         " attempts (target eta " + std::to_string(target_eta) +
                         ")"),
      attempts_(attempts) {}

double TensorSampler::uniform_symmetric() {
  // 53 random bits -> [0, 1), independent of the standard library's
  // distribution implementation.
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

FormFactor TensorSampler::sample_unconstrained() {
  FormFactor f;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) f(r, c) = uniform_symmetric();
  }
  return f;
}

FormFactor TensorSampler::sample(double target_eta, double tol,
                                 std::uint64_t max_attempts) {
  if (!(target_eta > 0.0) || target_eta > std::sqrt(2.0)) {
    throw std::invalid_argument("sample: target eta must lie in (0, sqrt(2)]");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("sample: tol must be > 0");
  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    FormFactor f = sample_unconstrained();
    const double scale = f.cwiseAbs().maxCoeff();
    if (scale == 0.0) continue;
    f /= scale;
    if (std::abs(eta_of(f) - target_eta) <= tol) return f;
  }
  throw SamplingBudgetError(max_attempts, target_eta);
}

FormFactor sample_random_tensor(std::uint64_t seed, double target_eta,
                                double tol) {
  TensorSampler sampler(seed);
  return sampler.sample(target_eta, tol);
}

EtaStatistics mean_eta_unconstrained(std::uint64_t samples,
                                     std::uint64_t seed) {
  if (samples < 10'000) {
    throw std::invalid_argument("mean_eta_unconstrained: need >= 1e4 samples");
  }
  TensorSampler sampler(seed);
  EtaStatistics stats;
  stats.samples = samples;
  stats.min = std::numeric_limits<double>::infinity();
  stats.max = -std::numeric_limits<double>::infinity();
  // Welford accumulation.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t n = 1; n <= samples; ++n) {
    const double eta = eta_of(sampler.sample_unconstrained());
    const double delta = eta - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (eta - mean);
    stats.min = std::min(stats.min, eta);
    stats.max = std::max(stats.max, eta);
  }
  stats.mean = mean;
  const double variance = m2 / static_cast<double>(samples - 1);
  stats.std_error = std::sqrt(variance / static_cast<double>(samples));
  return stats;
}

}  // namespace cnotsim
