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

#include "cnotsim/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "cnotsim/parallel.hpp"

namespace cnotsim {

namespace {

constexpr double kUnitaryTolerance = 1e-6;
constexpr double kTraceTolerance = 1e-6;
constexpr std::uint64_t kChunk = 4096;

struct ChunkSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t count = 0;
};

}  // namespace

double average_fidelity_unitary(const Op4& u_target, const Op4& u) {
  if (unitarity_error(u_target) > kUnitaryTolerance ||
      unitarity_error(u) > kUnitaryTolerance) {
    throw std::invalid_argument(
        "average_fidelity_unitary: input is not unitary (use the channel "
        "fidelity for decoherent results)");
  }
  const double tr = std::abs((u_target.adjoint() * u).trace());
  return (4.0 + tr * tr) / 20.0;
}

MonteCarloEstimate montecarlo_state_fidelity(const Op4& u_target, const Op4& u,
                                             std::uint64_t samples,
                                             std::uint64_t seed,
                                             unsigned workers) {
  if (samples < 1000) {
    throw std::invalid_argument("montecarlo_state_fidelity: need >= 1000 samples");
  }
  const Op4 m = u_target.adjoint() * u;
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<ChunkSums> partial(chunks);

  parallel_for(chunks, workers, [&](std::size_t k) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(k)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    const std::uint64_t begin = k * kChunk;
    const std::uint64_t end = std::min(samples, begin + kChunk);
    ChunkSums acc;
    for (std::uint64_t s = begin; s < end; ++s) {
      Eigen::Vector4cd chi;
      for (int i = 0; i < 4; ++i) chi(i) = Complex(normal(rng), normal(rng));
      chi.normalize();
      const double f = std::norm(chi.dot(m * chi));
      acc.sum += f;
      acc.sum_sq += f * f;
      ++acc.count;
    }
    partial[k] = acc;
  });

  ChunkSums total;
  for (const ChunkSums& c : partial) {
    total.sum += c.sum;
    total.sum_sq += c.sum_sq;
    total.count += c.count;
  }
  const double n = static_cast<double>(total.count);
  const double mean = total.sum / n;
  const double var = std::max(0.0, (total.sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n), total.count};
}

double process_fidelity(const Op4& u_target, const Superop& s) {
  const Superop target = conjugation_superop(u_target);
  return (target.adjoint() * s).trace().real() / 16.0;
}

double average_fidelity_channel(const Op4& u_target, const Superop& s) {
  if (trace_preservation_error(s) > kTraceTolerance) {
    throw std::invalid_argument(
        "average_fidelity_channel: superoperator is not trace-preserving");
  }
  return (4.0 * process_fidelity(u_target, s) + 1.0) / 5.0;
}

double trace_preservation_error(const Superop& s) {
  // Column k + 4l of s is vec(s(|k><l|)); its trace sits at rows a + 4a.
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) {
      Complex tr = 0.0;
      for (int a = 0; a < 4; ++a) tr += s(a + 4 * a, k + 4 * l);
      worst = std::max(worst, std::abs(tr - (k == l ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double choi_min_eigenvalue(const Superop& s) {
  Superop choi = Superop::Zero();
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) {
      const auto col = s.col(k + 4 * l);
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) choi(4 * k + a, 4 * l + b) = col(a + 4 * b);
      }
    }
  }
  const Superop herm = 0.5 * (choi + choi.adjoint());
  Eigen::SelfAdjointEigenSolver<Superop> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace cnotsim
