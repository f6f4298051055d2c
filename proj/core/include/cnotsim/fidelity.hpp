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

#include "cnotsim/qmath.hpp"

namespace cnotsim {

/// (4 + |Tr(u_target^dagger u)|^2) / 20, in [0.2, 1]. Throws
/// std::invalid_argument if either input is non-unitary beyond 1e-6.
double average_fidelity_unitary(const Op4& u_target, const Op4& u);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Average of |<chi| u_target^dagger u |chi>|^2 over Haar-random states
/// (normalized complex Gaussian vectors). The work is split into fixed-size
/// chunks, each with its own seed, so the result depends only on `seed` and
/// `samples`, never on the worker count. Requires samples >= 1000.
MonteCarloEstimate montecarlo_state_fidelity(const Op4& u_target, const Op4& u,
                                             std::uint64_t samples,
                                             std::uint64_t seed,
                                             unsigned workers = 1);

/// Tr(S_target^dagger S) / 16 with S_target the conjugation superoperator.
double process_fidelity(const Op4& u_target, const Superop& s);

/// (4 F_pro + 1) / 5. Throws std::invalid_argument unless s is
/// trace-preserving within 1e-6.
double average_fidelity_channel(const Op4& u_target, const Superop& s);

/// max over matrix units E_kl of |Tr(s(E_kl)) - delta_kl|.
double trace_preservation_error(const Superop& s);

/// Smallest eigenvalue of the Choi matrix sum_kl E_kl (x) s(E_kl).
double choi_min_eigenvalue(const Superop& s);

}  // namespace cnotsim
