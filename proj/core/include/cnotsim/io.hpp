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

#include <filesystem>
#include <string>
#include <string_view>

#include "cnotsim/model.hpp"
#include "cnotsim/optimize.hpp"
#include "cnotsim/pulse.hpp"

namespace cnotsim {

/// A coupling read from JSON: {"jstar": [[..],[..],[..]], "g_mhz": 10}.
/// "g_mhz" is optional (default 1 MHz). Alternatively {"j_mhz": [[..]..]}
/// gives the full matrix, factored with g = max |J|.
CouplingTensor parse_coupling_json(std::string_view text);
CouplingTensor load_coupling_file(const std::filesystem::path& path);

/// `t_gate_ns,fidelity_percent,g_over_h_mhz,omega_over_h_mhz`, six
/// significant digits.
std::string curve_to_csv(const FidelityCurve& curve);

/// JSON sidecar: coupling, eta, phi, decoherence, ensemble seed, grids,
/// step control and the command line that produced the curve.
std::string curve_metadata_json(const FidelityCurve& curve,
                                const SweepConfig& cfg,
                                std::string_view command);

/// Ordered segment records (kind, duration in ns, drive phases in rad,
/// frequencies in GHz) as JSON.
std::string schedule_to_json(const PulseSchedule& sched,
                             const DeviceParams& device);

/// Writes `text` to `path`, creating parent directories. Throws
/// std::runtime_error on failure.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace cnotsim
