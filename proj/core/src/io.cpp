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

#include "cnotsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cnotsim {

namespace {

using nlohmann::json;

Eigen::Matrix3d read_matrix(const json& j, const char* key) {
  const json& m = j.at(key);
  if (!m.is_array() || m.size() != 3) {
    throw std::invalid_argument(std::string("coupling: '") + key +
                                "' must be a 3x3 array");
  }
  Eigen::Matrix3d out;
  for (int r = 0; r < 3; ++r) {
    if (!m[r].is_array() || m[r].size() != 3) {
      throw std::invalid_argument(std::string("coupling: '") + key +
                                  "' must be a 3x3 array");
    }
    for (int c = 0; c < 3; ++c) out(r, c) = m[r][c].get<double>();
  }
  return out;
}

json matrix_json(const Eigen::Matrix3d& m) {
  json out = json::array();
  for (int r = 0; r < 3; ++r) out.push_back({m(r, 0), m(r, 1), m(r, 2)});
  return out;
}

std::string sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const char* scope_name(DampingScope s) {
  return s == DampingScope::kEntanglingOnly ? "entangling" : "all";
}

}  // namespace

CouplingTensor parse_coupling_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("coupling: invalid JSON: ") + e.what());
  }
  try {
    if (j.contains("j_mhz")) {
      return CouplingTensor::from_matrix_hz(read_matrix(j, "j_mhz") * 1e6);
    }
    const double g = j.value("g_mhz", 1.0);
    return CouplingTensor(Frequency::mhz(g), read_matrix(j, "jstar"));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("coupling: ") + e.what());
  }
}

CouplingTensor load_coupling_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coupling file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_coupling_json(ss.str());
}

std::string curve_to_csv(const FidelityCurve& curve) {
  std::string out = "t_gate_ns,fidelity_percent,g_over_h_mhz,omega_over_h_mhz\n";
  for (const CurvePoint& p : curve.points) {
    out += sig6(p.t_gate * 1e9) + ',' + sig6(p.fidelity_percent) + ',' +
           sig6(p.g.mhz()) + ',' + sig6(p.omega.mhz()) + '\n';
  }
  return out;
}

std::string curve_metadata_json(const FidelityCurve& curve,
                                const SweepConfig& cfg,
                                std::string_view command) {
  json j;
  j["command"] = std::string(command);
  j["coupling"] = {{"name", curve.meta.coupling},
                   {"jstar", matrix_json(curve.meta.jstar)}};
  j["eta"] = curve.meta.eta;
  j["phi"] = curve.meta.phi;
  if (cfg.decoherence && cfg.decoherence->enabled()) {
    j["decoherence"] = {{"t1_ns", cfg.decoherence->t1 * 1e9},
                        {"scope", scope_name(cfg.decoherence->scope)}};
  } else {
    j["decoherence"] = nullptr;
  }
  if (cfg.ensemble) {
    j["ensemble"] = {{"target_eta", cfg.ensemble->target_eta},
                     {"samples", cfg.ensemble->samples},
                     {"seed", cfg.ensemble->seed},
                     {"tolerance", cfg.ensemble->tolerance}};
  }
  json times = json::array();
  for (double t : cfg.times) times.push_back(t * 1e9);
  j["times_ns"] = times;
  j["omega_grid_mhz"] = {{"min", cfg.omegas.front().mhz()},
                         {"max", cfg.omegas.back().mhz()},
                         {"count", cfg.omegas.size()}};
  const DeviceParams& d = cfg.device;
  j["device"] = {{"eps_ghz", d.eps_tuned.ghz()},
                 {"eps_detuned_q2_ghz", d.eps_detuned_q2.ghz()},
                 {"omega_mhz", {d.omega_min.mhz(), d.omega_max.mhz()}},
                 {"g_mhz", {d.g_min.mhz(), d.g_max.mhz()}}};
  j["step_control"] = {
      {"initial_subdivisions", cfg.steps.initial_subdivisions},
      {"tolerance", cfg.steps.tolerance},
      {"max_halvings", cfg.steps.max_halvings},
      {"integrator", cfg.steps.integrator == StepControl::Integrator::kSplitStep
                         ? "split-step"
                         : "midpoint-exponential"}};
  return j.dump(2) + '\n';
}

std::string schedule_to_json(const PulseSchedule& sched,
                             const DeviceParams& device) {
  json segs = json::array();
  for (const Segment& s : sched.segments) {
    json rec;
    rec["kind"] = s.kind == SegmentKind::kDrive ? "drive" : "entangle";
    rec["duration_ns"] = s.duration * 1e9;
    rec["qubit1_ghz"] = device.eps_tuned.ghz();
    rec["qubit2_ghz"] = s.qubit2_frequency.ghz();
    json drives = json::array();
    for (int q = 0; q < 2; ++q) {
      if (!s.drives[q]) {
        drives.push_back(nullptr);
      } else {
        drives.push_back({{"amplitude_mhz", s.drives[q]->amplitude.mhz()},
                          {"phase_rad", s.drives[q]->phase}});
      }
    }
    rec["drives"] = drives;
    json rots = json::array();
    for (const Rotation& r : s.rotations) {
      rots.push_back({{"qubit", r.qubit + 1},
                      {"axis", r.axis == Axis::kX ? "x" : "y"},
                      {"angle_rad", r.angle}});
    }
    rec["rotations"] = rots;
    segs.push_back(rec);
  }
  json j;
  j["total_time_ns"] = sched.total_time * 1e9;
  j["omega_mhz"] = sched.omega.mhz();
  j["eta"] = sched.derived.eta;
  j["phi"] = sched.derived.phi;
  j["delta_t_ns"] = sched.derived.delta_t ? json(*sched.derived.delta_t * 1e9)
                                          : json(nullptr);
  j["segments"] = segs;
  return j.dump(2) + '\n';
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace cnotsim
