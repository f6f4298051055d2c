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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>

#include "CLI11.hpp"
#include "cnotsim/fidelity.hpp"
#include "cnotsim/io.hpp"
#include "cnotsim/model.hpp"
#include "cnotsim/optimize.hpp"
#include "cnotsim/pulse.hpp"
#include "json.hpp"

namespace cnotsim::cli {

namespace {

namespace fs = std::filesystem;

struct CouplingArg {
  CouplingTensor tensor;
  std::string description;
};

// Shared sweep flags.
struct SweepArgs {
  double t1_ns = 0.0;
  std::string scope = "entangling";
  std::vector<double> times_ns;
  double omega_min = 50.0;
  double omega_max = 500.0;
  double omega_step = 10.0;
};

CouplingArg resolve_coupling(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@') {
    return {load_coupling_file(spec.substr(1)), spec};
  }
  return {CouplingTensor(Frequency::mhz(1.0), canonical_form(spec)), spec};
}

void add_sweep_flags(CLI::App* cmd, SweepArgs& a) {
  cmd->add_option("--t1-ns", a.t1_ns,
                  "Amplitude-damping time per qubit in ns (0 = off)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--damping-scope", a.scope,
                  "Where damping acts: entangling | all")
      ->check(CLI::IsMember({"entangling", "all"}));
  cmd->add_option("--times", a.times_ns, "Gate times in ns, comma separated")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  cmd->add_option("--omega-min", a.omega_min, "Rabi grid start, MHz")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--omega-max", a.omega_max, "Rabi grid end, MHz")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--omega-step", a.omega_step, "Rabi grid step, MHz")
      ->check(CLI::PositiveNumber);
}

SweepConfig make_config(const SweepArgs& a) {
  SweepConfig cfg;
  if (!a.times_ns.empty()) {
    cfg.times.clear();
    for (double t : a.times_ns) cfg.times.push_back(t * 1e-9);
  }
  cfg.omegas = omega_grid(Frequency::mhz(a.omega_min),
                          Frequency::mhz(a.omega_max),
                          Frequency::mhz(a.omega_step));
  if (a.t1_ns > 0.0) {
    DecoherenceParams dec;
    dec.t1 = a.t1_ns * 1e-9;
    dec.scope = a.scope == "all" ? DampingScope::kAllSegments
                                 : DampingScope::kEntanglingOnly;
    cfg.decoherence = dec;
  }
  cfg.validate();
  return cfg;
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const std::string& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

void emit_curve(const FidelityCurve& curve, const SweepConfig& cfg,
                const std::string& out_path, const std::string& command,
                std::ostream& out) {
  const std::string csv = curve_to_csv(curve);
  if (out_path.empty()) {
    out << csv;
    return;
  }
  write_text_file(out_path, csv);
  write_text_file(out_path + ".meta.json",
                  curve_metadata_json(curve, cfg, command));
  out << "wrote " << out_path << '\n';
}

// Reference Rabi frequency per grid time (MHz) for `tables --pinned`.
std::vector<double> reference_omegas(int which) {
  switch (which) {
    case 2:
      return {430, 430, 430, 430, 430, 430, 430, 430,
              430, 430, 430, 430, 340, 340, 340};
    case 3:
      return {500, 250, 250, 240, 240, 240, 240, 240,
              240, 240, 240, 240, 250, 250, 250};
    default:
      return std::vector<double>(15, 370.0);
  }
}

FidelityCurve pinned_curve(const FormFactor& jstar, int which,
                           const SweepConfig& cfg, const std::string& name) {
  FidelityCurve curve;
  curve.meta.coupling = name;
  curve.meta.jstar = jstar;
  curve.meta.eta = eta_of(jstar);
  curve.meta.phi = phi_of(jstar);
  curve.meta.decoherence = cfg.decoherence;
  const std::vector<double> omegas = reference_omegas(which);
  for (std::size_t i = 0; i < cfg.times.size(); ++i) {
    const Frequency w = Frequency::mhz(omegas[i]);
    const Frequency g = g_for_gate_time(cfg.times[i], w, curve.meta.eta,
                                        curve.meta.phi);
    const double f = simulate_fidelity(CouplingTensor(g, jstar), w, cfg);
    curve.points.push_back({cfg.times[i], 100.0 * f, g, w});
  }
  return curve;
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

int fail(std::ostream& err, const char* code, int exit, const std::string& msg) {
  err << "error code=" << code << " exit=" << exit << ": " << one_line(msg)
      << '\n';
  return exit;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Two-qubit CNOT pulse simulator and optimizer", "cnotsim"};
  app.require_subcommand(1);
  const std::string command = join(args);

  // curve
  std::string coupling;
  std::string out_path;
  SweepArgs sweep;
  auto* curve = app.add_subcommand("curve", "Optimal fidelity versus gate time");
  curve->add_option("--coupling", coupling,
                    "heisenberg | xy | ising | @file.json")
      ->required();
  curve->add_option("--out", out_path, "CSV output (stdout if omitted)");
  add_sweep_flags(curve, sweep);

  // ensemble
  EnsembleSpec ens;
  std::string out_dir;
  auto* ensemble =
      app.add_subcommand("ensemble", "Random couplings at fixed eta");
  ensemble->add_option("--eta", ens.target_eta, "Target eta in (0, sqrt 2]")
      ->required()
      ->check(CLI::Range(1e-6, std::sqrt(2.0)));
  ensemble->add_option("--samples", ens.samples, "Ensemble size")
      ->check(CLI::Range(1u, 100000u));
  ensemble->add_option("--seed", ens.seed, "RNG seed");
  ensemble->add_option("--out", out_dir, "Output directory")->required();
  add_sweep_flags(ensemble, sweep);

  // tables
  int which = 2;
  bool pinned = false;
  auto* tables = app.add_subcommand("tables", "Reference table grids");
  tables->add_option("--which", which, "2 (Heisenberg), 3 (XY), 4 (damped)")
      ->required()
      ->check(CLI::IsMember({2, 3, 4}));
  tables->add_flag("--pinned", pinned,
                   "Use the reference Rabi frequency per row instead of "
                   "optimizing");
  tables->add_option("--out", out_path, "CSV output (stdout if omitted)");

  // eta
  auto* eta = app.add_subcommand("eta", "Print eta of a coupling");
  eta->add_option("--coupling", coupling, "name or @file.json")->required();

  // eta-mean
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  auto* eta_mean = app.add_subcommand(
      "eta-mean", "Monte Carlo mean of eta over random couplings");
  eta_mean->add_option("--samples", samples, "Sample count (>= 10000)")
      ->check(CLI::Range(std::uint64_t{10000}, std::uint64_t{1} << 40));
  eta_mean->add_option("--seed", seed, "RNG seed");

  // verify-identity
  auto* verify = app.add_subcommand(
      "verify-identity", "Check the ideal sequence reproduces CNOT");
  verify->add_option("--coupling", coupling, "name or @file.json")->required();

  // dump-schedule
  double omega_mhz = 0.0;
  double t_gate_ns = 0.0;
  double g_mhz = 0.0;
  auto* dump = app.add_subcommand("dump-schedule", "Print the compiled pulse schedule");
  dump->add_option("--coupling", coupling, "name or @file.json")->required();
  dump->add_option("--omega", omega_mhz, "Rabi frequency, MHz")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* t_opt = dump->add_option("--t-gate", t_gate_ns,
                                 "Total gate time in ns (sets g)")
                    ->check(CLI::PositiveNumber);
  dump->add_option("--g", g_mhz, "Coupling strength g/h, MHz")
      ->check(CLI::PositiveNumber)
      ->excludes(t_opt);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(err, "usage", kFailure, e.what());
  }

  try {
    if (*curve) {
      const SweepConfig cfg = make_config(sweep);
      const CouplingArg c = resolve_coupling(coupling);
      if (!(eta_of(c.tensor.jstar()) > 0.0)) {
        throw IsingLimitError("coupling '" + c.description +
                              "' is in the Ising limit (eta = 0)");
      }
      emit_curve(fidelity_curve(c.tensor.jstar(), cfg, c.description), cfg,
                 out_path, command, out);
      return kOk;
    }

    if (*ensemble) {
      SweepConfig cfg = make_config(sweep);
      cfg.ensemble = ens;
      cfg.validate();
      const EnsembleResult r = ensemble_curves(cfg);
      const fs::path dir(out_dir);
      write_text_file(dir / "mean.csv", curve_to_csv(r.mean));
      nlohmann::json meta = nlohmann::json::parse(
          curve_metadata_json(r.mean, cfg, command));
      nlohmann::json members = nlohmann::json::array();
      for (std::size_t k = 0; k < r.samples.size(); ++k) {
        FidelityCurve sc;
        for (const auto& p : r.samples[k].points) {
          if (p) sc.points.push_back(*p);
        }
        char name[32];
        std::snprintf(name, sizeof name, "sample_%03zu.csv", k);
        write_text_file(dir / name, curve_to_csv(sc));
        const FormFactor& j = r.samples[k].jstar;
        members.push_back(
            {{"file", name},
             {"eta", eta_of(j)},
             {"phi", phi_of(j)},
             {"jstar",
              {{j(0, 0), j(0, 1), j(0, 2)},
               {j(1, 0), j(1, 1), j(1, 2)},
               {j(2, 0), j(2, 1), j(2, 2)}}}});
      }
      meta["samples"] = members;
      meta["contributing"] = r.contributing;
      meta["failures"] = r.failures;
      write_text_file(dir / "metadata.json", meta.dump(2) + '\n');
      out << "wrote " << (dir / "mean.csv").string() << '\n';
      return kOk;
    }

    if (*tables) {
      SweepConfig cfg;
      cfg.times = table_times(which);
      const std::string name = which == 3 ? "xy" : "heisenberg";
      if (which == 4) {
        DecoherenceParams dec;
        dec.t1 = 500e-9;
        cfg.decoherence = dec;
      }
      const FormFactor jstar = canonical_form(name);
      const FidelityCurve c = pinned ? pinned_curve(jstar, which, cfg, name)
                                     : fidelity_curve(jstar, cfg, name);
      emit_curve(c, cfg, out_path, command, out);
      return kOk;
    }

    if (*eta) {
      out << fmt("%.6f", eta_of(resolve_coupling(coupling).tensor.jstar()))
          << '\n';
      return kOk;
    }

    if (*eta_mean) {
      const EtaStatistics s = mean_eta_unconstrained(samples, seed);
      out << "mean=" << fmt("%.6f", s.mean)
          << " std_error=" << fmt("%.3g", s.std_error)
          << " min=" << fmt("%.6f", s.min) << " max=" << fmt("%.6f", s.max)
          << " samples=" << s.samples << '\n';
      return kOk;
    }

    if (*verify) {
      const CouplingArg c = resolve_coupling(coupling);
      const double f = verify_sequence_identity(c.tensor);
      out << "fidelity=" << fmt("%.15f", f)
          << " deviation=" << fmt("%.3e", std::abs(1.0 - f)) << '\n';
      if (std::abs(1.0 - f) > 1e-10) {
        return fail(err, "identity_mismatch", kCheckFailed,
                    "sequence product deviates from CNOT by " +
                        fmt("%.3e", std::abs(1.0 - f)));
      }
      return kOk;
    }

    if (*dump) {
      const CouplingArg c = resolve_coupling(coupling);
      const DeviceParams device;
      const Frequency w = Frequency::mhz(omega_mhz);
      CouplingTensor tensor = c.tensor;
      if (t_gate_ns > 0.0) {
        tensor = tensor.with_strength(g_for_gate_time(
            t_gate_ns * 1e-9, w, eta_of(tensor.jstar()), phi_of(tensor.jstar())));
      } else if (g_mhz > 0.0) {
        tensor = tensor.with_strength(Frequency::mhz(g_mhz));
      }
      out << schedule_to_json(compile_cnot_schedule(tensor, w, device), device);
      return kOk;
    }
  } catch (const IsingLimitError& e) {
    return fail(err, "ising_limit", kIsingLimit, e.what());
  } catch (const InfeasibleGateTimeError& e) {
    return fail(err, "infeasible_gate_time", kInfeasible, e.what());
  } catch (const InfeasiblePointError& e) {
    return fail(err, "infeasible_grid", kInfeasible, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(err, "invalid_argument", kFailure, e.what());
  } catch (const std::exception& e) {
    return fail(err, "runtime", kFailure, e.what());
  }
  return fail(err, "usage", kFailure, "no command given");
}

}  // namespace cnotsim::cli
