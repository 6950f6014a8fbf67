// Copyright 2026 The cnotcal Authors
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

// cnotcal: regenerate CNOT calibration tables, gates, trajectories and the
// property report.
//
//   cnotcal table1 [--out FILE] [--format csv|json]
//   cnotcal table2 [--out FILE] [--format csv|json]
//   cnotcal gate --delta D --mode one-step|two-step [--frame 1|2] [--seed N]
//   cnotcal trajectory --delta D [--samples N] [--with-resonant-trace]
//   cnotcal verify [--seed N]
//
// Exit status: 0 success, 2 domain error, 3 I/O error, 4 verification failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cnotcal/cnotcal.hpp"

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerify = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::filesystem::path resolve_output(const std::string& out, const std::string& default_name) {
  const char* dir = std::getenv("CNOTCAL_OUTPUT_DIR");
  if (out.empty()) {
    if (dir == nullptr || *dir == '\0') return {};
    return std::filesystem::path(dir) / default_name;
  }
  std::filesystem::path p(out);
  if (p.is_relative() && dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
  return p;
}

void emit(const std::filesystem::path& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing " + path.string());
}

std::filesystem::path companion_path(const std::filesystem::path& main) {
  return main.parent_path() / (main.stem().string() + "_resonant" + main.extension().string());
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cnotcal;
  CLI::App app{"Calibration and verification of CNOT gates for detuned phase qubits"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string mode = "one-step";
  int frame = 1;
  std::string format;

  const std::map<std::string, SweepMode> modes{{"one-step", SweepMode::OneStep},
                                               {"two-step", SweepMode::TwoStep}};
  const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "output file (default: stdout, or $CNOTCAL_OUTPUT_DIR/<command>.<ext>)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized restarts")->capture_default_str();
  };
  auto* table1 = app.add_subcommand("table1", "gate times and drive amplitudes for exact CNOT");
  auto* table2 = app.add_subcommand("table2", "single-step gates closest to CNOT at large detuning");
  auto* gate = app.add_subcommand("gate", "assemble one gate and fit its local rotations");
  auto* trajectory = app.add_subcommand("trajectory", "Weyl chamber steering trajectory");
  auto* verify = app.add_subcommand("verify", "run the property suite");
  for (auto* sub : {table1, table2, gate, trajectory, verify}) add_common(sub);
  for (auto* sub : {gate, trajectory}) {
    sub->add_option("--delta", cfg.delta_over_g, "detuning in units of g")->required();
    sub->add_option("--mode", mode, "one-step or two-step")->check(CLI::IsMember({"one-step", "two-step"}));
  }
  gate->add_option("--frame", frame, "rotating frame for the two-step sequence")->check(CLI::IsMember({1, 2}));
  trajectory->add_option("--samples", cfg.samples, "grid points")->capture_default_str();
  trajectory->add_flag("--with-resonant-trace", cfg.with_resonant_trace, "also write the delta = 0 trace");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.mode = modes.at(mode);
    cfg.frame = frame_from_index(frame);
    if (!format.empty()) cfg.format = formats.at(format);
    const auto fmt_or = [&](OutputFormat d) { return cfg.format.value_or(d); };
    const auto ext = [&](OutputFormat d) { return fmt_or(d) == OutputFormat::Csv ? ".csv" : ".json"; };

    if (*table1) {
      emit(resolve_output(cfg.out, std::string("table1") + ext(OutputFormat::Csv)), cmd_table1(fmt_or(OutputFormat::Csv)));
    } else if (*table2) {
      emit(resolve_output(cfg.out, std::string("table2") + ext(OutputFormat::Csv)), cmd_table2(fmt_or(OutputFormat::Csv)));
    } else if (*gate) {
      emit(resolve_output(cfg.out, "gate.json"), cmd_gate(cfg));
    } else if (*trajectory) {
      const CommandOutput result = cmd_trajectory(cfg);
      const auto path = resolve_output(cfg.out, "trajectory.csv");
      emit(path, result.text);
      if (result.companion) {
        if (path.empty()) {
          std::cout << '\n';
          emit(path, *result.companion);
        } else {
          emit(companion_path(path), *result.companion);
        }
      }
    } else if (*verify) {
      const VerifyOutcome v = cmd_verify(cfg.seed);
      emit(resolve_output(cfg.out, "verify.txt"), v.report);
      if (!v.all_passed) return kExitVerify;
    }
  } catch (const IoError& e) {
    std::cerr << "cnotcal: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    std::cerr << "cnotcal: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ContractViolation& e) {
    std::cerr << "cnotcal: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
