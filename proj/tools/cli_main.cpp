// Copyright 2026 The smqsl Authors
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

#include "cli_main.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "smqsl/scenario.hpp"

namespace smqsl {

namespace {

void parse_into(const std::string& name, const std::string& text,
                double& out) {
  size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) {
    throw std::invalid_argument("config: field '" + name +
                                "' expects a number, got '" + text + "'");
  }
  out = value;
}

void parse_into(const std::string& name, const std::string& text, int& out) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) {
    throw std::invalid_argument("config: field '" + name +
                                "' expects an integer, got '" + text + "'");
  }
  out = value;
}

void parse_into(const std::string& name, const std::string& text, bool& out) {
  if (text == "1" || text == "true" || text == "yes") {
    out = true;
  } else if (text == "0" || text == "false" || text == "no") {
    out = false;
  } else {
    throw std::invalid_argument("config: field '" + name +
                                "' expects a boolean, got '" + text + "'");
  }
}

void parse_into(const std::string&, const std::string& text,
                std::string& out) {
  out = text;
}

// One subcommand's option set plus the key -> field routing used for
// key=value config files. Command-line values take precedence over file
// values; unknown file keys are rejected.
struct CliState {
  ScenarioConfig config;
  std::string entropy_text = "renyi";
  std::string q_grid_text = "0.1:0.9:0.1";
  std::string tau_grid_text = "1:10:1";
  std::string config_path;

  struct Binding {
    CLI::Option* option = nullptr;
    std::function<void(const std::string&)> apply;
  };
  std::map<std::string, Binding> bindings;

  template <typename T>
  void bind(CLI::App* cmd, const std::string& name, T& field,
            const std::string& help) {
    CLI::Option* option =
        cmd->add_option("--" + name, field, help)->capture_default_str();
    bindings[name] = {option, [&field, name](const std::string& text) {
                        parse_into(name, text, field);
                      }};
  }

  void bind_flag(CLI::App* cmd, const std::string& name, bool& field,
                 const std::string& help) {
    CLI::Option* option = cmd->add_flag("--" + name, field, help);
    bindings[name] = {option, [&field, name](const std::string& text) {
                        parse_into(name, text, field);
                      }};
  }
};

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

// key=value lines, full-line # comments, blank lines allowed. File values
// fill only fields the command line left untouched.
void apply_config_file(CliState& state) {
  std::ifstream in(state.config_path);
  if (!in) {
    throw std::invalid_argument("config: cannot open file '" +
                                state.config_path + "'");
  }
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    std::ostringstream where;
    where << "config file line " << line_number;
    if (eq == std::string::npos) {
      throw std::invalid_argument(where.str() + ": expected key=value, got '" +
                                  text + "'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    const auto binding = state.bindings.find(key);
    if (binding == state.bindings.end()) {
      throw std::invalid_argument(where.str() + ": unknown key '" + key + "'");
    }
    if (binding->second.option->count() > 0) continue;  // flag wins
    try {
      binding->second.apply(value);
    } catch (const std::exception& e) {
      throw std::invalid_argument(where.str() + ": " + e.what());
    }
  }
}

void add_bloch_options(CLI::App* cmd, CliState& state) {
  state.bind(cmd, "r", state.config.r, "Bloch radius in [0, 1]");
  state.bind(cmd, "theta", state.config.theta, "Bloch polar angle in [0, pi]");
  state.bind(cmd, "phi", state.config.phi, "Bloch azimuth in [0, 2 pi)");
}

void add_sweep_options(CLI::App* cmd, CliState& state) {
  state.bind(cmd, "entropy", state.entropy_text,
             "Entropy family: renyi, tsallis or sme:<z>");
  state.bind(cmd, "q-grid", state.q_grid_text, "q sweep as start:stop:step");
  state.bind(cmd, "tau-grid", state.tau_grid_text,
             "tau sweep as start:stop:step");
}

void add_output_options(CLI::App* cmd, CliState& state,
                        const std::string& default_out) {
  state.config.out_path = default_out;
  state.bind(cmd, "out", state.config.out_path, "Output CSV path");
  state.bind(cmd, "grid-step", state.config.grid_step,
             "Trajectory time step override (0 = model default)");
  cmd->add_option("--config", state.config_path,
                  "key=value config file (# comments); flags take precedence");
}

void finalize(CliState& state, bool needs_q_grid) {
  if (!state.config_path.empty()) {
    apply_config_file(state);
  }
  state.config.entropy = ZSpec::parse(state.entropy_text);
  if (needs_q_grid) {
    state.config.q_grid = parse_grid_triple(state.q_grid_text);
  }
  state.config.tau_grid = parse_grid_triple(state.tau_grid_text);
  validate_config(state.config);
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Sharma-Mittal entropy quantum-speed-limit toolkit"};
  app.require_subcommand(1);

  CliState ad_state;
  ad_state.config.kind = ScenarioKind::Ad;
  ad_state.config.theta = std::numbers::pi / 4.0;
  ad_state.config.phi = std::numbers::pi / 4.0;
  CLI::App* ad =
      app.add_subcommand("ad", "Amplitude-damping channel (q, tau) sweep");
  add_bloch_options(ad, ad_state);
  ad_state.bind(ad, "gamma", ad_state.config.gamma, "Damping rate (> 0)");
  add_sweep_options(ad, ad_state);
  add_output_options(ad, ad_state, "ad.csv");

  CliState pt_state;
  pt_state.config.kind = ScenarioKind::Pt;
  pt_state.config.theta = std::numbers::pi / 4.0;
  pt_state.config.phi = std::numbers::pi / 4.0;
  CLI::App* pt =
      app.add_subcommand("pt", "Non-Hermitian two-level model (q, tau) sweep");
  add_bloch_options(pt, pt_state);
  pt_state.bind(pt, "omega", pt_state.config.omega, "Coupling strength");
  pt_state.bind(pt, "eta", pt_state.config.eta, "Dissipation strength");
  pt_state.bind_flag(pt, "refined", pt_state.config.refined,
                     "Use the variance-refined speed cap");
  add_sweep_options(pt, pt_state);
  add_output_options(pt, pt_state, "pt.csv");

  CliState xxz_state;
  xxz_state.config.kind = ScenarioKind::Xxz;
  CLI::App* xxz =
      app.add_subcommand("xxz", "XXZ chain reduced-dynamics (q, tau) sweep");
  xxz_state.bind(xxz, "L", xxz_state.config.sites, "Chain length (2..6)");
  xxz_state.bind(xxz, "J", xxz_state.config.coupling, "Exchange coupling");
  xxz_state.bind(xxz, "Delta", xxz_state.config.anisotropy, "Anisotropy");
  xxz_state.bind(xxz, "p", xxz_state.config.mix_p,
                 "Neel mixing weight in [0, 1]");
  add_sweep_options(xxz, xxz_state);
  add_output_options(xxz, xxz_state, "xxz.csv");

  CliState diag_state;
  diag_state.config.kind = ScenarioKind::AdDiagnostics;
  diag_state.config.theta = std::numbers::pi / 4.0;
  diag_state.config.phi = std::numbers::pi / 4.0;
  diag_state.tau_grid_text = "0:10:0.1";
  CLI::App* diag = app.add_subcommand(
      "ad-diagnostics", "Polarization/fidelity traces under damping");
  add_bloch_options(diag, diag_state);
  diag_state.bind(diag, "gamma", diag_state.config.gamma, "Damping rate (> 0)");
  diag_state.bind(diag, "tau-grid", diag_state.tau_grid_text,
                  "t sample points as start:stop:step");
  add_output_options(diag, diag_state, "ad-diagnostics.csv");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the oracle verification suite and print PASS/FAIL");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (verify->parsed()) {
      ScenarioConfig config;
      config.kind = ScenarioKind::Verify;
      return run_scenario(config);
    }
    CliState* state = nullptr;
    bool needs_q_grid = true;
    if (ad->parsed()) {
      state = &ad_state;
    } else if (pt->parsed()) {
      state = &pt_state;
    } else if (xxz->parsed()) {
      state = &xxz_state;
    } else if (diag->parsed()) {
      state = &diag_state;
      needs_q_grid = false;
    }
    if (state == nullptr) {
      std::cerr << "error: missing scenario subcommand\n";
      return 1;
    }
    finalize(*state, needs_q_grid);
    return run_scenario(state->config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace smqsl
