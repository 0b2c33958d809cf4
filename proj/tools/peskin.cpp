// peskin: experiment runner for the immersed elastic filament in Stokes flow.
//
//   peskin simulate|decay|spectrum|fields|convergence [--config cfg.json] [overrides]
//
// Exit codes: 0 success, 1 argument error, 2 degeneracy abort.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "peskin/errors.hpp"
#include "peskin/experiments.hpp"

namespace {

struct Overrides {
  std::string config;
  std::optional<std::size_t> n;
  std::optional<double> dt;
  std::optional<double> t_final;
  std::optional<std::string> init;
  std::optional<int> m;
  std::optional<std::string> out;
  std::optional<int> threads;
  std::optional<std::size_t> snapshot_every;
};

void add_options(CLI::App* sub, Overrides& o) {
  sub->add_option("--config", o.config, "JSON configuration file");
  sub->add_option("--n", o.n, "grid size (even, >= 8)");
  sub->add_option("--dt", o.dt, "time step");
  sub->add_option("--t-final", o.t_final, "end time");
  sub->add_option("--init", o.init, "initial condition: demo, unlabeled, labeled, circle, fourier");
  sub->add_option("--m", o.m, "labeled-curve parameter m");
  sub->add_option("--out", o.out, "output directory");
  sub->add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)");
  sub->add_option("--snapshot-every", o.snapshot_every, "trace stride in steps");
}

nlohmann::json merged_config(const Overrides& o) {
  nlohmann::json cfg = nlohmann::json::object();
  if (!o.config.empty()) {
    std::ifstream is(o.config);
    if (!is) throw peskin::ArgumentError("cannot open config " + o.config);
    try {
      cfg = nlohmann::json::parse(is);
    } catch (const nlohmann::json::exception& e) {
      throw peskin::ArgumentError("config " + o.config + ": " + e.what());
    }
  }
  if (o.n) cfg["n"] = *o.n;
  if (o.dt) cfg["dt"] = *o.dt;
  if (o.t_final) cfg["t_final"] = *o.t_final;
  if (o.out) cfg["out"] = *o.out;
  if (o.threads) cfg["threads"] = *o.threads;
  if (o.snapshot_every) cfg["snapshot_every"] = *o.snapshot_every;
  if (o.init || o.m) {
    nlohmann::json init = cfg.contains("init") ? cfg["init"] : nlohmann::json::object();
    if (init.is_string()) init = {{"name", init.get<std::string>()}};
    if (o.init) init["name"] = *o.init;
    if (o.m) init["m"] = *o.m;
    cfg["init"] = init;
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary-integral simulator for an elastic filament in 2D Stokes flow"};
  app.require_subcommand(1);
  Overrides o;
  const std::pair<const char*, const char*> commands[] = {
      {"simulate", "evolve a curve, write the trace and snapshots"},
      {"decay", "long run with exponential-rate fits of the non-equilibrium part"},
      {"spectrum", "finite-difference linearization at the unit circle"},
      {"fields", "velocity and pressure on a grid around the curve"},
      {"convergence", "temporal order and spatial accuracy study"},
  };
  for (const auto& [name, help] : commands) add_options(app.add_subcommand(name, help), o);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const peskin::ExperimentSpec spec = peskin::spec_from_json(command, merged_config(o));
    const peskin::CommandResult result = peskin::run_command(spec);
    std::cout << result.summary.dump(2) << '\n';
    return result.exit_code;
  } catch (const peskin::ArgumentError& e) {
    std::cerr << "peskin: " << e.what() << '\n';
    return 1;
  } catch (const peskin::DegeneracyError& e) {
    std::cerr << "peskin: degenerate configuration: " << e.what() << '\n';
    return 2;
  }
}
