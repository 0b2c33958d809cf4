#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "peskin/biop.hpp"
#include "peskin/integrator.hpp"

namespace peskin {

inline constexpr int kSummarySchemaVersion = 1;

using Window = std::array<double, 2>;

/// Everything one CLI invocation needs. Defaults depend on the command; see default_spec().
struct ExperimentSpec {
  std::string command;  // simulate | decay | spectrum | fields | convergence
  RunConfig run;
  std::filesystem::path out_dir = "out";
  int threads = 0;  // 0 leaves the OpenMP default

  // decay
  std::optional<Window> pi_window;   // default [T/2, T]
  std::optional<Window> dta_window;  // default [0.4 D, D]
  double dta_t_max = 10.0;           // D = min(dta_t_max, T)

  // fields
  std::optional<double> field_time;  // default t_final
  FieldGridSpec field_grid;

  // spectrum
  std::size_t k_max = 8;
  std::optional<double> spectrum_eps;  // default 1e-5 ||X||_{C^1_h}

  // convergence
  double dt0 = 0.02;
  std::vector<std::size_t> spatial_ns{32, 64, 128, 256};
  std::size_t spatial_n_ref = 512;
  double spatial_step_dt = 0.01;
};

ExperimentSpec default_spec(const std::string& command);
/// Command defaults overlaid with the keys present in `config`. Unknown keys are rejected.
ExperimentSpec spec_from_json(const std::string& command, const nlohmann::json& config);
nlohmann::json spec_to_json(const ExperimentSpec& spec);
InitialSpec initial_from_json(const nlohmann::json& j);
nlohmann::json initial_to_json(const InitialSpec& s);

struct CommandResult {
  nlohmann::json summary;
  int exit_code = 0;  // 0 ok, 2 degeneracy abort
};

CommandResult cmd_simulate(const ExperimentSpec& spec);
CommandResult cmd_decay(const ExperimentSpec& spec);
CommandResult cmd_spectrum(const ExperimentSpec& spec);
CommandResult cmd_fields(const ExperimentSpec& spec);
CommandResult cmd_convergence(const ExperimentSpec& spec);
CommandResult run_command(const ExperimentSpec& spec);

/// One eigenvector probe of the linearization at the unit circle.
struct EigenCheck {
  std::size_t k = 0;
  std::string label;
  double expected = 0.0;
  double rayleigh = 0.0;
  double residual = 0.0;            // ||L v - lambda v||_h / ||v||_h
  std::array<double, 3> sweep{};    // Rayleigh quotients at eps = 1e-4, 1e-5, 1e-6 times ||X||_{C^1_h}
};

/// Eigenvectors for k = 0 .. k_max: the four circle modes, the k = 1 pair, and
/// cos/sin(k theta) e_r, e_t for k >= 2.
std::vector<EigenCheck> linearized_spectrum(std::size_t n, std::size_t k_max, std::optional<double> eps = {});

struct SpatialRow {
  std::size_t n = 0;
  double remainder_error = 0.0;
  double step_error = 0.0;
};

/// Remainder and one-step errors against an n_ref solution restricted to each grid.
std::vector<SpatialRow> spatial_convergence(const InitialSpec& init, const std::vector<std::size_t>& ns,
                                            std::size_t n_ref, double step_dt);

}  // namespace peskin
