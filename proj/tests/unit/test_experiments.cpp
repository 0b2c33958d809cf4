#include <doctest.h>

#include <fstream>
#include <sstream>

#include "peskin/errors.hpp"
#include "peskin/experiments.hpp"
#include "support.hpp"

using namespace peskin;
using nlohmann::json;
using doctest::Approx;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

ExperimentSpec spec(const std::string& command, json cfg, const std::string& dir) {
  cfg["out"] = testing::scratch_dir(dir).string();
  return spec_from_json(command, cfg);
}

void check_summary_shape(const json& s, const std::string& command) {
  CHECK(s.at("schema_version") == kSummarySchemaVersion);
  CHECK(s.at("command") == command);
  CHECK(s.at("config").is_object());
  CHECK(s.at("metrics").is_object());
  CHECK(s.at("outputs").is_array());
  CHECK(s.at("status").is_string());
}

}  // namespace

TEST_CASE("per-command defaults") {
  const ExperimentSpec sim = default_spec("simulate");
  CHECK(sim.run.n == 128);
  CHECK(sim.run.dt == 0.01);
  CHECK(sim.run.t_final == 1.5);
  CHECK(sim.run.initial.name == "demo");
  CHECK(sim.run.snapshot_times == std::vector<double>{0.0, 0.5, 1.0, 1.5});
  const ExperimentSpec dec = default_spec("decay");
  CHECK(dec.run.initial.name == "unlabeled");
  CHECK(dec.run.t_final == 20.0);
  CHECK(default_spec("spectrum").run.initial.name == "circle");
  CHECK(default_spec("convergence").run.t_final == 0.5);
  CHECK(default_spec("fields").out_dir == std::filesystem::path("out/fields"));
  CHECK_THROWS_AS((void)default_spec("plot"), ArgumentError);
}

TEST_CASE("config parsing") {
  const ExperimentSpec s = spec_from_json(
      "decay", json{{"n", 64}, {"dt", 0.02}, {"t_final", 4.0}, {"init", {{"name", "labeled"}, {"m", 5}}},
                    {"fit", {{"pi_window", {1.0, 4.0}}}}, {"threads", 1}});
  CHECK(s.run.n == 64);
  CHECK(s.run.dt == 0.02);
  CHECK(s.run.initial.name == "labeled");
  CHECK(s.run.initial.m == 5);
  REQUIRE(s.pi_window.has_value());
  CHECK((*s.pi_window)[0] == 1.0);
  CHECK(s.threads == 1);

  CHECK(spec_from_json("simulate", json{{"init", "unlabeled"}}).run.initial.name == "unlabeled");
  // default snapshot times past t_final are dropped
  CHECK(spec_from_json("simulate", json{{"t_final", 0.7}}).run.snapshot_times == std::vector<double>{0.0, 0.5});

  CHECK_THROWS_AS((void)spec_from_json("decay", json{{"bogus", 1}}), ArgumentError);
  CHECK_THROWS_AS((void)spec_from_json("decay", json{{"fit", {{"pi_windw", {1, 2}}}}}), ArgumentError);
  CHECK_THROWS_AS((void)spec_from_json("decay", json{{"n", "many"}}), ArgumentError);
  CHECK_THROWS_AS((void)spec_from_json("decay", json{{"t_final", 4.0}, {"fit", {{"pi_window", {3.0, 5.0}}}}}),
                  ArgumentError);
  CHECK_THROWS_AS((void)spec_from_json("decay", json{{"fit", {{"dta_window", {5.0, 1.0}}}}}), ArgumentError);
  CHECK_THROWS_AS((void)spec_from_json("simulate", json{{"init", {{"name", "circle"}, {"radius", 2}}}}),
                  ArgumentError);
}

TEST_CASE("config survives a JSON round trip") {
  InitialSpec f;
  f.name = "fourier";
  f.seed = 7;
  f.modes = 4;
  const InitialSpec back = initial_from_json(initial_to_json(f));
  CHECK(back.name == "fourier");
  CHECK(back.seed == std::optional<std::uint64_t>(7));
  CHECK(back.modes == 4);

  const ExperimentSpec s = default_spec("decay");
  const ExperimentSpec t = spec_from_json("decay", spec_to_json(s));
  CHECK(spec_to_json(t) == spec_to_json(s));
}

TEST_CASE("spectrum command") {
  const ExperimentSpec s = spec("spectrum", json{{"n", 64}, {"spectrum", {{"k_max", 4}}}}, "spectrum");
  const CommandResult r = run_command(s);
  CHECK(r.exit_code == 0);
  check_summary_shape(r.summary, "spectrum");
  const json& m = r.summary["metrics"];
  CHECK(m["max_abs_lambda0"].get<double>() <= 1e-6);
  CHECK(m["max_abs_error_lambda1"].get<double>() <= 1e-3);
  CHECK(m["max_rel_error_k_ge_2"].get<double>() <= 1e-3);
  CHECK(m["modes"].size() == 4 + 2 + 4 * 3);
  CHECK(std::filesystem::exists(s.out_dir / "spectrum.csv"));
  const json on_disk = json::parse(slurp(s.out_dir / "summary.json"));
  CHECK(on_disk == r.summary);
}

TEST_CASE("linearized spectrum rows") {
  const auto rows = linearized_spectrum(64, 3);
  for (const EigenCheck& c : rows) {
    INFO(c.label);
    if (c.k == 0) CHECK(std::abs(c.rayleigh) <= 1e-6);
    if (c.k >= 1) CHECK(c.rayleigh == Approx(-static_cast<double>(c.k) / 4.0).epsilon(1e-3));
    CHECK(c.residual <= 1e-5);
    for (double v : c.sweep) CHECK(v == Approx(c.rayleigh).epsilon(1e-3).scale(1.0));
  }
}

TEST_CASE("decay on a circle sits at roundoff") {
  const ExperimentSpec s = spec("decay", json{{"n", 32}, {"t_final", 2.0}, {"init", "circle"}}, "decay_circle");
  const CommandResult r = run_command(s);
  CHECK(r.exit_code == 0);
  check_summary_shape(r.summary, "decay");
  CHECK(r.summary["status"] == "at-roundoff");
  CHECK(r.summary["metrics"]["fit_pi"]["slope"].is_null());
}

TEST_CASE("decay on the unlabeled curve, short run") {
  const ExperimentSpec s =
      spec("decay", json{{"n", 64}, {"t_final", 4.0}, {"snapshot_every", 10}, {"init", "unlabeled"}}, "decay_short");
  const CommandResult r = run_command(s);
  CHECK(r.summary["status"] == "ok");
  CHECK(r.summary["metrics"]["fit_pi"]["slope"].get<double>() == Approx(-0.25).epsilon(0.04));
  CHECK(r.summary["metrics"]["energy_monotone"] == true);
  for (const char* f : {"trace.csv", "decay_pi.csv", "decay_dta.csv"}) CHECK(std::filesystem::exists(s.out_dir / f));
}

TEST_CASE("fields on the equilibrium circle") {
  const ExperimentSpec s =
      spec("fields", json{{"n", 64}, {"init", "circle"}, {"fields", {{"nx", 21}, {"ny", 21}}}}, "fields");
  const CommandResult r = run_command(s);
  CHECK(r.exit_code == 0);
  const json& m = r.summary["metrics"];
  CHECK(m["max_speed_unmasked"].get<double>() <= 1e-8);
  CHECK(m["pressure_probe"]["jump"].get<double>() == Approx(1.0).epsilon(1e-6));
  CHECK(m["masked"].get<std::size_t>() > 0);
  const std::string csv = slurp(s.out_dir / "fields.csv");
  CHECK(csv.rfind("x,y,u1,u2,p,masked\n", 0) == 0);
}

TEST_CASE("simulate writes snapshots and is byte-reproducible") {
  const json cfg{{"n", 64}, {"t_final", 0.2}, {"snapshot_times", {0.0, 0.1, 0.2}}};
  const ExperimentSpec a = spec("simulate", cfg, "sim_a");
  const ExperimentSpec b = spec("simulate", cfg, "sim_b");
  const CommandResult ra = run_command(a);
  const CommandResult rb = run_command(b);
  CHECK(ra.exit_code == 0);
  CHECK(ra.summary["outputs"].size() == 4);
  CHECK(std::filesystem::exists(a.out_dir / "snapshot_t0.100.csv"));
  CHECK(slurp(a.out_dir / "trace.csv") == slurp(b.out_dir / "trace.csv"));
  CHECK(slurp(a.out_dir / "snapshot_t0.200.csv") == slurp(b.out_dir / "snapshot_t0.200.csv"));
}

TEST_CASE("degenerate run exits with code 2") {
  const ExperimentSpec s = spec("simulate", json{{"n", 32}, {"t_final", 0.1}, {"degeneracy_threshold", 10.0}}, "degen");
  const CommandResult r = run_command(s);
  CHECK(r.exit_code == 2);
  CHECK(r.summary["status"] == "degenerate");
}

TEST_CASE("convergence command, small") {
  const ExperimentSpec s = spec("convergence",
                                json{{"n", 64}, {"t_final", 0.2},
                                     {"convergence", {{"dt0", 0.02}, {"ns", {32, 64}}, {"n_ref", 128}}}},
                                "conv");
  const CommandResult r = run_command(s);
  CHECK(r.exit_code == 0);
  const json& m = r.summary["metrics"];
  CHECK(m["temporal_order"].get<double>() == Approx(2.0).epsilon(0.1));
  CHECK(m["spatial"].size() == 2);
  CHECK(std::filesystem::exists(s.out_dir / "temporal.csv"));
  CHECK(std::filesystem::exists(s.out_dir / "spatial.csv"));
  CHECK_THROWS_AS((void)spec_from_json("convergence", json{{"convergence", {{"ns", {64, 32}}, {"n_ref", 48}}}}),
                  ArgumentError);
}
