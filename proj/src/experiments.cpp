#include "peskin/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>

#include "peskin/errors.hpp"
#include "peskin/io.hpp"
#include "peskin/kernels.hpp"
#include "peskin/modes.hpp"

namespace peskin {

using nlohmann::json;

namespace {

const std::set<std::string> kCommands{"simulate", "decay", "spectrum", "fields", "convergence"};

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ArgumentError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw ArgumentError(where + ": unknown key '" + key + "'");
  }
}

template <class T>
void read(const json& j, const char* key, T& dst) {
  if (!j.contains(key)) return;
  try {
    dst = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("config key '") + key + "': " + e.what());
  }
}

template <class T>
void read(const json& j, const char* key, std::optional<T>& dst) {
  if (!j.contains(key)) return;
  T v{};
  read(j, key, v);
  dst = v;
}

void check_window(const std::optional<Window>& w, double t_final, const char* what) {
  if (!w) return;
  const auto [lo, hi] = *w;
  if (!(lo >= 0.0 && hi <= t_final * (1.0 + 1e-12) && lo < hi)) {
    throw ArgumentError(std::string(what) + " must satisfy 0 <= t_min < t_max <= t_final");
  }
}

json fit_json(std::span<const SeriesPoint> series, Window w) {
  json j;
  j["window"] = {w[0], w[1]};
  try {
    const SlopeFit fit = fit_slope(series, w[0], w[1]);
    j["status"] = "ok";
    j["slope"] = fit.slope;
    j["stderr"] = fit.stderr_slope;
    j["intercept"] = fit.intercept;
    j["points"] = fit.points;
  } catch (const WindowError& e) {
    const std::string msg = e.what();
    j["status"] = msg.find("roundoff") != std::string::npos ? "at-roundoff" : "window-error";
    j["message"] = msg;
    j["slope"] = nullptr;
  }
  return j;
}

json summary_header(const ExperimentSpec& spec) {
  json j;
  j["schema_version"] = kSummarySchemaVersion;
  j["command"] = spec.command;
  j["config"] = spec_to_json(spec);
  return j;
}

void write_summary(const ExperimentSpec& spec, const json& summary) {
  std::filesystem::create_directories(spec.out_dir);
  std::ofstream os(spec.out_dir / "summary.json", std::ios::binary);
  if (!os) throw ArgumentError("cannot write " + (spec.out_dir / "summary.json").string());
  os << summary.dump(2) << '\n';
}

json run_metrics(const RunResult& r) {
  json m;
  m["status"] = r.status == RunStatus::completed ? "completed" : "degenerate";
  if (!r.message.empty()) m["message"] = r.message;
  m["t_reached"] = r.t_reached;
  m["steps"] = r.steps_taken;
  m["partial_final_step"] = r.partial_final_step;
  m["max_energy_increase"] = r.max_energy_increase;
  m["energy_monotone"] = r.max_energy_increase <= 1e-3;
  m["max_area_drift"] = r.max_area_drift;
  if (!r.trace.empty()) {
    m["final_star_norm"] = r.trace.back().star_norm;
    m["final_c1h_pi_norm"] = r.trace.back().c1h_pi_norm;
  }
  m["warnings"] = r.warnings;
  return m;
}

std::string time_tag(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", t);
  return buf;
}

}  // namespace

InitialSpec initial_from_json(const json& j) {
  if (j.is_string()) {
    InitialSpec s;
    s.name = j.get<std::string>();
    return s;
  }
  reject_unknown(j, {"name", "m", "A", "B", "C1", "C2", "cos_x", "sin_x", "cos_y", "sin_y", "seed", "modes",
                     "amplitude"},
                 "init");
  InitialSpec s;
  read(j, "name", s.name);
  read(j, "m", s.m);
  read(j, "A", s.A);
  read(j, "B", s.B);
  read(j, "C1", s.C1);
  read(j, "C2", s.C2);
  read(j, "cos_x", s.cos_x);
  read(j, "sin_x", s.sin_x);
  read(j, "cos_y", s.cos_y);
  read(j, "sin_y", s.sin_y);
  read(j, "seed", s.seed);
  read(j, "modes", s.modes);
  read(j, "amplitude", s.amplitude);
  return s;
}

json initial_to_json(const InitialSpec& s) {
  json j;
  j["name"] = s.name;
  if (s.name == "labeled") j["m"] = s.m;
  if (s.name == "circle") {
    j["A"] = s.A;
    j["B"] = s.B;
    j["C1"] = s.C1;
    j["C2"] = s.C2;
  }
  if (s.name == "fourier") {
    if (s.seed) {
      j["seed"] = *s.seed;
      j["modes"] = s.modes;
      j["amplitude"] = s.amplitude;
    } else {
      j["cos_x"] = s.cos_x;
      j["sin_x"] = s.sin_x;
      j["cos_y"] = s.cos_y;
      j["sin_y"] = s.sin_y;
    }
  }
  return j;
}

ExperimentSpec default_spec(const std::string& command) {
  if (!kCommands.contains(command)) throw ArgumentError("unknown command '" + command + "'");
  ExperimentSpec s;
  s.command = command;
  s.run.n = 128;
  s.run.dt = 0.01;
  s.run.snapshot_every = 1;
  s.out_dir = "out/" + command;
  if (command == "simulate") {
    s.run.initial.name = "demo";
    s.run.t_final = 1.5;
    s.run.snapshot_times = {0.0, 0.5, 1.0, 1.5};
  } else if (command == "decay") {
    s.run.initial.name = "unlabeled";
    s.run.t_final = 20.0;
  } else if (command == "spectrum") {
    s.run.initial.name = "circle";
    s.run.t_final = 0.0;
  } else if (command == "fields") {
    s.run.initial.name = "demo";
    s.run.t_final = 0.0;
  } else {
    s.run.initial.name = "demo";
    s.run.t_final = 0.5;
  }
  return s;
}

ExperimentSpec spec_from_json(const std::string& command, const json& config) {
  ExperimentSpec s = default_spec(command);
  if (config.is_null()) return s;
  reject_unknown(config,
                 {"n", "dt", "t_final", "snapshot_every", "threads", "out", "init", "snapshot_times",
                  "degeneracy_threshold", "fit", "fields", "spectrum", "convergence"},
                 "config");
  read(config, "n", s.run.n);
  read(config, "dt", s.run.dt);
  read(config, "t_final", s.run.t_final);
  read(config, "snapshot_every", s.run.snapshot_every);
  read(config, "threads", s.threads);
  read(config, "degeneracy_threshold", s.run.degeneracy_threshold);
  if (config.contains("out")) s.out_dir = config.at("out").get<std::string>();
  if (config.contains("init")) s.run.initial = initial_from_json(config.at("init"));
  if (config.contains("snapshot_times")) {
    read(config, "snapshot_times", s.run.snapshot_times);
  } else {
    std::erase_if(s.run.snapshot_times, [&](double t) { return t > s.run.t_final * (1.0 + 1e-12); });
  }
  if (config.contains("fit")) {
    const json& f = config.at("fit");
    reject_unknown(f, {"pi_window", "dta_window", "dta_t_max"}, "fit");
    read(f, "pi_window", s.pi_window);
    read(f, "dta_window", s.dta_window);
    read(f, "dta_t_max", s.dta_t_max);
  }
  if (config.contains("fields")) {
    const json& f = config.at("fields");
    reject_unknown(f, {"time", "x_min", "x_max", "y_min", "y_max", "nx", "ny"}, "fields");
    read(f, "time", s.field_time);
    read(f, "x_min", s.field_grid.x_min);
    read(f, "x_max", s.field_grid.x_max);
    read(f, "y_min", s.field_grid.y_min);
    read(f, "y_max", s.field_grid.y_max);
    read(f, "nx", s.field_grid.nx);
    read(f, "ny", s.field_grid.ny);
  }
  if (config.contains("spectrum")) {
    const json& f = config.at("spectrum");
    reject_unknown(f, {"k_max", "eps"}, "spectrum");
    read(f, "k_max", s.k_max);
    read(f, "eps", s.spectrum_eps);
  }
  if (config.contains("convergence")) {
    const json& f = config.at("convergence");
    reject_unknown(f, {"dt0", "ns", "n_ref", "step_dt"}, "convergence");
    read(f, "dt0", s.dt0);
    read(f, "ns", s.spatial_ns);
    read(f, "n_ref", s.spatial_n_ref);
    read(f, "step_dt", s.spatial_step_dt);
    for (std::size_t n : s.spatial_ns) {
      if (n < 8 || n % 2 != 0 || s.spatial_n_ref % n != 0 || n >= s.spatial_n_ref) {
        throw ArgumentError("convergence.ns: each n must be even, >= 8 and a proper divisor of n_ref");
      }
    }
    if (!(s.dt0 > 0.0) || !(s.spatial_step_dt > 0.0)) throw ArgumentError("convergence: dt0 and step_dt must be positive");
  }
  if (s.run.n < 8 || s.run.n % 2 != 0) throw ArgumentError("n must be even and >= 8");
  if (!(s.run.dt > 0.0)) throw ArgumentError("dt must be positive");
  if (!(s.run.t_final >= 0.0)) throw ArgumentError("t_final must be >= 0");
  check_window(s.pi_window, s.run.t_final, "fit.pi_window");
  check_window(s.dta_window, s.run.t_final, "fit.dta_window");
  return s;
}

json spec_to_json(const ExperimentSpec& s) {
  json j;
  j["n"] = s.run.n;
  j["dt"] = s.run.dt;
  j["t_final"] = s.run.t_final;
  j["snapshot_every"] = s.run.snapshot_every;
  j["threads"] = s.threads;
  j["out"] = s.out_dir.string();
  j["init"] = initial_to_json(s.run.initial);
  j["degeneracy_threshold"] = s.run.degeneracy_threshold;
  if (s.command == "simulate") j["snapshot_times"] = s.run.snapshot_times;
  if (s.command == "decay") {
    json f;
    if (s.pi_window) f["pi_window"] = *s.pi_window;
    if (s.dta_window) f["dta_window"] = *s.dta_window;
    f["dta_t_max"] = s.dta_t_max;
    j["fit"] = f;
  }
  if (s.command == "fields") {
    json f;
    if (s.field_time) f["time"] = *s.field_time;
    f["x_min"] = s.field_grid.x_min;
    f["x_max"] = s.field_grid.x_max;
    f["y_min"] = s.field_grid.y_min;
    f["y_max"] = s.field_grid.y_max;
    f["nx"] = s.field_grid.nx;
    f["ny"] = s.field_grid.ny;
    j["fields"] = f;
  }
  if (s.command == "spectrum") {
    json f;
    f["k_max"] = s.k_max;
    if (s.spectrum_eps) f["eps"] = *s.spectrum_eps;
    j["spectrum"] = f;
  }
  if (s.command == "convergence") {
    j["convergence"] = {{"dt0", s.dt0}, {"ns", s.spatial_ns}, {"n_ref", s.spatial_n_ref},
                        {"step_dt", s.spatial_step_dt}};
  }
  return j;
}

CommandResult cmd_simulate(const ExperimentSpec& spec) {
  const RunResult r = run(spec.run);
  json summary = summary_header(spec);
  json outputs = json::array();
  io::write_trace_csv(spec.out_dir / "trace.csv", r.trace);
  outputs.push_back("trace.csv");
  json snaps = json::array();
  for (const Snapshot& s : r.snapshots) {
    const std::string name = "snapshot_t" + time_tag(s.t) + ".csv";
    io::write_curve_csv(spec.out_dir / name, s.curve);
    outputs.push_back(name);
    snaps.push_back({{"t", s.t}, {"file", name}});
  }
  json metrics = run_metrics(r);
  metrics["snapshots"] = snaps;
  summary["metrics"] = metrics;
  summary["outputs"] = outputs;
  summary["status"] = r.status == RunStatus::completed ? "ok" : "degenerate";
  write_summary(spec, summary);
  return {summary, r.status == RunStatus::completed ? 0 : 2};
}

CommandResult cmd_decay(const ExperimentSpec& spec) {
  const RunResult r = run(spec.run);
  json summary = summary_header(spec);
  json outputs = json::array({"trace.csv", "decay_pi.csv", "decay_dta.csv"});
  io::write_trace_csv(spec.out_dir / "trace.csv", r.trace);
  json metrics = run_metrics(r);

  const double T = spec.run.t_final;
  const double D = std::min(spec.dta_t_max, T);
  const Window pi_w = spec.pi_window.value_or(Window{0.5 * T, T});
  const Window dta_w = spec.dta_window.value_or(Window{0.4 * D, D});
  DecaySeries series;
  try {
    series = decay_metrics(r.trace);
  } catch (const ArgumentError& e) {
    metrics["decay_error"] = e.what();
  }
  std::erase_if(series.log_dta, [&](const SeriesPoint& p) { return p.t > D * (1.0 + 1e-12); });
  io::write_series_csv(spec.out_dir / "decay_pi.csv", "t,log_pi_c1h", series.log_pi_c1h);
  io::write_series_csv(spec.out_dir / "decay_dta.csv", "t_half,log_dta", series.log_dta);
  metrics["fit_pi"] = fit_json(series.log_pi_c1h, pi_w);
  metrics["fit_dta"] = fit_json(series.log_dta, dta_w);
  metrics["expected_slope_pi"] = -0.25;
  metrics["expected_slope_dta"] = -0.5;
  summary["metrics"] = metrics;
  summary["outputs"] = outputs;
  summary["status"] = r.status == RunStatus::completed ? "ok" : "degenerate";
  if (r.status == RunStatus::completed && metrics["fit_pi"]["status"] == "at-roundoff") summary["status"] = "at-roundoff";
  write_summary(spec, summary);
  return {summary, r.status == RunStatus::completed ? 0 : 2};
}

std::vector<EigenCheck> linearized_spectrum(std::size_t n, std::size_t k_max, std::optional<double> eps) {
  const SpectralPlan plan(n);
  InitialSpec unit;
  unit.name = "circle";
  const Curve base = make_initial(unit, n);
  const double scale = c1h_norm(base.points(), plan);
  const double e = eps.value_or(default_linearization_eps(base, plan));
  const ModeBasis b = basis(n);

  struct Probe {
    std::size_t k;
    std::string label;
    VectorGrid v;
  };
  std::vector<Probe> probes{{0, "e_x", b.e_x}, {0, "e_y", b.e_y}, {0, "e_r", b.e_r}, {0, "e_t", b.e_t}};
  if (k_max >= 1) {
    VectorGrid c2(n), s2(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double th = plan.theta(j);
      c2.set(j, {std::cos(2 * th), std::sin(2 * th)});
      s2.set(j, {-std::sin(2 * th), std::cos(2 * th)});
    }
    probes.push_back({1, "(cos2t, sin2t)", c2});
    probes.push_back({1, "(-sin2t, cos2t)", s2});
  }
  for (std::size_t k = 2; k <= k_max; ++k) {
    VectorGrid cr(n), sr(n), ct(n), st(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double th = plan.theta(j);
      const double c = std::cos(static_cast<double>(k) * th);
      const double s = std::sin(static_cast<double>(k) * th);
      cr.set(j, c * b.e_r[j]);
      sr.set(j, s * b.e_r[j]);
      ct.set(j, c * b.e_t[j]);
      st.set(j, s * b.e_t[j]);
    }
    const std::string ks = std::to_string(k);
    probes.push_back({k, "cos" + ks + "t e_r", cr});
    probes.push_back({k, "sin" + ks + "t e_r", sr});
    probes.push_back({k, "cos" + ks + "t e_t", ct});
    probes.push_back({k, "sin" + ks + "t e_t", st});
  }

  std::vector<EigenCheck> out;
  for (const Probe& p : probes) {
    EigenCheck c;
    c.k = p.k;
    c.label = p.label;
    c.expected = -0.25 * static_cast<double>(p.k);
    const double vv = inner(p.v, p.v);
    const VectorGrid lv = linearize_rhs(base, p.v, e, plan);
    c.rayleigh = inner(lv, p.v) / vv;
    VectorGrid res = lv;
    res.axpy(-c.expected, p.v);
    c.residual = std::sqrt(inner(res, res) / vv);
    const std::array<double, 3> sweep_eps{1e-4, 1e-5, 1e-6};
    for (std::size_t i = 0; i < 3; ++i) {
      c.sweep[i] = inner(linearize_rhs(base, p.v, sweep_eps[i] * scale, plan), p.v) / vv;
    }
    out.push_back(c);
  }
  return out;
}

CommandResult cmd_spectrum(const ExperimentSpec& spec) {
  const std::vector<EigenCheck> checks = linearized_spectrum(spec.run.n, spec.k_max, spec.spectrum_eps);
  std::filesystem::create_directories(spec.out_dir);
  {
    std::ofstream os(spec.out_dir / "spectrum.csv", std::ios::binary);
    os << "k,mode,expected,rayleigh,residual,rayleigh_eps1e-4,rayleigh_eps1e-5,rayleigh_eps1e-6\n";
    for (const EigenCheck& c : checks) {
      os << c.k << ",\"" << c.label << "\"," << io::format_double(c.expected) << ','
         << io::format_double(c.rayleigh) << ',' << io::format_double(c.residual) << ','
         << io::format_double(c.sweep[0]) << ',' << io::format_double(c.sweep[1]) << ','
         << io::format_double(c.sweep[2]) << '\n';
    }
  }
  double max_zero = 0.0;
  double max_k1 = 0.0;
  double max_rel = 0.0;
  double max_res = 0.0;
  json rows = json::array();
  for (const EigenCheck& c : checks) {
    if (c.k == 0) max_zero = std::max(max_zero, std::abs(c.rayleigh));
    if (c.k == 1) max_k1 = std::max(max_k1, std::abs(c.rayleigh - c.expected));
    if (c.k >= 2) max_rel = std::max(max_rel, std::abs(c.rayleigh - c.expected) / std::abs(c.expected));
    max_res = std::max(max_res, c.residual);
    rows.push_back({{"k", c.k}, {"mode", c.label}, {"expected", c.expected}, {"rayleigh", c.rayleigh},
                    {"residual", c.residual}, {"sweep", c.sweep}});
  }
  json summary = summary_header(spec);
  summary["metrics"] = {{"max_abs_lambda0", max_zero},
                        {"max_abs_error_lambda1", max_k1},
                        {"max_rel_error_k_ge_2", max_rel},
                        {"max_residual", max_res},
                        {"modes", rows}};
  summary["outputs"] = json::array({"spectrum.csv"});
  summary["status"] = "ok";
  write_summary(spec, summary);
  return {summary, 0};
}

CommandResult cmd_fields(const ExperimentSpec& spec) {
  RunConfig rc = spec.run;
  rc.t_final = spec.field_time.value_or(spec.run.t_final);
  rc.snapshot_times.clear();
  const RunResult r = run(rc);
  json summary = summary_header(spec);
  json metrics = run_metrics(r);
  if (r.status != RunStatus::completed) {
    summary["metrics"] = metrics;
    summary["status"] = "degenerate";
    summary["outputs"] = json::array();
    write_summary(spec, summary);
    return {summary, 2};
  }
  const Curve& c = r.final_curve;
  const SpectralPlan plan(c.size());
  const std::vector<FieldSample> samples = field_grid(c, plan, spec.field_grid);
  io::write_field_csv(spec.out_dir / "fields.csv", samples);
  io::write_curve_csv(spec.out_dir / "curve.csv", c);

  std::size_t masked = 0;
  double u_max = 0.0;
  double p_min = std::numeric_limits<double>::infinity();
  double p_max = -std::numeric_limits<double>::infinity();
  for (const FieldSample& s : samples) {
    if (s.near_curve) {
      ++masked;
      continue;
    }
    u_max = std::max(u_max, norm(s.u));
    p_min = std::min(p_min, s.p);
    p_max = std::max(p_max, s.p);
  }
  const bool all_masked = masked == samples.size();
  metrics["field_time"] = rc.t_final;
  metrics["samples"] = samples.size();
  metrics["masked"] = masked;
  metrics["all_masked"] = all_masked;
  metrics["mask_radius"] = FieldEvaluator(c, plan).mask_radius();
  metrics["max_speed_unmasked"] = all_masked ? json(nullptr) : json(u_max);
  metrics["p_min"] = all_masked ? json(nullptr) : json(p_min);
  metrics["p_max"] = all_masked ? json(nullptr) : json(p_max);

  // Pressure probe: the mode-coefficient centre against a point far outside.
  const ModeCoeffs a = coeffs(c.points());
  const Vec2 centre{a.a_x, a.a_y};
  double reach = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) reach = std::max(reach, norm(c[k] - centre));
  const FieldEvaluator eval(c, plan);
  const FieldSample inside = eval(centre);
  const FieldSample outside = eval(centre + Vec2{10.0 * reach, 0.0});
  if (!inside.near_curve && !outside.near_curve) {
    metrics["pressure_probe"] = {{"inside", {centre.x, centre.y}},
                                 {"outside", {outside.point.x, outside.point.y}},
                                 {"p_inside", inside.p},
                                 {"p_outside", outside.p},
                                 {"jump", inside.p - outside.p}};
  }
  summary["metrics"] = metrics;
  summary["outputs"] = json::array({"fields.csv", "curve.csv"});
  summary["status"] = all_masked ? "all-masked" : "ok";
  write_summary(spec, summary);
  return {summary, 0};
}

std::vector<SpatialRow> spatial_convergence(const InitialSpec& init, const std::vector<std::size_t>& ns,
                                            std::size_t n_ref, double step_dt) {
  const SpectralPlan ref_plan(n_ref);
  const Curve ref = make_initial(init, n_ref);
  const VectorGrid r_ref = remainder(ref, ref_plan);
  const Curve s_ref = step(ref, step_dt, ref_plan);
  std::vector<SpatialRow> rows;
  for (std::size_t n : ns) {
    if (n_ref % n != 0) throw ArgumentError("spatial convergence: " + std::to_string(n) + " does not divide n_ref");
    const SpectralPlan plan(n);
    const Curve c = make_initial(init, n);
    SpatialRow row;
    row.n = n;
    row.remainder_error = max_distance(remainder(c, plan), restrict_to(r_ref, n));
    row.step_error = max_distance(step(c, step_dt, plan).points(), restrict_to(s_ref.points(), n));
    rows.push_back(row);
  }
  return rows;
}

CommandResult cmd_convergence(const ExperimentSpec& spec) {
  const Curve init = make_initial(spec.run.initial, spec.run.n);
  json summary = summary_header(spec);
  json metrics;

  // Temporal: dt0, dt0/2, dt0/4, dt0/8 at fixed n.
  RunConfig rc = spec.run;
  rc.snapshot_every = std::numeric_limits<std::size_t>::max();
  rc.snapshot_times.clear();
  std::vector<double> dts;
  std::vector<Curve> finals;
  for (int i = 0; i < 4; ++i) {
    rc.dt = spec.dt0 / static_cast<double>(1 << i);
    RunResult r = run(init, rc);
    if (r.status != RunStatus::completed) {
      metrics["temporal_error"] = r.message;
      summary["metrics"] = metrics;
      summary["status"] = "degenerate";
      write_summary(spec, summary);
      return {summary, 2};
    }
    dts.push_back(rc.dt);
    finals.push_back(r.final_curve);
  }
  std::vector<double> diffs;
  for (std::size_t i = 0; i + 1 < finals.size(); ++i) diffs.push_back(max_distance(finals[i].points(), finals[i + 1].points()));
  std::filesystem::create_directories(spec.out_dir);
  json temporal = json::array();
  {
    std::ofstream os(spec.out_dir / "temporal.csv", std::ios::binary);
    os << "dt,diff_to_half_dt,observed_order\n";
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      const double order = i + 1 < diffs.size() ? std::log2(diffs[i] / diffs[i + 1]) : std::nan("");
      os << io::format_double(dts[i]) << ',' << io::format_double(diffs[i]) << ',' << io::format_double(order) << '\n';
      temporal.push_back({{"dt", dts[i]}, {"diff", diffs[i]}, {"order", std::isfinite(order) ? json(order) : json(nullptr)}});
    }
  }
  const double floor = 1e-13 * std::max(1.0, max_norm(finals.back().points()));
  if (diffs[0] <= floor || diffs[1] <= floor) {
    metrics["temporal_order"] = nullptr;
    metrics["temporal_status"] = "at-roundoff";
  } else {
    metrics["temporal_order"] = std::log2(diffs[0] / diffs[1]);
    metrics["temporal_status"] = "ok";
  }
  metrics["temporal"] = temporal;

  const std::vector<SpatialRow> rows =
      spatial_convergence(spec.run.initial, spec.spatial_ns, spec.spatial_n_ref, spec.spatial_step_dt);
  json spatial = json::array();
  {
    std::ofstream os(spec.out_dir / "spatial.csv", std::ios::binary);
    os << "n,remainder_error,step_error\n";
    for (const SpatialRow& r : rows) {
      os << r.n << ',' << io::format_double(r.remainder_error) << ',' << io::format_double(r.step_error) << '\n';
      spatial.push_back({{"n", r.n}, {"remainder_error", r.remainder_error}, {"step_error", r.step_error}});
    }
  }
  metrics["spatial"] = spatial;
  metrics["spatial_n_ref"] = spec.spatial_n_ref;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i].n == 64 && rows[i + 1].n == 128) {
      metrics["remainder_ratio_64_128"] = rows[i].remainder_error / rows[i + 1].remainder_error;
      metrics["step_ratio_64_128"] = rows[i].step_error / rows[i + 1].step_error;
    }
  }
  summary["metrics"] = metrics;
  summary["outputs"] = json::array({"temporal.csv", "spatial.csv"});
  summary["status"] = "ok";
  write_summary(spec, summary);
  return {summary, 0};
}

CommandResult run_command(const ExperimentSpec& spec) {
  kernels::set_num_threads(spec.threads);
  if (spec.command == "simulate") return cmd_simulate(spec);
  if (spec.command == "decay") return cmd_decay(spec);
  if (spec.command == "spectrum") return cmd_spectrum(spec);
  if (spec.command == "fields") return cmd_fields(spec);
  if (spec.command == "convergence") return cmd_convergence(spec);
  throw ArgumentError("unknown command '" + spec.command + "'");
}

}  // namespace peskin
