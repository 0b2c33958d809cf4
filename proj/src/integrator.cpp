#include "peskin/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "peskin/biop.hpp"
#include "peskin/errors.hpp"
#include "peskin/modes.hpp"

namespace peskin {

namespace {

VectorGrid stage_remainder(const Curve& c, const SpectralPlan& plan, const char* stage) {
  try {
    return remainder(c, plan);
  } catch (const StepError&) {
    throw;
  } catch (const DegeneracyError& e) {
    throw StepError(stage, e);
  }
}

Curve stage_curve(VectorGrid v, const char* stage) {
  try {
    return Curve(std::move(v));
  } catch (const DegeneracyError& e) {
    throw StepError(stage, e);
  }
}

struct Schedule {
  std::size_t full_steps = 0;
  double partial_dt = 0.0;  // 0 when t_final is a whole number of steps

  [[nodiscard]] std::size_t total() const { return full_steps + (partial_dt > 0.0 ? 1 : 0); }
};

Schedule make_schedule(double t_final, double dt) {
  const double q = t_final / dt;
  const double nearest = std::round(q);
  Schedule s;
  if (std::abs(q - nearest) <= 1e-9 * std::max(1.0, nearest)) {
    s.full_steps = static_cast<std::size_t>(nearest);
  } else {
    s.full_steps = static_cast<std::size_t>(std::floor(q));
    s.partial_dt = t_final - static_cast<double>(s.full_steps) * dt;
  }
  return s;
}

void validate(const RunConfig& cfg) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw ArgumentError("run: dt must be positive");
  if (!(cfg.t_final >= 0.0) || !std::isfinite(cfg.t_final)) throw ArgumentError("run: t_final must be >= 0");
  if (cfg.snapshot_every < 1) throw ArgumentError("run: snapshot_every must be >= 1");
}

}  // namespace

Curve step(const Curve& c, const VectorGrid& remainder_n, double dt, const SpectralPlan& plan) {
  if (!(dt >= 0.0)) throw ArgumentError("step: dt must be nonnegative");
  require_size(c.size(), plan.n(), "step");
  VectorGrid half = c.points();
  half.axpy(0.5 * dt, remainder_n);
  const Curve mid = stage_curve(plan.semigroup(0.5 * dt, half), "stage-1");
  const VectorGrid r_mid = stage_remainder(mid, plan, "stage-2");
  VectorGrid next = plan.semigroup(dt, c.points());
  next.axpy(dt, plan.semigroup(0.5 * dt, r_mid));
  return stage_curve(std::move(next), "stage-2");
}

Curve step(const Curve& c, double dt, const SpectralPlan& plan) {
  return step(c, stage_remainder(c, plan, "stage-1"), dt, plan);
}

TraceRecord diagnose(const Curve& c, const VectorGrid& rhs_value, double t, const SpectralPlan& plan) {
  TraceRecord r;
  r.t = t;
  r.energy = energy(c, plan);
  r.area = area(c, plan);
  r.star_norm = star_norm(c);
  r.c1h_pi_norm = c1h_norm(project_Pi(c.points()), plan);
  r.coeffs = coeffs(c.points());
  r.deformation_ratio_0 = r.star_norm > 0.0 ? max_norm(plan.derivative(c.points())) / r.star_norm
                                            : std::numeric_limits<double>::infinity();
  r.max_speed = max_norm(rhs_value);
  return r;
}

RunResult run(const RunConfig& cfg) {
  validate(cfg);
  return run(make_initial(cfg.initial, cfg.n), cfg);
}

RunResult run(const Curve& initial, const RunConfig& cfg) {
  validate(cfg);
  const SpectralPlan plan(initial.size());
  const Schedule schedule = make_schedule(cfg.t_final, cfg.dt);
  const std::size_t total = schedule.total();

  std::vector<std::size_t> snapshot_steps;
  for (double ts : cfg.snapshot_times) {
    if (ts < 0.0 || ts > cfg.t_final * (1.0 + 1e-12)) {
      throw ArgumentError("run: snapshot time " + std::to_string(ts) + " outside [0, t_final]");
    }
    if (schedule.partial_dt > 0.0 && std::abs(ts - cfg.t_final) <= 1e-12 * std::max(1.0, cfg.t_final)) {
      snapshot_steps.push_back(total);
      continue;
    }
    const double q = ts / cfg.dt;
    const double idx = std::round(q);
    if (std::abs(q - idx) > 1e-9 * std::max(1.0, idx)) {
      throw ArgumentError("run: snapshot time " + std::to_string(ts) + " is not on a step");
    }
    snapshot_steps.push_back(static_cast<std::size_t>(idx));
  }

  auto time_of = [&](std::size_t s) {
    if (s <= schedule.full_steps) return static_cast<double>(s) * cfg.dt;
    return cfg.t_final;
  };

  RunResult out;
  Curve x = initial;
  const double e0 = energy(x, plan);
  const double a0 = area(x, plan);
  if (a0 < 0.0) out.warnings.push_back("initial curve is clockwise (negative area)");
  double e_prev = e0;
  double max_increase = -std::numeric_limits<double>::infinity();

  auto keep_snapshot = [&](std::size_t s) {
    if (std::find(snapshot_steps.begin(), snapshot_steps.end(), s) != snapshot_steps.end()) {
      out.snapshots.push_back({time_of(s), x});
    }
  };

  auto fail = [&](std::size_t s, const std::string& msg) {
    out.status = RunStatus::degenerate;
    out.message = msg;
    out.t_reached = time_of(s);
    out.steps_taken = s;
    out.final_curve = x;
  };

  for (std::size_t s = 0;; ++s) {
    const bool last = s == total;
    VectorGrid r_n;
    try {
      r_n = stage_remainder(x, plan, "stage-1");
    } catch (const DegeneracyError& e) {
      fail(s, e.what());
      return out;
    }
    if (last || s % cfg.snapshot_every == 0) {
      TraceRecord rec = diagnose(x, plan.lambda(x.points()) + r_n, time_of(s), plan);
      rec.partial_step = last && schedule.partial_dt > 0.0;
      out.trace.push_back(rec);
      if (!(rec.star_norm > cfg.degeneracy_threshold)) {
        fail(s, "star norm " + std::to_string(rec.star_norm) + " below threshold at t = " +
                    std::to_string(rec.t));
        keep_snapshot(s);
        return out;
      }
    }
    keep_snapshot(s);
    if (last) break;

    const double h = s < schedule.full_steps ? cfg.dt : schedule.partial_dt;
    try {
      x = step(x, r_n, h, plan);
    } catch (const DegeneracyError& e) {
      fail(s, e.what());
      return out;
    }
    const double e_next = energy(x, plan);
    max_increase = std::max(max_increase, (e_next - e_prev) / (h * e0));
    out.max_energy_increase = max_increase;
    e_prev = e_next;
    out.max_area_drift = std::max(out.max_area_drift, std::abs(area(x, plan) - a0) / std::abs(a0));
  }

  out.status = RunStatus::completed;
  out.t_reached = cfg.t_final;
  out.steps_taken = total;
  out.partial_final_step = schedule.partial_dt > 0.0;
  out.final_curve = x;
  return out;
}

OrderEstimate order_estimate(const Curve& initial, double t_final, double dt0) {
  if (!(dt0 > 0.0) || !(t_final > 0.0)) throw ArgumentError("order_estimate: need t_final > 0 and dt0 > 0");
  RunConfig cfg;
  cfg.t_final = t_final;
  cfg.snapshot_every = std::numeric_limits<std::size_t>::max();
  std::vector<Curve> finals;
  for (double dt : {dt0, dt0 / 2.0, dt0 / 4.0}) {
    cfg.dt = dt;
    RunResult r = run(initial, cfg);
    if (r.status != RunStatus::completed) {
      throw DegeneracyError("order_estimate: run at dt = " + std::to_string(dt) + " failed: " + r.message);
    }
    finals.push_back(r.final_curve);
  }
  OrderEstimate est;
  est.diff_coarse = max_distance(finals[0].points(), finals[1].points());
  est.diff_fine = max_distance(finals[1].points(), finals[2].points());
  const double floor = 1e-13 * std::max(1.0, max_norm(finals[2].points()));
  if (est.diff_fine <= floor || est.diff_coarse <= floor) {
    est.at_roundoff = true;
  } else {
    est.order = std::log2(est.diff_coarse / est.diff_fine);
  }
  return est;
}

}  // namespace peskin
