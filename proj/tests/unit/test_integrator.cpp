#include <doctest.h>

#include <cmath>

#include "peskin/biop.hpp"
#include "peskin/errors.hpp"
#include "peskin/integrator.hpp"
#include "peskin/io.hpp"
#include "peskin/kernels.hpp"
#include "peskin/modes.hpp"
#include "support.hpp"

using namespace peskin;
using doctest::Approx;

namespace {

RunConfig config(const std::string& init, double dt, double t_final, std::size_t n = 128) {
  RunConfig c;
  c.n = n;
  c.dt = dt;
  c.t_final = t_final;
  c.initial.name = init;
  return c;
}

bool same_trace(const std::vector<TraceRecord>& a, const std::vector<TraceRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].t != b[i].t || a[i].energy != b[i].energy || a[i].area != b[i].area ||
        a[i].star_norm != b[i].star_norm || a[i].c1h_pi_norm != b[i].c1h_pi_norm || !(a[i].coeffs == b[i].coeffs) ||
        a[i].max_speed != b[i].max_speed)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("zero step only drops the Nyquist mode") {
  SpectralPlan p(64);
  const Curve c = testing::random_curve(64, 4);
  CHECK(max_distance(step(c, 0.0, p).points(), c.points()) <= 1e-14);
  CHECK_THROWS_AS((void)step(c, -0.01, p), ArgumentError);
}

TEST_CASE("one step on the circle: local error is third order") {
  SpectralPlan p(128);
  const Curve c = testing::circle(128);
  std::vector<double> drift;
  for (double dt : {0.02, 0.01, 0.005}) drift.push_back(max_distance(step(c, dt, p).points(), c.points()));
  CHECK(drift[0] / drift[1] == Approx(8.0).epsilon(0.05));
  CHECK(drift[1] / drift[2] == Approx(8.0).epsilon(0.05));
  CHECK(drift[1] <= 1e-8);
}

TEST_CASE("one step on the demo curve against a fine RK4 solution of the semi-discrete system") {
  SpectralPlan p(128);
  const Curve d = testing::named("demo", 128);
  const Curve gold = io::read_curve_csv(testing::data_path("demo_n128_t001_rk4.csv"));
  const double e1 = max_distance(step(d, 0.01, p).points(), gold.points());
  const double e2 = max_distance(step(step(d, 0.005, p), 0.005, p).points(), gold.points());
  CHECK(e1 <= 1e-6);
  CHECK(e1 / e2 >= 3.5);
}

TEST_CASE("precomputed remainder gives the same step") {
  SpectralPlan p(64);
  const Curve c = testing::named("demo", 64);
  CHECK(step(c, remainder(c, p), 0.01, p).points() == step(c, 0.01, p).points());
}

TEST_CASE("stage errors are tagged") {
  SpectralPlan p(32);
  VectorGrid g = testing::circle(32).points();
  g.set(6, g[2]);
  try {
    (void)step(Curve{g}, 0.01, p);
    FAIL("expected StepError");
  } catch (const StepError& e) {
    CHECK(e.stage() == "stage-1");
    REQUIRE(e.cause_pair().has_value());
    CHECK(e.cause_pair()->first == 2);
    CHECK(e.cause_pair()->second == 6);
  }
}

TEST_CASE("circle stays put") {
  const RunResult r = run(config("circle", 1e-3, 1.0));
  CHECK(r.status == RunStatus::completed);
  CHECK(max_distance(r.final_curve.points(), testing::circle(128).points()) <= 1e-6);
  for (const TraceRecord& t : r.trace) CHECK(t.c1h_pi_norm <= 1e-8);
}

TEST_CASE("demo run: complete, energy decreasing, area conserved") {
  RunConfig cfg = config("demo", 0.01, 1.5);
  cfg.snapshot_times = {0.0, 0.5, 1.0, 1.5};
  const RunResult r = run(cfg);
  CHECK(r.status == RunStatus::completed);
  CHECK(r.steps_taken == 150);
  CHECK(r.trace.size() == 151);
  CHECK(r.snapshots.size() == 4);
  CHECK(r.snapshots[2].t == Approx(1.0));
  CHECK(r.max_energy_increase <= 0.0);
  CHECK(r.max_area_drift <= 1e-3);
  CHECK_FALSE(r.partial_final_step);
  CHECK(r.warnings.empty());
  for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i].energy <= r.trace[i - 1].energy);
  CHECK(r.trace.back().energy < 0.6 * r.trace.front().energy);
}

TEST_CASE("unlabeled curve decays at rate 1/4") {
  RunConfig cfg = config("unlabeled", 0.01, 20.0);
  cfg.snapshot_every = 100;
  const RunResult r = run(cfg);
  REQUIRE(r.trace.size() == 21);
  // Pi_h X = e^{-t/4} times a second-harmonic shape
  const double ratio = r.trace[20].c1h_pi_norm / r.trace[0].c1h_pi_norm;
  CHECK(ratio == Approx(std::exp(-5.0)).epsilon(0.1));
}

TEST_CASE("partial final step") {
  const RunResult r = run(config("demo", 0.01, 0.025, 64));
  CHECK(r.status == RunStatus::completed);
  CHECK(r.steps_taken == 3);
  CHECK(r.partial_final_step);
  CHECK(r.t_reached == 0.025);
  REQUIRE(r.trace.size() == 4);
  CHECK(r.trace.back().t == 0.025);
  CHECK(r.trace.back().partial_step);

  const RunResult whole = run(config("demo", 0.01, 0.03, 64));
  CHECK_FALSE(whole.partial_final_step);
  CHECK(whole.steps_taken == 3);
}

TEST_CASE("degeneracy threshold aborts with the partial trace") {
  RunConfig cfg = config("demo", 0.01, 0.1, 64);
  cfg.degeneracy_threshold = 10.0;
  const RunResult r = run(cfg);
  CHECK(r.status == RunStatus::degenerate);
  CHECK(r.trace.size() == 1);
  CHECK(r.steps_taken == 0);
  CHECK(r.message.find("star norm") != std::string::npos);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS((void)run(config("demo", 0.0, 1.0, 64)), ArgumentError);
  CHECK_THROWS_AS((void)run(config("demo", 0.01, -1.0, 64)), ArgumentError);
  CHECK_THROWS_AS((void)run(config("demo", 0.01, 1.0, 63)), ArgumentError);
  RunConfig off = config("demo", 0.01, 0.1, 64);
  off.snapshot_times = {0.055};
  CHECK_THROWS_AS((void)run(off), ArgumentError);
  RunConfig zero = config("demo", 0.01, 0.1, 64);
  zero.snapshot_every = 0;
  CHECK_THROWS_AS((void)run(zero), ArgumentError);
}

TEST_CASE("clockwise initial data warns") {
  VectorGrid g = testing::circle(32).points();
  for (auto& y : g.y()) y = -y;
  RunConfig cfg = config("circle", 0.01, 0.02, 32);
  const RunResult r = run(Curve{g}, cfg);
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("second order in time") {
  const OrderEstimate d = order_estimate(testing::named("demo", 128), 0.5, 0.02);
  REQUIRE(d.order.has_value());
  CHECK(*d.order == Approx(2.0).epsilon(0.05));

  const OrderEstimate u = order_estimate(testing::named("unlabeled", 128), 0.5, 0.02);
  REQUIRE(u.order.has_value());
  CHECK(*u.order == Approx(2.0).epsilon(0.075));

  // the circle is not at roundoff: its O(dt^3) local drift is resolved
  const OrderEstimate c = order_estimate(testing::circle(128), 0.5, 0.02);
  CHECK_FALSE(c.at_roundoff);
  REQUIRE(c.order.has_value());
  CHECK(*c.order == Approx(2.0).epsilon(0.05));

  // a run that barely moves lands at roundoff
  const OrderEstimate tiny = order_estimate(testing::circle(64), 1e-6, 1e-6);
  CHECK(tiny.at_roundoff);
  CHECK_FALSE(tiny.order.has_value());
}

TEST_CASE("runs are bitwise reproducible across repeats and thread counts") {
  RunConfig cfg = config("labeled", 0.01, 0.2, 64);
  cfg.initial.m = 4;
  const RunResult a = run(cfg);
  const RunResult b = run(cfg);
  CHECK(same_trace(a.trace, b.trace));
  CHECK(a.final_curve.points() == b.final_curve.points());

  const int saved = kernels::max_threads();
  kernels::set_num_threads(1);
  const RunResult one = run(cfg);
  kernels::set_num_threads(std::max(2, saved));
  const RunResult many = run(cfg);
  kernels::set_num_threads(saved);
  CHECK(same_trace(one.trace, many.trace));
  CHECK(one.final_curve.points() == many.final_curve.points());
}

TEST_CASE("diagnose fills a record") {
  SpectralPlan p(64);
  const Curve c = testing::circle(64, 2.0);
  const TraceRecord r = diagnose(c, rhs(c, p), 0.5, p);
  CHECK(r.t == 0.5);
  CHECK(r.area == Approx(4.0 * std::numbers::pi).epsilon(1e-12));
  CHECK(r.coeffs.a_r == Approx(2.0).epsilon(1e-13));
  CHECK(r.max_speed <= 1e-10);
  CHECK(r.c1h_pi_norm <= 1e-12);
}
