#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "peskin/curve.hpp"
#include "peskin/initial.hpp"
#include "peskin/spectral.hpp"

namespace peskin {

struct RunConfig {
  std::size_t n = 128;
  double dt = 0.01;
  double t_final = 1.0;
  std::size_t snapshot_every = 1;
  InitialSpec initial;
  /// Times at which full curve states are kept; each must land on a step.
  std::vector<double> snapshot_times;
  /// Star-norm floor checked at record times.
  double degeneracy_threshold = 1e-8;
};

enum class RunStatus { completed, degenerate };

struct Snapshot {
  double t;
  Curve curve;
};

struct RunResult {
  std::vector<TraceRecord> trace;
  Curve final_curve{VectorGrid{}};
  double t_reached = 0.0;
  std::size_t steps_taken = 0;
  RunStatus status = RunStatus::completed;
  std::string message;
  bool partial_final_step = false;
  std::vector<Snapshot> snapshots;
  /// max over steps of (E^{n+1} - E^n) / (dt E^0); nonpositive when energy never rises.
  double max_energy_increase = 0.0;
  /// max over steps of |A^n - A^0| / |A^0|.
  double max_area_drift = 0.0;
  std::vector<std::string> warnings;
};

/// One step of the two-stage exponential scheme
///   X^{n+1/2} = S(dt/2) (X^n + R(X^n) dt/2)
///   X^{n+1}   = S(dt) X^n + S(dt/2) R(X^{n+1/2}) dt
/// Throws StepError tagged "stage-1" or "stage-2".
Curve step(const Curve& c, double dt, const SpectralPlan& plan);

/// Same step with R(X^n) already evaluated.
Curve step(const Curve& c, const VectorGrid& remainder_n, double dt, const SpectralPlan& plan);

/// Samples cfg.initial and integrates to cfg.t_final.
RunResult run(const RunConfig& cfg);
/// Integrates from `initial`, ignoring cfg.initial and cfg.n.
RunResult run(const Curve& initial, const RunConfig& cfg);

struct OrderEstimate {
  std::optional<double> order;  // empty when at_roundoff
  bool at_roundoff = false;
  double diff_coarse = 0.0;  // ||X_dt0 - X_dt0/2||_inf
  double diff_fine = 0.0;    // ||X_dt0/2 - X_dt0/4||_inf
};

/// Observed temporal order log2(diff_coarse / diff_fine) at t_final.
OrderEstimate order_estimate(const Curve& initial, double t_final, double dt0);

TraceRecord diagnose(const Curve& c, const VectorGrid& rhs_value, double t, const SpectralPlan& plan);

}  // namespace peskin
