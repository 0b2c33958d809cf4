#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace peskin {

/// Bad sizes, out-of-range parameters, malformed configuration.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The curve (or a point handed to a kernel) is geometrically degenerate:
/// coincident nodes, a vanishing tangent, or non-finite coordinates.
class DegeneracyError : public std::runtime_error {
 public:
  explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
  DegeneracyError(const std::string& what, std::size_t k, std::size_t l)
      : std::runtime_error(what + " (nodes " + std::to_string(k) + ", " + std::to_string(l) + ")"),
        pair_(std::make_pair(k, l)) {}

  /// Offending node pair when the failure is pairwise (k == l for a tangent).
  [[nodiscard]] const std::optional<std::pair<std::size_t, std::size_t>>& pair() const noexcept {
    return pair_;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> pair_;
};

/// Degeneracy raised inside one stage of the two-stage time step.
class StepError : public DegeneracyError {
 public:
  StepError(std::string stage, const DegeneracyError& cause)
      : DegeneracyError(stage + ": " + cause.what()), stage_(std::move(stage)), cause_pair_(cause.pair()) {}

  [[nodiscard]] const std::string& stage() const noexcept { return stage_; }
  [[nodiscard]] const std::optional<std::pair<std::size_t, std::size_t>>& cause_pair() const noexcept {
    return cause_pair_;
  }

 private:
  std::string stage_;
  std::optional<std::pair<std::size_t, std::size_t>> cause_pair_;
};

/// A slope-fit window that cannot support a fit.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace peskin
