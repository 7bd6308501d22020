#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhgr {

/// Base class for computation errors (CLI exit status 3, HTTP 422).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact contradiction in the WDVV system. Always an implementation bug.
class InconsistentSystem : public ComputationError {
 public:
  InconsistentSystem(std::string what, std::size_t count)
      : ComputationError(std::move(what)), count_(count) {}
  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

/// Some unknowns are not pinned down by the equations.
class Underdetermined : public ComputationError {
 public:
  explicit Underdetermined(std::vector<std::string> free_keys)
      : ComputationError(describe(free_keys)), free_keys_(std::move(free_keys)) {}
  const std::vector<std::string>& free_keys() const { return free_keys_; }

 private:
  static std::string describe(const std::vector<std::string>& keys) {
    std::string s = "underdetermined system; free unknowns:";
    for (const auto& k : keys) s += " " + k;
    return s;
  }
  std::vector<std::string> free_keys_;
};

class TruncationExceedsPotential : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// Iterative eigenvalue solver gave up. Carries whatever it had.
class ConvergenceFailure : public ComputationError {
 public:
  ConvergenceFailure(std::string what, double residual) : ComputationError(std::move(what)), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace qhgr
