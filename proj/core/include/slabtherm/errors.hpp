#pragma once

#include <stdexcept>
#include <string>

namespace slabtherm {

/// Malformed or inconsistent run configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// An adaptive integration did not reach its tolerance (CLI exit code 3).
/// Carries the partial estimate so callers can report diagnostics.
class QuadratureFailure : public std::runtime_error {
  public:
    QuadratureFailure(const std::string& what, double partial_value, double error_estimate,
                      long evaluations)
        : std::runtime_error(what),
          partial_value(partial_value),
          error_estimate(error_estimate),
          evaluations(evaluations) {}

    double partial_value;
    double error_estimate;
    long evaluations;
};

}  // namespace slabtherm
