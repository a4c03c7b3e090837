#pragma once

#include <functional>

namespace slabtherm {

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-30;
    int max_subdivisions = 2000;
    /// Optional 1/length hint extending the evanescent truncation point when
    /// the integrand has structure beyond the exponential decay scale.
    double decay_scale = 0.0;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

enum class SingularEndpoint { none, left, right };

/// integral_0^inf f(u) exp(-2 z u) du.
///
/// The exponential weight is applied by the integrator. The interval is
/// truncated at U = max(30 / (2 z), 10 * decay_scale), where exp(-30) is below
/// double-precision acceptance thresholds, and an analytic bound on the
/// discarded tail is folded into error_estimate. f is never evaluated at
/// u = 0 (Gauss-Kronrod abscissae are interior), so integrable 0/0 limits at
/// the origin are safe as long as f returns the limit value there.
///
/// Deterministic: identical inputs give bit-identical results. Panels are
/// accumulated in interval order with compensated summation.
QuadratureResult integrate_evanescent(const std::function<double(double)>& f, double z,
                                      const QuadratureSpec& spec);

/// integral_a^b f(x) dx by globally adaptive Gauss-Kronrod subdivision.
///
/// An integrable inverse-square-root singularity at one endpoint is handled by
/// the substitution x = a + t^2 (resp. x = b - t^2), which regularizes the
/// integrand before subdivision starts.
QuadratureResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureSpec& spec,
                                  SingularEndpoint singular = SingularEndpoint::none);

}  // namespace slabtherm
