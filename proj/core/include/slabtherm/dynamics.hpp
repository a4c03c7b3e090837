#pragma once

#include "slabtherm/nonequilibrium.hpp"

namespace slabtherm {

/// Density matrix of the two-level emitter: populations rho11 (ground),
/// rho22 (excited) and the coherence rho12 = <1|rho|2>.
struct TwoLevelState {
    double rho11 = 1.0;
    double rho22 = 0.0;
    Complex rho12 = 0.0;

    /// Trace within 1e-12 of 1, populations in [0,1], |rho12|^2 <= rho11 rho22.
    bool physical(double trace_tol = 1e-12) const;
};

/// Closed-form evolution of the rate equations
///
///   d rho22/dt = -gamma_down rho22 + gamma_up rho11
///
/// for duration t: the populations relax exponentially toward the steady state
/// at rate gamma_down + gamma_up, the coherence decays at half that rate while
/// rotating freely at omega0. No ODE stepping is involved, so the trace is
/// preserved exactly. The level-shift contribution to the rotation is set to
/// zero here; a nonzero shift would only add a phase to rho12.
TwoLevelState evolve(const TwoLevelState& initial, const RateBundle& rates, double t_seconds);

/// Fixed point of the rate equations: rho22 = N_eff / (1 + 2 N_eff), zero
/// coherence. The population ratio equals the Boltzmann factor at t_eff.
/// Throws std::invalid_argument when gamma_down + gamma_up is not positive.
TwoLevelState steady_state(const RateBundle& rates);

}  // namespace slabtherm
