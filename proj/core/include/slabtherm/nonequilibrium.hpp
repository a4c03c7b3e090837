#pragma once

#include "slabtherm/layered.hpp"

namespace slabtherm {

/// Absorption-weighted correlation integral g(z, z, omega) at the emitter.
struct GResult {
    double value = 0.0;  // SI, units mu0 omega^2 / m
    double hat = 0.0;    // dimensionless: hat = value * c / (mu0 omega^3)
    QuadratureResult quadrature;
};

/// g for a finite slab: integral of g_slab_integrand over the evanescent
/// range. Exactly zero for a lossless medium or zero thickness.
GResult g_coincident(const SlabGeometry& geom, Frequency omega, const Permittivity& eps,
                     const QuadratureSpec& spec = {});

/// g for the half-space substrate. Strictly positive for Im eps > 0 and also
/// for a lossless medium with Re eps > 1 (an infinitely thick lossless
/// substrate still contributes); strictly decreasing in z.
GResult g_halfspace(double z, Frequency omega, const Permittivity& eps,
                    const QuadratureSpec& spec = {});

/// Everything the steady state of one parameter point depends on.
///
/// alpha and the transition rates are NaN in the one documented case where
/// they are undefined: a lossless finite slab with eps != 1, whose guided
/// modes sit on the real integration axis. n_eff / t_eff are still exact
/// there (the non-equilibrium correction vanishes identically).
struct RateBundle {
    double omega0 = 0.0;      // rad/s, transition frequency of the bundle
    double alpha = 1.0;       // dimensionless decay-rate factor
    double g_value = 0.0;     // SI g
    double g_hat = 0.0;       // dimensionless g
    double n_env = 0.0;       // N(omega0, T0)
    double n_slab = 0.0;      // N(omega0, T1)
    double n_eff = 0.0;       // effective occupation
    double gamma0 = 0.0;      // vacuum spontaneous-emission rate, 1/s
    double gamma_down = 0.0;  // alpha Gamma0 (1 + N_eff), 1/s
    double gamma_up = 0.0;    // alpha Gamma0 N_eff, 1/s
    double t_eff = 0.0;       // K
    QuadratureResult alpha_propagating, alpha_evanescent, g_quadrature;
};

/// N_eff = N(omega0, T0) + (2 pi^2 c / (mu0 omega0^3 alpha)) [N(omega0, T1) - N(omega0, T0)] g,
/// evaluated with alpha and g at the same (z_A, omega0, eps, d); the reduced
/// form uses the dimensionless g so no physical constants enter. When the
/// correction vanishes identically (lossless finite slab, eps = 1, d = 0, or
/// T1 = T0) the effective quantities reduce to the environment values exactly.
RateBundle effective_occupation(const AtomSpec& atom, const SlabGeometry& geom,
                                const Permittivity& eps, const ThermalPair& baths,
                                const QuadratureSpec& spec = {});

/// Same pipeline with an explicit finite/half-space extent.
RateBundle evaluate_rates(const AtomSpec& atom, double atom_height, const SlabExtent& extent,
                          const Permittivity& eps, const ThermalPair& baths,
                          const QuadratureSpec& spec = {});

struct TransitionRates {
    double gamma_down;  // Gamma(omega0)
    double gamma_up;    // Gamma(-omega0)
};

/// Gamma(omega0) = alpha Gamma0 (1 + N_eff), Gamma(-omega0) = alpha Gamma0 N_eff.
TransitionRates transition_rates(const AtomSpec& atom, double n_eff, double alpha);

/// T_eff = (hbar omega0 / kB) / ln(1 + 1/N_eff); 0 for N_eff = 0.
double effective_temperature(const AtomSpec& atom, double n_eff);

/// Thickness criterion for a finite lossy slab to act as a half-space:
///
///   exact:      sqrt(2) (d/lambda0) [-(Re eps - 1) + sqrt(Im^2 eps + (Re eps - 1)^2)]^(1/2) > 1
///   small loss: (Im eps / sqrt(Re eps - 1)) (d/lambda0) > 1
///
/// Both are strict; boundary equality reports not satisfied.
struct ThicknessCriterion {
    double lhs_exact = 0.0;
    double lhs_smallloss = 0.0;  // NaN when unavailable (Re eps <= 1)
    bool satisfied_exact = false;
    bool satisfied_smallloss = false;
    bool smallloss_available = false;
    double d_min_exact = 0.0;      // smallest d satisfying the exact form; inf if none
    double d_min_smallloss = 0.0;  // lambda0 sqrt(Re eps - 1) / Im eps; inf if none
};

ThicknessCriterion thickness_criterion(const Permittivity& eps, double thickness,
                                       double lambda0);

}  // namespace slabtherm
