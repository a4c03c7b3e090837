#pragma once

#include "slabtherm/core_math.hpp"
#include "slabtherm/quadrature.hpp"
#include "slabtherm/types.hpp"

namespace slabtherm {

/// Single-interface Fresnel coefficients evaluated from the dielectric side
/// (medium first in every numerator), plus the slab multiple-reflection
/// denominators for a given thickness:
///
///   r_s = (b1 - b0) / (b1 + b0)         r_p = (b1 - eps b0) / (b1 + eps b0)
///   t_sigma = sqrt(1/eps) (1 - r_sigma)
///   D_sigma = 1 - r_sigma^2 exp(2 i b1 d)
///
/// The vacuum-side single-interface coefficient is the negative of r_sigma.
struct FresnelSet {
    Complex r_s, r_p;
    Complex t_s, t_p;
    Complex d_s, d_p;
};

/// Throws std::domain_error when a reflection denominator vanishes (only
/// possible for eps == 1 at the light line).
FresnelSet fresnel(double k, Frequency omega, const Permittivity& eps, double thickness);

/// Airy (multiple-reflection resummed) reflection coefficients of the whole
/// slab seen from the vacuum side:
///
///   R = rv (1 - exp(2 i b1 d)) / (1 - rv^2 exp(2 i b1 d)),  rv = -r_sigma.
///
/// Limits: d -> 0 gives 0; d -> inf with Im b1 > 0 gives rv; eps -> 1 gives 0.
struct SlabReflection {
    Complex r_s, r_p;
};
SlabReflection slab_reflection(double k, Frequency omega, const Permittivity& eps,
                               double thickness);

/// Polarization weights of the correlation integrands.
struct IntegrandWeights {
    double a_plus;   // p-polarization, k^2 + |b1|^2 flavor
    double a_minus;  // p-polarization, k^2 - |b1|^2 flavor (may be negative)
    double a_s;      // s-polarization
};

/// Finite-slab weights |t/D|^2 [k^2 +- |b1|^2][k^2 + |b0|^2] / |k0 k1|^2 and
/// |t_s/D_s|^2.
IntegrandWeights integrand_weights(double k, Frequency omega, const Permittivity& eps,
                                   double thickness);

/// Half-space weights: same with D = 1.
IntegrandWeights halfspace_weights(double k, Frequency omega, const Permittivity& eps);

/// Evanescent-range integrand (in k) of the slab absorption-weighted
/// correlation integral at coincident points, including the measure k/|b0|^2,
/// the height attenuation exp(-2 Im b0 z) and the prefactor mu0 omega^2/(8 pi^2).
/// Requires k > omega/c; only that range contributes because a nonzero Im b0
/// is needed. Identically zero for a lossless medium at finite thickness.
double g_slab_integrand(double k, Frequency omega, const Permittivity& eps, double thickness,
                        double z);

/// Same for the half-space substrate (thickness -> infinity, no back face).
double g_halfspace_integrand(double k, Frequency omega, const Permittivity& eps, double z);

/// Decay-rate modification factor alpha = Gamma_total / Gamma_0 for an
/// isotropically polarizable emitter at height z above the slab, built from
/// the coincidence-point scattering Green function:
///
///   alpha = 1 + 1/2 Re int_0^inf dx (x / b0h) [R_s + (2x^2 - 1) R_p] e^{2 i b0h zeta}
///
/// with x = ck/omega, b0h = c b0/omega, zeta = omega z / c and R_sigma the
/// vacuum-side slab reflection. The propagating range is integrated with the
/// square-root endpoint substitution at the light line; the evanescent range
/// maps onto the exponential-weight integrator.
struct AlphaResult {
    double value = 1.0;
    QuadratureResult propagating;
    QuadratureResult evanescent;
    bool converged() const { return propagating.converged && evanescent.converged; }
};

/// Throws std::domain_error for a lossless slab with d > 0 and eps != 1:
/// guided-mode poles then sit on the real axis and the scattering integral is
/// not defined as a plain quadrature.
AlphaResult scattering_alpha(double z, Frequency omega, const Permittivity& eps,
                             double thickness, const QuadratureSpec& spec = {});

/// Half-space variant (single interface, lossless media allowed).
AlphaResult scattering_alpha_halfspace(double z, Frequency omega, const Permittivity& eps,
                                       const QuadratureSpec& spec = {});

namespace detail {

// Dimensionless kernel layer, x = ck/omega, delta = omega d / c, zeta = omega z / c.
struct FresnelHat {
    Complex b0, b1;
    Complex r_s, r_p;  // dielectric side
    Complex t_s, t_p;
};
FresnelHat fresnel_hat(double x, const Permittivity& eps);

// exp(2 i b1 delta) computed magnitude-first so that a fully attenuated slab
// yields exactly 0 and an infinite phase is never evaluated.
Complex slab_phase(Complex b1, double delta);

// Braces of the slab correlation integrand (dimensionless, units of b1hat).
double slab_bracket(double x, const Permittivity& eps, double delta);
double halfspace_bracket(double x, const Permittivity& eps);

struct ReflectionHat {
    Complex r_s, r_p;
};
ReflectionHat airy_reflection_hat(double x, const Permittivity& eps, double delta);
ReflectionHat interface_reflection_hat(double x, const Permittivity& eps);

}  // namespace detail

}  // namespace slabtherm
