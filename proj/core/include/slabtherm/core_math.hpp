#pragma once

#include "slabtherm/types.hpp"

namespace slabtherm {

/// Bose-Einstein occupation N = 1 / (exp(hbar omega / kB T) - 1).
/// Returns exactly 0 for T = 0. Strictly increasing in T, decreasing in omega.
double bose_occupation(Frequency omega, double temperature_kelvin);

/// Thermal length beta = hbar c / (kB T), m. Infinite at T = 0.
double thermal_beta(double temperature_kelvin);

/// Vacuum axial wavevector b0(k) = sqrt(omega^2/c^2 - k^2).
/// Real non-negative for k <= omega/c, purely imaginary (Im > 0) above; the
/// off component is exactly zero, not a rounding residue.
Complex axial_vacuum(double k, Frequency omega);

/// Medium axial wavevector b1(k) = sqrt(eps omega^2/c^2 - k^2) on the
/// Re >= 0, Im >= 0 branch, evaluated from the explicit real split
///
///   Im^2 b1 = [ -(Re eps k0^2 - k^2) + |eps k0^2 - k^2| ] / 2
///   Re^2 b1 = [ +(Re eps k0^2 - k^2) + |eps k0^2 - k^2| ] / 2
///
/// rather than a generic complex square root, so the signs are guaranteed and
/// the lossless case splits exactly into a purely real or purely imaginary
/// result. Satisfies 2 Re b1 Im b1 = Im eps * omega^2/c^2.
Complex axial_medium(double k, Frequency omega, const Permittivity& eps);

AxialWavevectors axial_pair(double k, Frequency omega, const Permittivity& eps);

/// Minimum of Im b1(k) over the evanescent range k > omega/c, attained at the
/// light line k = omega/c:
///
///   min Im b1 = (omega / sqrt(2) c) [ -(Re eps - 1) + sqrt(Im^2 eps + (Re eps - 1)^2) ]^(1/2)
///
/// Zero exactly for a lossless medium.
double min_im_b1(Frequency omega, const Permittivity& eps);

namespace detail {

// Dimensionless layer: x = c k / omega, so b0_hat^2 = 1 - x^2 and
// b1_hat^2 = eps - x^2. SI values are omega/c times these. All heavy numerics
// run in this layer; SI units appear only at the public API boundary.
Complex axial_vacuum_hat(double x);
Complex axial_medium_hat(double x, const Permittivity& eps);
double min_im_b1_hat(const Permittivity& eps);

}  // namespace detail

}  // namespace slabtherm
