#pragma once

#include <complex>

#include "slabtherm/constants.hpp"

namespace slabtherm {

using Complex = std::complex<double>;

/// Angular frequency, rad/s. Strictly positive and finite.
struct Frequency {
    explicit Frequency(double omega_rad_per_s);

    double omega;

    /// omega / c, 1/m.
    double wavenumber() const { return omega / constants::speed_of_light; }
};

/// Relative permittivity of the slab at the working frequency.
///
/// Passive non-magnetic media only: re >= 1, im >= 0. im == 0 is the
/// nonabsorbing, nondispersive ("real dielectric") case; several null results
/// in this library hold to machine precision in that case by construction.
struct Permittivity {
    Permittivity(double re_part, double im_part);

    double re;
    double im;

    bool lossless() const { return im == 0.0; }
    Complex value() const { return {re, im}; }
};

/// Axial (z-direction) wavevectors at transverse wavenumber k: b0 in vacuum,
/// b1 in the medium, both on the Re >= 0, Im >= 0 branch.
struct AxialWavevectors {
    double k;    // 1/m
    Complex b0;  // 1/m, b0^2 = omega^2/c^2 - k^2
    Complex b1;  // 1/m, b1^2 = eps * omega^2/c^2 - k^2
};

/// Environment temperature T0 and slab temperature T1, kelvin.
struct ThermalPair {
    ThermalPair(double t_env_kelvin, double t_slab_kelvin);

    double t_env;
    double t_slab;

    bool equilibrium() const { return t_env == t_slab; }
};

/// Finite slab of thickness d with the emitter at height z_A > 0 above the
/// vacuum-facing surface.
struct SlabGeometry {
    SlabGeometry(double thickness_m, double atom_height_m);

    double thickness;    // d, m, >= 0
    double atom_height;  // z_A, m, > 0
};

/// Substrate extent: a finite slab thickness or the half-space limit. The
/// half-space is a distinct analytic formula, not a large-d magic value, so it
/// gets an explicit representation.
class SlabExtent {
  public:
    static SlabExtent finite(double thickness_m);
    static SlabExtent halfspace();

    bool is_halfspace() const { return halfspace_; }

    /// Finite thickness in meters; throws std::logic_error for a half-space.
    double thickness() const;

  private:
    SlabExtent(bool hs, double d) : halfspace_(hs), thickness_(d) {}
    bool halfspace_;
    double thickness_;
};

/// Two-level emitter: transition angular frequency omega0 and squared dipole
/// matrix element |d_21|^2.
struct AtomSpec {
    AtomSpec(double omega0_rad_per_s, double dipole_sq_C2m2);

    double omega0;     // rad/s
    double dipole_sq;  // C^2 m^2

    /// Reduced transition wavelength c / omega0, m.
    double lambda0() const { return constants::speed_of_light / omega0; }

    /// Free-space spontaneous-emission rate
    /// Gamma0 = omega0^3 |d|^2 / (3 pi eps0 hbar c^3), 1/s.
    double vacuum_decay_rate() const;

    /// Inverse of vacuum_decay_rate(): the |d|^2 producing a given Gamma0.
    static double dipole_sq_from_decay_rate(double omega0_rad_per_s, double gamma0_per_s);
};

}  // namespace slabtherm
