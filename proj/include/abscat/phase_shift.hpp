//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the abscat developers.
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file abscat/phase_shift.hpp
//! Scatterer models: the phase-shift interface and the shipped hard sphere.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

#include "abscat/specfun.hpp"

namespace abscat {

//---------------------------------------------------------------------------//
/*!
 * Raised when a channel's interference factor is parameterized as 0/0: the
 * phase shift alone no longer determines the channel (delta = pi/2 at a
 * half-odd-integer order). Models with a closed-form continuation bypass
 * this; for generic models it is a hard error rather than a guess.
 */
class degeneracy_error : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

//---------------------------------------------------------------------------//
/*!
 * Hard-sphere phase shift: the exterior wavefunction vanishes at the surface,
 * so tan(delta) = j_alpha(ka) / n_alpha(ka). Reported on the principal branch
 * (-pi/2, pi/2], with delta = pi/2 exactly where n_alpha vanishes identically
 * (half-odd-integer alpha).
 */
inline double hard_sphere_phase_shift(double alpha, double ka)
{
    if (!(ka > 0.0) || !std::isfinite(ka))
        throw std::domain_error("hard_sphere_phase_shift: ka must be positive");
    if (!(alpha >= 0.0))
        throw std::domain_error("hard_sphere_phase_shift: order must be nonnegative");
    double const n = spherical_n(alpha, ka);
    if (n == 0.0)
        return M_PI_2;
    return std::atan(spherical_j(alpha, ka) / n);
}

//---------------------------------------------------------------------------//
/*!
 * A scatterer, seen by the partial-wave engine as the map
 * (real radial order, ka) -> phase shift.
 *
 * Implementations must be deterministic and total on alpha >= 0, ka > 0.
 */
class scatterer_model
{
  public:
    virtual ~scatterer_model() = default;

    //! Phase shift delta in (-pi/2, pi/2] for the channel of order alpha.
    virtual double phase_shift(double alpha, double ka) const = 0;

    /*!
     * Unitary channel factor e^{i d} sin d continued to half-odd-integer
     * orders, where the generic interference factor degenerates to 0/0.
     * Models without a closed-form continuation return nullopt, and the
     * generic path signals degeneracy_error instead of guessing.
     */
    virtual std::optional<std::complex<double>> half_odd_limit_factor(double alpha, double ka) const
    {
        (void)alpha;
        (void)ka;
        return std::nullopt;
    }
};

//---------------------------------------------------------------------------//
//! True when 2 alpha is exactly an odd integer.
inline bool is_half_odd_integer(double alpha)
{
    double const two_a = 2.0 * alpha;
    return two_a == std::nearbyint(two_a) && std::fmod(std::fabs(two_a), 2.0) == 1.0;
}

//---------------------------------------------------------------------------//
/*!
 * Impenetrable sphere of radius a; everything enters through ka.
 *
 * At half-odd-integer order the interference factor has the exact limit
 * e^{i d*} sin d* with tan d* = J_n(ka) / Y_n(ka), n = alpha + 1/2: the
 * flux-shifted radial problem turns into the two-dimensional hard-disk one.
 */
class hard_sphere final : public scatterer_model
{
  public:
    double phase_shift(double alpha, double ka) const override
    {
        return hard_sphere_phase_shift(alpha, ka);
    }

    std::optional<std::complex<double>> half_odd_limit_factor(double alpha, double ka) const override
    {
        if (!is_half_odd_integer(alpha))
            return std::nullopt;
        int const n = static_cast<int>(std::lround(alpha + 0.5));
        double const j = bessel_j(static_cast<double>(n), ka);
        double const y = bessel_y(n, ka);
        if (!std::isfinite(y))
            return std::complex<double>{0.0, 0.0}; // channel fully screened
        double const d = j * j + y * y;
        return std::complex<double>{j * y / d, j * j / d};
    }
};

} // namespace abscat
