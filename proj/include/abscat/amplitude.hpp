//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the abscat developers.
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file abscat/amplitude.hpp
//! The full scattering amplitude with the flux interference factor, and the
//! flux-modified plane-wave expansion used to validate it.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <complex>

#include "abscat/channels.hpp"
#include "abscat/phase_shift.hpp"

namespace abscat {

//---------------------------------------------------------------------------//
//! Direction of the incoming momentum. The cross-section closed forms fix
//! the equatorial case; the amplitude itself accepts any direction.
struct incident_direction
{
    double theta = M_PI_2;
    double phi = 0.0;

    static incident_direction equatorial() { return {M_PI_2, 0.0}; }
    bool is_equatorial() const { return theta == M_PI_2 && phi == 0.0; }
};

//! Amplitude value in units of 1/k (i.e. the dimensionless k * f), plus the
//! convergence report of the truncated channel sum.
struct amplitude_value
{
    std::complex<double> value;
    sum_metadata convergence;
};

//---------------------------------------------------------------------------//
/*!
 * Interference factor of one channel of the scattering amplitude,
 *
 *   e^{i delta} sin(delta) cos^2(alpha pi)
 *   / (1 - e^{i(delta - alpha pi)} sin(delta) sin(alpha pi)),
 *
 * which reduces to the familiar e^{i delta} sin(delta) at integer order.
 * Satisfies Im B = |B|^2 identically (per-channel unitarity).
 *
 * Throws degeneracy_error when the denominator modulus drops below 1e-14;
 * that happens exactly for delta -> pi/2 at half-odd-integer alpha.
 */
inline std::complex<double> channel_amplitude_factor(double delta, double alpha)
{
    std::complex<double> const eid{std::cos(delta), std::sin(delta)};
    std::complex<double> const emia{cos_pi(-alpha), sin_pi(-alpha)}; // e^{-i alpha pi}
    double const sd = std::sin(delta);
    std::complex<double> const den = 1.0 - eid * emia * (sd * sin_pi(alpha));
    if (std::abs(den) < 1e-14)
        throw degeneracy_error("channel_amplitude_factor: interference denominator vanished");
    double const c = cos_pi(alpha);
    return eid * (sd * c * c) / den;
}

//---------------------------------------------------------------------------//
//! Channel factor of a model, routed through the half-odd-order limit when
//! the model provides one and the order is exactly degenerate.
inline std::complex<double> model_channel_factor(scatterer_model const& model, double alpha, double ka)
{
    if (is_half_odd_integer(alpha))
    {
        if (auto lim = model.half_odd_limit_factor(alpha, ka))
            return *lim;
    }
    return channel_amplitude_factor(model.phase_shift(alpha, ka), alpha);
}

//---------------------------------------------------------------------------//
/*!
 * Scattering amplitude f(theta, phi) in units of 1/k,
 *
 *   k f = sum_q sum_m (2 alpha + 1) B(delta_alpha, alpha)
 *         Y*_qm(theta', phi') Y_qm(theta, phi),    alpha = q + |m + mu0|.
 *
 * All degrees q participate for a general incident direction; at equatorial
 * incidence the odd degrees carry zero weight and are skipped before any
 * model evaluation, so they can never trip the degeneracy guard.
 */
inline amplitude_value scattering_amplitude(scatterer_model const& model,
                                            double ka,
                                            double mu0,
                                            incident_direction incident,
                                            double theta,
                                            double phi,
                                            truncation_policy const& policy = {})
{
    if (!(ka > 0.0) || !std::isfinite(ka))
        throw std::domain_error("scattering_amplitude: ka must be positive");
    validate_flux(mu0);

    auto term = [&](int q, int m) -> std::complex<double> {
        std::complex<double> const yin = angular_y(q, m, mu0, incident.theta, incident.phi);
        if (yin.real() == 0.0 && yin.imag() == 0.0)
            return {0.0, 0.0};
        double const alpha = q + std::fabs(static_cast<double>(m) + mu0);
        std::complex<double> const factor = model_channel_factor(model, alpha, ka);
        return (2.0 * alpha + 1.0) * factor * std::conj(yin)
               * angular_y(q, m, mu0, theta, phi);
    };
    auto [value, meta] = detail::adaptive_channel_sum(mu0, policy, detail::m_filter::all, term);
    return {value, meta};
}

//---------------------------------------------------------------------------//
/*!
 * Flux-modified plane wave
 *
 *   sum_q sum_m (2 alpha + 1) i^alpha j_alpha(kr)
 *   Y*_qm(theta', phi') Y_qm(theta, phi),
 *
 * with i^alpha = e^{i alpha pi / 2} on the principal branch. Reduces to the
 * textbook plane-wave expansion when the flux vanishes.
 */
inline amplitude_value modified_plane_wave(double mu0,
                                           incident_direction incident,
                                           double kr,
                                           double theta,
                                           double phi,
                                           truncation_policy const& policy = {})
{
    if (!(kr >= 0.0) || !std::isfinite(kr))
        throw std::domain_error("modified_plane_wave: kr must be nonnegative");
    validate_flux(mu0);

    if (kr == 0.0)
    {
        // Only alpha = 0 channels survive at the origin: q = 0 and beta = 0,
        // which requires integer flux. For fractional flux the wave vanishes
        // on the flux line.
        double const mm = std::nearbyint(-mu0);
        if (mm + mu0 != 0.0)
            return {{0.0, 0.0}, {}};
        int const m = static_cast<int>(mm);
        std::complex<double> const v = std::conj(angular_y(0, m, mu0, incident.theta, incident.phi))
                                       * angular_y(0, m, mu0, theta, phi);
        return {v, {}};
    }

    auto term = [&](int q, int m) -> std::complex<double> {
        std::complex<double> const yin = angular_y(q, m, mu0, incident.theta, incident.phi);
        if (yin.real() == 0.0 && yin.imag() == 0.0)
            return {0.0, 0.0};
        double const alpha = q + std::fabs(static_cast<double>(m) + mu0);
        std::complex<double> const ipow{cos_pi(0.5 * alpha), sin_pi(0.5 * alpha)};
        return (2.0 * alpha + 1.0) * ipow * spherical_j(alpha, kr) * std::conj(yin)
               * angular_y(q, m, mu0, theta, phi);
    };
    auto [value, meta] = detail::adaptive_channel_sum(mu0, policy, detail::m_filter::all, term);
    return {value, meta};
}

} // namespace abscat
