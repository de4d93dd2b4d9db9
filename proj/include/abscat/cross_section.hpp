//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the abscat developers.
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file abscat/cross_section.hpp
//! Total and differential cross sections for distinguishable particles and
//! symmetrized identical bosons/fermions, the closed-form hard-sphere sum,
//! and the optical-theorem residual diagnostic.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <complex>

#include "abscat/amplitude.hpp"
#include "abscat/channels.hpp"
#include "abscat/phase_shift.hpp"

namespace abscat {

//---------------------------------------------------------------------------//
//! Particle statistics of the projectile pair. Identical statistics restrict
//! the azimuthal sum to even (bosons) or odd (fermions) m.
enum class statistics
{
    distinguishable,
    boson,
    fermion
};

inline char const* to_string(statistics s)
{
    switch (s)
    {
        case statistics::boson: return "boson";
        case statistics::fermion: return "fermion";
        default: return "dist";
    }
}

//---------------------------------------------------------------------------//
//! Total cross section with the 1/k^2 prefactors resolved through ka.
struct cross_section_value
{
    double sigma_over_sigma0 = 0.0; //!< sigma / (2 pi a^2)
    double sigma_k2_over_4pi = 0.0; //!< bare channel sum sigma k^2 / 4 pi
    sum_metadata convergence;
    bool degenerate = false; //!< some channel sat exactly on the half-odd-order branch
};

namespace detail {

inline m_filter filter_of(statistics s)
{
    switch (s)
    {
        case statistics::boson: return m_filter::even;
        case statistics::fermion: return m_filter::odd;
        default: return m_filter::all;
    }
}

//! Identical statistics double the amplitude sum, quadrupling the channel sum.
inline double statistics_prefactor(statistics s)
{
    return s == statistics::distinguishable ? 1.0 : 4.0;
}

inline cross_section_value
package_cross_section(double ka, statistics stat, double sum, sum_metadata meta, bool degenerate)
{
    cross_section_value out;
    out.sigma_k2_over_4pi = detail::statistics_prefactor(stat) * sum;
    out.sigma_over_sigma0 = 2.0 * out.sigma_k2_over_4pi / (ka * ka);
    out.convergence = meta;
    out.degenerate = degenerate;
    return out;
}

} // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Channel term of the total-cross-section sum,
 *
 *   F = (2 alpha + 1) sin^2(delta) cos^4(alpha pi) Y^2
 *       / (1 - 2 sin(delta) sin(alpha pi) cos(alpha pi - delta)
 *            + sin^2(delta) sin^2(alpha pi)),
 *
 * where alpha = 2 q_tilde + beta and Y^2 is the equatorial channel weight.
 * The denominator is |1 - e^{i(delta - alpha pi)} sin(delta) sin(alpha pi)|^2,
 * so F = (2 alpha + 1) Y^2 |B|^2 with B the amplitude interference factor.
 */
inline double channel_term_F(double delta, channel const& ch)
{
    double const a = ch.alpha_tilde;
    double const sd = std::sin(delta);
    double const sa = sin_pi(a);
    double const den = 1.0 - 2.0 * sd * sa * std::cos(a * M_PI - delta) + sd * sd * sa * sa;
    if (den < 1e-14)
        throw degeneracy_error("channel_term_F: interference denominator vanished");
    double const ca = cos_pi(a);
    double const y2 = detail::y_squared_from_beta(ch.q_tilde, ch.beta);
    double const c2 = ca * ca;
    return (2.0 * a + 1.0) * sd * sd * c2 * c2 * y2 / den;
}

//---------------------------------------------------------------------------//
/*!
 * Total cross section through the phase-shift route: every channel factor
 * comes from the model (via the half-odd-order limit where the model
 * provides one), and F = (2 alpha + 1) Y^2 |B|^2 is accumulated over even
 * degrees and the statistics-filtered azimuthal numbers.
 */
inline cross_section_value total_cross_section(scatterer_model const& model,
                                               double ka,
                                               double mu0,
                                               statistics stat,
                                               truncation_policy const& policy = {})
{
    if (!(ka > 0.0) || !std::isfinite(ka))
        throw std::domain_error("total_cross_section: ka must be positive");
    validate_flux(mu0);

    bool degenerate = false;
    auto term = [&](int q_tilde, int m) -> std::complex<double> {
        channel const ch = make_channel(q_tilde, m, mu0);
        if (is_half_odd_integer(ch.alpha_tilde))
            degenerate = true;
        std::complex<double> const b = model_channel_factor(model, ch.alpha_tilde, ka);
        double const y2 = y_squared(q_tilde, m, mu0);
        return {(2.0 * ch.alpha_tilde + 1.0) * y2 * std::norm(b), 0.0};
    };
    auto [sum, meta] = detail::adaptive_channel_sum(mu0, policy, detail::filter_of(stat), term);
    return detail::package_cross_section(ka, stat, sum.real(), meta, degenerate);
}

//---------------------------------------------------------------------------//
/*!
 * Closed-form hard-sphere total cross section, written directly in cylinder
 * functions:
 *
 *   term = (2 alpha + 1) cos^2(alpha pi) J_{alpha+1/2}^2 Y^2
 *          / (J_{alpha+1/2}^2 + J_{-alpha-1/2}^2
 *             + 2 sin(alpha pi) J_{alpha+1/2} J_{-alpha-1/2}).
 *
 * This is the production path for hard-sphere sweeps: no phase shift is ever
 * formed. The numerator and denominator vanish together at half-odd-integer
 * alpha (the denominator is identically (J_n^2 + Y_n^2) sin^2(n pi + ...) in
 * disguise), where the exact limit J_n^2/(J_n^2 + Y_n^2), n = alpha + 1/2, is
 * used instead; such channels mark the record as degenerate. The fraction is
 * evaluated scaled by the larger of the two J's, so screened channels with
 * enormous |J_{-alpha-1/2}| underflow gracefully to zero.
 */
inline cross_section_value hard_sphere_total_closed_form(double ka,
                                                         double mu0,
                                                         statistics stat,
                                                         truncation_policy const& policy = {})
{
    if (!(ka > 0.0) || !std::isfinite(ka))
        throw std::domain_error("hard_sphere_total_closed_form: ka must be positive");
    validate_flux(mu0);

    bool degenerate = false;
    auto term = [&](int q_tilde, int m) -> std::complex<double> {
        channel const ch = make_channel(q_tilde, m, mu0);
        double const a = ch.alpha_tilde;
        double const y2 = y_squared(q_tilde, m, mu0);
        double frac;
        if (is_half_odd_integer(a))
        {
            degenerate = true;
            int const n = static_cast<int>(std::lround(a + 0.5));
            double const j = bessel_j(static_cast<double>(n), ka);
            double const y = bessel_y(n, ka);
            frac = std::isfinite(y) ? j * j / (j * j + y * y) : 0.0;
        }
        else
        {
            double const jp = bessel_j(a + 0.5, ka);
            double const jm = bessel_j(-a - 0.5, ka);
            double const s = sin_pi(a);
            double const c = cos_pi(a);
            double const ajp = std::fabs(jp);
            double const ajm = std::fabs(jm);
            if (ajp == 0.0 && ajm == 0.0)
                throw degeneracy_error("hard_sphere_total_closed_form: both solutions vanished");
            double den, num;
            if (ajm >= ajp)
            {
                double const t = jp / jm;
                den = t * t + 1.0 + 2.0 * s * t;
                num = c * c * t * t;
            }
            else
            {
                double const u = jm / jp;
                den = 1.0 + u * u + 2.0 * s * u;
                num = c * c;
            }
            if (den < 1e-14)
                throw degeneracy_error("hard_sphere_total_closed_form: denominator vanished");
            frac = num / den;
        }
        return {(2.0 * a + 1.0) * y2 * frac, 0.0};
    };
    auto [sum, meta] = detail::adaptive_channel_sum(mu0, policy, detail::filter_of(stat), term);
    return detail::package_cross_section(ka, stat, sum.real(), meta, degenerate);
}

//---------------------------------------------------------------------------//
/*!
 * Flux-free hard-sphere total cross section,
 *   sigma k^2 / 4 pi = sum_l (2l+1) j_l^2 / (j_l^2 + n_l^2),
 * built on its own integer-order recurrences as an independent regression
 * reference for the channel machinery.
 */
inline cross_section_value flux_free_total(double ka, truncation_policy const& policy = {})
{
    if (!(ka > 0.0) || !std::isfinite(ka))
        throw std::domain_error("flux_free_total: ka must be positive");

    int const l_arr = std::min(policy.q_max,
                               static_cast<int>(ka + 10.0 * std::cbrt(ka + 1.0) + 20.0));

    // n_l by upward recurrence (stable), j_l by downward recurrence.
    std::vector<double> nl(static_cast<size_t>(l_arr) + 1);
    nl[0] = -std::cos(ka) / ka;
    if (l_arr >= 1)
        nl[1] = -std::cos(ka) / (ka * ka) - std::sin(ka) / ka;
    for (int l = 1; l < l_arr; ++l)
        nl[static_cast<size_t>(l) + 1] = (2.0 * l + 1.0) / ka * nl[static_cast<size_t>(l)]
                                         - nl[static_cast<size_t>(l) - 1];

    int const start = l_arr + static_cast<int>(10.0 * std::sqrt(l_arr + ka) + 40.0);
    std::vector<long double> f(static_cast<size_t>(start) + 2, 0.0L);
    f[static_cast<size_t>(start)] = 1e-30L;
    for (int l = start - 1; l >= 0; --l)
    {
        f[static_cast<size_t>(l)] = (2.0L * l + 3.0L) / ka * f[static_cast<size_t>(l) + 1]
                                    - f[static_cast<size_t>(l) + 2];
        if (std::fabs(f[static_cast<size_t>(l)]) > 1e3900L)
            for (int i = l; i <= start + 1; ++i)
                f[static_cast<size_t>(i)] *= 1e-3900L;
    }
    long double const scale = static_cast<long double>(std::sin(ka) / ka) / f[0];

    detail::kahan sum;
    sum_metadata meta;
    int below = 0;
    bool stopped = false;
    for (int l = 0; l <= l_arr; ++l)
    {
        double const jl = static_cast<double>(f[static_cast<size_t>(l)] * scale);
        double const d = jl * jl + nl[static_cast<size_t>(l)] * nl[static_cast<size_t>(l)];
        double const t = (2.0 * l + 1.0) * jl * jl / d;
        sum.add(t);
        ++meta.channels;
        meta.residual = (sum.get() == 0.0) ? 0.0 : t / sum.get();
        if (t <= policy.rel_tol * sum.get())
            ++below;
        else
            below = 0;
        if (below >= policy.consecutive_below)
        {
            stopped = true;
            break;
        }
    }
    meta.converged = stopped;
    return detail::package_cross_section(ka, statistics::distinguishable, sum.get(), meta, false);
}

//---------------------------------------------------------------------------//
/*!
 * Differential cross section in units of 1/k^2: |k f|^2 for distinguishable
 * particles, |k f(theta,phi) +- k f(pi-theta, phi+pi)|^2 for identical ones
 * (+ bosons, - fermions). Identical statistics require equatorial incidence.
 */
inline double differential_cross_section(scatterer_model const& model,
                                         double ka,
                                         double mu0,
                                         statistics stat,
                                         incident_direction incident,
                                         double theta,
                                         double phi,
                                         truncation_policy const& policy = {})
{
    if (stat != statistics::distinguishable && !incident.is_equatorial())
        throw std::domain_error("differential_cross_section: identical statistics require equatorial incidence");

    std::complex<double> const f1
        = scattering_amplitude(model, ka, mu0, incident, theta, phi, policy).value;
    if (stat == statistics::distinguishable)
        return std::norm(f1);
    std::complex<double> const f2
        = scattering_amplitude(model, ka, mu0, incident, M_PI - theta, phi + M_PI, policy).value;
    return stat == statistics::boson ? std::norm(f1 + f2) : std::norm(f1 - f2);
}

//---------------------------------------------------------------------------//
//! Optical-theorem residual. `absolute` flags the all-channels-silent case
//! where the residual is reported absolutely instead of relative to sigma.
struct optical_residual
{
    double value = 0.0;
    bool absolute = false;
};

//---------------------------------------------------------------------------//
/*!
 * Consistency of the total cross section with the forward amplitude at
 * equatorial incidence: sigma_t = (4 pi / k) Im f(pi/2, 0), which in the
 * engine's dimensionless variables is  sum F = Im (k f).
 */
inline optical_residual optical_theorem_residual(scatterer_model const& model,
                                                 double ka,
                                                 double mu0,
                                                 truncation_policy const& policy = {})
{
    cross_section_value const sigma
        = total_cross_section(model, ka, mu0, statistics::distinguishable, policy);
    amplitude_value const fwd = scattering_amplitude(
        model, ka, mu0, incident_direction::equatorial(), M_PI_2, 0.0, policy);
    double const lhs = sigma.sigma_k2_over_4pi;
    double const rhs = fwd.value.imag();
    if (lhs == 0.0)
        return {std::fabs(rhs), true};
    return {std::fabs(lhs - rhs) / lhs, false};
}

} // namespace abscat
