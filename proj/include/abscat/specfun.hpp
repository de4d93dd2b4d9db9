//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the abscat developers.
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file abscat/specfun.hpp
//! Real-order Bessel functions, the spherical pair used by the radial
//! solutions, symmetric Jacobi polynomials, and log-gamma. Everything here is
//! a pure function of its arguments; concurrent use is unrestricted.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace abscat {

//---------------------------------------------------------------------------//
/*!
 * Natural log of the Gamma function for positive argument.
 *
 * Stirling's series with an upward shift below x = 10. Absolute accuracy is a
 * few parts in 1e15 across [0.1, 300], which keeps exponentiated gamma ratios
 * well inside 1e-12 relative even when the arguments reach a few hundred.
 */
inline double log_gamma(double x)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("log_gamma: argument must be positive and finite");

    double z = x;
    double shift = 0.0;
    if (z < 10.0)
    {
        double prod = 1.0;
        while (z < 10.0)
        {
            prod *= z;
            z += 1.0;
        }
        shift = -std::log(prod);
    }
    static constexpr double coeff[8] = {
        1.0 / 12.0,   -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
        1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0};
    double r = 1.0 / z;
    double r2 = r * r;
    double series = 0.0;
    double p = r;
    for (double c : coeff)
    {
        series += c * p;
        p *= r2;
    }
    constexpr double half_log_two_pi = 0.91893853320467274178;
    return shift + (z - 0.5) * std::log(z) - z + half_log_two_pi + series;
}

//---------------------------------------------------------------------------//
/*!
 * sin(pi x), exactly zero at integer x.
 *
 * The argument is reduced about the nearest integer before multiplying by pi,
 * so the trigonometric factors that gate whole channels (sin/cos of alpha pi)
 * vanish exactly where the algebra says they must.
 */
inline double sin_pi(double x)
{
    double n = std::nearbyint(x);
    double r = x - n; // exact
    double s = (r == 0.0) ? 0.0 : std::sin(M_PI * r);
    return (std::fmod(n, 2.0) == 0.0) ? s : -s;
}

//! cos(pi x), exactly zero at half-integer x.
inline double cos_pi(double x)
{
    double n = std::nearbyint(x);
    double r = x - n; // exact
    double c = (std::fabs(r) == 0.5) ? 0.0 : std::cos(M_PI * r);
    return (std::fmod(n, 2.0) == 0.0) ? c : -c;
}

namespace detail {

//---------------------------------------------------------------------------//
/*!
 * Ascending power series for J_nu(z) in extended precision.
 *
 * Valid for any real order away from negative-integer poles of Gamma(nu+1)
 * (negative integer orders are reflected before we get here). The alternating
 * terms cancel at most ~1e5 : 1 for z <= 12, which extended precision absorbs
 * with room to spare.
 */
inline long double bessel_series(double nu, double z)
{
    long double const nuL = static_cast<long double>(nu);
    long double const half = 0.5L * static_cast<long double>(z);
    long double const mq = -half * half;

    long double term;
    if (nu == 0.0)
        term = 1.0L;
    else
        term = std::pow(half, nuL) / std::tgamma(nuL + 1.0L);

    long double sum = term;
    for (int j = 0; j < 2000; ++j)
    {
        term *= mq / ((j + 1.0L) * (nuL + j + 1.0L));
        sum += term;
        bool decaying = (j + 2.0L) * std::fabs(nuL + j + 2.0L) > std::fabs(mq);
        if (decaying && std::fabs(term) <= 1e-25L * std::fabs(sum))
            break;
        if (std::fabs(term) < std::numeric_limits<long double>::min() * 16.0L)
            break;
    }
    return sum;
}

struct miller_result
{
    long double at_target; //!< J_{nu}
    long double frac0;     //!< J_{nu0},   nu0 = frac(nu)
    long double frac1;     //!< J_{nu0+1}
};

//---------------------------------------------------------------------------//
/*!
 * Backward (Miller) recurrence for J_{nu0+k}(z), nu >= 0, z > 0.
 *
 * Normalized by the Neumann-type sum
 *   (z/2)^nu0 = sum_k (nu0 + 2k) Gamma(nu0 + k)/k! J_{nu0+2k}(z),
 * whose k = 0 weight is Gamma(nu0+1), so the integer-order case nu0 = 0 is
 * the familiar 1 = J_0 + 2 J_2 + 2 J_4 + ... with no special-casing.
 * The start offset of 10 sqrt(max(nu, z)) + 60 keeps the seed contamination
 * below extended-precision roundoff for the whole working domain.
 */
inline miller_result bessel_miller(double nu, double z)
{
    int const k_target = static_cast<int>(std::floor(nu));
    long double const nu0 = static_cast<long double>(nu) - k_target; // [0,1)
    long double const zl = static_cast<long double>(z);

    double big = std::max(static_cast<double>(k_target) + 1.0, z);
    int const start = static_cast<int>(big + 10.0 * std::sqrt(big) + 60.0);

    std::vector<long double> f(static_cast<size_t>(start) + 2, 0.0L);
    f[static_cast<size_t>(start)] = 1e-30L;
    for (int j = start - 1; j >= 0; --j)
    {
        f[j] = (2.0L * (nu0 + j + 1) / zl) * f[j + 1] - f[j + 2];
        if (std::fabs(f[j]) > 1e3900L)
        {
            for (int i = j; i <= start + 1; ++i)
                f[i] *= 1e-3900L;
        }
    }

    long double const g = std::tgamma(nu0 + 1.0L);
    long double s = g * f[0]; // k = 0
    long double p = g;        // p_k = Gamma(nu0+1) prod_{i<k}(nu0+i) / k!,  p_1 = g
    for (int k = 1; 2 * k <= start; ++k)
    {
        s += (nu0 + 2.0L * k) * p * f[static_cast<size_t>(2 * k)];
        p *= (nu0 + k) / (k + 1.0L);
    }
    long double const scale = std::pow(0.5L * zl, nu0) / s;
    return {f[static_cast<size_t>(k_target)] * scale, f[0] * scale, f[1] * scale};
}

//---------------------------------------------------------------------------//
/*!
 * J_nu(z) for negative non-integer nu and z above the series cutoff.
 *
 * Recurring downward in the order from the fractional seeds is stable here:
 * once the order goes below -z the target is the exponentially growing
 * solution, so seed and rounding errors stay bounded relative to it.
 */
inline long double bessel_negative(double nu, double z)
{
    int const steps = -static_cast<int>(std::floor(nu)); // >= 1
    double const nu0 = nu + steps;                        // (0,1)
    miller_result const seeds = bessel_miller(nu0 + 1.0, z);

    long double jm = seeds.frac1; // J_{mu+1}
    long double jc = seeds.frac0; // J_{mu}
    long double mu = static_cast<long double>(nu0);
    long double const zl = static_cast<long double>(z);
    for (int i = 0; i < steps; ++i)
    {
        long double const jn = (2.0L * mu / zl) * jc - jm;
        jm = jc;
        jc = jn;
        mu -= 1.0L;
    }
    return jc;
}

} // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Cylinder function J_nu(z) for real order and z >= 0.
 *
 * Ascending series for z <= 12; backward recurrence with fractional
 * normalization above that; negative non-integer orders by downward
 * continuation from the fractional seeds. Negative integer orders reflect to
 * positive. Relative accuracy is ~1e-13 over z <= 200, |nu| <= 60 (absolute
 * near zeros of J).
 */
inline double bessel_j(double nu, double z)
{
    if (!std::isfinite(nu) || !std::isfinite(z) || z < 0.0)
        throw std::domain_error("bessel_j: requires finite order and z >= 0");

    if (z == 0.0)
    {
        if (nu == 0.0)
            return 1.0;
        if (nu > 0.0)
            return 0.0;
        if (nu == std::nearbyint(nu))
            return 0.0; // J_{-n}(0) = (-1)^n J_n(0) = 0 for n >= 1
        throw std::domain_error("bessel_j: negative non-integer order diverges at z = 0");
    }

    if (nu < 0.0 && nu == std::nearbyint(nu))
    {
        double const v = bessel_j(-nu, z);
        return (std::fmod(-nu, 2.0) == 0.0) ? v : -v;
    }

    constexpr double series_cut = 12.0;
    long double val;
    if (z <= series_cut)
        val = detail::bessel_series(nu, z);
    else if (nu >= 0.0)
        val = detail::bessel_miller(nu, z).at_target;
    else
        val = detail::bessel_negative(nu, z);
    return static_cast<double>(val);
}

//---------------------------------------------------------------------------//
/*!
 * Irregular cylinder function Y_n(z) at integer order, z > 0.
 *
 * Needed only on the half-odd-integer-order limiting branch of the
 * hard-sphere formulas, where the two J's of the generic expressions
 * degenerate into one another.
 */
inline double bessel_y(int n, double z)
{
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::domain_error("bessel_y: z must be positive and finite");
    if (n < 0)
    {
        double const v = std::cyl_neumann(static_cast<double>(-n), z);
        return (n % 2 == 0) ? v : -v;
    }
    return std::cyl_neumann(static_cast<double>(n), z);
}

//---------------------------------------------------------------------------//
//! Regular spherical solution j_alpha(z) = sqrt(pi/2z) J_{alpha+1/2}(z).
inline double spherical_j(double alpha, double z)
{
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::domain_error("spherical_j: z must be positive and finite");
    if (!(alpha >= 0.0))
        throw std::domain_error("spherical_j: order must be nonnegative");
    return std::sqrt(M_PI / (2.0 * z)) * bessel_j(alpha + 0.5, z);
}

//---------------------------------------------------------------------------//
/*!
 * Second radial solution n_alpha(z) = cos((alpha+1) pi) sqrt(pi/2z)
 * J_{-alpha-1/2}(z).
 *
 * This is the convention in which the flux-shifted exterior solutions are
 * written: at integer alpha it reproduces the textbook spherical Neumann
 * function, while at half-odd-integer alpha the prefactor vanishes
 * identically and the function is exactly zero.
 */
inline double spherical_n(double alpha, double z)
{
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::domain_error("spherical_n: z must be positive and finite");
    if (!(alpha >= 0.0))
        throw std::domain_error("spherical_n: order must be nonnegative");
    double const c = cos_pi(alpha + 1.0);
    if (c == 0.0)
        return 0.0;
    return c * std::sqrt(M_PI / (2.0 * z)) * bessel_j(-alpha - 0.5, z);
}

//---------------------------------------------------------------------------//
/*!
 * Symmetric Jacobi polynomial P_q^{(beta,beta)}(z) by the stable three-term
 * recurrence in the degree. Odd degrees vanish exactly at z = 0.
 */
inline double jacobi_symmetric(int q, double beta, double z)
{
    if (q < 0 || !(beta >= 0.0) || !std::isfinite(beta) || !(std::fabs(z) <= 1.0))
        throw std::domain_error("jacobi_symmetric: need q >= 0, beta >= 0, |z| <= 1");
    if (q == 0)
        return 1.0;

    double pm1 = 1.0;
    double p = (beta + 1.0) * z;
    for (int n = 1; n < q; ++n)
    {
        double const nb = n + beta;
        double const a = (2.0 * nb + 1.0) * (2.0 * nb + 2.0)
                         / (2.0 * (n + 1.0) * (n + 2.0 * beta + 1.0));
        double const c = nb * nb * (2.0 * nb + 2.0)
                         / ((n + 1.0) * (n + 2.0 * beta + 1.0) * (2.0 * nb));
        double const next = a * z * p - c * pm1;
        pm1 = p;
        p = next;
    }
    return p;
}

//---------------------------------------------------------------------------//
/*!
 * Closed form of P_{2 q_tilde}^{(beta,beta)}(0), evaluated in log-gamma space
 * so that large q_tilde + beta never overflows intermediate Gammas.
 */
inline double jacobi_at_zero(int q_tilde, double beta)
{
    if (q_tilde < 0 || !(beta >= 0.0) || !std::isfinite(beta))
        throw std::domain_error("jacobi_at_zero: need q_tilde >= 0, beta >= 0");
    double const qt = static_cast<double>(q_tilde);
    double const lg = log_gamma(2.0 * beta + 1.0) + log_gamma(2.0 * qt + beta + 1.0)
                      + log_gamma(qt + beta + 0.5) - log_gamma(beta + 1.0)
                      - log_gamma(2.0 * qt + 2.0 * beta + 1.0) - log_gamma(beta + 0.5)
                      - log_gamma(qt + 1.0);
    double const v = std::exp(lg);
    return (q_tilde % 2 == 0) ? v : -v;
}

} // namespace abscat
