//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the abscat developers.
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file tests/support/oracles.hpp
//! Test-only reference implementations, kept independent of the library's
//! evaluation paths: a pure extended-precision Bessel series, associated
//! Legendre recurrences, and Gauss-Legendre quadrature (plain and graded).
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <vector>

namespace oracle {

//---------------------------------------------------------------------------//
/*!
 * Brute-force ascending series for J_nu(z) in extended precision, summed to
 * 1e-16 relative and beyond. Trustworthy for z <= ~20, where alternating-term
 * cancellation stays below ~1e7 : 1.
 */
inline long double bessel_j_series(double nu, double z)
{
    long double const nuL = nu;
    long double const half = 0.5L * static_cast<long double>(z);
    long double term = std::pow(half, nuL) / std::tgamma(nuL + 1.0L);
    long double sum = term;
    for (int j = 0; j < 3000; ++j)
    {
        term *= -half * half / ((j + 1.0L) * (nuL + j + 1.0L));
        sum += term;
        if (std::fabs(term) < 1e-26L * std::fabs(sum)
            && (j + 2.0L) * std::fabs(nuL + j + 2.0L) > half * half)
            break;
    }
    return sum;
}

//---------------------------------------------------------------------------//
//! Legendre polynomial P_l(x) by the standard recurrence.
inline double legendre_p(int l, double x)
{
    double p0 = 1.0, p1 = x;
    if (l == 0)
        return p0;
    for (int k = 2; k <= l; ++k)
    {
        double const p = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p;
    }
    return p1;
}

//---------------------------------------------------------------------------//
//! Associated Legendre P_l^m(x), Condon-Shortley phase, standard recurrences.
inline double assoc_legendre(int l, int m, double x)
{
    double pmm = 1.0;
    if (m > 0)
    {
        double const somx2 = std::sqrt((1.0 - x) * (1.0 + x));
        double fact = 1.0;
        for (int i = 0; i < m; ++i)
        {
            pmm *= -fact * somx2;
            fact += 2.0;
        }
    }
    if (l == m)
        return pmm;
    double pmmp1 = x * (2.0 * m + 1.0) * pmm;
    if (l == m + 1)
        return pmmp1;
    double pll = 0.0;
    for (int ll = m + 2; ll <= l; ++ll)
    {
        pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

//---------------------------------------------------------------------------//
//! Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w)
{
    x.resize(static_cast<size_t>(n));
    w.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
    {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it)
        {
            double p0 = 1.0, p1 = t;
            for (int l = 2; l <= n; ++l)
            {
                double const p = ((2.0 * l - 1.0) * t * p1 - (l - 1.0) * p0) / l;
                p0 = p1;
                p1 = p;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            double const dt = p1 / dp;
            t -= dt;
            if (std::fabs(dt) < 1e-16)
                break;
        }
        x[static_cast<size_t>(i)] = t;
        w[static_cast<size_t>(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

//---------------------------------------------------------------------------//
/*!
 * Composite Gauss-Legendre rule on [-1, 1] with panels geometrically graded
 * toward both endpoints, for integrands with algebraic endpoint behaviour
 * like (1 - x^2)^beta. Node count = 2 * per_panel * (levels + 1).
 */
inline void graded_gauss_legendre(int per_panel, int levels, std::vector<double>& X,
                                  std::vector<double>& W)
{
    std::vector<double> bounds{0.0};
    double b = 0.5;
    for (int k = 0; k < levels; ++k)
    {
        bounds.push_back(1.0 - b);
        b *= 0.5;
    }
    bounds.push_back(1.0);

    std::vector<double> x, w;
    gauss_legendre(per_panel, x, w);
    X.clear();
    W.clear();
    for (size_t p = 0; p + 1 < bounds.size(); ++p)
    {
        double const h = 0.5 * (bounds[p + 1] - bounds[p]);
        double const mid = 0.5 * (bounds[p + 1] + bounds[p]);
        for (int i = 0; i < per_panel; ++i)
        {
            X.push_back(mid + h * x[static_cast<size_t>(i)]);
            W.push_back(h * w[static_cast<size_t>(i)]);
            X.push_back(-mid - h * x[static_cast<size_t>(i)]);
            W.push_back(h * w[static_cast<size_t>(i)]);
        }
    }
}

//! (2l-1)!! with the usual (-1)!! = 1 convention.
inline double double_factorial_odd(int l)
{
    double v = 1.0;
    for (int k = 2 * l - 1; k >= 3; k -= 2)
        v *= k;
    return v;
}

} // namespace oracle
