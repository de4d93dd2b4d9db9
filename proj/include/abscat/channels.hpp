//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the abscat developers.
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file abscat/channels.hpp
//! Flux-shifted angular channels: the generalized angular functions, their
//! equatorial closed forms, and the deterministic adaptive summation driver
//! used by every doubly infinite channel sum in the engine.
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "abscat/specfun.hpp"

namespace abscat {

//---------------------------------------------------------------------------//
/*!
 * One flux-shifted angular channel.
 *
 * The dimensionless flux mu0 enters only through beta = |m + mu0|; the
 * radial equation sees the real order alpha_tilde = 2 q_tilde + beta.
 */
struct channel
{
    int q_tilde;        //!< label of the even polynomial degree q = 2 q_tilde
    int m;              //!< azimuthal quantum number
    double beta;        //!< |m + mu0|
    double alpha_tilde; //!< 2 q_tilde + beta
};

//---------------------------------------------------------------------------//
/*!
 * Adaptive truncation rule for channel sums.
 *
 * A sum stops extending in the polynomial degree (resp. in m) once
 * `consecutive_below` successive terms (resp. azimuthal columns) contribute
 * relative weight at most `rel_tol` to the running total, subject to the hard
 * caps q_max and m_max.
 */
struct truncation_policy
{
    int q_max = 80;
    int m_max = 120;
    double rel_tol = 1e-12;
    int consecutive_below = 3;
};

//! Convergence report attached to every truncated sum.
struct sum_metadata
{
    long channels = 0;      //!< number of (degree, m) terms evaluated
    double residual = 0.0;  //!< relative weight of the trailing column
    bool converged = true;  //!< false if a hard cap cut the sum short
};

inline void validate_flux(double mu0)
{
    if (!std::isfinite(mu0) || std::fabs(mu0) > 1e9)
        throw std::domain_error("flux number mu0 must be finite");
}

inline channel make_channel(int q_tilde, int m, double mu0)
{
    if (q_tilde < 0)
        throw std::domain_error("make_channel: q_tilde must be nonnegative");
    validate_flux(mu0);
    double const beta = std::fabs(static_cast<double>(m) + mu0);
    return {q_tilde, m, beta, 2.0 * q_tilde + beta};
}

//---------------------------------------------------------------------------//
/*!
 * Generalized angular function of a flux-shifted channel,
 *
 *   Y_qm(theta,phi) = sqrt(Gamma(q+1) Gamma(q+2 beta+1)) / Gamma(q+beta+1)
 *                     (cos(theta/2) sin(theta/2))^beta
 *                     P_q^{(beta,beta)}(cos theta) e^{i m phi},
 *
 * with the gamma ratio evaluated in log space. The (2 alpha + 1)/4 pi weight
 * of the superpositions is *not* included here; it is carried explicitly by
 * the sums that use Y.
 */
inline std::complex<double> angular_y(int q, int m, double mu0, double theta, double phi)
{
    if (q < 0)
        throw std::domain_error("angular_y: q must be nonnegative");
    if (!(theta >= 0.0 && theta <= M_PI))
        throw std::domain_error("angular_y: theta must lie in [0, pi]");
    validate_flux(mu0);

    double const beta = std::fabs(static_cast<double>(m) + mu0);
    double const norm = std::exp(0.5 * (log_gamma(q + 1.0) + log_gamma(q + 2.0 * beta + 1.0))
                                 - log_gamma(q + beta + 1.0));
    // cos(theta/2) sin(theta/2); exactly zero at both representable endpoints
    double const w = (theta == M_PI) ? 0.0 : 0.5 * std::sin(theta);
    double const pw = std::pow(w, beta);          // pow(0,0) = 1 handles beta = 0
    // the representable equator maps to the exact polynomial argument 0, so
    // odd degrees vanish identically there, as the closed forms require
    double const x = (theta == M_PI_2) ? 0.0 : std::cos(theta);
    double const poly = jacobi_symmetric(q, beta, x);
    return norm * pw * poly * std::polar(1.0, m * phi);
}

//---------------------------------------------------------------------------//
/*!
 * Closed form of the angular function at equatorial direction (pi/2, 0),
 * which is real and involves only the even degrees q = 2 q_tilde:
 *
 *   (-1)^q_tilde (1/sqrt(pi))
 *   sqrt(Gamma(q_tilde+1/2) Gamma(q_tilde+beta+1/2)
 *        / (Gamma(q_tilde+beta+1) Gamma(q_tilde+1))).
 */
inline double angular_y_equator(int q_tilde, int m, double mu0)
{
    if (q_tilde < 0)
        throw std::domain_error("angular_y_equator: q_tilde must be nonnegative");
    validate_flux(mu0);
    double const beta = std::fabs(static_cast<double>(m) + mu0);
    double const qt = static_cast<double>(q_tilde);
    double const lg = 0.5 * (log_gamma(qt + 0.5) + log_gamma(qt + beta + 0.5)
                             - log_gamma(qt + beta + 1.0) - log_gamma(qt + 1.0));
    double const v = std::exp(lg) / std::sqrt(M_PI);
    return (q_tilde % 2 == 0) ? v : -v;
}

namespace detail {

inline double y_squared_from_beta(int q_tilde, double beta)
{
    double const qt = static_cast<double>(q_tilde);
    return std::exp(log_gamma(qt + 0.5) + log_gamma(qt + beta + 0.5)
                    - log_gamma(qt + 1.0) - log_gamma(qt + beta + 1.0))
           / M_PI;
}

} // namespace detail

//! Square of the equatorial angular function (the channel weight of the
//! total-cross-section sums).
inline double y_squared(int q_tilde, int m, double mu0)
{
    if (q_tilde < 0)
        throw std::domain_error("y_squared: q_tilde must be nonnegative");
    validate_flux(mu0);
    return detail::y_squared_from_beta(q_tilde, std::fabs(static_cast<double>(m) + mu0));
}

namespace detail {

//---------------------------------------------------------------------------//
/*!
 * Deterministic enumeration of azimuthal quantum numbers by increasing
 * beta = |m + mu0|, ties broken by smaller |m|, then smaller m. Together with
 * the ascending inner degree this realizes the increasing-alpha ordering of
 * the channel lattice, column by column.
 */
class m_sequence
{
  public:
    explicit m_sequence(double mu0)
        : mu0_(mu0)
        , left_(static_cast<long>(std::floor(-mu0)))
        , right_(left_ + 1)
    {
    }

    long next()
    {
        double const bl = std::fabs(static_cast<double>(left_) + mu0_);
        double const br = std::fabs(static_cast<double>(right_) + mu0_);
        bool take_left;
        if (bl != br)
            take_left = bl < br;
        else if (std::labs(left_) != std::labs(right_))
            take_left = std::labs(left_) < std::labs(right_);
        else
            take_left = true; // left_ < right_ always
        if (take_left)
            return left_--;
        return right_++;
    }

  private:
    double mu0_;
    long left_;
    long right_;
};

//! Neumaier-compensated accumulator; deterministic fixed-order reduction.
struct kahan
{
    double s = 0.0;
    double c = 0.0;
    void add(double v)
    {
        double const t = s + v;
        if (std::fabs(s) >= std::fabs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    double get() const { return s + c; }
};

//! -1: all m; 0: even m only; 1: odd m only.
enum class m_filter : int
{
    all = -1,
    even = 0,
    odd = 1
};

//---------------------------------------------------------------------------//
/*!
 * Adaptive double sum over channels (inner degree ascending within each
 * azimuthal column, columns by increasing beta). Terms are produced by
 * term(q, m) as complex values; the accumulation order is fixed and
 * sequential, so results are reproducible bit for bit regardless of how many
 * sweep points run in parallel elsewhere.
 */
inline void validate_policy(truncation_policy const& pol)
{
    if (!(pol.rel_tol > 0.0 && pol.rel_tol < 1.0) || pol.q_max < 1 || pol.m_max < 1
        || pol.consecutive_below < 1)
        throw std::domain_error("truncation_policy: invalid field");
}

template <class TermFn>
inline std::pair<std::complex<double>, sum_metadata>
adaptive_channel_sum(double mu0, truncation_policy const& pol, m_filter filter, TermFn&& term)
{
    validate_policy(pol);

    kahan re;
    kahan im;
    sum_metadata meta;
    m_sequence seq(mu0);
    int cols_below = 0;

    while (true)
    {
        long const m = seq.next();
        if (std::labs(m) > pol.m_max)
        {
            meta.converged = false;
            break;
        }
        if (filter != m_filter::all && (((m % 2) + 2) % 2) != static_cast<int>(filter))
            continue;

        kahan col_abs;
        int below = 0;
        bool q_stopped = false;
        for (int q = 0; q <= pol.q_max; ++q)
        {
            std::complex<double> const v = term(q, static_cast<int>(m));
            ++meta.channels;
            re.add(v.real());
            im.add(v.imag());
            double const av = std::abs(v);
            col_abs.add(av);
            double const scale = std::hypot(re.get(), im.get());
            if (av <= pol.rel_tol * scale)
                ++below;
            else
                below = 0;
            if (below >= pol.consecutive_below)
            {
                q_stopped = true;
                break;
            }
        }
        if (!q_stopped)
            meta.converged = false;

        double const scale = std::hypot(re.get(), im.get());
        double const col_rel = (col_abs.get() == 0.0) ? 0.0
                                                      : col_abs.get() / std::max(scale, 1e-300);
        meta.residual = col_rel;
        if (col_rel <= pol.rel_tol)
            ++cols_below;
        else
            cols_below = 0;
        if (cols_below >= pol.consecutive_below)
            break;
    }

    return {std::complex<double>{re.get(), im.get()}, meta};
}

} // namespace detail
} // namespace abscat
