//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the abscat developers.
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file abscat/sweep.hpp
//! Parameter sweeps over (ka, mu0), figure presets, and deterministic
//! CSV/JSON emission. Grid points run concurrently; records are always
//! emitted in row-major grid order, so output is byte-identical for any
//! worker count.
//---------------------------------------------------------------------------//
#pragma once

#include <atomic>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "abscat/cross_section.hpp"

namespace abscat {

//---------------------------------------------------------------------------//
//! One sweep: the outer ka grid, the inner mu0 grid, and how to sum.
struct sweep_spec
{
    std::vector<double> ka_grid;
    std::vector<double> mu0_grid;
    statistics stat = statistics::distinguishable;
    truncation_policy policy{};
    enum class output_format
    {
        csv,
        json
    } format = output_format::csv;
    bool sigma0_normalized = true; //!< summarize sigma/(2 pi a^2) rather than sigma/a^2
    std::string preset_note;       //!< provenance comment for figure presets
};

//! One grid point of a sweep.
struct sweep_record
{
    double ka = 0.0;
    double mu0 = 0.0;
    double sigma_normalized = 0.0; //!< sigma / (2 pi a^2)
    double sigma_raw = 0.0;        //!< sigma k^2 / 4 pi
    long channels = 0;
    double residual = 0.0;
    bool converged = true;
    bool degenerate = false;
};

namespace detail {

inline void validate_grid(std::vector<double> const& g, bool positive, char const* name)
{
    if (g.empty())
        throw std::invalid_argument(std::string(name) + " grid must be non-empty");
    for (size_t i = 0; i < g.size(); ++i)
    {
        if (!std::isfinite(g[i]) || std::fabs(g[i]) > 1e9 || (positive && !(g[i] > 0.0)))
            throw std::invalid_argument(std::string(name) + " grid entries must be finite"
                                        + (positive ? " and positive" : ""));
        if (i > 0 && !(g[i] > g[i - 1]))
            throw std::invalid_argument(std::string(name) + " grid must be strictly increasing");
    }
}

//! Shortest round-trip decimal form of a double.
inline std::string format_double(double v)
{
    char buf[40];
    auto const res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Run the sweep on the hard sphere through the closed-form production path.
 * Points are distributed over `n_threads` workers; each point is computed by
 * one worker with the fixed sequential reduction, and the returned vector is
 * in row-major (ka outer, mu0 inner) grid order regardless of scheduling.
 *
 * A point whose evaluation signals degeneracy beyond the half-odd-order
 * limiting branch is emitted with NaN cross sections and both flags set; it
 * is never dropped.
 */
inline std::vector<sweep_record> run_sweep(sweep_spec const& spec, int n_threads = 1)
{
    detail::validate_grid(spec.ka_grid, true, "ka");
    detail::validate_grid(spec.mu0_grid, false, "mu0");
    detail::validate_policy(spec.policy); // nothing may throw inside a worker
    if (n_threads < 1)
        throw std::invalid_argument("run_sweep: n_threads must be >= 1");

    size_t const nka = spec.ka_grid.size();
    size_t const nmu = spec.mu0_grid.size();
    std::vector<sweep_record> records(nka * nmu);

    auto compute_point = [&](size_t idx) {
        size_t const i = idx / nmu;
        size_t const j = idx % nmu;
        sweep_record rec;
        rec.ka = spec.ka_grid[i];
        rec.mu0 = spec.mu0_grid[j];
        try
        {
            cross_section_value const v
                = hard_sphere_total_closed_form(rec.ka, rec.mu0, spec.stat, spec.policy);
            rec.sigma_normalized = v.sigma_over_sigma0;
            rec.sigma_raw = v.sigma_k2_over_4pi;
            rec.channels = v.convergence.channels;
            rec.residual = v.convergence.residual;
            rec.converged = v.convergence.converged;
            rec.degenerate = v.degenerate;
        }
        catch (degeneracy_error const&)
        {
            rec.sigma_normalized = std::numeric_limits<double>::quiet_NaN();
            rec.sigma_raw = std::numeric_limits<double>::quiet_NaN();
            rec.converged = false;
            rec.degenerate = true;
        }
        records[idx] = rec;
    };

    if (n_threads == 1)
    {
        for (size_t idx = 0; idx < records.size(); ++idx)
            compute_point(idx);
    }
    else
    {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t idx = next.fetch_add(1); idx < records.size(); idx = next.fetch_add(1))
                compute_point(idx);
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return records;
}

//---------------------------------------------------------------------------//
/*!
 * CSV form of a sweep. Comment lines (\#-prefixed) describe the run; the
 * column header line is fixed:
 *
 *   ka,mu0,statistics,sigma_over_sigma0,sigma_k2_over_4pi,channels,residual,degenerate
 *
 * Floating-point fields are printed as shortest round-trip decimals, so equal
 * runs diff byte-identically.
 */
inline std::string to_csv(sweep_spec const& spec, std::vector<sweep_record> const& records)
{
    std::ostringstream out;
    out << "# abscat sweep: hard sphere with flux line\n";
    out << "# statistics: " << to_string(spec.stat) << "\n";
    out << "# policy: rel_tol=" << detail::format_double(spec.policy.rel_tol)
        << " consecutive_below=" << spec.policy.consecutive_below
        << " q_max=" << spec.policy.q_max << " m_max=" << spec.policy.m_max << "\n";
    if (!spec.preset_note.empty())
        out << "# preset: " << spec.preset_note << "\n";
    out << "ka,mu0,statistics,sigma_over_sigma0,sigma_k2_over_4pi,channels,residual,degenerate\n";
    for (auto const& r : records)
    {
        out << detail::format_double(r.ka) << ',' << detail::format_double(r.mu0) << ','
            << to_string(spec.stat) << ',' << detail::format_double(r.sigma_normalized) << ','
            << detail::format_double(r.sigma_raw) << ',' << r.channels << ','
            << detail::format_double(r.residual) << ',' << (r.degenerate ? 1 : 0) << '\n';
    }
    return out.str();
}

//! JSON form of a sweep (numbers as shortest round-trip decimals; NaN -> null).
inline std::string to_json(sweep_spec const& spec, std::vector<sweep_record> const& records)
{
    auto num = [](double v) {
        return std::isfinite(v) ? detail::format_double(v) : std::string("null");
    };
    std::ostringstream out;
    out << "{\n  \"statistics\": \"" << to_string(spec.stat) << "\",\n";
    out << "  \"policy\": {\"rel_tol\": " << detail::format_double(spec.policy.rel_tol)
        << ", \"consecutive_below\": " << spec.policy.consecutive_below
        << ", \"q_max\": " << spec.policy.q_max << ", \"m_max\": " << spec.policy.m_max << "},\n";
    if (!spec.preset_note.empty())
        out << "  \"preset\": \"" << spec.preset_note << "\",\n";
    out << "  \"records\": [\n";
    for (size_t i = 0; i < records.size(); ++i)
    {
        auto const& r = records[i];
        out << "    {\"ka\": " << num(r.ka) << ", \"mu0\": " << num(r.mu0)
            << ", \"sigma_over_sigma0\": " << num(r.sigma_normalized)
            << ", \"sigma_k2_over_4pi\": " << num(r.sigma_raw) << ", \"channels\": " << r.channels
            << ", \"residual\": " << num(r.residual)
            << ", \"converged\": " << (r.converged ? "true" : "false")
            << ", \"degenerate\": " << (r.degenerate ? "true" : "false") << "}"
            << (i + 1 < records.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

//---------------------------------------------------------------------------//
/*!
 * Preset sweeps reproducing the canonical suppression/periodicity plots:
 *
 *  - fig1: distinguishable, ka in (0, 10], flux values {0, 0.25, 0.5, 1}
 *  - fig2: distinguishable, mu0 in [0, 3] at small fixed ka
 *  - fig3: bosons, ka sweep, flux values {0, 0.5, 1, 2}
 *  - fig4: bosons, mu0 in [0, 4] at small fixed ka
 *  - fig5: fermions, ka sweep, flux values {0, 0.5, 1, 2}
 *  - fig6: fermions, mu0 in [0, 4] at small fixed ka
 *
 * The flux sweeps cover at least two periods; the half-integer and integer
 * flux values land exactly on representable grid points.
 */
inline sweep_spec figure_preset(std::string const& name)
{
    auto ka_sweep = [] {
        std::vector<double> g;
        for (int i = 1; i <= 100; ++i)
            g.push_back(i / 10.0);
        return g;
    };
    auto mu0_sweep = [](int last) {
        std::vector<double> g;
        for (int i = 0; i <= last; ++i)
            g.push_back(i / 20.0);
        return g;
    };

    sweep_spec spec;
    if (name == "fig1")
    {
        spec.ka_grid = ka_sweep();
        spec.mu0_grid = {0.0, 0.25, 0.5, 1.0};
        spec.stat = statistics::distinguishable;
        spec.preset_note = "fig1 distinguishable sigma(ka) at flux {0, 0.25, 0.5, 1}; "
                           "suppression at half-odd flux for small ka, integer flux invisible";
    }
    else if (name == "fig2")
    {
        spec.ka_grid = {0.1, 0.3, 0.5};
        spec.mu0_grid = mu0_sweep(60);
        spec.stat = statistics::distinguishable;
        spec.preset_note = "fig2 distinguishable sigma(mu0) on [0, 3] at ka {0.1, 0.3, 0.5}; "
                           "period 1, minima at half-odd flux";
    }
    else if (name == "fig3")
    {
        spec.ka_grid = ka_sweep();
        spec.mu0_grid = {0.0, 0.5, 1.0, 2.0};
        spec.stat = statistics::boson;
        spec.preset_note = "fig3 boson sigma(ka) at flux {0, 0.5, 1, 2}; "
                           "suppression at odd flux for small ka";
    }
    else if (name == "fig4")
    {
        spec.ka_grid = {0.1, 0.3, 0.5};
        spec.mu0_grid = mu0_sweep(80);
        spec.stat = statistics::boson;
        spec.preset_note = "fig4 boson sigma(mu0) on [0, 4] at ka {0.1, 0.3, 0.5}; "
                           "period 2, minima at odd flux";
    }
    else if (name == "fig5")
    {
        spec.ka_grid = ka_sweep();
        spec.mu0_grid = {0.0, 0.5, 1.0, 2.0};
        spec.stat = statistics::fermion;
        spec.preset_note = "fig5 fermion sigma(ka) at flux {0, 0.5, 1, 2}; "
                           "suppression at even flux for small ka";
    }
    else if (name == "fig6")
    {
        spec.ka_grid = {0.1, 0.3, 0.5};
        spec.mu0_grid = mu0_sweep(80);
        spec.stat = statistics::fermion;
        spec.preset_note = "fig6 fermion sigma(mu0) on [0, 4] at ka {0.1, 0.3, 0.5}; "
                           "period 2, minima at even flux";
    }
    else
    {
        throw std::invalid_argument("figure_preset: unknown name '" + name
                                    + "' (expected fig1..fig6)");
    }
    return spec;
}

//---------------------------------------------------------------------------//
//! One row of the self-check battery.
struct check_row
{
    std::string name;
    bool pass = false;
    std::string detail;
};

//---------------------------------------------------------------------------//
/*!
 * Observable-level invariants of the engine, evaluated on small sample grids:
 * phase-shift route vs closed form, flux-free reduction, sum rule,
 * periodicities, flux reversal, optical theorem, mirror symmetry, positivity.
 */
inline std::vector<check_row> run_invariant_checks()
{
    std::vector<check_row> rows;
    hard_sphere const model;
    truncation_policy const pol{};

    auto add = [&rows](std::string name, bool pass, double measured, double bound) {
        std::ostringstream d;
        d << "max " << measured << " (bound " << bound << ")";
        rows.push_back({std::move(name), pass, d.str()});
    };
    auto reldiff = [](double a, double b) {
        double const s = std::max(std::fabs(a), std::fabs(b));
        return s == 0.0 ? 0.0 : std::fabs(a - b) / s;
    };

    {
        double worst = 0.0;
        for (double ka : {0.1, 1.0, 5.0})
            worst = std::max(worst,
                             reldiff(total_cross_section(model, ka, 0.0,
                                                         statistics::distinguishable, pol)
                                         .sigma_over_sigma0,
                                     flux_free_total(ka, pol).sigma_over_sigma0));
        add("flux-free reduction (phase route vs classic sum)", worst < 1e-10, worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (double mu0 : {0.0, 0.3, 1.0})
            for (double ka : {0.5, 2.0})
                worst = std::max(
                    worst,
                    reldiff(total_cross_section(model, ka, mu0, statistics::distinguishable, pol)
                                .sigma_over_sigma0,
                            hard_sphere_total_closed_form(ka, mu0,
                                                          statistics::distinguishable, pol)
                                .sigma_over_sigma0));
        add("phase route vs closed form", worst < 1e-10, worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (double mu0 : {0.2, 0.5})
        {
            double const sd = total_cross_section(model, 0.4, mu0, statistics::distinguishable, pol)
                                  .sigma_over_sigma0;
            double const sb
                = total_cross_section(model, 0.4, mu0, statistics::boson, pol).sigma_over_sigma0;
            double const sf
                = total_cross_section(model, 0.4, mu0, statistics::fermion, pol).sigma_over_sigma0;
            worst = std::max(worst, reldiff(sb + sf, 4.0 * sd));
        }
        add("sum rule sigma_b + sigma_f = 4 sigma_dist", worst < 1e-10, worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (double mu0 : {0.1, 0.37})
        {
            worst = std::max(
                worst,
                reldiff(hard_sphere_total_closed_form(0.3, mu0, statistics::distinguishable, pol)
                            .sigma_over_sigma0,
                        hard_sphere_total_closed_form(0.3, mu0 + 1.0,
                                                      statistics::distinguishable, pol)
                            .sigma_over_sigma0));
            worst = std::max(
                worst,
                reldiff(hard_sphere_total_closed_form(0.3, mu0, statistics::boson, pol)
                            .sigma_over_sigma0,
                        hard_sphere_total_closed_form(0.3, mu0 + 2.0, statistics::boson, pol)
                            .sigma_over_sigma0));
        }
        add("flux periodicity (1 single, 2 identical)", worst < 1e-9, worst, 1e-9);
    }
    {
        double worst = 0.0;
        for (double mu0 : {0.3, 0.7, 1.4})
            worst = std::max(
                worst,
                reldiff(hard_sphere_total_closed_form(0.6, mu0, statistics::distinguishable, pol)
                            .sigma_over_sigma0,
                        hard_sphere_total_closed_form(0.6, -mu0, statistics::distinguishable, pol)
                            .sigma_over_sigma0));
        add("flux reversal sigma(mu0) = sigma(-mu0)", worst < 1e-12, worst, 1e-12);
    }
    {
        double worst = 0.0;
        for (double ka : {0.1, 1.0, 5.0})
            for (double mu0 : {0.0, 0.3, 0.5})
                worst = std::max(worst, optical_theorem_residual(model, ka, mu0, pol).value);
        add("optical theorem residual", worst < 1e-8, worst, 1e-8);
    }
    {
        double worst = 0.0;
        for (double mu0 : {0.0, 0.5})
            for (double theta : {0.3, 1.1, 2.0})
            {
                auto const f1 = scattering_amplitude(model, 1.0, mu0,
                                                     incident_direction::equatorial(), theta, 0.4,
                                                     pol)
                                    .value;
                auto const f2 = scattering_amplitude(model, 1.0, mu0,
                                                     incident_direction::equatorial(),
                                                     M_PI - theta, 0.4, pol)
                                    .value;
                worst = std::max(worst, std::abs(f1 - f2) / std::max(std::abs(f1), 1e-300));
            }
        add("mirror symmetry f(theta) = f(pi-theta)", worst < 1e-10, worst, 1e-10);
    }
    {
        bool ok = true;
        double least = 0.0;
        for (double ka : {0.2, 3.0})
            for (double mu0 : {0.0, 0.25, 0.5, 0.9})
            {
                double const s = hard_sphere_total_closed_form(ka, mu0,
                                                               statistics::distinguishable, pol)
                                     .sigma_over_sigma0;
                least = std::min(least, s);
                ok = ok && s >= 0.0;
            }
        add("positivity of cross sections", ok, least, 0.0);
    }
    return rows;
}

} // namespace abscat
