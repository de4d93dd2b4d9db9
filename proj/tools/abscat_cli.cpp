//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the abscat developers.
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file tools/abscat_cli.cpp
//! Command-line front end: parameter sweeps, figure-data presets, single
//! amplitude evaluations, and the invariant self-check.
//!
//! Exit codes: 0 success, 2 invalid arguments, 3 sweep contains
//! non-converged points, 4 degeneracy with no closed-form fallback.
//---------------------------------------------------------------------------//
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abscat/abscat.hpp"

namespace {

//! Parse "START:STOP:STEPS" into an inclusive linear grid.
std::vector<double> parse_range(std::string const& text)
{
    double start = 0.0, stop = 0.0;
    int steps = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> start >> c1 >> stop >> c2 >> steps) || c1 != ':' || c2 != ':' || steps < 1
        || (in >> std::ws, !in.eof()))
        throw CLI::ValidationError("range", "expected START:STOP:STEPS with STEPS >= 1");
    std::vector<double> grid;
    if (steps == 1)
    {
        grid.push_back(start);
        return grid;
    }
    for (int i = 0; i < steps; ++i)
        grid.push_back(start + i * (stop - start) / (steps - 1));
    return grid;
}

struct grid_options
{
    std::vector<double> values;
    std::string range;

    std::vector<double> resolve(char const* name) const
    {
        if (!values.empty() && !range.empty())
            throw CLI::ValidationError(name, "give either the list or the range, not both");
        if (!values.empty())
            return values;
        if (!range.empty())
            return parse_range(range);
        throw CLI::ValidationError(name, "a grid is required (list or range)");
    }
};

int emit(abscat::sweep_spec const& spec, std::vector<abscat::sweep_record> const& records,
         std::string const& out_path)
{
    std::string const text = spec.format == abscat::sweep_spec::output_format::json
                                 ? abscat::to_json(spec, records)
                                 : abscat::to_csv(spec, records);
    if (out_path.empty())
    {
        std::cout << text;
    }
    else
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
        {
            std::cerr << "abscat: cannot open output file '" << out_path << "'\n";
            return 2;
        }
        out << text;
    }

    long bad = 0, degen = 0, nan_points = 0;
    for (auto const& r : records)
    {
        if (!r.converged)
            ++bad;
        if (r.degenerate)
            ++degen;
        if (!std::isfinite(r.sigma_normalized))
            ++nan_points;
    }
    // summary on stdout, unless the data itself is streaming there
    std::ostream& log = out_path.empty() ? std::cerr : std::cout;
    log << "abscat: " << records.size() << " points, " << bad << " non-converged, " << degen
        << " on the degenerate-flux branch";
    if (!out_path.empty())
        log << " -> " << out_path;
    log << "\n";
    if (nan_points > 0)
        return 4;
    if (bad > 0)
        return 3;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Partial-wave scattering from a hard sphere threaded by a magnetic flux line"};
    app.require_subcommand(1);

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "Sweep total cross sections over (ka, mu0)");
    grid_options ka_opt, mu0_opt;
    std::string stat_name = "dist";
    std::string format_name = "csv";
    std::string out_path;
    int threads = 1;
    abscat::truncation_policy policy;

    sweep->add_option("--ka", ka_opt.values, "ka grid values (repeatable)");
    sweep->add_option("--ka-range", ka_opt.range, "ka grid as START:STOP:STEPS");
    sweep->add_option("--mu0", mu0_opt.values, "flux grid values (repeatable)");
    sweep->add_option("--mu0-range", mu0_opt.range, "flux grid as START:STOP:STEPS");
    sweep->add_option("--statistics", stat_name, "dist|boson|fermion")
        ->check(CLI::IsMember({"dist", "boson", "fermion"}));
    sweep->add_option("--rel-tol", policy.rel_tol, "adaptive truncation tolerance");
    sweep->add_option("--q-max", policy.q_max, "hard cap on the polynomial degree index");
    sweep->add_option("--m-max", policy.m_max, "hard cap on |m|");
    sweep->add_option("--format", format_name, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", out_path, "output path (stdout if omitted)");
    sweep->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    // ---- figure ----
    auto* figure = app.add_subcommand("figure", "Emit a preset figure dataset (fig1..fig6)");
    std::string fig_name;
    std::string fig_out;
    int fig_threads = 1;
    figure->add_option("--name", fig_name, "fig1..fig6")->required();
    figure->add_option("--out", fig_out, "output CSV path")->required();
    figure->add_option("--threads", fig_threads, "worker threads")->check(CLI::PositiveNumber);

    // ---- amplitude ----
    auto* amp = app.add_subcommand("amplitude",
                                   "Scattering amplitude at one point (equatorial incidence)");
    double a_ka = 0.0, a_mu0 = 0.0, a_theta = 0.0, a_phi = 0.0;
    amp->add_option("--ka", a_ka, "ka")->required();
    amp->add_option("--mu0", a_mu0, "flux number")->required();
    amp->add_option("--theta", a_theta, "polar angle in radians")->required();
    amp->add_option("--phi", a_phi, "azimuthal angle in radians")->required();

    // ---- check ----
    auto* check = app.add_subcommand("check", "Run the invariant self-checks");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        if (sweep->parsed())
        {
            abscat::sweep_spec spec;
            spec.ka_grid = ka_opt.resolve("--ka");
            spec.mu0_grid = mu0_opt.resolve("--mu0");
            spec.policy = policy;
            spec.stat = stat_name == "boson" ? abscat::statistics::boson
                        : stat_name == "fermion" ? abscat::statistics::fermion
                                                 : abscat::statistics::distinguishable;
            spec.format = format_name == "json" ? abscat::sweep_spec::output_format::json
                                                : abscat::sweep_spec::output_format::csv;
            return emit(spec, abscat::run_sweep(spec, threads), out_path);
        }

        if (figure->parsed())
        {
            auto const spec = abscat::figure_preset(fig_name);
            return emit(spec, abscat::run_sweep(spec, fig_threads), fig_out);
        }

        if (amp->parsed())
        {
            abscat::hard_sphere const hs;
            try
            {
                auto const f = abscat::scattering_amplitude(
                    hs, a_ka, a_mu0, abscat::incident_direction::equatorial(), a_theta, a_phi, {});
                auto const opt = abscat::optical_theorem_residual(hs, a_ka, a_mu0, {});
                std::printf("ka = %g, mu0 = %g, theta = %g, phi = %g\n", a_ka, a_mu0, a_theta,
                            a_phi);
                std::printf("k f = %.15g %+.15gi   (amplitude in units of 1/k)\n", f.value.real(),
                            f.value.imag());
                std::printf("|k f| = %.15g\n", std::abs(f.value));
                std::printf("channels = %ld, residual = %g, converged = %s\n",
                            f.convergence.channels, f.convergence.residual,
                            f.convergence.converged ? "yes" : "no");
                std::printf("optical-theorem residual = %.3g%s\n", opt.value,
                            opt.absolute ? " (absolute; no scattering)" : "");
                return f.convergence.converged ? 0 : 3;
            }
            catch (abscat::degeneracy_error const& e)
            {
                std::cerr << "abscat: " << e.what() << "\n"
                          << "abscat: the phase-shift parameterization is degenerate here and no "
                             "closed form applies\n";
                return 4;
            }
        }

        if (check->parsed())
        {
            auto const rows = abscat::run_invariant_checks();
            int bad = 0;
            std::printf("%-52s %-6s %s\n", "invariant", "result", "measured");
            for (auto const& r : rows)
            {
                std::printf("%-52s %-6s %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                            r.detail.c_str());
                if (!r.pass)
                    ++bad;
            }
            return bad == 0 ? 0 : 1;
        }
    }
    catch (CLI::ValidationError const& e)
    {
        std::cerr << "abscat: " << e.what() << "\n";
        return 2;
    }
    catch (std::invalid_argument const& e)
    {
        std::cerr << "abscat: " << e.what() << "\n";
        return 2;
    }
    catch (std::domain_error const& e)
    {
        std::cerr << "abscat: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
