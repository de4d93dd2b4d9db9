//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the abscat developers.
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file demos/suppression_scan.cpp
//! Minimal library walkthrough: scan the total cross section over the flux
//! at a fixed small ka and print the suppression pattern for the three
//! statistics.
//---------------------------------------------------------------------------//
#include <cstdio>

#include "abscat/abscat.hpp"

int main()
{
    using namespace abscat;
    double const ka = 0.3;
    std::printf("# hard sphere, ka = %g; columns: mu0, sigma/sigma0 for dist/boson/fermion\n", ka);
    for (int i = 0; i <= 40; ++i)
    {
        double const mu0 = i / 20.0;
        double const sd = hard_sphere_total_closed_form(ka, mu0, statistics::distinguishable, {})
                              .sigma_over_sigma0;
        double const sb
            = hard_sphere_total_closed_form(ka, mu0, statistics::boson, {}).sigma_over_sigma0;
        double const sf
            = hard_sphere_total_closed_form(ka, mu0, statistics::fermion, {}).sigma_over_sigma0;
        std::printf("%5.2f  %12.8f  %12.8f  %12.8f\n", mu0, sd, sb, sf);
    }
    return 0;
}
