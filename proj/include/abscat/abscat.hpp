//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the abscat developers.
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file abscat/abscat.hpp
//! Umbrella header.
//---------------------------------------------------------------------------//
#pragma once

#include "abscat/amplitude.hpp"
#include "abscat/channels.hpp"
#include "abscat/cross_section.hpp"
#include "abscat/phase_shift.hpp"
#include "abscat/specfun.hpp"
#include "abscat/sweep.hpp"
