// Copyright (c) 2026 the cgobeam authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "cgobeam/beams.hpp"
#include "cgobeam/checks.hpp"
#include "cgobeam/coords.hpp"
#include "cgobeam/dirac.hpp"
#include "cgobeam/eight.hpp"
#include "cgobeam/errors.hpp"
#include "cgobeam/fd.hpp"
#include "cgobeam/grid.hpp"
#include "cgobeam/io.hpp"
#include "cgobeam/kelvin.hpp"
#include "cgobeam/lcw.hpp"
#include "cgobeam/medium.hpp"
#include "cgobeam/presets.hpp"
#include "cgobeam/rng.hpp"
#include "cgobeam/vec.hpp"
#include "cgobeam/verify.hpp"
