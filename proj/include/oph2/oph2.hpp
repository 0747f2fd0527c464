// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT
#pragma once

// Umbrella header for the ortho-para H2 conversion toolkit.

#include "oph2/alignment.hpp"
#include "oph2/constants.hpp"
#include "oph2/density_field.hpp"
#include "oph2/hyperfine.hpp"
#include "oph2/pipeline.hpp"
#include "oph2/spin_algebra.hpp"
#include "oph2/tank.hpp"
#include "oph2/thermo.hpp"
#include "oph2/vec3.hpp"
