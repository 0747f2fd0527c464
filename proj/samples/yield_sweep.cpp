// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT
//
// Minimal library walkthrough: build an analytic spin-density field, sweep
// the conversion yield over (Z, theta), and report the steric ratio.

#include <cstdio>

#include "oph2/oph2.hpp"

int main() {
  const auto field = oph2::synthetic_field(oph2::ProfileKind::exponential, 1.0, 0.5);
  oph2::ProbeGeometry geom;  // axis z, center at the origin, d = 0.74 A
  oph2::HyperfineParams params;

  const auto curve = oph2::sweep(field, geom, params, oph2::linspace(0.2, 3.0, 57), {10.0, 70.0});
  std::fputs(oph2::yield_curve_csv(curve).c_str(), stdout);

  const double ratio = oph2::steric_ratio(field, geom, params, 1.0);
  std::printf("# steric ratio at Z = 1.0 A: %.4f\n", ratio);

  const auto extrema = oph2::find_extrema(curve, 10.0);
  std::printf("# interior extrema of xi at theta = 10 deg: %zu\n", extrema.size());
  return 0;
}
