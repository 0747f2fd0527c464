// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT
//
// Calibrates the natural conversion rate to the 40% boil-off in 100 hours
// datum, then compares storage of normal hydrogen against a pre-converted
// fill and a catalyzed tank.

#include <cstdio>

#include "oph2/oph2.hpp"

int main() {
  oph2::TankParams params;  // order 2, no heat leak
  const double x_normal = 0.75;
  params.rate_k = oph2::calibrate_rate(x_normal, 0.40, 100.0, params);
  std::printf("calibrated rate constant: %.6g per hour per fraction\n", params.rate_k);

  const auto run = [&](double x0, double gamma) {
    oph2::TankParams p = params;
    p.catalyst_gamma = gamma;
    const auto traj = oph2::simulate(oph2::TankState{1.0, x0, 0.0}, p, 100.0, 0.01);
    return oph2::boiloff_fraction(traj);
  };

  std::printf("boil-off after 100 h, normal fill:        %.4f\n", run(x_normal, 1.0));
  std::printf("boil-off after 100 h, pre-converted fill: %.4f\n", run(0.05, 1.0));

  // A catalyst speeds conversion up and makes the loss worse, which is why
  // conversion belongs at the liquefier rather than in the storage tank.
  std::printf("boil-off after 100 h, 10x catalyst:       %.4f\n", run(x_normal, 10.0));

  oph2::RotationalModel model;
  std::printf("heat released converting a normal fill completely: %.4f kJ/mol\n",
              oph2::conversion_heat(model, x_normal, 0.0));
  return 0;
}
