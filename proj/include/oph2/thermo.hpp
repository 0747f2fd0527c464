// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT
#pragma once

// Rigid-rotor rotational thermodynamics of H2. Para occupies even j with
// nuclear spin weight 1, ortho occupies odd j with weight 3. The rotational
// constant default of 7.54 meV puts the lowest ortho level 15.08 meV above
// the para ground state.

#include <cmath>
#include <stdexcept>
#include <string>

#include "oph2/constants.hpp"

namespace oph2 {

struct RotationalModel {
  double b_mev = default_rotational_constant_mev;  // > 0
  int j_max = 20;  // truncation; converged to < 1e-12 up to roughly 1100 K
};

enum class Species { para, ortho, normal, equilibrium };

inline double rot_energy(const RotationalModel& model, int j) {
  if (j < 0) throw std::invalid_argument("j must be non-negative");
  if (!(model.b_mev > 0.0)) throw std::invalid_argument("rotational constant must be positive");
  return model.b_mev * j * (j + 1);
}

namespace detail {

struct ParitySums {
  double z = 0.0;
  double e = 0.0;   // sum of w * E
  double e2 = 0.0;  // sum of w * E^2
  double last_term = 0.0;
};

inline ParitySums parity_sums(const RotationalModel& model, double t_kelvin, int parity) {
  const double kt = k_boltzmann_mev_per_kelvin * t_kelvin;
  ParitySums s;
  for (int j = parity; j <= model.j_max; j += 2) {
    const double e = model.b_mev * j * (j + 1);
    const double w = (2.0 * j + 1.0) * std::exp(-e / kt);
    s.z += w;
    s.e += w * e;
    s.e2 += w * e * e;
    if (j + 2 > model.j_max) s.last_term = w;
  }
  return s;
}

// The truncation is accepted only when the largest retained level of either
// parity contributes < 1e-12 of the total partition sum.
inline std::pair<ParitySums, ParitySums> converged_sums(const RotationalModel& model,
                                                        double t_kelvin) {
  if (!(t_kelvin > 0.0)) throw std::invalid_argument("temperature must be positive");
  if (model.j_max < 5) throw std::invalid_argument("j_max must be at least 5");
  if (!(model.b_mev > 0.0)) throw std::invalid_argument("rotational constant must be positive");
  const ParitySums even = parity_sums(model, t_kelvin, 0);
  const ParitySums odd = parity_sums(model, t_kelvin, 1);
  const double tail = std::max(even.last_term, odd.last_term);
  if (!(tail < 1e-12 * (even.z + odd.z)))
    throw std::runtime_error("rotational sum not converged at T = " + std::to_string(t_kelvin) +
                             " K; increase j_max");
  return {even, odd};
}

}  // namespace detail

inline double equilibrium_ortho_fraction(const RotationalModel& model, double t_kelvin) {
  const auto [even, odd] = detail::converged_sums(model, t_kelvin);
  return 3.0 * odd.z / (even.z + 3.0 * odd.z);
}

namespace detail {

inline double variance_heat_capacity(const ParitySums& s, double t_kelvin) {
  const double kt = k_boltzmann_mev_per_kelvin * t_kelvin;
  const double mean = s.e / s.z;
  const double mean2 = s.e2 / s.z;
  return (mean2 - mean * mean) / (kt * kt);
}

inline double equilibrium_mean_energy(const RotationalModel& model, double t_kelvin) {
  const auto [even, odd] = converged_sums(model, t_kelvin);
  const double x = 3.0 * odd.z / (even.z + 3.0 * odd.z);
  return x * (odd.e / odd.z) + (1.0 - x) * (even.e / even.z);
}

}  // namespace detail

// Heat capacity per molecule in k_B units. The frozen normal mixture is the
// 3:1 weighted sum of the species values; the equilibrium species includes
// the temperature dependence of the ortho fraction via a central finite
// difference of the mixture mean energy.
inline double rotational_heat_capacity(const RotationalModel& model, Species species,
                                       double t_kelvin) {
  switch (species) {
    case Species::para: {
      const auto [even, odd] = detail::converged_sums(model, t_kelvin);
      (void)odd;
      return detail::variance_heat_capacity(even, t_kelvin);
    }
    case Species::ortho: {
      const auto [even, odd] = detail::converged_sums(model, t_kelvin);
      (void)even;
      return detail::variance_heat_capacity(odd, t_kelvin);
    }
    case Species::normal:
      return 0.75 * rotational_heat_capacity(model, Species::ortho, t_kelvin) +
             0.25 * rotational_heat_capacity(model, Species::para, t_kelvin);
    case Species::equilibrium: {
      const double h = 1e-3 * t_kelvin;
      const double hi = detail::equilibrium_mean_energy(model, t_kelvin + h);
      const double lo = detail::equilibrium_mean_energy(model, t_kelvin - h);
      return (hi - lo) / (2.0 * h) / k_boltzmann_mev_per_kelvin;
    }
  }
  throw std::invalid_argument("unknown species");
}

// Heat released when the ortho fraction drops from x_from to x_to, kJ/mol.
// Counts only the lowest-level release, which dominates at the cryogenic
// temperatures where it matters.
inline double conversion_heat(const RotationalModel& model, double x_from, double x_to) {
  if (!(x_to >= 0.0 && x_from >= x_to && x_from <= 1.0))
    throw std::invalid_argument("fractions must satisfy 0 <= x_to <= x_from <= 1");
  return (x_from - x_to) * rot_energy(model, 1) * mev_to_kj_per_mol;
}

}  // namespace oph2
