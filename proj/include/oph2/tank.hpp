// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT
#pragma once

// Liquid-tank boil-off kinetics. Conversion of the stored ortho fraction
// releases heat, heat evaporates liquid:
//   dx/dt = -gamma k x^order
//   dN/dt = -(N gamma k x^order dE + Qdot) / L
// Vapor leaves at the instantaneous liquid composition, so x(t) decouples
// from N(t); with Qdot = 0 this gives the closed forms
//   order 2: x = x0 / (1 + k x0 t),  order 1: x = x0 exp(-k t),
//   N = N0 exp(-(dE/L)(x0 - x)),
// which the integrator tests use as an oracle. Integration is fixed-step
// RK4 with post-step clamping of x to [0,1] and N to [0, inf).

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "oph2/constants.hpp"
#include "oph2/detail/text.hpp"

namespace oph2 {

struct TankParams {
  int order = 2;      // kinetic order in x, 1 or 2
  double rate_k = 0.0;  // 1/h (order 1) or 1/(h * fraction) (order 2)
  double latent_heat_kj_per_mol = default_latent_heat_kj_per_mol;
  double conversion_heat_kj_per_mol = default_conversion_heat_kj_per_mol;
  double heat_leak_kj_per_h = 0.0;
  double catalyst_gamma = 1.0;
};

struct TankState {
  double n_mol = 1.0;
  double x_ortho = 0.75;
  double t_hours = 0.0;
};

inline void validate(const TankParams& p) {
  if (p.order != 1 && p.order != 2) throw std::invalid_argument("kinetic order must be 1 or 2");
  if (!(p.rate_k >= 0.0)) throw std::invalid_argument("rate constant must be non-negative");
  if (!(p.latent_heat_kj_per_mol > 0.0)) throw std::invalid_argument("latent heat must be positive");
  if (!(p.conversion_heat_kj_per_mol >= 0.0))
    throw std::invalid_argument("conversion heat must be non-negative");
  if (!(p.heat_leak_kj_per_h >= 0.0)) throw std::invalid_argument("heat leak must be non-negative");
  if (!(p.catalyst_gamma >= 0.0)) throw std::invalid_argument("catalyst multiplier must be non-negative");
}

inline void validate(const TankState& s) {
  if (!(s.x_ortho >= 0.0 && s.x_ortho <= 1.0))
    throw std::invalid_argument("ortho fraction must be in [0, 1]");
  if (!(s.n_mol >= 0.0)) throw std::invalid_argument("liquid amount must be non-negative");
}

namespace detail {

struct TankRate {
  double dn = 0.0;
  double dx = 0.0;
};

inline TankRate tank_rhs(double n, double x, const TankParams& p) {
  const double xc = x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x);
  const double conv = p.catalyst_gamma * p.rate_k * (p.order == 1 ? xc : xc * xc);
  TankRate r;
  r.dx = -conv;
  // An empty tank stops evaporating; the heat-leak term would otherwise
  // drive N negative.
  r.dn = n > 0.0 ? -(n * conv * p.conversion_heat_kj_per_mol + p.heat_leak_kj_per_h) /
                       p.latent_heat_kj_per_mol
                 : 0.0;
  return r;
}

}  // namespace detail

inline TankState step(const TankState& state, const TankParams& params, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  validate(params);
  validate(state);
  const auto k1 = detail::tank_rhs(state.n_mol, state.x_ortho, params);
  const auto k2 = detail::tank_rhs(state.n_mol + 0.5 * dt * k1.dn, state.x_ortho + 0.5 * dt * k1.dx, params);
  const auto k3 = detail::tank_rhs(state.n_mol + 0.5 * dt * k2.dn, state.x_ortho + 0.5 * dt * k2.dx, params);
  const auto k4 = detail::tank_rhs(state.n_mol + dt * k3.dn, state.x_ortho + dt * k3.dx, params);
  TankState out;
  out.n_mol = state.n_mol + dt / 6.0 * (k1.dn + 2.0 * k2.dn + 2.0 * k3.dn + k4.dn);
  out.x_ortho = state.x_ortho + dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
  if (out.n_mol < 0.0) out.n_mol = 0.0;
  if (out.x_ortho < 0.0) out.x_ortho = 0.0;
  if (out.x_ortho > 1.0) out.x_ortho = 1.0;
  out.t_hours = state.t_hours + dt;
  return out;
}

// Repeated fixed steps; the last step is shortened so the final sample sits
// exactly at state.t_hours + horizon.
inline std::vector<TankState> simulate(const TankState& initial, const TankParams& params,
                                       double horizon_hours, double dt) {
  if (!(horizon_hours > 0.0)) throw std::invalid_argument("horizon must be positive");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  validate(params);
  validate(initial);
  std::vector<TankState> traj;
  const auto n_full = static_cast<long long>(std::floor(horizon_hours / dt + 1e-12));
  traj.reserve(static_cast<std::size_t>(n_full) + 2);
  traj.push_back(initial);
  TankState s = initial;
  for (long long i = 0; i < n_full; ++i) {
    s = step(s, params, dt);
    traj.push_back(s);
  }
  const double remainder = horizon_hours - static_cast<double>(n_full) * dt;
  if (remainder > 1e-9 * dt) {
    s = step(s, params, remainder);
    traj.push_back(s);
  }
  traj.back().t_hours = initial.t_hours + horizon_hours;
  return traj;
}

inline double boiloff_fraction(const std::vector<TankState>& trajectory) {
  if (trajectory.empty()) throw std::invalid_argument("empty trajectory");
  const double n0 = trajectory.front().n_mol;
  if (!(n0 > 0.0)) throw std::invalid_argument("initial liquid amount must be positive");
  return 1.0 - trajectory.back().n_mol / n0;
}

// Bisection on the rate constant so that the simulated boil-off at
// at_hours matches the target within 1e-6. Boil-off is monotone in k, so
// the root is unique. params.rate_k is ignored.
inline double calibrate_rate(double x0, double target_boiloff, double at_hours,
                             const TankParams& params, double dt = 0.01) {
  if (!(x0 >= 0.0 && x0 <= 1.0)) throw std::invalid_argument("x0 must be in [0,1]");
  if (!(at_hours > 0.0)) throw std::invalid_argument("at_hours must be positive");
  if (!(target_boiloff >= 0.0 && target_boiloff < 1.0))
    throw std::invalid_argument("target boil-off must be in [0, 1)");
  TankParams p = params;
  p.rate_k = 0.0;
  validate(p);
  if (target_boiloff == 0.0) return 0.0;
  if (p.heat_leak_kj_per_h == 0.0) {
    const double max_achievable =
        1.0 - std::exp(-(p.conversion_heat_kj_per_mol / p.latent_heat_kj_per_mol) * x0);
    if (!(target_boiloff < max_achievable))
      throw std::invalid_argument("target boil-off unreachable at this ortho fraction");
  }
  if (!(p.catalyst_gamma > 0.0))
    throw std::invalid_argument("target boil-off unreachable with a zero catalyst multiplier");

  const auto boiloff_at = [&](double k) {
    TankParams q = p;
    q.rate_k = k;
    return boiloff_fraction(simulate(TankState{1.0, x0, 0.0}, q, at_hours, dt));
  };
  if (boiloff_at(0.0) >= target_boiloff)
    throw std::invalid_argument("target boil-off below the zero-rate baseline");

  double lo = 0.0, hi = 1e-3;
  while (boiloff_at(hi) < target_boiloff) {
    hi *= 2.0;
    if (hi > 1e9) throw std::runtime_error("target boil-off unreachable");
  }
  double mid = hi;
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double b = boiloff_at(mid);
    if (std::abs(b - target_boiloff) <= 1e-6) return mid;
    (b < target_boiloff ? lo : hi) = mid;
  }
  return mid;
}

// CSV: header `t_h,n_mol,x_ortho`, 6 significant digits per value.
inline std::string trajectory_csv(const std::vector<TankState>& trajectory) {
  std::string out = "t_h,n_mol,x_ortho\n";
  for (const TankState& s : trajectory)
    out += detail::fmt6(s.t_hours) + "," + detail::fmt6(s.n_mol) + "," + detail::fmt6(s.x_ortho) + "\n";
  return out;
}

}  // namespace oph2
