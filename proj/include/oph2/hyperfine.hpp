// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT
#pragma once

// Conversion matrix element xi(Z, theta) and relative yield W = |xi|^2.
//
// The contact interaction reduces to point evaluations of the net spin
// density at the two proton positions:
//   xi = lambda_c * kappa * [rho_s(r_a) - rho_s(r_b)]
// where kappa is the nuclear-spin coupling norm of the selected ortho
// sublevel policy. Every sublevel has unit coupling norm, so kappa = 1 for
// both policies; it is still computed from the spin algebra rather than
// hard-coded. Yields are relative: the proportionality constant of W is 1.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "oph2/density_field.hpp"
#include "oph2/detail/text.hpp"
#include "oph2/spin_algebra.hpp"

namespace oph2 {

enum class SublevelPolicy { single, unpolarized };

struct HyperfineParams {
  double lambda_c = 1.0;  // finite and nonzero
  SublevelPolicy policy = SublevelPolicy::unpolarized;
  int m_o = 0;  // sublevel used by the single policy
};

struct YieldCurve {
  std::vector<double> z;          // Angstrom, strictly increasing
  std::vector<double> theta_deg;  // column labels
  // xi[iz][itheta] and w[iz][itheta]
  std::vector<std::vector<double>> xi;
  std::vector<std::vector<double>> w;
};

enum class ExtremumKind { maximum, minimum };

struct Extremum {
  double z = 0.0;
  double value = 0.0;
  ExtremumKind kind = ExtremumKind::maximum;
};

namespace detail {

inline double coupling_norm(const HyperfineParams& p) {
  if (!(std::isfinite(p.lambda_c)) || p.lambda_c == 0.0)
    throw std::invalid_argument("lambda_c must be finite and nonzero");
  if (p.policy == SublevelPolicy::single)
    return std::sqrt(transition_vector(p.m_o).squared_norm());
  return std::sqrt(ensemble_coupling_strength());
}

}  // namespace detail

inline double xi(const SpinDensityField& field, const ProbeGeometry& geom,
                 const HyperfineParams& params, double z, double theta_deg) {
  const double kappa = detail::coupling_norm(params);
  const ProbeSample s = probe_pair(field, geom, z, theta_deg);
  return params.lambda_c * (kappa * s.delta);
}

inline double yield_w(const SpinDensityField& field, const ProbeGeometry& geom,
                      const HyperfineParams& params, double z, double theta_deg) {
  const double v = xi(field, geom, params, z, theta_deg);
  return v * v;
}

inline std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("linspace needs at least 2 samples");
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + i * step;
  out.back() = hi;
  return out;
}

inline YieldCurve sweep(const SpinDensityField& field, const ProbeGeometry& geom,
                        const HyperfineParams& params, const std::vector<double>& z_samples,
                        const std::vector<double>& theta_list) {
  if (z_samples.size() < 2)
    throw std::invalid_argument("Z range needs at least 2 samples");
  for (std::size_t i = 1; i < z_samples.size(); ++i)
    if (!(z_samples[i] > z_samples[i - 1]))
      throw std::invalid_argument("Z samples must be strictly increasing");
  if (theta_list.empty()) throw std::invalid_argument("theta list must be nonempty");

  YieldCurve curve;
  curve.z = z_samples;
  curve.theta_deg = theta_list;
  curve.xi.resize(z_samples.size());
  curve.w.resize(z_samples.size());
  for (std::size_t iz = 0; iz < z_samples.size(); ++iz) {
    curve.xi[iz].resize(theta_list.size());
    curve.w[iz].resize(theta_list.size());
    for (std::size_t it = 0; it < theta_list.size(); ++it) {
      const double v = xi(field, geom, params, z_samples[iz], theta_list[it]);
      curve.xi[iz][it] = v;
      curve.w[iz][it] = v * v;
    }
  }
  return curve;
}

// Interior extrema of xi(Z) at fixed theta, located by sign changes of the
// first differences. A plateau between opposite-sign differences reports
// its leftmost sample; endpoints are never reported.
inline std::vector<Extremum> find_extrema(const YieldCurve& curve, double theta_deg) {
  std::size_t col = curve.theta_deg.size();
  for (std::size_t i = 0; i < curve.theta_deg.size(); ++i)
    if (curve.theta_deg[i] == theta_deg) {
      col = i;
      break;
    }
  if (col == curve.theta_deg.size())
    throw std::invalid_argument("theta not present in curve");

  std::vector<Extremum> out;
  int prev_sign = 0;
  std::size_t prev_pos = 0;  // index of the difference where prev_sign was seen
  for (std::size_t i = 0; i + 1 < curve.z.size(); ++i) {
    const double d = curve.xi[i + 1][col] - curve.xi[i][col];
    const int s = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (prev_sign != 0 && s != prev_sign) {
      const std::size_t at = prev_pos + 1;  // leftmost sample after the last move
      out.push_back({curve.z[at], curve.xi[at][col],
                     prev_sign > 0 ? ExtremumKind::maximum : ExtremumKind::minimum});
    }
    prev_sign = s;
    prev_pos = i;
  }
  return out;
}

inline double steric_ratio(const SpinDensityField& field, const ProbeGeometry& geom,
                           const HyperfineParams& params, double z, double theta_clr_deg = 10.0,
                           double theta_hlr_deg = 70.0) {
  const double w_clr = yield_w(field, geom, params, z, theta_clr_deg);
  const double w_hlr = yield_w(field, geom, params, z, theta_hlr_deg);
  if (w_hlr < 1e-30) throw std::runtime_error("HLR yield vanishes");
  return w_clr / w_hlr;
}

// CSV: header z, then one xi and one w column per theta; 6 significant
// digits per value.
inline std::string yield_curve_csv(const YieldCurve& curve) {
  std::string out = "z";
  char label[40];
  for (double th : curve.theta_deg) {
    std::snprintf(label, sizeof label, "%g", th);
    out += std::string(",xi_") + label + ",w_" + label;
  }
  out += "\n";
  for (std::size_t iz = 0; iz < curve.z.size(); ++iz) {
    out += detail::fmt6(curve.z[iz]);
    for (std::size_t it = 0; it < curve.theta_deg.size(); ++it)
      out += "," + detail::fmt6(curve.xi[iz][it]) + "," + detail::fmt6(curve.w[iz][it]);
    out += "\n";
  }
  return out;
}

}  // namespace oph2
