// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT
#pragma once

// Electron net spin-density fields rho_s(r) and the paired-proton probe.
//
// A field is either a volumetric grid parsed from cube-format text or an
// analytic radial profile. Grid lengths are stored in Angstrom (cube input
// is Bohr and converted once at parse time); grid values pass through
// unconverted and are interpreted as net spin density. Sampling a grid uses
// trilinear interpolation and treats points outside the hull as errors,
// never as zeros, because silent zero-extrapolation would corrupt the sign
// of probe differences.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oph2/constants.hpp"
#include "oph2/detail/text.hpp"
#include "oph2/vec3.hpp"

namespace oph2 {

class CubeParseError : public std::runtime_error {
 public:
  explicit CubeParseError(const std::string& what) : std::runtime_error(what) {}
};

struct CubeAtom {
  int atomic_number = 0;
  double charge = 0.0;
  Vec3 position;  // Angstrom
};

struct GridData {
  Vec3 origin;                  // Angstrom
  std::array<Vec3, 3> step;     // voxel step vectors, Angstrom
  std::array<int, 3> dims{};    // each >= 2
  std::vector<double> values;   // first index outermost, third innermost
  std::vector<CubeAtom> atoms;
  // Rows of the inverse voxel matrix, cached so that point -> fractional
  // index is a single matrix product.
  std::array<Vec3, 3> inv_rows;

  double value_at(int i1, int i2, int i3) const {
    return values[(static_cast<std::size_t>(i1) * dims[1] + i2) * dims[2] + i3];
  }
};

enum class ProfileKind { exponential, gaussian };

struct AnalyticProfile {
  ProfileKind kind = ProfileKind::exponential;
  Vec3 center;
  double amplitude = 1.0;      // value at the center
  double decay_length = 1.0;   // Angstrom, > 0
};

struct SpinDensityField {
  std::variant<GridData, AnalyticProfile> data;

  bool is_grid() const { return std::holds_alternative<GridData>(data); }
  const GridData& grid() const { return std::get<GridData>(data); }
  const AnalyticProfile& profile() const { return std::get<AnalyticProfile>(data); }
};

struct ProbeGeometry {
  Vec3 axis{0.0, 0.0, 1.0};    // surface normal; normalized internally
  Vec3 center{0.0, 0.0, 0.0};  // ion position, Angstrom
  double bond_length = default_bond_length_angstrom;  // > 0
  double azimuth_deg = 0.0;
};

struct ProbeSample {
  double rho_a = 0.0;
  double rho_b = 0.0;
  double delta = 0.0;  // rho_a - rho_b
};

inline SpinDensityField synthetic_field(ProfileKind kind, double amplitude, double decay_length,
                                        Vec3 center = {}) {
  if (!(decay_length > 0.0)) throw std::invalid_argument("decay length must be positive");
  if (!std::isfinite(amplitude)) throw std::invalid_argument("amplitude must be finite");
  return SpinDensityField{AnalyticProfile{kind, center, amplitude, decay_length}};
}

namespace detail {

[[noreturn]] inline void cube_fail(const std::string& what, std::size_t line_no) {
  throw CubeParseError(what + " (line " + std::to_string(line_no) + ")");
}

inline std::array<Vec3, 3> invert_rows(const std::array<Vec3, 3>& col, std::size_t line_no) {
  // col[i] is the i-th voxel step vector; build the inverse of the matrix
  // whose columns are the steps and return its rows.
  const Vec3 c0 = col[0], c1 = col[1], c2 = col[2];
  const double det = dot(c0, cross(c1, c2));
  const double scale = norm(c0) * norm(c1) * norm(c2);
  if (!(std::abs(det) > 1e-12 * (scale > 0.0 ? scale : 1.0)))
    cube_fail("malformed header: voxel step vectors are linearly dependent", line_no);
  const Vec3 r0 = (1.0 / det) * cross(c1, c2);
  const Vec3 r1 = (1.0 / det) * cross(c2, c0);
  const Vec3 r2 = (1.0 / det) * cross(c0, c1);
  return {r0, r1, r2};
}

inline std::vector<std::string_view> to_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return lines;
}

}  // namespace detail

// Parses the cube text format. Layout contract:
//   lines 1-2: free comments
//   line 3:    integer natoms, 3 floats origin (Bohr)
//   lines 4-6: integer n_i, 3 floats voxel step vector i (Bohr)
//   natoms lines: integer atomic number, float charge, 3 floats position (Bohr)
//   then n1*n2*n3 whitespace-separated values, third index fastest.
// Negative voxel counts (the Angstrom-unit convention) are rejected.
inline SpinDensityField parse_cube(std::string_view text) {
  using detail::cube_fail;
  const auto lines = detail::to_lines(text);
  if (lines.size() < 6) cube_fail("malformed header: file truncated", lines.size());

  GridData g;
  int natoms = 0;
  {
    const auto toks = oph2::detail::split_ws(lines[2]);
    double o[3];
    if (toks.size() != 4 || !oph2::detail::parse_int(toks[0], natoms) ||
        !oph2::detail::parse_double(toks[1], o[0]) || !oph2::detail::parse_double(toks[2], o[1]) ||
        !oph2::detail::parse_double(toks[3], o[2]))
      cube_fail("malformed header: expected atom count and origin", 3);
    if (natoms < 0) cube_fail("malformed header: negative atom count", 3);
    g.origin = bohr_to_angstrom * Vec3{o[0], o[1], o[2]};
  }
  for (int i = 0; i < 3; ++i) {
    const std::size_t ln = 4 + static_cast<std::size_t>(i);
    const auto toks = oph2::detail::split_ws(lines[ln - 1]);
    int n = 0;
    double s[3];
    if (toks.size() != 4 || !oph2::detail::parse_int(toks[0], n) ||
        !oph2::detail::parse_double(toks[1], s[0]) || !oph2::detail::parse_double(toks[2], s[1]) ||
        !oph2::detail::parse_double(toks[3], s[2]))
      cube_fail("malformed header: expected voxel count and step vector", ln);
    if (n < 0)
      cube_fail("malformed header: negative voxel count (Angstrom-unit cube input is not supported)",
                ln);
    if (n < 2) cube_fail("malformed header: grid dimension must be at least 2", ln);
    g.dims[i] = n;
    g.step[i] = bohr_to_angstrom * Vec3{s[0], s[1], s[2]};
  }
  g.inv_rows = detail::invert_rows(g.step, 6);

  std::size_t line_idx = 6;  // 0-based index of the next unread line
  for (int a = 0; a < natoms; ++a, ++line_idx) {
    if (line_idx >= lines.size())
      cube_fail("atom count mismatch: expected " + std::to_string(natoms) + " atom lines",
                lines.size());
    const auto toks = oph2::detail::split_ws(lines[line_idx]);
    CubeAtom atom;
    if (toks.size() != 5 || !oph2::detail::parse_int(toks[0], atom.atomic_number))
      cube_fail("atom count mismatch: expected an atom line", line_idx + 1);
    double f[4];
    for (int k = 0; k < 4; ++k)
      if (!oph2::detail::parse_double(toks[k + 1], f[k]))
        cube_fail("non-numeric token '" + std::string(toks[k + 1]) + "'", line_idx + 1);
    atom.charge = f[0];
    atom.position = bohr_to_angstrom * Vec3{f[1], f[2], f[3]};
    g.atoms.push_back(atom);
  }

  const std::size_t expected = static_cast<std::size_t>(g.dims[0]) * g.dims[1] * g.dims[2];
  g.values.reserve(expected);
  std::size_t last_line_with_data = line_idx;
  for (; line_idx < lines.size(); ++line_idx) {
    const auto toks = oph2::detail::split_ws(lines[line_idx]);
    if (!toks.empty()) last_line_with_data = line_idx + 1;
    for (const auto tok : toks) {
      double v = 0.0;
      if (!oph2::detail::parse_double(tok, v))
        cube_fail("non-numeric token '" + std::string(tok) + "'", line_idx + 1);
      if (g.values.size() == expected)
        cube_fail("inconsistent value count: expected " + std::to_string(expected) +
                      " values but found extra data",
                  line_idx + 1);
      g.values.push_back(v);
    }
  }
  if (g.values.size() != expected)
    cube_fail("inconsistent value count: expected " + std::to_string(expected) + " values, found " +
                  std::to_string(g.values.size()),
              last_line_with_data);

  return SpinDensityField{std::move(g)};
}

// Serializes a grid field back to cube text (lengths converted to Bohr).
// Values are written with round-trip precision.
inline std::string serialize_cube(const SpinDensityField& field) {
  if (!field.is_grid())
    throw std::invalid_argument("only grid fields serialize to cube text");
  const GridData& g = field.grid();
  const double to_bohr = 1.0 / bohr_to_angstrom;
  auto f = [](double v) { return oph2::detail::fmt_full(v); };
  std::string out;
  out += "net spin density grid\n";
  out += "volumetric values, third index fastest\n";
  const Vec3 o = to_bohr * g.origin;
  out += std::to_string(g.atoms.size()) + " " + f(o.x) + " " + f(o.y) + " " + f(o.z) + "\n";
  for (int i = 0; i < 3; ++i) {
    const Vec3 s = to_bohr * g.step[i];
    out += std::to_string(g.dims[i]) + " " + f(s.x) + " " + f(s.y) + " " + f(s.z) + "\n";
  }
  for (const CubeAtom& a : g.atoms) {
    const Vec3 p = to_bohr * a.position;
    out += std::to_string(a.atomic_number) + " " + f(a.charge) + " " + f(p.x) + " " + f(p.y) +
           " " + f(p.z) + "\n";
  }
  std::size_t col = 0;
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    out += f(g.values[i]);
    if (++col == 6 || i + 1 == g.values.size()) {
      out += "\n";
      col = 0;
    } else {
      out += " ";
    }
  }
  return out;
}

inline double sample(const SpinDensityField& field, Vec3 point) {
  if (!field.is_grid()) {
    const AnalyticProfile& p = field.profile();
    const double r = norm(point - p.center);
    if (p.kind == ProfileKind::exponential) return p.amplitude * std::exp(-r / p.decay_length);
    return p.amplitude * std::exp(-(r * r) / (p.decay_length * p.decay_length));
  }

  const GridData& g = field.grid();
  const Vec3 rel = point - g.origin;
  double f[3] = {dot(g.inv_rows[0], rel), dot(g.inv_rows[1], rel), dot(g.inv_rows[2], rel)};
  int base[3];
  double frac[3];
  for (int i = 0; i < 3; ++i) {
    const double hi = static_cast<double>(g.dims[i] - 1);
    // Boundary-inclusive hull test with a small tolerance in fractional
    // units, then clamp; exact nodes therefore reproduce stored values.
    if (!(f[i] >= -1e-9 && f[i] <= hi + 1e-9))
      throw std::runtime_error("sample point outside grid hull");
    double fi = f[i] < 0.0 ? 0.0 : (f[i] > hi ? hi : f[i]);
    int b = static_cast<int>(fi);
    if (b > g.dims[i] - 2) b = g.dims[i] - 2;
    base[i] = b;
    frac[i] = fi - b;
  }
  double acc = 0.0;
  for (int c = 0; c < 8; ++c) {
    const int d1 = c & 1, d2 = (c >> 1) & 1, d3 = (c >> 2) & 1;
    const double w = (d1 ? frac[0] : 1.0 - frac[0]) * (d2 ? frac[1] : 1.0 - frac[1]) *
                     (d3 ? frac[2] : 1.0 - frac[2]);
    acc += w * g.value_at(base[0] + d1, base[1] + d2, base[2] + d3);
  }
  return acc;
}

namespace detail {

struct ProbeFrame {
  Vec3 axis;  // unit
  Vec3 t1;    // unit, azimuth 0 direction
  Vec3 t2;    // unit, completes the right-handed frame
};

inline ProbeFrame probe_frame(const ProbeGeometry& geom) {
  const double n = norm(geom.axis);
  if (!(n > 0.0)) throw std::invalid_argument("probe axis must be nonzero");
  const Vec3 a = (1.0 / n) * geom.axis;
  // Seed with the coordinate direction least aligned with the axis; ties
  // resolve to x, then y, so the frame is deterministic.
  const double ax = std::abs(a.x), ay = std::abs(a.y), az = std::abs(a.z);
  Vec3 e{1.0, 0.0, 0.0};
  if (ay < ax && ay <= az)
    e = {0.0, 1.0, 0.0};
  else if (az < ax && az < ay)
    e = {0.0, 0.0, 1.0};
  Vec3 h = cross(a, e);
  const double hn = norm(h);
  Vec3 t2 = (1.0 / hn) * h;
  Vec3 t1 = cross(t2, a);
  return {a, t1, t2};
}

// Unit bond direction at polar angle theta from the axis. For theta beyond
// 90 degrees the direction is defined as the exact negation of the mirror
// angle's direction, so swapping theta -> 180 - theta swaps the two proton
// positions bit-for-bit. The map is discontinuous across theta = 90, where
// it returns the azimuthal tangent itself.
inline Vec3 bond_direction(const ProbeFrame& fr, double theta_deg, double azimuth_deg) {
  if (theta_deg > 90.0) return -bond_direction(fr, 180.0 - theta_deg, azimuth_deg);
  const double th = theta_deg * pi / 180.0;
  const double ph = azimuth_deg * pi / 180.0;
  const Vec3 t = std::cos(ph) * fr.t1 + std::sin(ph) * fr.t2;
  return std::cos(th) * fr.axis + std::sin(th) * t;
}

}  // namespace detail

// Samples the field at the two proton positions
//   r_{a,b} = center + Z * axis +/- (d/2) * u(theta, azimuth)
// and returns (rho_a, rho_b, rho_a - rho_b).
inline ProbeSample probe_pair(const SpinDensityField& field, const ProbeGeometry& geom, double z,
                              double theta_deg) {
  if (!(z >= 0.0)) throw std::invalid_argument("Z must be non-negative");
  if (!(theta_deg >= 0.0 && theta_deg <= 180.0))
    throw std::invalid_argument("theta must be in [0, 180] degrees");
  if (!(geom.bond_length > 0.0)) throw std::invalid_argument("bond length must be positive");
  const detail::ProbeFrame fr = detail::probe_frame(geom);
  const Vec3 u = detail::bond_direction(fr, theta_deg, geom.azimuth_deg);
  const Vec3 base = geom.center + z * fr.axis;
  const Vec3 arm = (0.5 * geom.bond_length) * u;
  const double rho_a = sample(field, base + arm);
  const double rho_b = sample(field, base - arm);
  return {rho_a, rho_b, rho_a - rho_b};
}

}  // namespace oph2
