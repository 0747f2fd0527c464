// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT
#pragma once

// Quadrupole alignment of rotational-state distributions and the
// translational-energy model of the dynamical filter stage.
//
// For a distribution D(m_j) within one (j, E_tot) group,
//   A = sum_m [3 m^2 - j(j+1)] D / sum_m j(j+1) D,
// bounded by (-1, 3j/(j+1) - 1). Negative A is cartwheel-like rotation
// (m_j near 0), positive is helicopter-like (|m_j| near j).

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "oph2/constants.hpp"
#include "oph2/detail/text.hpp"

namespace oph2 {

struct AlignmentRow {
  int j = 0;
  int m_j = 0;
  double etot_ev = 0.0;
  double d = 0.0;  // desorption probability weight, >= 0
};

struct AlignmentTable {
  std::vector<AlignmentRow> rows;
};

enum class RotationClass { clr, hlr, isotropic };

inline const char* to_string(RotationClass c) {
  switch (c) {
    case RotationClass::clr: return "CLR";
    case RotationClass::hlr: return "HLR";
    case RotationClass::isotropic: return "isotropic";
  }
  return "?";
}

struct FilterParams {
  double vmin_ev = default_vmin_ev;  // > 0
  double a_slow = -0.5;              // < 0
  double a_fast = 0.5;               // > 0
  double width_ev = 0.1;             // > 0
};

inline void validate(const FilterParams& p) {
  if (!(p.vmin_ev > 0.0)) throw std::invalid_argument("vmin must be positive");
  if (!(p.width_ev > 0.0)) throw std::invalid_argument("crossover width must be positive");
  if (!(p.a_slow < 0.0 && p.a_fast > 0.0))
    throw std::invalid_argument("alignment targets must satisfy a_slow < 0 < a_fast");
}

inline void validate_row(const AlignmentRow& r) {
  if (r.j < 0) throw std::invalid_argument("j must be non-negative");
  if (std::abs(r.m_j) > r.j) throw std::invalid_argument("|m_j| must not exceed j");
  if (!(r.d >= 0.0)) throw std::invalid_argument("weight must be non-negative");
}

// Groups on exact equality of E_tot. Tolerance grouping would make
// membership order-dependent; tables built from the CSV loader already sum
// duplicates.
inline double quadrupole_alignment(const AlignmentTable& table, int j, double etot_ev) {
  if (j == 0) throw std::invalid_argument("alignment undefined for j=0");
  if (j < 0) throw std::invalid_argument("j must be positive");
  double num = 0.0;
  double weight = 0.0;
  const double jj = static_cast<double>(j) * (j + 1);
  for (const AlignmentRow& r : table.rows) {
    if (r.j != j || r.etot_ev != etot_ev) continue;
    validate_row(r);
    num += (3.0 * r.m_j * r.m_j - jj) * r.d;
    weight += r.d;
  }
  if (!(weight > 0.0))
    throw std::runtime_error("no weight for the requested (j, E_tot) group");
  return num / (jj * weight);
}

inline std::pair<double, double> alignment_bounds(int j) {
  if (j < 1) throw std::invalid_argument("alignment undefined for j=0");
  return {-1.0, 3.0 * j / (j + 1) - 1.0};
}

inline RotationClass classify(double alignment) {
  if (!std::isfinite(alignment)) throw std::invalid_argument("alignment must be finite");
  constexpr double eps = 1e-9;  // deadband against rounding
  if (alignment < -eps) return RotationClass::clr;
  if (alignment > eps) return RotationClass::hlr;
  return RotationClass::isotropic;
}

// Logistic model of the filter's alignment versus final translational
// energy: slow molecules (E_t well below vmin) come out cartwheel-like,
// fast ones helicopter-like, with midpoint exactly at vmin.
inline double dqf_alignment_model(double et_ev, const FilterParams& params) {
  if (!(et_ev >= 0.0)) throw std::invalid_argument("E_t must be non-negative");
  validate(params);
  return params.a_slow +
         (params.a_fast - params.a_slow) / (1.0 + std::exp(-(et_ev - params.vmin_ev) / params.width_ev));
}

// CSV interface: header `j,mj,etot_ev,d`, blank lines ignored, `#` comment
// lines ignored, duplicate (j, m_j, E_tot) rows summed.
inline AlignmentTable load_alignment_csv(std::string_view text) {
  AlignmentTable table;
  std::map<std::tuple<int, int, double>, std::size_t> seen;
  std::size_t line_no = 0;
  bool header_done = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i != text.size() && text[i] != '\n') continue;
    const std::string_view line = detail::trim(text.substr(start, i - start));
    start = i + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!header_done) {
      if (line != "j,mj,etot_ev,d")
        throw std::runtime_error("expected header j,mj,etot_ev,d (line " +
                                 std::to_string(line_no) + ")");
      header_done = true;
      continue;
    }
    const auto fields = detail::split_char(line, ',');
    AlignmentRow r;
    if (fields.size() != 4 || !detail::parse_int(detail::trim(fields[0]), r.j) ||
        !detail::parse_int(detail::trim(fields[1]), r.m_j) ||
        !detail::parse_double(detail::trim(fields[2]), r.etot_ev) ||
        !detail::parse_double(detail::trim(fields[3]), r.d))
      throw std::runtime_error("malformed table row (line " + std::to_string(line_no) + ")");
    try {
      validate_row(r);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string(e.what()) + " (line " + std::to_string(line_no) + ")");
    }
    const auto key = std::make_tuple(r.j, r.m_j, r.etot_ev);
    auto it = seen.find(key);
    if (it != seen.end()) {
      table.rows[it->second].d += r.d;
    } else {
      seen.emplace(key, table.rows.size());
      table.rows.push_back(r);
    }
  }
  if (!header_done) throw std::runtime_error("empty table: missing header line");
  return table;
}

}  // namespace oph2
