// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT
#pragma once

// Two-stage conversion pipeline: an energy filter that selects slow or fast
// molecules and re-skews their m_j composition toward the filter's target
// alignment, followed by a steric conversion stage where cartwheel-like
// bins convert faster than helicopter-like ones by the steric ratio.
//
// The re-skew replaces each surviving (j, E_t) group by the two-point
// mixture of the m_j = 0 extreme (alignment -1) and the |m_j| = j extreme
// (alignment (2j-1)/(j+1)) whose alignment matches the model target,
// clamped to the achievable range.
//
// The slow >= none >= fast conversion ordering at steric ratio > 1 holds
// for unpolarized input (equal weight per m_j within each group) with
// stream energies away from the filter crossover. It is not universal:
// input already concentrated at m_j = 0 beyond the model target loses
// cartwheel weight in the slow re-skew, and an isotropic j = 2 group just
// below the threshold has a higher cartwheel fraction than its target
// mixture. The property tests pin the unpolarized ensemble.

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "oph2/alignment.hpp"
#include "oph2/detail/text.hpp"

namespace oph2 {

struct PopulationBin {
  int j = 1;        // >= 1
  int m_j = 0;      // |m_j| <= j
  double et_ev = 0.0;  // final translational energy, >= 0
  double weight = 0.0;  // >= 0, not necessarily normalized
};

struct MoleculePopulation {
  std::vector<PopulationBin> bins;
};

enum class FilterMode { slow, fast, none };

struct StageReport {
  double input_weight = 0.0;
  double output_weight = 0.0;  // weight left unconverted
  double mean_alignment = 0.0;
  double conversion_probability = 0.0;
  // Conversion probability relative to the same stream with no steric
  // effect (rate r for every bin); exactly 1 when the steric ratio is 1.
  double enhancement_factor = 1.0;
};

inline double total_weight(const MoleculePopulation& pop) {
  double w = 0.0;
  for (const PopulationBin& b : pop.bins) w += b.weight;
  return w;
}

inline void validate(const MoleculePopulation& pop) {
  for (const PopulationBin& b : pop.bins) {
    if (b.j < 1) throw std::invalid_argument("rotational level j must be at least 1");
    if (std::abs(b.m_j) > b.j) throw std::invalid_argument("|m_j| must not exceed j");
    if (!(b.et_ev >= 0.0)) throw std::invalid_argument("E_t must be non-negative");
    if (!(b.weight >= 0.0)) throw std::invalid_argument("weight must be non-negative");
  }
  if (!(total_weight(pop) > 0.0)) throw std::invalid_argument("population has no weight");
}

inline double bin_alignment(int j, int m_j) {
  const double jj = static_cast<double>(j) * (j + 1);
  return (3.0 * m_j * m_j - jj) / jj;
}

// Population-level alignment: the quadrupole moment formula summed over all
// bins (reduces to the per-group formula when all bins share one j).
inline double population_alignment(const MoleculePopulation& pop) {
  double num = 0.0, den = 0.0;
  for (const PopulationBin& b : pop.bins) {
    const double jj = static_cast<double>(b.j) * (b.j + 1);
    num += (3.0 * b.m_j * b.m_j - jj) * b.weight;
    den += jj * b.weight;
  }
  if (!(den > 0.0)) throw std::invalid_argument("population has no weight");
  return num / den;
}

inline MoleculePopulation dqf_filter(const MoleculePopulation& pop, FilterMode mode,
                                     const FilterParams& params) {
  validate(pop);
  validate(params);
  if (mode == FilterMode::none) return pop;

  std::map<std::tuple<int, double>, double> groups;  // (j, E_t) -> weight
  for (const PopulationBin& b : pop.bins) {
    const bool keep = mode == FilterMode::slow ? b.et_ev < params.vmin_ev : b.et_ev > params.vmin_ev;
    if (keep && b.weight > 0.0) groups[{b.j, b.et_ev}] += b.weight;
  }
  if (groups.empty()) throw std::runtime_error("empty selection");

  MoleculePopulation out;
  for (const auto& [key, w] : groups) {
    const auto [j, et] = key;
    const double a_max = (2.0 * j - 1.0) / (j + 1);
    double target = dqf_alignment_model(et, params);
    if (target < -1.0) target = -1.0;
    if (target > a_max) target = a_max;
    double lambda = (target + 1.0) / (a_max + 1.0);
    if (lambda < 0.0) lambda = 0.0;
    if (lambda > 1.0) lambda = 1.0;
    const double w_pole = 0.5 * (lambda * w);
    if (w_pole > 0.0) out.bins.push_back({j, -j, et, w_pole});
    if ((1.0 - lambda) * w > 0.0) out.bins.push_back({j, 0, et, (1.0 - lambda) * w});
    if (w_pole > 0.0) out.bins.push_back({j, j, et, w_pole});
  }
  return out;
}

inline StageReport se_convert(const MoleculePopulation& pop, double steric_ratio, double base_rate,
                              double dwell_hours) {
  if (!(steric_ratio > 0.0)) throw std::invalid_argument("steric ratio must be positive");
  if (!(base_rate > 0.0)) throw std::invalid_argument("base rate must be positive");
  if (!(dwell_hours > 0.0)) throw std::invalid_argument("dwell time must be positive");
  validate(pop);

  double in_w = 0.0, converted = 0.0;
  for (const PopulationBin& b : pop.bins) {
    double rate = base_rate;
    switch (classify(bin_alignment(b.j, b.m_j))) {
      case RotationClass::clr: rate = base_rate * steric_ratio; break;
      case RotationClass::hlr: rate = base_rate; break;
      case RotationClass::isotropic: rate = base_rate * (1.0 + steric_ratio) / 2.0; break;
    }
    const double p = -std::expm1(-rate * dwell_hours);
    in_w += b.weight;
    converted += b.weight * p;
  }
  StageReport rep;
  rep.input_weight = in_w;
  rep.output_weight = in_w - converted;
  rep.mean_alignment = population_alignment(pop);
  rep.conversion_probability = converted / in_w;
  rep.enhancement_factor = rep.conversion_probability / -std::expm1(-base_rate * dwell_hours);
  return rep;
}

// Conversion probability of the slow-filtered stream over the unfiltered
// stream at identical stage parameters.
inline double enhancement(const MoleculePopulation& pop, const FilterParams& params,
                          double steric_ratio, double base_rate, double dwell_hours) {
  const double p_slow =
      se_convert(dqf_filter(pop, FilterMode::slow, params), steric_ratio, base_rate, dwell_hours)
          .conversion_probability;
  const double p_all = se_convert(pop, steric_ratio, base_rate, dwell_hours).conversion_probability;
  return p_slow / p_all;
}

// CSV interface: header `j,mj,et_ev,weight`, blank lines and `#` comments
// ignored; rows load verbatim (no duplicate merging).
inline MoleculePopulation load_population_csv(std::string_view text) {
  MoleculePopulation pop;
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
      if (line != "j,mj,et_ev,weight")
        throw std::runtime_error("expected header j,mj,et_ev,weight (line " +
                                 std::to_string(line_no) + ")");
      header_done = true;
      continue;
    }
    const auto fields = detail::split_char(line, ',');
    PopulationBin b;
    if (fields.size() != 4 || !detail::parse_int(detail::trim(fields[0]), b.j) ||
        !detail::parse_int(detail::trim(fields[1]), b.m_j) ||
        !detail::parse_double(detail::trim(fields[2]), b.et_ev) ||
        !detail::parse_double(detail::trim(fields[3]), b.weight))
      throw std::runtime_error("malformed population row (line " + std::to_string(line_no) + ")");
    pop.bins.push_back(b);
  }
  if (!header_done) throw std::runtime_error("empty population: missing header line");
  validate(pop);
  return pop;
}

inline std::string population_csv(const MoleculePopulation& pop) {
  std::string out = "j,mj,et_ev,weight\n";
  for (const PopulationBin& b : pop.bins)
    out += std::to_string(b.j) + "," + std::to_string(b.m_j) + "," + detail::fmt6(b.et_ev) + "," +
           detail::fmt6(b.weight) + "\n";
  return out;
}

}  // namespace oph2
