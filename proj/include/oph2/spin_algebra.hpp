// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT
#pragma once

// Exact linear algebra of the two-proton nuclear spin space. The product
// basis is ordered (|uu>, |ud>, |du>, |dd>) where the first arrow is proton
// a and the second is proton b. All spin operators are in units of hbar = 1.
//
// The ortho triplet is symmetric under proton exchange and the para singlet
// is antisymmetric; the antisymmetric operator combination (I_a - I_b) is
// the only one-body piece that connects the two sectors, which is what the
// transition vector measures.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace oph2 {

using Complex = std::complex<double>;

struct NuclearSpinVector {
  std::array<Complex, 4> amplitudes{};
};

inline Complex inner(const NuclearSpinVector& bra, const NuclearSpinVector& ket) {
  Complex s{0.0, 0.0};
  for (int i = 0; i < 4; ++i) s += std::conj(bra.amplitudes[i]) * ket.amplitudes[i];
  return s;
}

inline double state_norm(const NuclearSpinVector& v) {
  return std::sqrt(std::real(inner(v, v)));
}

struct SpinOperatorMatrix {
  std::array<std::array<Complex, 4>, 4> entries{};

  NuclearSpinVector apply(const NuclearSpinVector& v) const {
    NuclearSpinVector out;
    for (int i = 0; i < 4; ++i) {
      Complex s{0.0, 0.0};
      for (int j = 0; j < 4; ++j) s += entries[i][j] * v.amplitudes[j];
      out.amplitudes[i] = s;
    }
    return out;
  }

  friend SpinOperatorMatrix operator+(const SpinOperatorMatrix& a, const SpinOperatorMatrix& b) {
    SpinOperatorMatrix out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.entries[i][j] = a.entries[i][j] + b.entries[i][j];
    return out;
  }

  friend SpinOperatorMatrix operator-(const SpinOperatorMatrix& a, const SpinOperatorMatrix& b) {
    SpinOperatorMatrix out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.entries[i][j] = a.entries[i][j] - b.entries[i][j];
    return out;
  }
};

struct TransitionVector {
  // Cartesian components (x, y, z) of <para| (I_a - I_b) |ortho, m_o>.
  std::array<Complex, 3> components{};

  double squared_norm() const {
    double s = 0.0;
    for (const Complex& c : components) s += std::norm(c);
    return s;
  }
};

enum class SpinStateLabel { ortho_plus1, ortho_zero, ortho_minus1, para };
enum class Proton { a, b };
enum class SpinAxis { x, y, z };

inline NuclearSpinVector spin_state(SpinStateLabel label) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  NuclearSpinVector v;
  switch (label) {
    case SpinStateLabel::ortho_plus1:
      v.amplitudes = {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}};
      return v;
    case SpinStateLabel::ortho_zero:
      v.amplitudes = {Complex{0, 0}, Complex{inv_sqrt2, 0}, Complex{inv_sqrt2, 0}, Complex{0, 0}};
      return v;
    case SpinStateLabel::ortho_minus1:
      v.amplitudes = {Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}};
      return v;
    case SpinStateLabel::para:
      v.amplitudes = {Complex{0, 0}, Complex{inv_sqrt2, 0}, Complex{-inv_sqrt2, 0}, Complex{0, 0}};
      return v;
  }
  throw std::invalid_argument("unknown spin state label");
}

// Single-proton spin-1/2 matrix for the given axis, entries of sigma/2.
inline std::array<std::array<Complex, 2>, 2> half_sigma(SpinAxis axis) {
  switch (axis) {
    case SpinAxis::x:
      return {{{Complex{0, 0}, Complex{0.5, 0}}, {Complex{0.5, 0}, Complex{0, 0}}}};
    case SpinAxis::y:
      return {{{Complex{0, 0}, Complex{0, -0.5}}, {Complex{0, 0.5}, Complex{0, 0}}}};
    case SpinAxis::z:
      return {{{Complex{0.5, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{-0.5, 0}}}};
  }
  throw std::invalid_argument("unknown spin axis");
}

// I_a acts on the first tensor factor, I_b on the second. Basis index is
// 2*i_a + i_b with i = 0 for up, 1 for down.
inline SpinOperatorMatrix spin_operator(Proton proton, SpinAxis axis) {
  const auto s = half_sigma(axis);
  SpinOperatorMatrix out;
  for (int ia = 0; ia < 2; ++ia)
    for (int ib = 0; ib < 2; ++ib)
      for (int ja = 0; ja < 2; ++ja)
        for (int jb = 0; jb < 2; ++jb) {
          Complex v = (proton == Proton::a) ? (ib == jb ? s[ia][ja] : Complex{0, 0})
                                            : (ia == ja ? s[ib][jb] : Complex{0, 0});
          out.entries[2 * ia + ib][2 * ja + jb] = v;
        }
  return out;
}

inline NuclearSpinVector ortho_state(int m_o) {
  switch (m_o) {
    case 1:
      return spin_state(SpinStateLabel::ortho_plus1);
    case 0:
      return spin_state(SpinStateLabel::ortho_zero);
    case -1:
      return spin_state(SpinStateLabel::ortho_minus1);
    default:
      throw std::invalid_argument("ortho sublevel must be one of {+1, 0, -1}");
  }
}

inline TransitionVector transition_vector(int m_o) {
  const NuclearSpinVector ortho = ortho_state(m_o);
  const NuclearSpinVector para = spin_state(SpinStateLabel::para);
  TransitionVector t;
  const SpinAxis axes[3] = {SpinAxis::x, SpinAxis::y, SpinAxis::z};
  for (int k = 0; k < 3; ++k) {
    const SpinOperatorMatrix anti =
        spin_operator(Proton::a, axes[k]) - spin_operator(Proton::b, axes[k]);
    t.components[k] = inner(para, anti.apply(ortho));
  }
  return t;
}

// Unpolarized average of the squared transition strength over the three
// ortho sublevels. Each sublevel has unit strength, so this is 1 exactly.
inline double ensemble_coupling_strength() {
  double s = 0.0;
  for (int m : {1, 0, -1}) s += transition_vector(m).squared_norm();
  return s / 3.0;
}

}  // namespace oph2
