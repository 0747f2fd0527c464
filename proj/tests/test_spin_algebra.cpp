// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>

#include "oph2/spin_algebra.hpp"

using oph2::Complex;
using oph2::NuclearSpinVector;
using oph2::Proton;
using oph2::SpinAxis;
using oph2::SpinOperatorMatrix;
using oph2::SpinStateLabel;

namespace {

// Independent construction of the two-proton operators: explicit Kronecker
// products kron(s, 1) and kron(1, s) written with block indexing rather
// than the component loops used by the library.
using Mat4 = std::array<std::array<Complex, 4>, 4>;

Mat4 kron(const std::array<std::array<Complex, 2>, 2>& a,
          const std::array<std::array<Complex, 2>, 2>& b) {
  Mat4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r][c] = a[r / 2][c / 2] * b[r % 2][c % 2];
  return out;
}

std::array<std::array<Complex, 2>, 2> eye2() {
  return {{{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{1, 0}}}};
}

SpinOperatorMatrix matmul(const SpinOperatorMatrix& a, const SpinOperatorMatrix& b) {
  SpinOperatorMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex s{0, 0};
      for (int k = 0; k < 4; ++k) s += a.entries[i][k] * b.entries[k][j];
      out.entries[i][j] = s;
    }
  return out;
}

double max_abs_diff(const SpinOperatorMatrix& a, const Mat4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a.entries[i][j] - b[i][j]));
  return m;
}

double max_abs_diff(const SpinOperatorMatrix& a, const SpinOperatorMatrix& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a.entries[i][j] - b.entries[i][j]));
  return m;
}

SpinOperatorMatrix scaled(Complex c, const SpinOperatorMatrix& a) {
  SpinOperatorMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.entries[i][j] = c * a.entries[i][j];
  return out;
}

const SpinAxis kAxes[3] = {SpinAxis::x, SpinAxis::y, SpinAxis::z};

}  // namespace

TEST_CASE("basis states are orthonormal") {
  const SpinStateLabel labels[4] = {SpinStateLabel::ortho_plus1, SpinStateLabel::ortho_zero,
                                    SpinStateLabel::ortho_minus1, SpinStateLabel::para};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex ip = inner(oph2::spin_state(labels[i]), oph2::spin_state(labels[j]));
      const double expect = (i == j) ? 1.0 : 0.0;
      CHECK(std::abs(ip - Complex{expect, 0.0}) < 1e-15);
    }
}

TEST_CASE("proton operators match an independent Kronecker construction") {
  for (SpinAxis ax : kAxes) {
    const auto s = oph2::half_sigma(ax);
    CHECK(max_abs_diff(oph2::spin_operator(Proton::a, ax), kron(s, eye2())) == 0.0);
    CHECK(max_abs_diff(oph2::spin_operator(Proton::b, ax), kron(eye2(), s)) == 0.0);
  }
}

TEST_CASE("spin operators are Hermitian") {
  for (Proton p : {Proton::a, Proton::b})
    for (SpinAxis ax : kAxes) {
      const SpinOperatorMatrix m = oph2::spin_operator(p, ax);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          CHECK(std::abs(m.entries[i][j] - std::conj(m.entries[j][i])) == 0.0);
    }
}

TEST_CASE("same-proton commutators close the angular momentum algebra") {
  // [I_x, I_y] = i I_z and cyclic permutations, separately for each proton.
  for (Proton p : {Proton::a, Proton::b}) {
    for (int k = 0; k < 3; ++k) {
      const SpinOperatorMatrix a = oph2::spin_operator(p, kAxes[k]);
      const SpinOperatorMatrix b = oph2::spin_operator(p, kAxes[(k + 1) % 3]);
      const SpinOperatorMatrix c = oph2::spin_operator(p, kAxes[(k + 2) % 3]);
      const SpinOperatorMatrix comm = matmul(a, b) - matmul(b, a);
      CHECK(max_abs_diff(comm, scaled(Complex{0, 1}, c)) < 1e-15);
    }
  }
}

TEST_CASE("operators on different protons commute") {
  for (SpinAxis ax : kAxes)
    for (SpinAxis ay : kAxes) {
      const SpinOperatorMatrix a = oph2::spin_operator(Proton::a, ax);
      const SpinOperatorMatrix b = oph2::spin_operator(Proton::b, ay);
      CHECK(max_abs_diff(matmul(a, b), matmul(b, a)) == 0.0);
    }
}

TEST_CASE("total spin squared separates the triplet from the singlet") {
  SpinOperatorMatrix s2;
  for (SpinAxis ax : kAxes) {
    const SpinOperatorMatrix tot =
        oph2::spin_operator(Proton::a, ax) + oph2::spin_operator(Proton::b, ax);
    s2 = s2 + matmul(tot, tot);
  }
  const auto eigencheck = [&](SpinStateLabel label, double expect) {
    const NuclearSpinVector v = oph2::spin_state(label);
    const NuclearSpinVector sv = s2.apply(v);
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(sv.amplitudes[i] - expect * v.amplitudes[i]) < 1e-15);
  };
  eigencheck(SpinStateLabel::ortho_plus1, 2.0);
  eigencheck(SpinStateLabel::ortho_zero, 2.0);
  eigencheck(SpinStateLabel::ortho_minus1, 2.0);
  eigencheck(SpinStateLabel::para, 0.0);
}

TEST_CASE("exchange parity of the four states") {
  // The swap operator permutes amplitudes (uu, ud, du, dd) -> (uu, du, ud, dd).
  const auto swapped = [](const NuclearSpinVector& v) {
    NuclearSpinVector out = v;
    std::swap(out.amplitudes[1], out.amplitudes[2]);
    return out;
  };
  for (SpinStateLabel l :
       {SpinStateLabel::ortho_plus1, SpinStateLabel::ortho_zero, SpinStateLabel::ortho_minus1}) {
    const NuclearSpinVector v = oph2::spin_state(l);
    const NuclearSpinVector sv = swapped(v);
    for (int i = 0; i < 4; ++i) CHECK(sv.amplitudes[i] == v.amplitudes[i]);
  }
  const NuclearSpinVector p = oph2::spin_state(SpinStateLabel::para);
  const NuclearSpinVector sp = swapped(p);
  for (int i = 0; i < 4; ++i) CHECK(sp.amplitudes[i] == -p.amplitudes[i]);
}

TEST_CASE("transition vector components") {
  const double is2 = 1.0 / std::sqrt(2.0);

  const oph2::TransitionVector t0 = oph2::transition_vector(0);
  CHECK(std::abs(t0.components[0]) == 0.0);
  CHECK(std::abs(t0.components[1]) == 0.0);
  CHECK(std::abs(t0.components[2] - Complex{1.0, 0.0}) < 1e-15);

  const oph2::TransitionVector tp = oph2::transition_vector(1);
  CHECK(std::abs(tp.components[0] - Complex{-is2, 0.0}) < 1e-15);
  CHECK(std::abs(tp.components[1] - Complex{0.0, -is2}) < 1e-15);
  CHECK(std::abs(tp.components[2]) == 0.0);

  const oph2::TransitionVector tm = oph2::transition_vector(-1);
  CHECK(std::abs(tm.components[0] - Complex{is2, 0.0}) < 1e-15);
  CHECK(std::abs(tm.components[1] - Complex{0.0, -is2}) < 1e-15);
  CHECK(std::abs(tm.components[2]) == 0.0);
}

TEST_CASE("each sublevel carries unit squared strength") {
  for (int m : {-1, 0, 1})
    CHECK(oph2::transition_vector(m).squared_norm() == Catch::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("symmetric spin combination cannot connect the sectors") {
  // <para| (I_a + I_b)_k |ortho, m> vanishes identically, with no rounding:
  // every product in the sum is exactly cancelled by its exchange partner.
  const NuclearSpinVector para = oph2::spin_state(SpinStateLabel::para);
  for (int m : {-1, 0, 1}) {
    const NuclearSpinVector o = oph2::ortho_state(m);
    for (SpinAxis ax : kAxes) {
      const SpinOperatorMatrix sym =
          oph2::spin_operator(Proton::a, ax) + oph2::spin_operator(Proton::b, ax);
      CHECK(inner(para, sym.apply(o)) == Complex{0.0, 0.0});
    }
  }
}

TEST_CASE("unpolarized ensemble coupling is exactly unity") {
  CHECK(oph2::ensemble_coupling_strength() == Catch::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("invalid ortho sublevel is rejected") {
  CHECK_THROWS_MATCHES(oph2::ortho_state(2), std::invalid_argument,
                       Catch::Matchers::Message("ortho sublevel must be one of {+1, 0, -1}"));
  CHECK_THROWS_AS(oph2::transition_vector(-2), std::invalid_argument);
}
