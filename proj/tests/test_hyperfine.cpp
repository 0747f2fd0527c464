// Copyright (c) 2026 The oph2 Authors
// SPDX-License-Identifier: MIT

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "oph2/hyperfine.hpp"

using oph2::HyperfineParams;
using oph2::ProbeGeometry;
using oph2::ProfileKind;
using oph2::SpinDensityField;
using oph2::SublevelPolicy;
using oph2::YieldCurve;

namespace {

SpinDensityField reference_field() {
  return oph2::synthetic_field(ProfileKind::exponential, 1.0, 0.5);
}

// All-constant grid covering the probe excursions; any probe pair inside
// it sees a vanishing density difference.
SpinDensityField constant_grid(double value) {
  std::ostringstream ss;
  const double b = 1.0 / 0.529177;
  ss << "constant grid\nfor sweep tests\n";
  ss << "0 " << -2.0 * b << " " << -2.0 * b << " " << -2.0 * b << "\n";
  ss << "5 " << b << " 0 0\n5 0 " << b << " 0\n5 0 0 " << b << "\n";
  for (int i = 0; i < 125; ++i) ss << value << ((i + 1) % 6 == 0 ? "\n" : " ");
  ss << "\n";
  return oph2::parse_cube(ss.str());
}

}  // namespace

TEST_CASE("contact matrix element on the reference field") {
  const SpinDensityField f = reference_field();
  const ProbeGeometry geom{};
  const HyperfineParams params{};

  SECTION("aligned probe reproduces the density-difference oracle") {
    CHECK(oph2::xi(f, geom, params, 1.0, 0.0) ==
          Catch::Approx(-0.21908367960660193).epsilon(1e-12));
  }
  SECTION("perpendicular probe vanishes") {
    CHECK(std::abs(oph2::xi(f, geom, params, 1.0, 90.0)) < 1e-15);
  }
  SECTION("xi is exactly linear in the coupling constant") {
    HyperfineParams doubled{};
    doubled.lambda_c = 2.0;
    const double base = oph2::xi(f, geom, params, 1.0, 0.0);
    CHECK(oph2::xi(f, geom, doubled, 1.0, 0.0) == 2.0 * base);
    CHECK(oph2::xi(f, geom, doubled, 1.0, 0.0) == Catch::Approx(-0.4381673592132039).epsilon(1e-12));

    HyperfineParams negated{};
    negated.lambda_c = -1.0;
    CHECK(oph2::xi(f, geom, negated, 1.0, 0.0) == -base);
  }
  SECTION("single-sublevel policy matches the unpolarized average") {
    // Every ortho sublevel has unit transition strength, so the nuclear
    // factor is the same no matter which sublevel is selected.
    const double unpol = oph2::xi(f, geom, params, 0.9, 25.0);
    for (int m : {-1, 0, 1}) {
      HyperfineParams single{};
      single.policy = SublevelPolicy::single;
      single.m_o = m;
      CHECK(oph2::xi(f, geom, single, 0.9, 25.0) == Catch::Approx(unpol).epsilon(1e-14));
    }
  }
  SECTION("invalid coupling constants are rejected") {
    HyperfineParams bad{};
    bad.lambda_c = 0.0;
    CHECK_THROWS_MATCHES(oph2::xi(f, geom, bad, 1.0, 0.0), std::invalid_argument,
                         Catch::Matchers::Message("lambda_c must be finite and nonzero"));
    bad.lambda_c = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(oph2::xi(f, geom, bad, 1.0, 0.0), std::invalid_argument);
  }
}

TEST_CASE("conversion yield") {
  const SpinDensityField f = reference_field();
  const ProbeGeometry geom{};
  const HyperfineParams params{};

  SECTION("yield is the squared matrix element") {
    CHECK(oph2::yield_w(f, geom, params, 1.0, 0.0) ==
          Catch::Approx(0.0479976586699682).epsilon(1e-12));
    CHECK(oph2::yield_w(f, geom, params, 1.0, 90.0) < 1e-30);
  }
  SECTION("yield is exactly quadratic in the coupling constant") {
    HyperfineParams doubled{};
    doubled.lambda_c = 2.0;
    CHECK(oph2::yield_w(f, geom, doubled, 1.0, 0.0) ==
          4.0 * oph2::yield_w(f, geom, params, 1.0, 0.0));
  }
  SECTION("yield is symmetric under theta reflection") {
    for (double theta_hi : {120.0, 132.7, 170.0}) {
      const double theta_lo = 180.0 - theta_hi;
      CHECK(oph2::yield_w(f, geom, params, 1.0, theta_hi) ==
            oph2::yield_w(f, geom, params, 1.0, theta_lo));
    }
  }
}

TEST_CASE("linspace endpoints are exact") {
  const std::vector<double> v = oph2::linspace(0.2, 3.0, 29);
  REQUIRE(v.size() == 29);
  CHECK(v.front() == 0.2);
  CHECK(v.back() == 3.0);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] > v[i - 1]);
  CHECK_THROWS_AS(oph2::linspace(0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("yield sweep over the reference field") {
  const SpinDensityField f = reference_field();
  const ProbeGeometry geom{};
  const HyperfineParams params{};
  const std::vector<double> zs = oph2::linspace(0.2, 3.0, 29);
  const std::vector<double> thetas{10.0, 70.0};
  const YieldCurve curve = oph2::sweep(f, geom, params, zs, thetas);

  SECTION("matrix shapes match the sample counts") {
    REQUIRE(curve.z.size() == zs.size());
    REQUIRE(curve.theta_deg == thetas);
    REQUIRE(curve.xi.size() == zs.size());
    REQUIRE(curve.w.size() == zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i) {
      CHECK(curve.xi[i].size() == 2);
      CHECK(curve.w[i].size() == 2);
      CHECK(curve.w[i][0] == curve.xi[i][0] * curve.xi[i][0]);
    }
  }
  SECTION("near-axis rotation out-yields the helicopter angle at every Z") {
    for (std::size_t i = 0; i < zs.size(); ++i) CHECK(curve.w[i][0] >= curve.w[i][1]);
  }
  SECTION("precondition failures") {
    CHECK_THROWS_MATCHES(oph2::sweep(f, geom, params, {1.0}, thetas), std::invalid_argument,
                         Catch::Matchers::Message("Z range needs at least 2 samples"));
    CHECK_THROWS_MATCHES(oph2::sweep(f, geom, params, {1.0, 0.5}, thetas), std::invalid_argument,
                         Catch::Matchers::Message("Z samples must be strictly increasing"));
    CHECK_THROWS_MATCHES(oph2::sweep(f, geom, params, {0.5, 1.0}, {}), std::invalid_argument,
                         Catch::Matchers::Message("theta list must be nonempty"));
  }
}

TEST_CASE("sweep of a constant grid is an all-zero curve") {
  const SpinDensityField f = constant_grid(5.0);
  const ProbeGeometry geom{};
  const HyperfineParams params{};
  const YieldCurve curve =
      oph2::sweep(f, geom, params, oph2::linspace(0.2, 1.0, 9), {10.0, 70.0});
  for (const auto& row : curve.xi)
    for (double v : row) CHECK(std::abs(v) < 1e-14);
}

TEST_CASE("extremum detection") {
  SECTION("monotone curve has no interior extrema") {
    const SpinDensityField f = reference_field();
    const YieldCurve curve = oph2::sweep(f, ProbeGeometry{}, HyperfineParams{},
                                         oph2::linspace(0.5, 3.0, 26), {0.0});
    CHECK(oph2::find_extrema(curve, 0.0).empty());
  }
  SECTION("synthetic sine injection") {
    YieldCurve curve;
    curve.theta_deg = {42.0};
    const double two_pi = 2.0 * oph2::pi;
    for (double z = 0.0; z <= two_pi; z += 0.01) {
      curve.z.push_back(z);
      curve.xi.push_back({std::sin(z)});
      curve.w.push_back({std::sin(z) * std::sin(z)});
    }
    const auto ext = oph2::find_extrema(curve, 42.0);
    REQUIRE(ext.size() == 2);
    CHECK(ext[0].kind == oph2::ExtremumKind::maximum);
    CHECK(ext[0].z == Catch::Approx(oph2::pi / 2.0).margin(0.02));
    CHECK(ext[0].value == Catch::Approx(1.0).margin(1e-4));
    CHECK(ext[1].kind == oph2::ExtremumKind::minimum);
    CHECK(ext[1].z == Catch::Approx(3.0 * oph2::pi / 2.0).margin(0.02));
  }
  SECTION("plateau reports its leftmost sample") {
    YieldCurve curve;
    curve.theta_deg = {0.0};
    curve.z = {0.0, 1.0, 2.0, 3.0, 4.0};
    for (double v : {0.0, 1.0, 1.0, 1.0, 0.0}) {
      curve.xi.push_back({v});
      curve.w.push_back({v * v});
    }
    const auto ext = oph2::find_extrema(curve, 0.0);
    REQUIRE(ext.size() == 1);
    CHECK(ext[0].z == 1.0);
    CHECK(ext[0].value == 1.0);
    CHECK(ext[0].kind == oph2::ExtremumKind::maximum);
  }
  SECTION("unknown theta label") {
    YieldCurve curve;
    curve.theta_deg = {10.0};
    curve.z = {0.0, 1.0};
    curve.xi = {{0.0}, {1.0}};
    curve.w = {{0.0}, {1.0}};
    CHECK_THROWS_MATCHES(oph2::find_extrema(curve, 20.0), std::invalid_argument,
                         Catch::Matchers::Message("theta not present in curve"));
  }
}

TEST_CASE("steric ratio") {
  const SpinDensityField f = reference_field();
  const ProbeGeometry geom{};
  const HyperfineParams params{};

  SECTION("default angles on the reference field") {
    const double r = oph2::steric_ratio(f, geom, params, 1.0);
    CHECK(r == Catch::Approx(13.585016979819418).epsilon(1e-10));
    CHECK(r > 1.0);
  }
  SECTION("identical angles give exactly one") {
    CHECK(oph2::steric_ratio(f, geom, params, 1.0, 35.0, 35.0) == 1.0);
  }
  SECTION("vanishing helicopter yield is an error") {
    CHECK_THROWS_MATCHES(oph2::steric_ratio(f, geom, params, 1.0, 10.0, 90.0), std::runtime_error,
                         Catch::Matchers::Message("HLR yield vanishes"));
  }
}

TEST_CASE("yield curve serializes to labeled CSV") {
  const SpinDensityField f = reference_field();
  const YieldCurve curve = oph2::sweep(f, ProbeGeometry{}, HyperfineParams{},
                                       oph2::linspace(0.2, 1.0, 3), {10.0, 70.0});
  const std::string csv = oph2::yield_curve_csv(curve);
  std::istringstream ss(csv);
  std::string line;
  REQUIRE(std::getline(ss, line));
  CHECK(line == "z,xi_10,w_10,xi_70,w_70");
  int rows = 0;
  while (std::getline(ss, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 3);
}
