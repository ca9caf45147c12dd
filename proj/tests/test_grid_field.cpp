// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The helmax authors

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <random>

#include "helmax/builders.hpp"
#include "helmax/field.hpp"
#include "helmax/field_io.hpp"
#include "helmax/operators.hpp"

using namespace helmax;

namespace {

LebesgueExponent lp2() { return LebesgueExponent(Rational(2)); }

double rel_err(const Field& got, const Field& want) {
  Field d = got;
  d -= want;
  const double ref = l2_norm(want);
  return ref > 0 ? l2_norm(d) / ref : l2_norm(d);
}

Field sin_axis0(const Grid& g, int m = 1, int c = 0, double scale = 1.0) {
  Field f(g, m);
  for_each_point(g, [&](std::size_t flat, const Vec3& x) {
    f.at(c, flat) = std::sin(scale * x[0]);
  });
  return f;
}

Field cos_axis0(const Grid& g, int m = 1, int c = 0, double scale = 1.0) {
  Field f(g, m);
  for_each_point(g, [&](std::size_t flat, const Vec3& x) {
    f.at(c, flat) = std::cos(scale * x[0]);
  });
  return f;
}

}  // namespace

TEST_CASE("grid construction and frequency lattice", "[grid_field]") {
  CHECK_THROWS_AS(Grid(3, 7, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Grid(3, 6, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Grid(4, 8, 1.0), std::invalid_argument);
  Grid g(3, 16, 4.0);
  CHECK(g.spacing() * g.extent() == g.length());
  CHECK(g.freq_index(0) == 0);
  CHECK(g.freq_index(7) == 7);
  CHECK(g.freq_index(8) == -8);   // Nyquist slot
  CHECK(g.freq_index(15) == -1);
  CHECK(g.xi_deriv(8) == 0.0);
  CHECK(g.xi(8) != 0.0);
}

TEST_CASE("lp_norm on closed-form fields", "[grid_field]") {
  Grid g(3, 16, 1.0);
  Field f(g, 3);
  for (std::size_t x = 0; x < g.points(); ++x) f.at(0, x) = 2.0;
  CHECK(lp_norm(f, lp2()) == Catch::Approx(2.0).epsilon(1e-14));
  CHECK(lp_norm(f, LebesgueExponent::infinity()) == Catch::Approx(2.0).epsilon(1e-14));
  CHECK(lp_norm(f, LebesgueExponent(Rational(4, 3))) == Catch::Approx(2.0).epsilon(1e-13));

  Field zero(g, 3);
  CHECK(lp_norm(zero, lp2()) == 0.0);
  CHECK(lp_norm(zero, LebesgueExponent::infinity()) == 0.0);

  // sin(2 pi x / L): trapezoid quadrature of sin^2 is exact on the lattice.
  Field s(g, 1);
  for_each_point(g, [&](std::size_t flat, const Vec3& x) {
    s.at(0, flat) = std::sin(2.0 * std::numbers::pi * x[0] / g.length());
  });
  CHECK(lp_norm(s, lp2()) == Catch::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("identity multiplier round trip", "[grid_field]") {
  std::mt19937_64 rng(7);
  for (int n : {2, 3}) {
    Grid g(n, 16, 3.0);
    Field f = random_bandlimited_field(g, 2, 8, rng);
    Field r = apply_scalar_multiplier(f, [](const Vec3&) { return Complex(1.0); });
    CHECK(rel_err(r, f) <= 1e-12);
  }
}

TEST_CASE("multiplier acts as exact eigenvalue on plane waves", "[grid_field]") {
  Grid g(3, 16, 2.0 * std::numbers::pi);
  // -|xi|^2 on exp(i x_0) gives -exp(i x_0).
  Field pw = plane_wave(g, 1, 0, {1, 0, 0});
  Field lap = spectral_laplacian(pw);
  Field want = pw;
  want *= Complex(-1.0);
  CHECK(rel_err(lap, want) <= 1e-12);

  // i xi_0 turns sin(x_0) into cos(x_0).
  Field s = sin_axis0(g);
  Field d = spectral_partial(s, 0);
  CHECK(rel_err(d, cos_axis0(g)) <= 1e-12);
}

TEST_CASE("matrix multiplier mixes components", "[grid_field]") {
  Grid g(3, 8, 1.0);
  std::mt19937_64 rng(11);
  Field f = random_bandlimited_field(g, 2, 2, rng);
  // Constant swap matrix [[0,1],[1,0]].
  Field swapped = apply_fourier_multiplier(f, [](const Vec3&, Complex* M) {
    M[0] = 0.0; M[1] = 1.0; M[2] = 1.0; M[3] = 0.0;
  });
  Field want(g, 2);
  for (std::size_t x = 0; x < g.points(); ++x) {
    want.at(0, x) = f.at(1, x);
    want.at(1, x) = f.at(0, x);
  }
  CHECK(rel_err(swapped, want) <= 1e-12);

  CHECK_THROWS_AS(apply_scalar_multiplier(
                      f, [](const Vec3& xi) { return Complex(1.0 / (xi[0] - xi[0]), 0.0); }),
                  SymbolError);
}

TEST_CASE("spectral gradient examples", "[grid_field]") {
  Grid g(3, 16, 2.0 * std::numbers::pi);
  Field s = sin_axis0(g);
  Field grad = spectral_gradient(s);
  CHECK(grad.components() == 3);
  Field d0(g, 1);
  for (std::size_t x = 0; x < g.points(); ++x) d0.at(0, x) = grad.at(0, x);
  CHECK(rel_err(d0, cos_axis0(g)) <= 1e-12);

  Field c(g, 1);
  for (std::size_t x = 0; x < g.points(); ++x) c.at(0, x) = 3.25;
  Field gc = spectral_gradient(c);
  CHECK(l2_norm(gc) <= 1e-12);
}

TEST_CASE("spectral gradient vs analytic gaussian derivative", "[grid_field]") {
  const int N = 32;
  Grid g(3, N, 10.0);
  const double w = 6.5 * g.spacing();  // resolved width
  const Vec3 c{5.0, 5.0, 5.0};
  Field f = periodized_gaussian(g, c, w);
  Field grad = spectral_gradient(f);

  // Analytic derivative of the image sum.
  Field want(g, 1);
  const double L = g.length();
  for_each_point(g, [&](std::size_t flat, const Vec3& x) {
    double acc = 0.0;
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int k = -1; k <= 1; ++k) {
          const double d0 = x[0] - c[0] + a * L, d1 = x[1] - c[1] + b * L,
                       d2 = x[2] - c[2] + k * L;
          const double e = std::exp(-(d0 * d0 + d1 * d1 + d2 * d2) / (w * w));
          acc += -2.0 * d0 / (w * w) * e;
        }
    want.at(0, flat) = acc;
  });
  Field d0(g, 1);
  for (std::size_t x = 0; x < g.points(); ++x) d0.at(0, x) = grad.at(0, x);
  CHECK(rel_err(d0, want) <= 1e-8);
}

TEST_CASE("parseval identity", "[grid_field]") {
  std::mt19937_64 rng(23);
  Grid g(3, 16, 2.5);
  Field f = random_bandlimited_field(g, 2, 8, rng);
  const double direct = lp_norm(f, lp2());
  Field hat = f;
  fft_forward(hat);
  double fourier_sum = 0.0;
  for (const Complex& z : hat.data()) fourier_sum += std::norm(z);
  const double via_fourier = std::sqrt(fourier_sum * std::pow(g.length(), g.dim()));
  CHECK(std::abs(direct - via_fourier) <= 1e-10 * direct);
}

TEST_CASE("leray projection on closed forms", "[grid_field]") {
  Grid g(3, 16, 2.0 * std::numbers::pi);

  // Pure gradient (cos x0, 0, 0) = grad sin(x0) projects to zero.
  Field gradf(g, 3);
  for_each_point(g, [&](std::size_t flat, const Vec3& x) {
    gradf.at(0, flat) = std::cos(x[0]);
  });
  CHECK(l2_norm(leray_project(gradf)) <= 1e-12 * l2_norm(gradf));

  // (0, cos x0, 0) is already divergence-free.
  Field df(g, 3);
  for_each_point(g, [&](std::size_t flat, const Vec3& x) { df.at(1, flat) = std::cos(x[0]); });
  CHECK(rel_err(leray_project(df), df) <= 1e-12);

  // (cos x0 + c, cos x0, 0) keeps its constant and its solenoidal part.
  const double cconst = 0.75;
  Field mixed(g, 3);
  for_each_point(g, [&](std::size_t flat, const Vec3& x) {
    mixed.at(0, flat) = std::cos(x[0]) + cconst;
    mixed.at(1, flat) = std::cos(x[0]);
  });
  Field want(g, 3);
  for_each_point(g, [&](std::size_t flat, const Vec3& x) {
    want.at(0, flat) = cconst;
    want.at(1, flat) = std::cos(x[0]);
  });
  CHECK(rel_err(leray_project(mixed), want) <= 1e-12);

  Field bad(g, 2);
  CHECK_THROWS_AS(leray_project(bad), std::invalid_argument);
}

TEST_CASE("leray projection invariants", "[grid_field][property]") {
  std::mt19937_64 rng(37);
  Grid g(3, 16, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    Field f = random_bandlimited_field(g, 3, 6, rng);
    Field pf = leray_project(f);

    // Idempotency.
    CHECK(rel_err(leray_project(pf), pf) <= 1e-12);

    // Divergence-freeness on nonzero modes (the constant mode has no divergence).
    CHECK(l2_norm(spectral_divergence(pf)) <= 1e-10 * l2_norm(pf));

    // Orthogonality <Pf, f - Pf> = 0.
    Field residual = f;
    residual -= pf;
    const double denom = l2_norm(pf) * l2_norm(f) + 1e-300;
    CHECK(std::abs(inner(pf, residual)) / denom <= 1e-10);

    // Gradients of zero-mean scalars are annihilated.
    Field s = random_bandlimited_field(g, 1, 6, rng);
    Field grads = spectral_gradient(s);
    Field zm = grads;  // gradient already kills the mean mode
    CHECK(l2_norm(leray_project(zm)) <= 1e-10 * (l2_norm(zm) + 1e-300));
  }
}

TEST_CASE("lapf snapshot round trip", "[grid_field]") {
  std::mt19937_64 rng(41);
  Grid g(3, 8, 1.75);
  Field f = random_bandlimited_field(g, 2, 3, rng);
  const std::string path = "lapf_roundtrip_test.lapf";
  save_lapf(f, path);
  Field r = load_lapf(path);
  CHECK(r.grid() == f.grid());
  CHECK(r.components() == f.components());
  CHECK(rel_err(r, f) == 0.0);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_lapf("does_not_exist.lapf"), IoError);
}
