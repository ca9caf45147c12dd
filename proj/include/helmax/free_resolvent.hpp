// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The helmax authors
//
// The free resolvent R0(zeta) = (Delta + zeta)^{-1} and its relatives.
// Sign convention: the multiplier is 1/(zeta - |xi|^2) everywhere, so that
// R0 really inverts Delta + zeta. Displays that carry 1/(|xi|^2 - zeta)
// elsewhere describe the same operator up to the global sign; this file is
// the single place the convention is fixed.

#ifndef HELMAX_FREE_RESOLVENT_HPP
#define HELMAX_FREE_RESOLVENT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "helmax/builders.hpp"
#include "helmax/exponents.hpp"
#include "helmax/operators.hpp"
#include "helmax/spectral_parameter.hpp"

namespace helmax {

/// Radial C^2 cutoff: 1 for r <= 2, 0 for r >= 3, quintic Hermite step in
/// between (value and first two derivatives match at both junctions).
struct CutoffProfile {
  static constexpr double inner_radius = 2.0;
  static constexpr double outer_radius = 3.0;

  double operator()(double r) const {
    if (r <= inner_radius) return 1.0;
    if (r >= outer_radius) return 0.0;
    const double t = (r - inner_radius) / (outer_radius - inner_radius);
    return 1.0 - t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
  }

  /// chi_zeta(xi) = chi(|zeta|^{-1/2} |xi|).
  double scaled(const Vec3& xi, double abs_zeta) const {
    const double r = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
    return (*this)(r / std::sqrt(abs_zeta));
  }
};

namespace detail {

inline double min_shell_distance(const Grid& g, std::complex<double> zeta_eff) {
  double best = std::numeric_limits<double>::infinity();
  for_each_mode(g, [&](std::size_t, const Vec3& xi) {
    const double s = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
    best = std::min(best, std::abs(zeta_eff - s));
  });
  return best;
}

inline void require_resonance_free(const Grid& g, std::complex<double> zeta_eff) {
  double worst_shell = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for_each_mode(g, [&](std::size_t, const Vec3& xi) {
    const double s = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
    const double d = std::abs(zeta_eff - s);
    if (d < best) {
      best = d;
      worst_shell = s;
    }
  });
  if (best <= 1e-12) {
    std::ostringstream os;
    os << "lattice resonance: |zeta_eff - |xi_k|^2| = " << best << " at |xi_k|^2 = " << worst_shell;
    throw ResonanceError(os.str(), worst_shell);
  }
}

}  // namespace detail

/// R0(zeta) f: multiplier (zeta_eff - |xi|^2)^{-1} on every component.
/// Tagged parameters take zeta_eff = lambda +- i delta.
inline Field apply_free_resolvent(const Field& f, const SpectralParameter& z, double delta = 0.0) {
  const std::complex<double> zeta = z.effective(delta);
  detail::require_resonance_free(f.grid(), zeta);
  return apply_scalar_multiplier(f, [zeta](const Vec3& xi) {
    return 1.0 / (zeta - (xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]));
  });
}

/// Green's kernel of R0 in three dimensions: -exp(i mu |z|)/(4 pi |z|) with
/// mu the kernel_root of the parameter, so that (Delta + zeta) G = delta.
inline Complex greens_kernel(const Vec3& z_point, const SpectralParameter& z) {
  const double r = std::sqrt(z_point[0] * z_point[0] + z_point[1] * z_point[1] +
                             z_point[2] * z_point[2]);
  if (!(r > 0.0)) throw UsageError("greens_kernel: evaluation at the singularity z = 0");
  const std::complex<double> mu = z.kernel_root();
  return -std::exp(Complex(0.0, 1.0) * mu * r) / (4.0 * std::numbers::pi * r);
}

/// The three-regime bound for |G_zeta - G_zeta~| (implicit constant 1):
///   |mu - mu~| |z|^{3-n}                     for |z| <= |mu|^{-1},
///   |mu - mu~| |mu|^{(n-3)/2} |z|^{(3-n)/2}  for |mu|^{-1} <= |z| <= |mu - mu~|^{-1},
///   |mu|^{(n-3)/2} |z|^{(1-n)/2}             for |z| >= |mu - mu~|^{-1}.
/// Stated for the Re mu, Im mu > 0 regime of the kernel comparison.
inline double kernel_difference_bound(std::complex<double> mu, std::complex<double> mu_tilde,
                                      double z_norm, int n) {
  if (!(z_norm > 0.0)) throw std::domain_error("kernel_difference_bound: |z| must be > 0");
  const double dmu = std::abs(mu - mu_tilde);
  const double amu = std::abs(mu);
  if (z_norm <= 1.0 / amu) return dmu * std::pow(z_norm, 3.0 - n);
  if (dmu == 0.0) return 0.0;
  if (z_norm <= 1.0 / dmu)
    return dmu * std::pow(amu, 0.5 * (n - 3)) * std::pow(z_norm, 0.5 * (3 - n));
  return std::pow(amu, 0.5 * (n - 3)) * std::pow(z_norm, 0.5 * (1 - n));
}

enum class DerivativeMode { direct, split };

/// R0(zeta) d_j f. Direct mode is the one-shot multiplier
/// i xi_j (zeta - |xi|^2)^{-1}. Split mode isolates the low-frequency
/// singularity with the cutoff chi_zeta and routes the high-frequency part
/// through the rescaled Bessel potential (1 + |xi/sqrt|zeta||^2)^{-1/2}
/// followed by the smooth symbol
///   m(v) = (1 - chi(v)) v_j sqrt(1 + |v|^2) / (|v|^2 - zeta/|zeta|),
/// v = xi/sqrt|zeta|, with prefactor -i |zeta|^{-1/2}. The two modes agree
/// mode by mode as an algebraic identity. Nyquist rows of xi_j are zeroed
/// consistently in both.
inline Field apply_free_resolvent_derivative(const Field& f, const SpectralParameter& z, int j,
                                             DerivativeMode mode, double delta = 0.0) {
  const Grid& g = f.grid();
  if (j < 0 || j >= g.dim())
    throw std::invalid_argument("apply_free_resolvent_derivative: bad axis");
  const std::complex<double> zeta = z.effective(delta);
  detail::require_resonance_free(g, zeta);

  // for_each_mode hands out full Nyquist xi; the derivative factor must use
  // the zeroed value. Detect the Nyquist magnitude per axis.
  const double nyq = 2.0 * std::numbers::pi * (g.extent() / 2) / g.length();
  auto xi_deriv_j = [&, j](const Vec3& xi) { return xi[j] == -nyq ? 0.0 : xi[j]; };

  if (mode == DerivativeMode::direct) {
    return apply_scalar_multiplier(f, [&](const Vec3& xi) {
      const double s = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
      return Complex(0.0, xi_deriv_j(xi)) / (zeta - s);
    });
  }

  const double abs_zeta = std::abs(zeta);
  if (!(abs_zeta > 0.0)) throw UsageError("split mode requires |zeta| > 0");
  const double root = std::sqrt(abs_zeta);
  const std::complex<double> dir = zeta / abs_zeta;
  CutoffProfile chi;

  Field low = apply_scalar_multiplier(f, [&](const Vec3& xi) {
    const double c = chi.scaled(xi, abs_zeta);
    if (c == 0.0) return Complex(0.0);
    const double s = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
    return c * Complex(0.0, xi_deriv_j(xi)) / (zeta - s);
  });

  Field bessel_scaled = apply_scalar_multiplier(f, [&](const Vec3& xi) {
    const double s = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
    return Complex(1.0 / std::sqrt(1.0 + s / abs_zeta), 0.0);
  });
  Field high = apply_scalar_multiplier(bessel_scaled, [&](const Vec3& xi) {
    const double v2 = (xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]) / abs_zeta;
    const double one_minus_chi = 1.0 - chi(std::sqrt(v2));
    if (one_minus_chi == 0.0) return Complex(0.0);
    const double vj = xi_deriv_j(xi) / root;
    const Complex m = one_minus_chi * vj * std::sqrt(1.0 + v2) / (v2 - dir);
    return Complex(0.0, -1.0 / root) * m;
  });

  low += high;
  return low;
}

/// Bessel potential of order one: multiplier (1 + |xi|^2)^{-1/2}.
inline Field bessel_potential(const Field& f) {
  return apply_scalar_multiplier(f, [](const Vec3& xi) {
    return Complex(1.0 / std::sqrt(1.0 + xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]), 0.0);
  });
}

/// Estimates the Mikhlin-Hoermander constant A = max |xi|^{|a|} |d^a s(xi)|
/// over all multi-indices |a| <= order at the given sample frequencies,
/// using central finite differences with relative step 1e-4 |xi|.
/// Samples with |xi| < 1e-3 are rejected.
inline double mikhlin_bound_estimate(const std::function<Complex(const Vec3&)>& s, int order,
                                     const std::vector<Vec3>& xi_samples, int n = 3) {
  if (order < 0 || order > 2)
    throw std::invalid_argument("mikhlin_bound_estimate: order must be 0, 1 or 2");
  double A = 0.0;
  auto check = [&](Complex v, const Vec3& xi) {
    if (!detail::finite(v)) detail::throw_symbol_error(xi);
    return std::abs(v);
  };
  for (const Vec3& xi : xi_samples) {
    const double r = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
    if (r < 1e-3)
      throw std::invalid_argument("mikhlin_bound_estimate: sample too close to xi = 0");
    const double h = 1e-4 * r;
    A = std::max(A, check(s(xi), xi));
    if (order < 1) continue;
    auto shift = [&](int a, double da, int b = -1, double db = 0.0) {
      Vec3 y = xi;
      y[a] += da;
      if (b >= 0) y[b] += db;
      return s(y);
    };
    for (int a = 0; a < n; ++a) {
      const Complex d1 = (shift(a, h) - shift(a, -h)) / (2.0 * h);
      A = std::max(A, r * check(d1, xi));
    }
    if (order < 2) continue;
    for (int a = 0; a < n; ++a) {
      const Complex d2 = (shift(a, h) - 2.0 * s(xi) + shift(a, -h)) / (h * h);
      A = std::max(A, r * r * check(d2, xi));
      for (int b = a + 1; b < n; ++b) {
        const Complex dd = (shift(a, h, b, h) - shift(a, h, b, -h) - shift(a, -h, b, h) +
                            shift(a, -h, b, -h)) /
                           (4.0 * h * h);
        A = std::max(A, r * r * check(dd, xi));
      }
    }
  }
  return A;
}

/// Lower bound on the discrete operator norm ||R0(zeta)||_{p->q}: the best
/// ratio ||R0 f||_q / ||f||_p over a deterministic family (Gaussians with
/// |zeta|-scaled width clamped to the resolvable range, plus a Herglotz-type
/// shell profile) and `trials` random band-limited fields. Deterministic in
/// the seed; trials may be evaluated in any order (max reduction).
inline double operator_norm_lower_bound(const SpectralParameter& z, const LebesgueExponent& p,
                                        const LebesgueExponent& q, int trials, const Grid& g,
                                        std::uint64_t seed = 2026, double delta = 0.0) {
  RegionCheck adm = check_gutierrez(p, q, g.dim());
  if (!adm) throw AdmissibilityError(adm);
  const std::complex<double> zeta = z.effective(delta);
  detail::require_resonance_free(g, zeta);

  const double abs_zeta = std::abs(zeta);
  double best = 0.0;
  auto probe = [&](const Field& f) {
    const double denom = lp_norm(f, p);
    if (denom == 0.0) return;
    Field rf = apply_free_resolvent(f, z, delta);
    best = std::max(best, lp_norm(rf, q) / denom);
  };

  // Dilation-covariant Gaussian family: width ~ |zeta|^{-1/2}, clamped to
  // what the lattice can resolve.
  const Vec3 center{g.length() / 2, g.length() / 2, g.length() / 2};
  const double w_scaled =
      std::clamp(2.0 / std::sqrt(abs_zeta), 3.0 * g.spacing(), g.length() / 6.0);
  probe(periodized_gaussian(g, center, w_scaled));
  probe(periodized_gaussian(g, center, std::min(2.0 * w_scaled, g.length() / 6.0)));

  // Herglotz-type profile: Fourier bump on the shell |xi| = sqrt|zeta|,
  // clamped inside the lattice band.
  {
    const double xi_max = 2.0 * std::numbers::pi * (g.extent() / 2 - 1) / g.length();
    const double rho = std::min(std::sqrt(abs_zeta), 0.75 * xi_max);
    const double sw = std::max(2.0 * std::numbers::pi / g.length(), 0.1 * rho);
    Field shell(g, 1);
    for_each_mode(g, [&](std::size_t flat, const Vec3& xi) {
      const double r = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
      const double d = (r - rho) / sw;
      shell.at(0, flat) = std::exp(-d * d);
    });
    fft_inverse(g, shell.comp(0));
    probe(shell);
  }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t)
    probe(random_bandlimited_field(g, 1, g.extent() / 4, rng));
  return best;
}

}  // namespace helmax

#endif
