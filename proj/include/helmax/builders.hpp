// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The helmax authors

#ifndef HELMAX_BUILDERS_HPP
#define HELMAX_BUILDERS_HPP

#include <cmath>
#include <random>

#include "helmax/fft.hpp"
#include "helmax/field.hpp"

namespace helmax {

/// Periodized Gaussian exp(-|x - center|^2 / width^2), summed over enough
/// periodic images to stay smooth across the seam.
inline Field periodized_gaussian(const Grid& g, const Vec3& center, double width) {
  Field f(g, 1);
  const double L = g.length();
  const int images = std::max(1, static_cast<int>(std::ceil(4.0 * width / L)));
  const double inv_w2 = 1.0 / (width * width);
  for_each_point(g, [&](std::size_t flat, const Vec3& x) {
    double acc = 0.0;
    const int n = g.dim();
    if (n == 2) {
      for (int a = -images; a <= images; ++a)
        for (int b = -images; b <= images; ++b) {
          const double d0 = x[0] - center[0] + a * L;
          const double d1 = x[1] - center[1] + b * L;
          acc += std::exp(-(d0 * d0 + d1 * d1) * inv_w2);
        }
    } else {
      for (int a = -images; a <= images; ++a)
        for (int b = -images; b <= images; ++b)
          for (int c = -images; c <= images; ++c) {
            const double d0 = x[0] - center[0] + a * L;
            const double d1 = x[1] - center[1] + b * L;
            const double d2 = x[2] - center[2] + c * L;
            acc += std::exp(-(d0 * d0 + d1 * d1 + d2 * d2) * inv_w2);
          }
    }
    f.at(0, flat) = acc;
  });
  return f;
}

/// Random band-limited field: independent complex Gaussian coefficients on
/// all modes with |freq index| <= band on every axis (Nyquist excluded),
/// zero elsewhere. Deterministic in the generator state.
inline Field random_bandlimited_field(const Grid& g, int m, int band, std::mt19937_64& rng) {
  Field f(g, m);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int N = g.extent();
  for (int c = 0; c < m; ++c) {
    std::size_t flat = 0;
    auto in_band = [&](int j) {
      const int k = g.freq_index(j);
      return k > -N / 2 && std::abs(k) <= band;
    };
    for (int j0 = 0; j0 < N; ++j0)
      for (int j1 = 0; j1 < N; ++j1) {
        if (g.dim() == 2) {
          f.at(c, flat++) =
              (in_band(j0) && in_band(j1)) ? Complex(gauss(rng), gauss(rng)) : Complex(0.0);
        } else {
          for (int j2 = 0; j2 < N; ++j2, ++flat)
            f.at(c, flat) = (in_band(j0) && in_band(j1) && in_band(j2))
                                ? Complex(gauss(rng), gauss(rng))
                                : Complex(0.0);
        }
      }
    fft_inverse(g, f.comp(c));
  }
  return f;
}

/// Plane wave exp(i k_index . x 2 pi / L) in component c of an m-component field.
inline Field plane_wave(const Grid& g, int m, int c, const std::array<int, 3>& k_index) {
  Field f(g, m);
  const double k0 = 2.0 * std::numbers::pi * k_index[0] / g.length();
  const double k1 = 2.0 * std::numbers::pi * k_index[1] / g.length();
  const double k2 = 2.0 * std::numbers::pi * k_index[2] / g.length();
  for_each_point(g, [&](std::size_t flat, const Vec3& x) {
    const double phase = k0 * x[0] + k1 * x[1] + (g.dim() == 3 ? k2 * x[2] : 0.0);
    f.at(c, flat) = Complex(std::cos(phase), std::sin(phase));
  });
  return f;
}

}  // namespace helmax

#endif
