// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The helmax authors

#ifndef HELMAX_OPERATORS_HPP
#define HELMAX_OPERATORS_HPP

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "helmax/fft.hpp"
#include "helmax/field.hpp"

namespace helmax {

struct SymbolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
[[noreturn]] inline void throw_symbol_error(const Vec3& xi) {
  std::ostringstream os;
  os << "symbol evaluates to a non-finite value at xi = (" << xi[0] << ", " << xi[1] << ", "
     << xi[2] << ")";
  throw SymbolError(os.str());
}

inline bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
}  // namespace detail

/// Applies a scalar Fourier multiplier to every component:
/// out = F^{-1}( s(xi) F(f) ). With the plane-wave normalization of the
/// transforms this is exact on lattice plane waves.
template <class Sym>
Field apply_scalar_multiplier(const Field& f, Sym&& s) {
  Field out = f;
  fft_forward(out);
  const Grid& g = out.grid();
  const int m = out.components();
  std::vector<Complex> values(g.points());
  for_each_mode(g, [&](std::size_t flat, const Vec3& xi) {
    const Complex v = s(xi);
    if (!detail::finite(v)) detail::throw_symbol_error(xi);
    values[flat] = v;
  });
  for (int c = 0; c < m; ++c) {
    Complex* u = out.comp(c);
    for (std::size_t i = 0; i < values.size(); ++i) u[i] *= values[i];
  }
  fft_inverse(out);
  return out;
}

/// Applies a matrix-valued Fourier multiplier: s fills an m x m row-major
/// matrix per lattice frequency, multiplied against the component vector.
template <class Sym>
Field apply_fourier_multiplier(const Field& f, Sym&& s) {
  const int m = f.components();
  Field hat = f;
  fft_forward(hat);
  Field out(f.grid(), m);
  std::vector<Complex> M(static_cast<std::size_t>(m) * m);
  std::vector<Complex> in(m), res(m);
  for_each_mode(f.grid(), [&](std::size_t flat, const Vec3& xi) {
    s(xi, M.data());
    for (int i = 0; i < m * m; ++i)
      if (!detail::finite(M[i])) detail::throw_symbol_error(xi);
    for (int c = 0; c < m; ++c) in[c] = hat.at(c, flat);
    for (int i = 0; i < m; ++i) {
      Complex acc = 0.0;
      for (int j = 0; j < m; ++j) acc += M[static_cast<std::size_t>(i) * m + j] * in[j];
      res[i] = acc;
    }
    for (int c = 0; c < m; ++c) out.at(c, flat) = res[c];
  });
  fft_inverse(out);
  return out;
}

/// All first partial derivatives of every component, as an (m*n)-component
/// field ordered derivative-major: out[(d*m + c)] = d_d f_c. First-derivative
/// multipliers zero the Nyquist frequency.
inline Field spectral_gradient(const Field& f) {
  const Grid& g = f.grid();
  const int n = g.dim(), m = f.components(), N = g.extent();
  Field hat = f;
  fft_forward(hat);
  Field out(g, n * m);
  for (int d = 0; d < n; ++d) {
    for (int c = 0; c < m; ++c) {
      Complex* dst = out.comp(d * m + c);
      const Complex* src = hat.comp(c);
      std::size_t flat = 0;
      for (int j0 = 0; j0 < N; ++j0) {
        for (int j1 = 0; j1 < N; ++j1) {
          if (n == 2) {
            const double xd = g.xi_deriv(d == 0 ? j0 : j1);
            dst[flat] = Complex(0.0, xd) * src[flat];
            ++flat;
          } else {
            for (int j2 = 0; j2 < N; ++j2, ++flat) {
              const double xd = g.xi_deriv(d == 0 ? j0 : (d == 1 ? j1 : j2));
              dst[flat] = Complex(0.0, xd) * src[flat];
            }
          }
        }
      }
      fft_inverse(g, dst);
    }
  }
  return out;
}

/// Single partial derivative d_axis applied to every component
/// (Nyquist-zeroed, like spectral_gradient).
inline Field spectral_partial(const Field& f, int axis) {
  const Grid& g = f.grid();
  const int n = g.dim(), N = g.extent();
  if (axis < 0 || axis >= n) throw std::invalid_argument("spectral_partial: bad axis");
  Field out = f;
  fft_forward(out);
  for (int c = 0; c < out.components(); ++c) {
    Complex* u = out.comp(c);
    std::size_t flat = 0;
    for (int j0 = 0; j0 < N; ++j0)
      for (int j1 = 0; j1 < N; ++j1) {
        if (n == 2) {
          u[flat] *= Complex(0.0, g.xi_deriv(axis == 0 ? j0 : j1));
          ++flat;
        } else {
          for (int j2 = 0; j2 < N; ++j2, ++flat)
            u[flat] *= Complex(0.0, g.xi_deriv(axis == 0 ? j0 : (axis == 1 ? j1 : j2)));
        }
      }
  }
  fft_inverse(out);
  return out;
}

/// All second partials d_j d_k f of a scalar field, as an n*n-component field
/// in row-major (j,k) order, via the multiplier -xi_j xi_k (full Nyquist).
inline Field spectral_hessian(const Field& f) {
  if (f.components() != 1) throw std::invalid_argument("spectral_hessian: scalar fields only");
  const Grid& g = f.grid();
  const int n = g.dim();
  Field hat = f;
  fft_forward(hat);
  Field out(g, n * n);
  for_each_mode(g, [&](std::size_t flat, const Vec3& xi) {
    const Complex v = hat.at(0, flat);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.at(j * n + k, flat) = -xi[j] * xi[k] * v;
  });
  for (int c = 0; c < n * n; ++c) fft_inverse(g, out.comp(c));
  return out;
}

/// Laplacian via the full |xi|^2 multiplier.
inline Field spectral_laplacian(const Field& f) {
  return apply_scalar_multiplier(f, [](const Vec3& xi) {
    return Complex(-(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]), 0.0);
  });
}

/// Leray projection onto divergence-free fields: on every nonzero mode
/// hat(Pf) = hat(f) - xi (xi . hat(f)) / |xi|^2; the zero mode passes through
/// (constants are divergence-free). Requires m = n.
inline Field leray_project(const Field& f) {
  const Grid& g = f.grid();
  const int n = g.dim();
  if (f.components() != n)
    throw std::invalid_argument("leray_project: field must have m = n components");
  Field out = f;
  fft_forward(out);
  for_each_mode(g, [&](std::size_t flat, const Vec3& xi) {
    const double norm2 = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
    if (norm2 == 0.0) return;
    Complex dot = 0.0;
    for (int c = 0; c < n; ++c) dot += xi[c] * out.at(c, flat);
    dot /= norm2;
    for (int c = 0; c < n; ++c) out.at(c, flat) -= xi[c] * dot;
  });
  fft_inverse(out);
  return out;
}

/// Spectral divergence of an m = n field (Nyquist-zeroed derivative).
inline Field spectral_divergence(const Field& f) {
  const Grid& g = f.grid();
  const int n = g.dim();
  if (f.components() != n) throw std::invalid_argument("spectral_divergence: requires m = n");
  Field hat = f;
  fft_forward(hat);
  Field out(g, 1);
  const int N = g.extent();
  std::size_t flat = 0;
  auto xi_d = [&](int j) { return g.xi_deriv(j); };
  if (n == 2) {
    for (int j0 = 0; j0 < N; ++j0)
      for (int j1 = 0; j1 < N; ++j1, ++flat)
        out.at(0, flat) =
            Complex(0, xi_d(j0)) * hat.at(0, flat) + Complex(0, xi_d(j1)) * hat.at(1, flat);
  } else {
    for (int j0 = 0; j0 < N; ++j0)
      for (int j1 = 0; j1 < N; ++j1)
        for (int j2 = 0; j2 < N; ++j2, ++flat)
          out.at(0, flat) = Complex(0, xi_d(j0)) * hat.at(0, flat) +
                            Complex(0, xi_d(j1)) * hat.at(1, flat) +
                            Complex(0, xi_d(j2)) * hat.at(2, flat);
  }
  fft_inverse(g, out.comp(0));
  return out;
}

/// Spectral curl of a 3-component field on a 3-d grid.
inline Field spectral_curl(const Field& f) {
  const Grid& g = f.grid();
  if (g.dim() != 3 || f.components() != 3)
    throw std::invalid_argument("spectral_curl: requires n = 3, m = 3");
  Field hat = f;
  fft_forward(hat);
  Field out(g, 3);
  const int N = g.extent();
  std::size_t flat = 0;
  for (int j0 = 0; j0 < N; ++j0) {
    const double k0 = g.xi_deriv(j0);
    for (int j1 = 0; j1 < N; ++j1) {
      const double k1 = g.xi_deriv(j1);
      for (int j2 = 0; j2 < N; ++j2, ++flat) {
        const double k2 = g.xi_deriv(j2);
        const Complex i(0.0, 1.0);
        const Complex a = hat.at(0, flat), b = hat.at(1, flat), c = hat.at(2, flat);
        out.at(0, flat) = i * (k1 * c - k2 * b);
        out.at(1, flat) = i * (k2 * a - k0 * c);
        out.at(2, flat) = i * (k0 * b - k1 * a);
      }
    }
  }
  fft_inverse(out);
  return out;
}

}  // namespace helmax

#endif
