// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The helmax authors

#ifndef HELMAX_FIELD_HPP
#define HELMAX_FIELD_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "helmax/lebesgue.hpp"

namespace helmax {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Uniform periodic sampling box [0,L)^n with N points per axis.
/// The frequency lattice is xi_k = 2 pi k / L for integer k in [-N/2, N/2).
class Grid {
public:
  Grid(int n, int N, double L) : n_(n), N_(N), L_(L) {
    if (n != 2 && n != 3) throw std::invalid_argument("Grid: n must be 2 or 3");
    if (N < 8 || N % 2 != 0) throw std::invalid_argument("Grid: N must be even and >= 8");
    if (!(L > 0.0)) throw std::invalid_argument("Grid: L must be positive");
    points_ = 1;
    for (int a = 0; a < n; ++a) points_ *= static_cast<std::size_t>(N);
  }

  int dim() const { return n_; }
  int extent() const { return N_; }
  double length() const { return L_; }
  double spacing() const { return L_ / N_; }
  std::size_t points() const { return points_; }
  double cell_volume() const { return std::pow(spacing(), n_); }

  /// Signed integer frequency index for storage slot j: j for j < N/2, j-N above
  /// (the Nyquist slot j = N/2 carries k = -N/2).
  int freq_index(int j) const { return j < N_ / 2 ? j : j - N_; }

  /// Lattice frequency xi for storage slot j along one axis.
  double xi(int j) const { return 2.0 * std::numbers::pi * freq_index(j) / L_; }

  /// Frequency used by first-derivative multipliers: the Nyquist slot is
  /// zeroed so that derivatives of real fields stay real.
  double xi_deriv(int j) const { return j == N_ / 2 ? 0.0 : xi(j); }

  /// Spatial coordinate of slot j along one axis.
  double coord(int j) const { return spacing() * j; }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.n_ == b.n_ && a.N_ == b.N_ && a.L_ == b.L_;
  }
  friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

private:
  int n_;
  int N_;
  double L_;
  std::size_t points_;
};

/// Iterates all lattice slots in C-order, f(flat_index, xi_vector).
/// Unused trailing entries of the xi vector are zero for n = 2.
template <class F>
void for_each_mode(const Grid& g, F&& f) {
  const int N = g.extent();
  std::size_t flat = 0;
  if (g.dim() == 2) {
    for (int j0 = 0; j0 < N; ++j0) {
      const double x0 = g.xi(j0);
      for (int j1 = 0; j1 < N; ++j1, ++flat) f(flat, Vec3{x0, g.xi(j1), 0.0});
    }
  } else {
    for (int j0 = 0; j0 < N; ++j0) {
      const double x0 = g.xi(j0);
      for (int j1 = 0; j1 < N; ++j1) {
        const double x1 = g.xi(j1);
        for (int j2 = 0; j2 < N; ++j2, ++flat) f(flat, Vec3{x0, x1, g.xi(j2)});
      }
    }
  }
}

/// Same walk over spatial coordinates.
template <class F>
void for_each_point(const Grid& g, F&& f) {
  const int N = g.extent();
  std::size_t flat = 0;
  if (g.dim() == 2) {
    for (int j0 = 0; j0 < N; ++j0)
      for (int j1 = 0; j1 < N; ++j1, ++flat) f(flat, Vec3{g.coord(j0), g.coord(j1), 0.0});
  } else {
    for (int j0 = 0; j0 < N; ++j0)
      for (int j1 = 0; j1 < N; ++j1)
        for (int j2 = 0; j2 < N; ++j2, ++flat)
          f(flat, Vec3{g.coord(j0), g.coord(j1), g.coord(j2)});
  }
}

/// m-component complex field sampled on a Grid, component-major C-order.
/// Fields are value types; all operations on them are pure.
class Field {
public:
  Field(const Grid& grid, int m)
      : grid_(grid), m_(m), v_(static_cast<std::size_t>(m) * grid.points()) {
    if (m < 1) throw std::invalid_argument("Field: m must be >= 1");
  }

  const Grid& grid() const { return grid_; }
  int components() const { return m_; }
  std::size_t points() const { return grid_.points(); }

  Complex* comp(int c) { return v_.data() + static_cast<std::size_t>(c) * points(); }
  const Complex* comp(int c) const { return v_.data() + static_cast<std::size_t>(c) * points(); }

  Complex& at(int c, std::size_t flat) { return v_[static_cast<std::size_t>(c) * points() + flat]; }
  const Complex& at(int c, std::size_t flat) const {
    return v_[static_cast<std::size_t>(c) * points() + flat];
  }

  std::vector<Complex>& data() { return v_; }
  const std::vector<Complex>& data() const { return v_; }

  bool finite() const {
    for (const Complex& z : v_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  Field& operator+=(const Field& o) {
    check_shape(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  Field& operator-=(const Field& o) {
    check_shape(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  Field& operator*=(Complex s) {
    for (Complex& z : v_) z *= s;
    return *this;
  }
  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(Complex s, Field a) { return a *= s; }

  /// this += s * o, the solver workhorse.
  void axpy(Complex s, const Field& o) {
    check_shape(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += s * o.v_[i];
  }

  void check_shape(const Field& o) const {
    if (grid_ != o.grid_ || m_ != o.m_) throw std::invalid_argument("Field: shape mismatch");
  }

private:
  Grid grid_;
  int m_;
  std::vector<Complex> v_;
};

/// Discrete L^p norm with cell-volume weight: (sum_x |f(x)|^p h^n)^(1/p),
/// |f(x)| the Euclidean norm over components; p = inf gives the max.
inline double lp_norm(const Field& f, const LebesgueExponent& p) {
  const std::size_t np = f.points();
  const int m = f.components();
  if (p.is_infinite()) {
    double mx = 0.0;
    for (std::size_t x = 0; x < np; ++x) {
      double s = 0.0;
      for (int c = 0; c < m; ++c) s += std::norm(f.at(c, x));
      mx = std::max(mx, s);
    }
    return std::sqrt(mx);
  }
  const double pd = p.to_double();
  const double hn = f.grid().cell_volume();
  double acc = 0.0;
  if (pd == 2.0) {
    for (std::size_t x = 0; x < np; ++x)
      for (int c = 0; c < m; ++c) acc += std::norm(f.at(c, x));
    return std::sqrt(acc * hn);
  }
  for (std::size_t x = 0; x < np; ++x) {
    double s = 0.0;
    for (int c = 0; c < m; ++c) s += std::norm(f.at(c, x));
    acc += std::pow(s, 0.5 * pd);
  }
  return std::pow(acc * hn, 1.0 / pd);
}

inline double l2_norm(const Field& f) { return lp_norm(f, LebesgueExponent(Rational(2))); }

/// <a, b> = sum conj(a).b h^n (conjugate-linear in the first slot).
inline Complex inner(const Field& a, const Field& b) {
  a.check_shape(b);
  Complex acc = 0.0;
  const auto& av = a.data();
  const auto& bv = b.data();
  for (std::size_t i = 0; i < av.size(); ++i) acc += std::conj(av[i]) * bv[i];
  return acc * a.grid().cell_volume();
}

/// Complex-bilinear pairing sum a.b h^n (no conjugation).
inline Complex bilinear_pairing(const Field& a, const Field& b) {
  a.check_shape(b);
  Complex acc = 0.0;
  const auto& av = a.data();
  const auto& bv = b.data();
  for (std::size_t i = 0; i < av.size(); ++i) acc += av[i] * bv[i];
  return acc * a.grid().cell_volume();
}

}  // namespace helmax

#endif
