// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The helmax authors

#ifndef HELMAX_SPECTRAL_PARAMETER_HPP
#define HELMAX_SPECTRAL_PARAMETER_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace helmax {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResonanceError : std::runtime_error {
  double shell_value;  // the offending |xi_k|^2
  ResonanceError(const std::string& msg, double shell) : std::runtime_error(msg), shell_value(shell) {}
};

/// Spectral parameter zeta with half-plane bookkeeping. Interior parameters
/// live off the nonnegative real axis; lambda +- i0 objects store the real
/// lambda > 0 and are only ever evaluated through an explicit surrogate
/// delta > 0 supplied by the caller (the limit is a limit, never a value).
class SpectralParameter {
public:
  enum class Tag { interior, plus_i0, minus_i0 };

  static SpectralParameter interior(std::complex<double> zeta) {
    if (zeta.imag() == 0.0 && zeta.real() >= 0.0)
      throw UsageError("SpectralParameter: interior zeta must avoid the nonnegative real axis");
    return SpectralParameter(zeta, Tag::interior);
  }

  static SpectralParameter limit(double lambda, Tag side) {
    if (side == Tag::interior)
      throw UsageError("SpectralParameter: limit() needs plus_i0 or minus_i0");
    if (!(lambda > 0.0)) throw UsageError("SpectralParameter: limit lambda must be > 0");
    return SpectralParameter(lambda, side);
  }

  Tag tag() const { return tag_; }
  bool tagged() const { return tag_ != Tag::interior; }

  std::complex<double> zeta() const { return zeta_; }

  double lambda() const {
    if (!tagged()) throw UsageError("SpectralParameter: lambda() on interior parameter");
    return zeta_.real();
  }

  /// The value actually used on the lattice: zeta itself for interior
  /// parameters, lambda +- i delta for tagged ones.
  std::complex<double> effective(double delta = 0.0) const {
    if (!tagged()) return zeta_;
    if (!(delta > 0.0))
      throw UsageError("SpectralParameter: tagged parameter needs a surrogate delta > 0");
    return {zeta_.real(), tag_ == Tag::plus_i0 ? delta : -delta};
  }

  /// Square root mu with the half-plane convention of the Green's kernel:
  /// Im(mu) > 0 for interior zeta, mu = +-sqrt(lambda) for lambda +- i0.
  std::complex<double> kernel_root() const {
    if (tagged()) {
      const double r = std::sqrt(zeta_.real());
      return {tag_ == Tag::plus_i0 ? r : -r, 0.0};
    }
    std::complex<double> mu = std::sqrt(zeta_);
    if (mu.imag() < 0.0) mu = -mu;
    return mu;
  }

private:
  SpectralParameter(std::complex<double> z, Tag t) : zeta_(z), tag_(t) {}
  std::complex<double> zeta_;
  Tag tag_;
};

}  // namespace helmax

#endif
