// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The helmax authors

#ifndef HELMAX_LEBESGUE_HPP
#define HELMAX_LEBESGUE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "helmax/rational.hpp"

namespace helmax {

/// A Lebesgue exponent p with 1 <= p <= infinity, stored through its exact
/// reciprocal 1/p in [0, 1]. Infinity is the reciprocal 0, so all the
/// region arithmetic (sums and differences of reciprocals) stays exact and
/// endpoint comparisons never go through floating point.
class LebesgueExponent {
public:
  LebesgueExponent() : recip_(1) {}  // p = 1

  explicit LebesgueExponent(const Rational& p) {
    if (p < Rational(1)) throw std::domain_error("LebesgueExponent: p < 1");
    recip_ = Rational(1) / p;
  }
  LebesgueExponent(std::int64_t num, std::int64_t den) : LebesgueExponent(Rational(num, den)) {}

  static LebesgueExponent infinity() {
    LebesgueExponent e;
    e.recip_ = Rational(0);
    return e;
  }

  static LebesgueExponent from_reciprocal(const Rational& r) {
    if (r < Rational(0) || r > Rational(1))
      throw std::domain_error("LebesgueExponent: reciprocal outside [0,1]");
    LebesgueExponent e;
    e.recip_ = r;
    return e;
  }

  /// Accepts "a/b", "a" or "inf".
  static LebesgueExponent parse(std::string_view s) {
    if (s == "inf" || s == "Inf" || s == "INF") return infinity();
    return LebesgueExponent(Rational::parse(s));
  }

  bool is_infinite() const { return recip_ == Rational(0); }

  const Rational& reciprocal() const { return recip_; }

  /// The exponent itself; throws for p = infinity.
  Rational value() const {
    if (is_infinite()) throw std::domain_error("LebesgueExponent: value() of infinity");
    return Rational(1) / recip_;
  }

  double to_double() const {
    if (is_infinite()) throw std::domain_error("LebesgueExponent: to_double() of infinity");
    return value().to_double();
  }

  std::string str() const { return is_infinite() ? "inf" : value().str(); }

  friend bool operator==(const LebesgueExponent& a, const LebesgueExponent& b) {
    return a.recip_ == b.recip_;
  }
  friend bool operator!=(const LebesgueExponent& a, const LebesgueExponent& b) { return !(a == b); }
  // Ordering of exponents is the reverse ordering of reciprocals.
  friend bool operator<(const LebesgueExponent& a, const LebesgueExponent& b) {
    return b.recip_ < a.recip_;
  }
  friend bool operator<=(const LebesgueExponent& a, const LebesgueExponent& b) {
    return b.recip_ <= a.recip_;
  }

private:
  Rational recip_;
};

}  // namespace helmax

#endif
