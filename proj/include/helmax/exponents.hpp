// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The helmax authors

#ifndef HELMAX_EXPONENTS_HPP
#define HELMAX_EXPONENTS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "helmax/lebesgue.hpp"
#include "helmax/rational.hpp"

namespace helmax {

/// One failed inequality of an admissibility system, in human-readable form.
struct Violation {
  std::string inequality;  // e.g. "1/p > (n+1)/(2n)"
  std::string detail;      // evaluated values, e.g. "1/2 > 2/3 is false"
};

/// Outcome of an admissibility check: admissible iff violations is empty.
struct RegionCheck {
  bool admissible = true;
  std::vector<Violation> violations;

  explicit operator bool() const { return admissible; }

  void require(bool ok, std::string inequality, std::string detail) {
    if (!ok) {
      admissible = false;
      violations.push_back({std::move(inequality), std::move(detail)});
    }
  }

  std::string summary() const {
    if (admissible) return "admissible";
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += "violated " + v.inequality + " (" + v.detail + ")";
    }
    return s;
  }
};

struct AdmissibilityError : std::runtime_error {
  explicit AdmissibilityError(const RegionCheck& c) : std::runtime_error(c.summary()) {}
};

/// Exponent tuple of one admissible-exponent system.
struct ExponentTuple {
  LebesgueExponent p;
  std::optional<LebesgueExponent> p_tilde;
  LebesgueExponent q;
  std::optional<LebesgueExponent> q1;
  std::optional<LebesgueExponent> q2;
  int n = 3;
  std::optional<LebesgueExponent> kappa;
  std::optional<LebesgueExponent> kappa_tilde;
};

namespace detail {
inline std::string ineq(const Rational& lhs, const char* rel, const Rational& rhs) {
  return lhs.str() + " " + rel + " " + rhs.str() + " is false";
}
}  // namespace detail

/// Free-resolvent L^p-L^q region for n >= 3:
///   (n+1)/(2n) < 1/p <= 1,  0 <= 1/q < (n-1)/(2n),  2/(n+1) <= 1/p - 1/q <= 2/n.
inline RegionCheck check_gutierrez(const LebesgueExponent& p, const LebesgueExponent& q, int n) {
  if (n < 3) throw std::domain_error("check_gutierrez: requires n >= 3");
  const Rational rp = p.reciprocal(), rq = q.reciprocal();
  const Rational lo_p(n + 1, 2 * n), hi_q(n - 1, 2 * n);
  const Rational gap = rp - rq, gap_lo(2, n + 1), gap_hi(2, n);
  RegionCheck c;
  c.require(lo_p < rp, "1/p > (n+1)/(2n)", detail::ineq(rp, ">", lo_p));
  c.require(rp <= Rational(1), "1/p <= 1", detail::ineq(rp, "<=", Rational(1)));
  c.require(rq < hi_q, "1/q < (n-1)/(2n)", detail::ineq(rq, "<", hi_q));
  c.require(gap_lo <= gap, "1/p - 1/q >= 2/(n+1)", detail::ineq(gap, ">=", gap_lo));
  c.require(gap <= gap_hi, "1/p - 1/q <= 2/n", detail::ineq(gap, "<=", gap_hi));
  return c;
}

/// Maxwell LAP admissibility (n = 3 fixed):
///   2/3 < 1/p < 1,  1/6 < 1/q < 1/3,  1/2 <= 1/p - 1/q <= 2/3,
///   0 <= 1/ptilde - 1/q <= 1/3.
inline RegionCheck check_maxwell_conditions(const LebesgueExponent& p,
                                            const LebesgueExponent& p_tilde,
                                            const LebesgueExponent& q) {
  const Rational rp = p.reciprocal(), rpt = p_tilde.reciprocal(), rq = q.reciprocal();
  RegionCheck c;
  c.require(Rational(2, 3) < rp, "1/p > 2/3", detail::ineq(rp, ">", Rational(2, 3)));
  c.require(rp < Rational(1), "1/p < 1", detail::ineq(rp, "<", Rational(1)));
  c.require(Rational(1, 6) < rq, "1/q > 1/6", detail::ineq(rq, ">", Rational(1, 6)));
  c.require(rq < Rational(1, 3), "1/q < 1/3", detail::ineq(rq, "<", Rational(1, 3)));
  const Rational gap = rp - rq;
  c.require(Rational(1, 2) <= gap, "1/p - 1/q >= 1/2", detail::ineq(gap, ">=", Rational(1, 2)));
  c.require(gap <= Rational(2, 3), "1/p - 1/q <= 2/3", detail::ineq(gap, "<=", Rational(2, 3)));
  const Rational tgap = rpt - rq;
  c.require(Rational(0) <= tgap, "1/ptilde - 1/q >= 0", detail::ineq(tgap, ">=", Rational(0)));
  c.require(tgap <= Rational(1, 3), "1/ptilde - 1/q <= 1/3",
            detail::ineq(tgap, "<=", Rational(1, 3)));
  return c;
}

/// Compactness region for K(zeta) = -R0(zeta)V : L^{q1} -> L^{q2} with
/// V in L^kappa + L^{kappa~}:
///   (n+1)/(2n) - 1/kappa~ < 1/q1 <= 1 - 1/kappa,
///   0 <= 1/q2 < (n-1)/(2n),
///   2/(n+1) - 1/kappa~ <= 1/q1 - 1/q2 <= 2/n - 1/kappa.
inline RegionCheck check_compactness_conditions(const LebesgueExponent& q1,
                                                const LebesgueExponent& q2,
                                                const LebesgueExponent& kappa,
                                                const LebesgueExponent& kappa_tilde, int n) {
  if (n < 3) throw std::domain_error("check_compactness_conditions: requires n >= 3");
  if (kappa.is_infinite() || kappa_tilde.is_infinite())
    throw std::domain_error("check_compactness_conditions: requires kappa, kappa~ < inf");
  if (kappa_tilde < kappa)
    throw std::domain_error("check_compactness_conditions: requires kappa <= kappa~");
  const Rational rq1 = q1.reciprocal(), rq2 = q2.reciprocal();
  const Rational rk = kappa.reciprocal(), rkt = kappa_tilde.reciprocal();
  RegionCheck c;
  const Rational lo1 = Rational(n + 1, 2 * n) - rkt;
  c.require(lo1 < rq1, "1/q1 > (n+1)/(2n) - 1/kappa~", detail::ineq(rq1, ">", lo1));
  const Rational hi1 = Rational(1) - rk;
  c.require(rq1 <= hi1, "1/q1 <= 1 - 1/kappa", detail::ineq(rq1, "<=", hi1));
  c.require(Rational(0) <= rq2, "1/q2 >= 0", detail::ineq(rq2, ">=", Rational(0)));
  const Rational hi2(n - 1, 2 * n);
  c.require(rq2 < hi2, "1/q2 < (n-1)/(2n)", detail::ineq(rq2, "<", hi2));
  const Rational gap = rq1 - rq2;
  const Rational glo = Rational(2, n + 1) - rkt, ghi = Rational(2, n) - rk;
  c.require(glo <= gap, "1/q1 - 1/q2 >= 2/(n+1) - 1/kappa~", detail::ineq(gap, ">=", glo));
  c.require(gap <= ghi, "1/q1 - 1/q2 <= 2/n - 1/kappa", detail::ineq(gap, "<=", ghi));
  return c;
}

/// K(zeta) compact on L^q itself (q1 = q2 = q) for n/2 <= kappa <= kappa~ <= (n+1)/2:
///   (n+1)/(2n) - 1/kappa~ < 1/q < (n-1)/(2n).
inline RegionCheck check_simplified_condition(const LebesgueExponent& q,
                                              const LebesgueExponent& kappa_tilde, int n) {
  if (n < 3) throw std::domain_error("check_simplified_condition: requires n >= 3");
  const Rational rq = q.reciprocal(), rkt = kappa_tilde.reciprocal();
  RegionCheck c;
  const Rational lo = Rational(n + 1, 2 * n) - rkt;
  c.require(lo < rq, "1/q > (n+1)/(2n) - 1/kappa~", detail::ineq(rq, ">", lo));
  const Rational hi(n - 1, 2 * n);
  c.require(rq < hi, "1/q < (n-1)/(2n)", detail::ineq(rq, "<", hi));
  return c;
}

/// Derivative-resolvent region (R0(zeta) d_j : L^p cap L^{ptilde} -> L^q):
/// the free-resolvent region in (p, q) plus
///   0 <= 1/ptilde - 1/q <= 1/n with the two corner points
///   (1/ptilde, 1/q) in {(1, 1-1/n), (1/n, 0)} excluded.
inline RegionCheck check_derivative_conditions(const LebesgueExponent& p,
                                               const LebesgueExponent& p_tilde,
                                               const LebesgueExponent& q, int n) {
  if (n < 3) throw std::domain_error("check_derivative_conditions: requires n >= 3");
  RegionCheck c = check_gutierrez(p, q, n);
  const Rational rpt = p_tilde.reciprocal(), rq = q.reciprocal();
  const Rational tgap = rpt - rq;
  c.require(Rational(0) <= tgap, "1/ptilde - 1/q >= 0", detail::ineq(tgap, ">=", Rational(0)));
  c.require(tgap <= Rational(1, n), "1/ptilde - 1/q <= 1/n",
            detail::ineq(tgap, "<=", Rational(1, n)));
  const bool corner1 = rpt == Rational(1) && rq == Rational(1) - Rational(1, n);
  const bool corner2 = rpt == Rational(1, n) && rq == Rational(0);
  c.require(!corner1, "(1/ptilde, 1/q) != (1, 1-1/n)",
            "(" + rpt.str() + ", " + rq.str() + ") is the excluded corner");
  c.require(!corner2, "(1/ptilde, 1/q) != (1/n, 0)",
            "(" + rpt.str() + ", " + rq.str() + ") is the excluded corner");
  return c;
}

/// |zeta|-exponent of the free-resolvent bound: (n/2) (1/p - 1/q - 2/n).
inline Rational scaling_exponent(const LebesgueExponent& p, const LebesgueExponent& q, int n) {
  if (q < p) throw std::domain_error("scaling_exponent: requires p <= q");
  return Rational(n, 2) * (p.reciprocal() - q.reciprocal() - Rational(2, n));
}

/// The pair of |zeta|-exponents in the derivative-resolvent bound:
///   ((n/2)(1/p - 1/q - 1/n), (n/2)(1/ptilde - 1/q - 1/n)).
inline std::pair<Rational, Rational> derivative_scaling_exponents(const LebesgueExponent& p,
                                                                  const LebesgueExponent& p_tilde,
                                                                  const LebesgueExponent& q,
                                                                  int n) {
  const Rational half_n(n, 2), inv_n(1, n);
  return {half_n * (p.reciprocal() - q.reciprocal() - inv_n),
          half_n * (p_tilde.reciprocal() - q.reciprocal() - inv_n)};
}

/// The two |zeta|-exponents of the K(zeta) norm bound for a split V = V1 + V2:
///   ((n/2)(1/q1 - 1/q2 + 1/kappa - 2/n), (n/2)(1/q1 - 1/q2 + 1/kappa~ - 2/n)).
/// Requires the compactness region to hold.
inline std::pair<Rational, Rational> k_norm_bound_exponents(const LebesgueExponent& q1,
                                                            const LebesgueExponent& q2,
                                                            const LebesgueExponent& kappa,
                                                            const LebesgueExponent& kappa_tilde,
                                                            int n) {
  RegionCheck c = check_compactness_conditions(q1, q2, kappa, kappa_tilde, n);
  if (!c) throw AdmissibilityError(c);
  const Rational half_n(n, 2), two_n(2, n);
  const Rational gap = q1.reciprocal() - q2.reciprocal();
  return {half_n * (gap + kappa.reciprocal() - two_n),
          half_n * (gap + kappa_tilde.reciprocal() - two_n)};
}

/// Decay-bootstrap exponent sequence q_0, ..., q_{j_max}. Reciprocals follow
///   1/q_{j+1} = min{ (1/q_j + (n-1)/(2n)) / 2,  1/q_j - 2/(n+1) + 1/kappa~ }
/// with 1/kappa~ replaced by 2/n in the limiting case kappa~ = (n+1)/2.
/// The reciprocals increase strictly toward (n-1)/(2n).
inline std::vector<LebesgueExponent> bootstrap_sequence(const LebesgueExponent& q0,
                                                        const LebesgueExponent& kappa_tilde,
                                                        int n, int j_max) {
  if (n < 3) throw std::domain_error("bootstrap_sequence: requires n >= 3");
  if (j_max < 0) throw std::domain_error("bootstrap_sequence: j_max < 0");
  const Rational limit(n - 1, 2 * n);
  if (!(q0.reciprocal() < limit) || q0.reciprocal() <= Rational(0))
    throw std::domain_error("bootstrap_sequence: requires 2n/(n-1) < q0 < inf");
  const Rational rkt = kappa_tilde.reciprocal();
  if (rkt > Rational(2, n) || rkt < Rational(2, n + 1))
    throw std::domain_error("bootstrap_sequence: requires n/2 <= kappa~ <= (n+1)/2");
  const bool limiting = rkt == Rational(2, n + 1);  // kappa~ = (n+1)/2
  const Rational increment = (limiting ? Rational(2, n) : rkt) - Rational(2, n + 1);

  std::vector<LebesgueExponent> seq;
  seq.reserve(static_cast<std::size_t>(j_max) + 1);
  Rational r = q0.reciprocal();
  seq.push_back(q0);
  for (int j = 0; j < j_max; ++j) {
    const Rational midpoint = (r + limit) / Rational(2);
    const Rational stepped = r + increment;
    r = stepped < midpoint ? stepped : midpoint;
    seq.push_back(LebesgueExponent::from_reciprocal(r));
  }
  return seq;
}

/// Searches a bracket q1 <= q <= q2 on the reciprocal grid {j/scan_denominator}
/// such that (p, ptilde, q1) and (p, ptilde, q2) both satisfy the Maxwell
/// conditions, widening around q as far as the grid allows. Returns the
/// degenerate bracket (q, q) if no strictly wider grid bracket exists, and
/// nullopt if not even the degenerate one does (q itself off the grid with no
/// admissible neighbors on both sides).
inline std::optional<std::pair<LebesgueExponent, LebesgueExponent>> find_maxwell_bracket(
    const LebesgueExponent& p, const LebesgueExponent& p_tilde, const LebesgueExponent& q,
    std::int64_t scan_denominator) {
  RegionCheck base = check_maxwell_conditions(p, p_tilde, q);
  if (!base) throw AdmissibilityError(base);
  if (scan_denominator < 1) throw std::domain_error("find_maxwell_bracket: denominator < 1");

  const Rational rq = q.reciprocal();
  // Largest admissible reciprocal >= rq on the grid gives q1 (q1 <= q), the
  // smallest admissible reciprocal <= rq gives q2 (q2 >= q).
  std::optional<Rational> best_hi, best_lo;
  for (std::int64_t j = 0; j <= scan_denominator; ++j) {
    const Rational r(j, scan_denominator);
    LebesgueExponent cand = LebesgueExponent::from_reciprocal(r);
    if (!check_maxwell_conditions(p, p_tilde, cand)) continue;
    if (r >= rq && (!best_hi || r > *best_hi)) best_hi = r;
    if (r <= rq && (!best_lo || r < *best_lo)) best_lo = r;
  }
  if (best_hi && best_lo && (*best_hi > rq || *best_lo < rq)) {
    return std::make_pair(LebesgueExponent::from_reciprocal(*best_hi),
                          LebesgueExponent::from_reciprocal(*best_lo));
  }
  return std::make_pair(q, q);
}

}  // namespace helmax

#endif
