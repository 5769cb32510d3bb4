#pragma once

// The canonical Hessian metric of log(phi) on the cone, the trace metric on
// positive definite matrices, Jacobians of the linear fractional action and
// contraction ratios.

#include "vinberg/cone.hpp"
#include "vinberg/group.hpp"

namespace vinberg {

/// -1/2 (v1 w1 / x1^2 + v2 w2 / x2^2) + 2 tr(x^-1 v x^-1 w).
/// Throws DomainError off the open cone.
double metric_omega(const VVector& x, const VVector& v, const VVector& w);

/// 2 tr(x^-1 v x^-1 w). Throws DomainError unless x is positive definite.
double metric_sym(const Mat3& x, const Mat3& v, const Mat3& w);

/// log of char_function, evaluated term by term.
double log_char_function(const VVector& x);

/// Central second difference of log(phi) along v and w with step h.
double hessian_log_phi_fd(const VVector& x, const VVector& v, const VVector& w,
                          double h = 1e-4);

/// Pushforward of v under g at x: M^-T v M^-1 with M = C x + D.
VVector jacobian_action(const GElement& g, const VVector& x, const VVector& v);

/// (g(x + h v) - g(x - h v)) / 2h.
VVector jacobian_fd(const GElement& g, const VVector& x, const VVector& v,
                    double h = 1e-5);

/// Violation threshold on a contraction ratio.
inline constexpr double kViolationSlack = 1e-12;

struct ContractionRecord {
  GElement g;
  VVector x;
  VVector v;
  /// Metric of v at x.
  double before = 0.0;
  /// Metric of the pushed-forward v at g(x).
  double after = 0.0;
  double ratio = 0.0;
  bool violated = false;
};

/// after / before for g in Gamma, x in the cone and v != 0.
ContractionRecord contraction_ratio(const GElement& g, const VVector& x, const VVector& v);

/// (A x + B)(C x + D)^-1 on symmetric matrices.
Mat3 act_sym(const Mat6& g, const Mat3& x);

/// M^-T v M^-1 with M = C x + D.
Mat3 jacobian_sym(const Mat6& g, const Mat3& x, const Mat3& v);

/// The same ratio for Gamma_Sp acting on positive definite matrices with the
/// trace metric. Throws MembershipError unless in_gamma_sp(g).
double contraction_ratio_sym(const Mat6& g, const Mat3& x, const Mat3& v);

/// g0 = t_{v0} with v0 = (1, 1, 1.01, -1, 0), x = I3 and v = (1, 0, 1, 1, 0):
/// a translation in Gamma that stretches v (7.5 -> 7.7957...).
ContractionRecord counterexample();

}  // namespace vinberg
