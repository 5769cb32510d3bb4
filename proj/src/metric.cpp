#include "vinberg/metric.hpp"

#include <cmath>

#include <Eigen/Cholesky>

#include "vinberg/errors.hpp"
#include "vinberg/semigroup.hpp"

namespace vinberg {

namespace {

Mat3 inverse_in_cone(const VVector& x, const char* what) {
  if (!in_open_cone(x)) throw DomainError(std::string(what) + ": point is not in the open cone");
  const Mat3 m = x.embed();
  return adjugate3(m) / det3(m);
}

}  // namespace

double metric_omega(const VVector& x, const VVector& v, const VVector& w) {
  const Mat3 xi = inverse_in_cone(x, "metric_omega");
  const double extra = -0.5 * (v[0] * w[0] / (x[0] * x[0]) + v[1] * w[1] / (x[1] * x[1]));
  return extra + 2.0 * (xi * v.embed() * xi * w.embed()).trace();
}

double metric_sym(const Mat3& x, const Mat3& v, const Mat3& w) {
  const Eigen::LLT<Mat3> llt(x);
  if (llt.info() != Eigen::Success) throw DomainError("metric_sym: x is not positive definite");
  const Mat3 xi = llt.solve(Mat3::Identity());
  return 2.0 * (xi * v * xi * w).trace();
}

double log_char_function(const VVector& x) {
  if (!in_open_cone(x)) throw DomainError("log_char_function: point is not in the open cone");
  return 0.5 * std::log(x[0]) + 0.5 * std::log(x[1]) - 2.0 * std::log(minors(x).d3);
}

double hessian_log_phi_fd(const VVector& x, const VVector& v, const VVector& w, double h) {
  const double pp = log_char_function(x + h * v + h * w);
  const double pm = log_char_function(x + h * v - h * w);
  const double mp = log_char_function(x - h * v + h * w);
  const double mm = log_char_function(x - h * v - h * w);
  return (pp - pm - mp + mm) / (4.0 * h * h);
}

VVector jacobian_action(const GElement& g, const VVector& x, const VVector& v) {
  return VVector::unembed(jacobian_sym(g.matrix(), x.embed(), v.embed()));
}

VVector jacobian_fd(const GElement& g, const VVector& x, const VVector& v, double h) {
  return (1.0 / (2.0 * h)) * (act_real(g, x + h * v) - act_real(g, x - h * v));
}

ContractionRecord contraction_ratio(const GElement& g, const VVector& x, const VVector& v) {
  if (v.c.isZero(0.0)) throw DomainError("contraction_ratio: tangent vector is zero");
  if (auto why = gamma_violation(g.matrix())) {
    throw MembershipError("contraction_ratio: g is not in Gamma: " + *why);
  }
  ContractionRecord r{g, x, v};
  r.before = metric_omega(x, v, v);
  const VVector jv = jacobian_action(g, x, v);
  r.after = metric_omega(act_real(g, x), jv, jv);
  r.ratio = r.after / r.before;
  r.violated = r.ratio > 1.0 + kViolationSlack;
  return r;
}

Mat3 act_sym(const Mat6& g, const Mat3& x) {
  const auto [a, b, c, d] = blocks(g);
  const Mat3 den = c * x + d;
  const double det = det3(den);
  const double scale = 1.0 + norm_inf(den);
  if (std::abs(det) < 1e-12 * scale * scale * scale) {
    throw SingularityError("act_sym: det(C x + D) vanishes");
  }
  const Mat3 y = (a * x + b) * adjugate3(den) / det;
  return 0.5 * (y + y.transpose());
}

Mat3 jacobian_sym(const Mat6& g, const Mat3& x, const Mat3& v) {
  const auto [a, b, c, d] = blocks(g);
  const Mat3 m = c * x + d;
  const double det = det3(m);
  const double scale = 1.0 + norm_inf(m);
  if (std::abs(det) < 1e-12 * scale * scale * scale) {
    throw SingularityError("jacobian: det(C x + D) vanishes");
  }
  const Mat3 m_inv = adjugate3(m) / det;
  return m_inv.transpose() * v * m_inv;
}

double contraction_ratio_sym(const Mat6& g, const Mat3& x, const Mat3& v) {
  if (!in_gamma_sp(g)) throw MembershipError("contraction_ratio_sym: g is not in Gamma_Sp");
  const Mat3 jv = jacobian_sym(g, x, v);
  return metric_sym(act_sym(g, x), jv, jv) / metric_sym(x, v, v);
}

ContractionRecord counterexample() {
  return contraction_ratio(translation({1.0, 1.0, 1.01, -1.0, 0.0}), VVector::identity(),
                           {1.0, 0.0, 1.0, 1.0, 0.0});
}

}  // namespace vinberg
