#include "vinberg/semigroup.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>

#include "vinberg/errors.hpp"
#include "vinberg/matrix_functions.hpp"

namespace vinberg {

bool in_gamma_sp(const Mat6& m, double tol) {
  if (!is_symplectic(m) || !in_upsilon(m)) return false;
  const auto [a, b, c, d] = blocks(m);
  return is_psd(c * d.transpose(), tol) && is_psd(d.transpose() * b, tol);
}

std::optional<std::string> gamma_violation(const Mat6& m, double tol) {
  if (auto v = g_violation(m)) return v;
  if (!in_upsilon(m)) return "det D = 0";
  const auto [a, b, c, d] = blocks(m);
  if (!in_closed_cone(VVector::unembed(d.transpose() * b), tol)) {
    return "D^T B not in closed cone";
  }
  const Mat3 cdt = c * d.transpose();
  const double n = norm_inf(m);
  if (!in_vprime(cdt, 1e-12 * (1.0 + n * n))) return "C D^T not in V'";
  const double floor = -tol * (1.0 + norm_inf(cdt));
  if (cdt(0, 0) < floor || cdt(1, 1) < floor) return "C D^T has a negative entry";
  return std::nullopt;
}

bool in_gamma(const Mat6& m, double tol) { return !gamma_violation(m, tol).has_value(); }

GammaFactors gamma_factor(const GElement& g, double tol) {
  if (auto why = gamma_violation(g.matrix(), tol)) {
    throw MembershipError("gamma_factor: not in Gamma: " + *why);
  }
  const TripleFactors f = triple_decompose(g);
  if (!in_closed_cone(f.v, tol)) throw MembershipError("gamma_factor: v not in closed cone");
  if (!f.l.in_h()) throw MembershipError("gamma_factor: L not in H");
  const double floor = -tol * (1.0 + std::max(std::abs(f.u.u1), std::abs(f.u.u2)));
  if (f.u.u1 < floor || f.u.u2 < floor) throw MembershipError("gamma_factor: u has a negative entry");
  return {f.v, f.l, f.u};
}

bool gamma_sp_intersection_check(const Mat6& g, double tol) {
  const bool trace = in_gamma_sp(g, tol) && in_G(g);
  if (trace != in_gamma(g, tol)) {
    throw InconsistencyError("Gamma_Sp and G do not intersect in Gamma for this matrix");
  }
  return trace;
}

Mat6 LieAlgebraElement::matrix() const {
  const Mat3 am = a.matrix();
  return from_blocks(am, v.embed(), u.embed(), -am.transpose());
}

LieAlgebraElement LieAlgebraElement::grading_element() {
  return {HMatrix::diag(0.5, 0.5, 0.5), {}, {}};
}

Mat6 bracket(const Mat6& x, const Mat6& y) { return x * y - y * x; }

std::tuple<LieAlgebraElement, LieAlgebraElement, LieAlgebraElement> grade(
    const LieAlgebraElement& x) {
  const HMatrix zero{0, 0, 0, 0, 0};
  return {LieAlgebraElement{zero, {}, x.u}, LieAlgebraElement{x.a, {}, {}},
          LieAlgebraElement{zero, x.v, {}}};
}

bool in_cone_C(const LieAlgebraElement& x, double tol) {
  if (x.a.a.cwiseAbs().maxCoeff() > tol) return false;
  const double floor = -tol * (1.0 + std::max(std::abs(x.u.u1), std::abs(x.u.u2)));
  return in_closed_cone(x.v, tol) && x.u.u1 >= floor && x.u.u2 >= floor;
}

GElement exp_lie(const LieAlgebraElement& x) {
  return GElement::trusted(expm<6>(x.matrix()));
}

namespace {

LieAlgebraElement project_to_algebra(const Mat6& y) {
  const auto [a, b, c, d] = blocks(y);
  return {HMatrix::from_matrix(0.5 * (a - d.transpose())), VVector::unembed(b),
          {c(0, 0), c(1, 1)}};
}

}  // namespace

LieAlgebraElement log_group(const GElement& g) {
  const Mat6 y = logm<6>(g.matrix());
  const LieAlgebraElement x = project_to_algebra(y);
  if (max_abs(Mat6(y - x.matrix())) > 1e-6 * (1.0 + max_abs(y))) {
    throw PatternError("log_group: logarithm is not in the Lie algebra of G");
  }
  return x;
}

GElement polar_compose(const HMatrix& a, const ConeLieElement& x) {
  return rho_embed(a) * exp_lie(x.lie());
}

PolarFactors polar_factor(const GElement& g, int max_iter, double tol, double member_tol) {
  if (auto why = gamma_violation(g.matrix(), member_tol)) {
    throw MembershipError("polar_factor: not in Gamma: " + *why);
  }

  PolarFactors out;
  out.a = triple_decompose(g).l;
  for (int k = 0;; ++k) {
    const Mat6 y = logm<6>((inverse(rho_embed(out.a)) * g).matrix());
    const auto [ya, yb, yc, yd] = blocks(y);
    const Mat3 y0 = 0.5 * (ya - yd.transpose());
    if (max_abs(y0) <= tol * (1.0 + max_abs(y))) {
      out.x = {VVector::unembed(yb), {yc(0, 0), yc(1, 1)}};
      out.iterations = k;
      break;
    }
    if (k >= max_iter) throw ConvergenceError("polar_factor: no convergence within max_iter");
    out.a = HMatrix::from_matrix(out.a.matrix() * expm<3>(y0));
  }

  if (!in_cone_C(out.x.lie(), 10.0 * member_tol)) {
    throw MembershipError("polar_factor: recovered X is outside the cone C");
  }
  out.residual = max_abs(Mat6(polar_compose(out.a, out.x).matrix() - g.matrix()));
  return out;
}

GammaDraws draw_gamma(Rng& rng, bool interior) {
  GammaDraws d;
  for (double& z : d.v_normals) z = rng.normal();
  for (double& z : d.a_normals) z = rng.normal();
  for (double& z : d.u_normals) z = rng.normal();
  if (!interior) {
    d.v_face = std::min(3, static_cast<int>(4.0 * rng.uniform()));
    d.u_zero = {rng.coin(), rng.coin()};
  }
  return d;
}

GElement gamma_from_draws(const GammaDraws& d, bool interior) {
  VVector v = rho(h_plus_from_normals(d.v_normals), VVector::identity());
  VPrimeVector u{std::exp(d.u_normals[0]), std::exp(d.u_normals[1])};
  if (!interior) {
    if (d.v_face == 1) v[0] = v[3] = 0.0;
    if (d.v_face == 2) v[1] = v[4] = 0.0;
    if (d.v_face == 3) v = VVector{};
    if (d.u_zero[0]) u.u1 = 0.0;
    if (d.u_zero[1]) u.u2 = 0.0;
  }
  return triple_compose({v, h_plus_from_normals(d.a_normals), u});
}

GElement sample_gamma(Rng& rng, bool interior) {
  return gamma_from_draws(draw_gamma(rng, interior), interior);
}

Mat6 sample_gamma_sp(Rng& rng) {
  auto normal3 = [&rng] {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = rng.normal();
    return m;
  };
  const Mat3 mb = normal3();
  const Mat3 mc = normal3();
  Mat3 a = normal3();
  while (std::abs(a.determinant()) < 1e-3) a = normal3();

  const Mat6 upper = from_blocks(Mat3::Identity(), mb * mb.transpose(), Mat3::Zero(),
                                 Mat3::Identity());
  const Mat6 middle =
      from_blocks(a, Mat3::Zero(), Mat3::Zero(), a.inverse().transpose());
  const Mat6 lower = from_blocks(Mat3::Identity(), Mat3::Zero(), mc * mc.transpose(),
                                 Mat3::Identity());
  return upper * middle * lower;
}

}  // namespace vinberg
