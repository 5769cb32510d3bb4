#include "vinberg/group.hpp"

#include <cmath>

#include "vinberg/errors.hpp"

namespace vinberg {

Blocks blocks(const Mat6& m) {
  return {m.topLeftCorner<3, 3>(), m.topRightCorner<3, 3>(),
          m.bottomLeftCorner<3, 3>(), m.bottomRightCorner<3, 3>()};
}

Mat6 from_blocks(const Mat3& a, const Mat3& b, const Mat3& c, const Mat3& d) {
  Mat6 m;
  m << a, b, c, d;
  return m;
}

Mat6 symplectic_form() {
  return from_blocks(Mat3::Zero(), -Mat3::Identity(), Mat3::Identity(), Mat3::Zero());
}

double symplectic_residual(const Mat6& m) {
  const auto [a, b, c, d] = blocks(m);
  const Mat3 atc = a.transpose() * c;
  const Mat3 dtb = d.transpose() * b;
  const Mat3 bat = b * a.transpose();
  const Mat3 cdt = c * d.transpose();
  double r = max_abs(atc - atc.transpose());
  r = std::max(r, max_abs(dtb - dtb.transpose()));
  r = std::max(r, max_abs(d.transpose() * a - b.transpose() * c - Mat3::Identity()));
  r = std::max(r, max_abs(bat - bat.transpose()));
  r = std::max(r, max_abs(cdt - cdt.transpose()));
  r = std::max(r, max_abs(a * d.transpose() - b * c.transpose() - Mat3::Identity()));
  return r;
}

bool is_symplectic(const Mat6& m) {
  const double n = norm_inf(m);
  return symplectic_residual(m) <= 1e-10 * (1.0 + n * n);
}

namespace {

double pattern_tol(const Mat6& m) { return 1e-12 * (1.0 + norm_inf(m)); }

// Shared A / D^T checks of both descriptions of G.
std::optional<std::string> diagonal_block_violation(const Blocks& bl, double tol) {
  if (!has_h_pattern(bl.a, tol)) return "A not in H'";
  if (!(bl.a(2, 2) > 0.0)) return "A33 <= 0";
  if (!has_h_pattern(bl.d.transpose(), tol)) return "D^T not in H'";
  if (!(bl.d(2, 2) > 0.0)) return "D33 <= 0";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> g_violation(const Mat6& m) {
  if (!is_symplectic(m)) return "not symplectic";
  const Blocks bl = blocks(m);
  const double tol = pattern_tol(m);
  if (auto v = diagonal_block_violation(bl, tol)) return v;
  if (!in_w(bl.b, tol)) return "B not in W";
  if (!in_vprime(bl.c, tol)) return "C not in V'";
  return std::nullopt;
}

bool in_G(const Mat6& m) { return !g_violation(m).has_value(); }

bool in_G_alt(const Mat6& m) {
  if (!is_symplectic(m)) return false;
  const Blocks bl = blocks(m);
  const double tol = pattern_tol(m);
  if (diagonal_block_violation(bl, tol)) return false;
  const double n = norm_inf(m);
  const double product_tol = 1e-12 * (1.0 + n * n);
  return in_v(bl.d.transpose() * bl.b, product_tol) &&
         in_vprime(bl.c * bl.d.transpose(), product_tol);
}

bool in_upsilon(const Mat6& m) {
  const Mat3 d = m.bottomRightCorner<3, 3>();
  const double n = norm_inf(d);
  return std::abs(det3(d)) > 1e-12 * (1.0 + n * n * n);
}

GElement GElement::from_matrix(const Mat6& m) {
  if (auto v = g_violation(m)) {
    throw MembershipError("matrix is not in G: " + *v);
  }
  return GElement(m);
}

GElement translation(const VVector& v) {
  return GElement::trusted(
      from_blocks(Mat3::Identity(), v.embed(), Mat3::Zero(), Mat3::Identity()));
}

GElement dual_translation(const VPrimeVector& u) {
  return GElement::trusted(
      from_blocks(Mat3::Identity(), Mat3::Zero(), -u.embed(), Mat3::Identity()));
}

GElement rho_embed(const HMatrix& a) {
  if (a.a[0] * a.a[1] == 0.0) throw SingularityError("rho_embed: A is singular");
  if (!(a.a[2] > 0.0)) throw MembershipError("rho_embed: A33 must be positive");
  const Mat3 am = a.matrix();
  const Mat3 inv_t = (adjugate3(am) / det3(am)).transpose();
  return GElement::trusted(from_blocks(am, Mat3::Zero(), Mat3::Zero(), inv_t));
}

GElement inversion_s() {
  Mat6 m = Mat6::Zero();
  m(0, 3) = -1.0;
  m(1, 4) = -1.0;
  m(2, 2) = 1.0;
  m(3, 0) = 1.0;
  m(4, 1) = 1.0;
  m(5, 5) = 1.0;
  return GElement::trusted(m);
}

GElement isotropy_k(double theta, double phi) {
  theta = std::fmod(theta, 2.0 * M_PI);
  phi = std::fmod(phi, 2.0 * M_PI);
  const Mat3 c = Eigen::Vector3d(std::cos(theta), std::cos(phi), 1.0).asDiagonal();
  const Mat3 s = Eigen::Vector3d(std::sin(theta), std::sin(phi), 0.0).asDiagonal();
  return GElement::trusted(from_blocks(c, -s, s, c));
}

GElement inverse(const GElement& g) {
  const auto [a, b, c, d] = g.blocks();
  return GElement::trusted(
      from_blocks(d.transpose(), -b.transpose(), -c.transpose(), a.transpose()));
}

TubePoint TubePoint::from_parts(const VVector& re, const VVector& im) {
  TubePoint p;
  for (int i = 0; i < 5; ++i) p.z[i] = {re[i], im[i]};
  return p;
}

CMat3 TubePoint::embed() const {
  return re().embed().cast<std::complex<double>>() +
         std::complex<double>(0.0, 1.0) * im().embed().cast<std::complex<double>>();
}

namespace {

// Shared body of the complex and real linear fractional maps.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> linear_fractional(const Blocks& bl,
                                              const Eigen::Matrix<Scalar, 3, 3>& z,
                                              const char* what) {
  using M3 = Eigen::Matrix<Scalar, 3, 3>;
  const M3 num = bl.a.cast<Scalar>() * z + bl.b.cast<Scalar>();
  const M3 den = bl.c.cast<Scalar>() * z + bl.d.cast<Scalar>();
  const Scalar det = det3(den);
  const double scale = 1.0 + den.cwiseAbs().rowwise().sum().maxCoeff();
  if (std::abs(det) < 1e-12 * scale * scale * scale) {
    throw SingularityError(std::string(what) + ": det(C z + D) vanishes");
  }
  return num * adjugate3(den) / det;
}

}  // namespace

TubePoint act(const GElement& g, const TubePoint& z) {
  if (!in_open_cone(z.im())) throw DomainError("act: Im z is not in the cone");
  const CMat3 w = linear_fractional(g.blocks(), z.embed(), "act");
  const Mat3 re = w.real();
  const Mat3 im = w.imag();
  const double tol = 1e-8 * (1.0 + w.cwiseAbs().maxCoeff());
  if (!in_v(re, tol) || !in_v(im, tol)) throw PatternError("act: image left V_C");
  return TubePoint::from_parts(VVector::unembed(re), VVector::unembed(im));
}

VVector act_real(const GElement& g, const VVector& x) {
  const Mat3 w = linear_fractional(g.blocks(), x.embed(), "act_real");
  if (!in_v(w, 1e-8 * (1.0 + max_abs(w)))) throw PatternError("act_real: image left V");
  return VVector::unembed(w);
}

TripleFactors triple_decompose(const GElement& g) {
  if (!in_upsilon(g)) throw SingularityError("triple_decompose: not in Upsilon (det D = 0)");
  const auto [a, b, c, d] = g.blocks();
  const Mat3 d_inv = adjugate3(d) / det3(d);
  const Mat3 l = d_inv.transpose();
  const Mat3 l_alt = a - b * d_inv * c;
  const double scale =
      1.0 + norm_inf(a) + norm_inf(b) * norm_inf(d_inv) * norm_inf(c) + norm_inf(d_inv);
  if (max_abs(l - l_alt) > 1e-10 * scale) {
    throw InconsistencyError("triple_decompose: D^-T and A - B D^-1 C disagree");
  }
  const Mat3 u = d_inv * c;
  return {VVector::unembed(b * d_inv), HMatrix::from_matrix(l), {u(0, 0), u(1, 1)}};
}

GElement triple_compose(const TripleFactors& f) {
  Mat6 lower = Mat6::Identity();
  lower.bottomLeftCorner<3, 3>() = f.u.embed();
  return translation(f.v) * rho_embed(f.l) * GElement::trusted(lower);
}

}  // namespace vinberg
