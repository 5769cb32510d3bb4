#pragma once

// Sp(6,R), the subgroup G realizing the holomorphic automorphisms of the tube
// domain V + i*Omega, its generators, the linear fractional action, and the
// triple decomposition g = t_v * rho(L) * (dual translation by -u).

#include <optional>
#include <string>

#include "vinberg/cone.hpp"
#include "vinberg/linalg.hpp"

namespace vinberg {

/// The four 3x3 blocks of a 6x6 matrix [[A, B], [C, D]].
struct Blocks {
  Mat3 a;
  Mat3 b;
  Mat3 c;
  Mat3 d;
};

Blocks blocks(const Mat6& m);
Mat6 from_blocks(const Mat3& a, const Mat3& b, const Mat3& c, const Mat3& d);

/// J = [[0, -I], [I, 0]].
Mat6 symplectic_form();

/// max of the block residuals of the symplectic conditions, in both the
/// (A^T C, D^T B, D^T A - B^T C) form and the (B A^T, C D^T, A D^T - B C^T)
/// form.
double symplectic_residual(const Mat6& m);

/// Tolerance 1e-10 * (1 + ||M||^2).
bool is_symplectic(const Mat6& m);

/// Name of the first G constraint that m violates, or nullopt if m is in G.
std::optional<std::string> g_violation(const Mat6& m);

/// Sp(6) with A, D^T in H', B in W, C in V'.
bool in_G(const Mat6& m);

/// Equivalent description: Sp(6) with A, D^T in H', D^T B in V, C D^T in V'.
bool in_G_alt(const Mat6& m);

/// |det D| > 1e-12 * (1 + ||D||^3).
bool in_upsilon(const Mat6& m);

/// A 6x6 matrix known to satisfy the G constraints.
class GElement {
 public:
  /// Identity.
  GElement() : m_(Mat6::Identity()) {}

  /// Validates with in_G; throws MembershipError naming the failing constraint.
  static GElement from_matrix(const Mat6& m);

  /// Skips validation. For matrices that are in G by construction.
  static GElement trusted(const Mat6& m) { return GElement(m); }

  const Mat6& matrix() const { return m_; }
  Blocks blocks() const { return vinberg::blocks(m_); }

  friend GElement operator*(const GElement& x, const GElement& y) {
    return GElement(x.m_ * y.m_);
  }

 private:
  explicit GElement(const Mat6& m) : m_(m) {}
  Mat6 m_;
};

inline bool in_upsilon(const GElement& g) { return in_upsilon(g.matrix()); }

/// [[I, v], [0, I]].
GElement translation(const VVector& v);

/// [[I, 0], [-u, I]].
GElement dual_translation(const VPrimeVector& u);

/// [[A, 0], [0, A^-T]]. Throws SingularityError if A is singular and
/// MembershipError if A33 <= 0.
GElement rho_embed(const HMatrix& a);

/// The element s acting by
///   z -> [[-1/z1, 0, z4/z1], [0, -1/z2, z5/z2], [z4/z1, z5/z2, det z/(z1 z2)]].
/// s^2 = rho(diag(-1,-1,1)) and s^4 = I.
GElement inversion_s();

/// Stabilizer of p0 = iI: [[C, -S], [S, C]] with C = diag(cos t, cos p, 1),
/// S = diag(sin t, sin p, 0).
GElement isotropy_k(double theta, double phi);

/// [[D^T, -B^T], [-C^T, A^T]].
GElement inverse(const GElement& g);

/// A point of V_C with its imaginary part in the open cone.
struct TubePoint {
  CVec5 z = CVec5::Zero();

  static TubePoint from_parts(const VVector& re, const VVector& im);
  /// p0 = i I3.
  static TubePoint p0() { return from_parts(VVector{}, VVector::identity()); }

  VVector re() const { return VVector(Vec5(z.real())); }
  VVector im() const { return VVector(Vec5(z.imag())); }
  CMat3 embed() const;
};

/// (A z + B)(C z + D)^-1. Throws DomainError if Im z is not in the cone and
/// SingularityError if C z + D is numerically singular.
TubePoint act(const GElement& g, const TubePoint& z);

/// The same map on real points of V, where it is partial.
VVector act_real(const GElement& g, const VVector& x);

/// Factors of g = t_v * rho(L) * [[I, 0], [u, I]].
struct TripleFactors {
  VVector v;
  HMatrix l = HMatrix::identity();
  VPrimeVector u;
};

/// v = B D^-1, L = D^-T, u = D^-1 C. Throws SingularityError outside Upsilon
/// and InconsistencyError if the two formulas for L disagree.
TripleFactors triple_decompose(const GElement& g);

GElement triple_compose(const TripleFactors& f);

}  // namespace vinberg
