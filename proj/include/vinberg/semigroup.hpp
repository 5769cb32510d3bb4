#pragma once

// The compression semigroup Gamma = {g in G : g(Omega) in Omega} and its
// symplectic counterpart Gamma_Sp, the graded Lie algebra of G with its
// invariant cone, and the polar factorization Gamma = G0 exp(C).

#include <optional>
#include <string>
#include <tuple>

#include "vinberg/cone.hpp"
#include "vinberg/group.hpp"
#include "vinberg/random.hpp"

namespace vinberg {

inline constexpr double kDefaultTol = 1e-9;

/// Sp(6) with det D != 0 and C D^T, D^T B positive semidefinite within tol.
bool in_gamma_sp(const Mat6& m, double tol = kDefaultTol);

/// Name of the first Gamma condition that m violates, or nullopt.
std::optional<std::string> gamma_violation(const Mat6& m, double tol = kDefaultTol);

/// m in G, det D != 0, D^T B in the closed cone and C D^T = diag(c1, c2, 0)
/// with c1, c2 >= -tol (scale-relative).
bool in_gamma(const Mat6& m, double tol = kDefaultTol);
inline bool in_gamma(const GElement& g, double tol = kDefaultTol) {
  return in_gamma(g.matrix(), tol);
}

/// Triple factors of an element of Gamma: v in the closed cone, A in H,
/// u >= 0 componentwise.
struct GammaFactors {
  VVector v;
  HMatrix a = HMatrix::identity();
  VPrimeVector u;

  GElement compose() const { return triple_compose({v, a, u}); }
};

/// Throws MembershipError if g is not in Gamma or a factor fails its
/// certificate.
GammaFactors gamma_factor(const GElement& g, double tol = kDefaultTol);

/// in_gamma_sp(g) && in_G(g); throws InconsistencyError if that differs from
/// in_gamma(g).
bool gamma_sp_intersection_check(const Mat6& g, double tol = kDefaultTol);

/// Element of the Lie algebra of G, realized as [[A, v], [u, -A^T]] with A
/// in the (unconstrained) H pattern.
struct LieAlgebraElement {
  HMatrix a{0, 0, 0, 0, 0};
  VVector v;
  VPrimeVector u;

  Mat6 matrix() const;

  /// Z0 = diag(I/2, -I/2), the grading element.
  static LieAlgebraElement grading_element();

  friend LieAlgebraElement operator-(const LieAlgebraElement& x) {
    return {HMatrix(Vec5(-x.a.a)), -x.v, {-x.u.u1, -x.u.u2}};
  }
};

/// Lie bracket [X, Y] = XY - YX of 6x6 realizations.
Mat6 bracket(const Mat6& x, const Mat6& y);

/// Splits X into its ad(Z0) eigencomponents of degree -1, 0 and +1.
std::tuple<LieAlgebraElement, LieAlgebraElement, LieAlgebraElement> grade(
    const LieAlgebraElement& x);

/// Off-diagonal element [[0, v], [u, 0]] of the invariant cone.
struct ConeLieElement {
  VVector v;
  VPrimeVector u;

  LieAlgebraElement lie() const { return {HMatrix{0, 0, 0, 0, 0}, v, u}; }
};

/// A-part vanishes within tol, v in the closed cone, u >= -tol.
bool in_cone_C(const LieAlgebraElement& x, double tol = kDefaultTol);

GElement exp_lie(const LieAlgebraElement& x);

/// Principal logarithm projected onto the Lie algebra. Throws SpectrumError
/// if g has an eigenvalue on (-inf, 0] and PatternError if the logarithm
/// leaves the algebra by more than 1e-6.
LieAlgebraElement log_group(const GElement& g);

/// rho(A) * exp(X).
GElement polar_compose(const HMatrix& a, const ConeLieElement& x);

struct PolarFactors {
  HMatrix a = HMatrix::identity();
  ConeLieElement x;
  int iterations = 0;
  /// max |polar_compose(a, x) - g|.
  double residual = 0.0;
};

/// Factors g = rho(A) exp(X) with X in the cone. Starting from the L factor
/// of the triple decomposition, repeatedly corrects A by the exponential of
/// the degree-0 part of log(rho(A)^-1 g) until that part is below tol.
/// Membership of g and of the recovered X (at 10 * member_tol) is checked
/// with member_tol. Throws MembershipError, ConvergenceError or SpectrumError.
PolarFactors polar_factor(const GElement& g, int max_iter = 100, double tol = 1e-12,
                          double member_tol = kDefaultTol);

/// Random draws behind sample_gamma, split out so the map from draws to the
/// element is deterministic and testable.
struct GammaDraws {
  std::array<double, 5> v_normals{};
  std::array<double, 5> a_normals{};
  std::array<double, 2> u_normals{};
  /// Boundary mode only: 0 keeps v, 1 zeros the x1/x4 row, 2 zeros the x2/x5
  /// row, 3 zeros v entirely.
  int v_face = 0;
  std::array<bool, 2> u_zero{};
};

GammaDraws draw_gamma(Rng& rng, bool interior);
GElement gamma_from_draws(const GammaDraws& d, bool interior);

/// t_v rho(A) [[I, 0], [u, I]] with v from sample_cone, A in H+ and u > 0.
/// With interior = false, v and u are pushed onto faces of their cones at
/// random, so boundary elements of Gamma are produced.
GElement sample_gamma(Rng& rng, bool interior);

}  // namespace vinberg

namespace vinberg {

/// t_b [[A, 0], [0, A^-T]] [[I, 0], [c, I]] with b, c random positive definite
/// and A a random invertible matrix: an element of Gamma_Sp, generally not in G.
Mat6 sample_gamma_sp(Rng& rng);

}  // namespace vinberg
