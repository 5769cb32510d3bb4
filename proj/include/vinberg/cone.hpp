#pragma once

// The space V of patterned symmetric 3x3 matrices, the dual Vinberg cone
// inside it, and the linear automorphisms of that cone.

#include <array>
#include <vector>

#include "vinberg/linalg.hpp"
#include "vinberg/random.hpp"

namespace vinberg {

/// A point of V, i.e. the symmetric matrix
///
///   [ x1  0  x4 ]
///   [  0 x2  x5 ]
///   [ x4 x5  x3 ]
struct VVector {
  Vec5 c = Vec5::Zero();

  VVector() = default;
  explicit VVector(const Vec5& coords) : c(coords) {}
  VVector(double x1, double x2, double x3, double x4, double x5) {
    c << x1, x2, x3, x4, x5;
  }

  /// The identity matrix I3 as a point of V.
  static VVector identity() { return {1, 1, 1, 0, 0}; }

  double operator[](int i) const { return c[i]; }
  double& operator[](int i) { return c[i]; }

  Mat3 embed() const;

  /// Reads the V-coordinates of a symmetric matrix. Off-diagonal entries are
  /// averaged; the (1,2) entries are dropped. Use in_v() to check the pattern.
  static VVector unembed(const Mat3& m);

  friend VVector operator+(const VVector& a, const VVector& b) { return VVector(Vec5(a.c + b.c)); }
  friend VVector operator-(const VVector& a, const VVector& b) { return VVector(Vec5(a.c - b.c)); }
  friend VVector operator*(double s, const VVector& a) { return VVector(Vec5(s * a.c)); }
  friend VVector operator-(const VVector& a) { return VVector(Vec5(-a.c)); }
  friend bool operator==(const VVector& a, const VVector& b) { return a.c == b.c; }
};

/// True if m is symmetric with zero (1,2) entries, within `tol` absolute.
bool in_v(const Mat3& m, double tol);

/// diag(u1, u2, 0).
struct VPrimeVector {
  double u1 = 0.0;
  double u2 = 0.0;

  Mat3 embed() const;
  VVector to_v() const { return {u1, u2, 0, 0, 0}; }
  friend bool operator==(const VPrimeVector&, const VPrimeVector&) = default;
};

/// Lower-patterned matrix
///
///   [ a1  0  0 ]
///   [  0 a2  0 ]
///   [ a4 a5 a3 ]
///
/// Without constraints this is the Lie algebra pattern; in_h() and
/// in_h_plus() test group membership.
struct HMatrix {
  Vec5 a = Vec5::Zero();

  HMatrix() = default;
  explicit HMatrix(const Vec5& params) : a(params) {}
  HMatrix(double a1, double a2, double a3, double a4, double a5) {
    a << a1, a2, a3, a4, a5;
  }

  static HMatrix identity() { return {1, 1, 1, 0, 0}; }
  static HMatrix diag(double a1, double a2, double a3) { return {a1, a2, a3, 0, 0}; }

  Mat3 matrix() const;
  /// Reads the pattern entries of m, ignoring everything else.
  static HMatrix from_matrix(const Mat3& m);

  bool in_h() const { return a[0] * a[1] != 0.0 && a[2] > 0.0; }
  bool in_h_plus() const { return in_h() && a[0] > 0.0 && a[1] > 0.0; }
};

/// True if m has the lower H-pattern (entries (1,2), (1,3), (2,1), (2,3)
/// vanish within `tol`). Says nothing about the diagonal.
bool has_h_pattern(const Mat3& m, double tol);

/// The 3x3 pattern with (1,2) and (2,1) entries zero:
///
///   [ x1  0 x6 ]
///   [  0 x2 x7 ]
///   [ x4 x5 x3 ]
struct WMatrix {
  std::array<double, 7> x{};

  Mat3 matrix() const;
};

bool in_w(const Mat3& m, double tol);

/// True if m = diag(u1, u2, 0) within `tol`.
bool in_vprime(const Mat3& m, double tol);

struct Minors {
  double d1;
  double d2;
  double d3;
};

/// Leading principal minors of embed(x).
Minors minors(const VVector& x);

/// Strict positivity of all three minors; no tolerance.
bool in_open_cone(const VVector& x);

/// Closure of the cone: every eigenvalue of embed(x) is at least
/// -tol * (1 + ||embed(x)||). With tol = 0 this is exact semidefiniteness.
bool in_closed_cone(const VVector& x, double tol = 1e-9);

/// x1^(s1-s3) x2^(s2-s3) det(x)^s3. Throws DomainError off the open cone.
double delta_s(const VVector& x, double s1, double s2, double s3);

/// Same function through the minors form D1^(s1-s2) D2^(s2-s3) D3^s3.
double delta_s_minors(const VVector& x, double s1, double s2, double s3);

/// Characteristic function of the cone, normalized so that it equals 1 at I3:
/// x1^(1/2) x2^(1/2) det(x)^(-2).
double char_function(const VVector& x);

/// rho(A)x = A x A^T. Throws PatternError if the product leaves V.
VVector rho(const HMatrix& a, const VVector& x);

/// Matrix of rho(A) acting on V-coordinates.
Mat5 rho_matrix(const HMatrix& a);

/// a1^3 a2^3 a3^4.
double det_rho(const HMatrix& a);

/// Maps five standard normal draws to H+: the diagonal is exp of the first
/// three, the off-diagonal entries are the last two as-is.
HMatrix h_plus_from_normals(const std::array<double, 5>& z);

HMatrix sample_h_plus(Rng& rng);

/// rho(A) I3 for A ~ sample_h_plus. Always lands in the open cone.
VVector sample_cone(Rng& rng);

/// Element of the stabilizer of I3 in the linear automorphism group,
/// stored as its matrix on V-coordinates.
struct IsotropyElement {
  Mat5 m = Mat5::Identity();

  VVector apply(const VVector& x) const { return VVector(Vec5(m * x.c)); }
  friend IsotropyElement operator*(const IsotropyElement& a, const IsotropyElement& b) {
    return {a.m * b.m};
  }
};

/// rho(sigma), where sigma swaps the first two coordinates of R^3:
/// (x1, .., x5) -> (x2, x1, x3, x5, x4).
IsotropyElement rho_sigma();

/// The order-8 stabilizer of I3, generated by rho(diag(-1,1,1)),
/// rho(diag(1,-1,1)) and rho(sigma). The identity comes first.
std::vector<IsotropyElement> isotropy_group();

}  // namespace vinberg
