#include "vinberg/cone.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "vinberg/errors.hpp"

namespace vinberg {

double min_eigenvalue_sym(const Mat3& m) {
  const Mat3 sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Mat3> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_psd(const Mat3& m, double tol) {
  return min_eigenvalue_sym(m) >= -tol * (1.0 + norm_inf(m));
}

Mat3 VVector::embed() const {
  Mat3 m;
  m << c[0], 0.0, c[3],
       0.0, c[1], c[4],
       c[3], c[4], c[2];
  return m;
}

VVector VVector::unembed(const Mat3& m) {
  return {m(0, 0), m(1, 1), m(2, 2), 0.5 * (m(0, 2) + m(2, 0)),
          0.5 * (m(1, 2) + m(2, 1))};
}

bool in_v(const Mat3& m, double tol) {
  return std::abs(m(0, 1)) <= tol && std::abs(m(1, 0)) <= tol &&
         std::abs(m(0, 2) - m(2, 0)) <= tol && std::abs(m(1, 2) - m(2, 1)) <= tol;
}

Mat3 VPrimeVector::embed() const {
  Mat3 m = Mat3::Zero();
  m(0, 0) = u1;
  m(1, 1) = u2;
  return m;
}

Mat3 HMatrix::matrix() const {
  Mat3 m;
  m << a[0], 0.0, 0.0,
       0.0, a[1], 0.0,
       a[3], a[4], a[2];
  return m;
}

HMatrix HMatrix::from_matrix(const Mat3& m) {
  return {m(0, 0), m(1, 1), m(2, 2), m(2, 0), m(2, 1)};
}

bool has_h_pattern(const Mat3& m, double tol) {
  return std::abs(m(0, 1)) <= tol && std::abs(m(0, 2)) <= tol &&
         std::abs(m(1, 0)) <= tol && std::abs(m(1, 2)) <= tol;
}

Mat3 WMatrix::matrix() const {
  Mat3 m;
  m << x[0], 0.0, x[5],
       0.0, x[1], x[6],
       x[3], x[4], x[2];
  return m;
}

bool in_w(const Mat3& m, double tol) {
  return std::abs(m(0, 1)) <= tol && std::abs(m(1, 0)) <= tol;
}

bool in_vprime(const Mat3& m, double tol) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if ((i == j && i < 2)) continue;
      if (std::abs(m(i, j)) > tol) return false;
    }
  }
  return true;
}

Minors minors(const VVector& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4];
  return {x1, x1 * x2, x1 * x2 * x3 - x1 * x5 * x5 - x2 * x4 * x4};
}

bool in_open_cone(const VVector& x) {
  const Minors d = minors(x);
  return d.d1 > 0.0 && d.d2 > 0.0 && d.d3 > 0.0;
}

bool in_closed_cone(const VVector& x, double tol) {
  const Mat3 m = x.embed();
  return min_eigenvalue_sym(m) >= -tol * (1.0 + norm_inf(m));
}

namespace {

void require_open_cone(const VVector& x, const char* what) {
  if (!in_open_cone(x)) {
    throw DomainError(std::string(what) + ": point is not in the open cone");
  }
}

}  // namespace

double delta_s(const VVector& x, double s1, double s2, double s3) {
  require_open_cone(x, "delta_s");
  const Minors d = minors(x);
  return std::pow(x[0], s1 - s3) * std::pow(x[1], s2 - s3) * std::pow(d.d3, s3);
}

double delta_s_minors(const VVector& x, double s1, double s2, double s3) {
  require_open_cone(x, "delta_s_minors");
  const Minors d = minors(x);
  return std::pow(d.d1, s1 - s2) * std::pow(d.d2, s2 - s3) * std::pow(d.d3, s3);
}

double char_function(const VVector& x) {
  require_open_cone(x, "char_function");
  const double det = minors(x).d3;
  return std::sqrt(x[0]) * std::sqrt(x[1]) / (det * det);
}

VVector rho(const HMatrix& a, const VVector& x) {
  const Mat3 am = a.matrix();
  const Mat3 y = am * x.embed() * am.transpose();
  const double scale = 1.0 + norm_inf(am) * norm_inf(am) * norm_inf(x.embed());
  if (!in_v(y, 1e-12 * scale)) {
    throw PatternError("rho: A x A^T left V");
  }
  return VVector::unembed(y);
}

Mat5 rho_matrix(const HMatrix& a) {
  Mat5 m;
  for (int j = 0; j < 5; ++j) {
    VVector e;
    e[j] = 1.0;
    m.col(j) = rho(a, e).c;
  }
  return m;
}

double det_rho(const HMatrix& a) {
  const double a1 = a.a[0], a2 = a.a[1], a3 = a.a[2];
  return a1 * a1 * a1 * a2 * a2 * a2 * a3 * a3 * a3 * a3;
}

HMatrix h_plus_from_normals(const std::array<double, 5>& z) {
  return {std::exp(z[0]), std::exp(z[1]), std::exp(z[2]), z[3], z[4]};
}

HMatrix sample_h_plus(Rng& rng) {
  std::array<double, 5> z;
  for (double& zi : z) zi = rng.normal();
  return h_plus_from_normals(z);
}

VVector sample_cone(Rng& rng) {
  return rho(sample_h_plus(rng), VVector::identity());
}

IsotropyElement rho_sigma() {
  IsotropyElement s;
  s.m.setZero();
  s.m(0, 1) = 1.0;
  s.m(1, 0) = 1.0;
  s.m(2, 2) = 1.0;
  s.m(3, 4) = 1.0;
  s.m(4, 3) = 1.0;
  return s;
}

std::vector<IsotropyElement> isotropy_group() {
  const std::vector<IsotropyElement> generators = {
      {rho_matrix(HMatrix::diag(-1, 1, 1))},
      {rho_matrix(HMatrix::diag(1, -1, 1))},
      rho_sigma()};

  // Breadth-first closure; entries are exactly 0 or +-1 so equality is exact.
  std::vector<IsotropyElement> group = {IsotropyElement{}};
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const auto& gen : generators) {
      const IsotropyElement next = gen * group[i];
      bool seen = false;
      for (const auto& h : group) {
        if (h.m == next.m) {
          seen = true;
          break;
        }
      }
      if (!seen) group.push_back(next);
    }
  }
  return group;
}

}  // namespace vinberg
