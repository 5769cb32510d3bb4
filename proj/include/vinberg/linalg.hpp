#pragma once

#include <complex>

#include <Eigen/Core>

namespace vinberg {

using Mat3 = Eigen::Matrix3d;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using CMat3 = Eigen::Matrix<std::complex<double>, 3, 3>;
using CVec5 = Eigen::Matrix<std::complex<double>, 5, 1>;

/// Induced infinity norm (max absolute row sum).
template <typename Derived>
double norm_inf(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

/// Largest absolute entry.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

// Fixed-size 3x3 inverse through the adjugate. The caller checks the
// determinant; these never pivot.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> adjugate3(const Eigen::Matrix<Scalar, 3, 3>& m) {
  Eigen::Matrix<Scalar, 3, 3> adj;
  adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return adj;
}

template <typename Scalar>
Scalar det3(const Eigen::Matrix<Scalar, 3, 3>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Minimum eigenvalue of a symmetric 3x3 matrix (symmetrized first).
double min_eigenvalue_sym(const Mat3& m);

/// Positive semidefinite within a scale-relative tolerance: every
/// eigenvalue of the symmetric part is >= -tol * (1 + ||m||_inf).
bool is_psd(const Mat3& m, double tol);

}  // namespace vinberg
