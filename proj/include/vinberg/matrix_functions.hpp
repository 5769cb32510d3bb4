#pragma once

// Matrix exponential and principal logarithm for the small fixed-size
// matrices used here (3x3 and 6x6). Both use fixed approximant orders so
// results do not depend on norm-based order selection.

#include "vinberg/linalg.hpp"

namespace vinberg {

/// Scaling and squaring with the degree-13 Pade approximant. Throws
/// DomainError if more than kMaxSquarings squarings would be needed.
template <int N>
Eigen::Matrix<double, N, N> expm(const Eigen::Matrix<double, N, N>& a);

/// Principal square root by the product form of the Denman-Beavers
/// iteration. Throws ConvergenceError if it does not settle.
template <int N>
Eigen::Matrix<double, N, N> sqrtm(const Eigen::Matrix<double, N, N>& a);

/// Principal logarithm by inverse scaling and squaring: square roots until
/// ||A - I|| <= 1/4, then 8-point Gauss-Legendre quadrature of
/// log(I + E) = int_0^1 E (I + tE)^-1 dt (the [8/8] Pade approximant).
/// Throws SpectrumError if an eigenvalue lies on (-inf, 0].
template <int N>
Eigen::Matrix<double, N, N> logm(const Eigen::Matrix<double, N, N>& a);

inline constexpr int kMaxSquarings = 20;

}  // namespace vinberg
