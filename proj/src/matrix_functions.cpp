#include "vinberg/matrix_functions.hpp"

#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "vinberg/errors.hpp"

namespace vinberg {

namespace {

template <int N>
double norm1(const Eigen::Matrix<double, N, N>& a) {
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

template <int N>
Eigen::Matrix<double, N, N> expm(const Eigen::Matrix<double, N, N>& a) {
  using M = Eigen::Matrix<double, N, N>;
  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;

  const double n = norm1(a);
  if (n == 0.0) return M::Identity();
  int s = 0;
  if (n > theta13) s = static_cast<int>(std::ceil(std::log2(n / theta13)));
  if (s > kMaxSquarings) throw DomainError("expm: norm too large");

  const M x = a / std::ldexp(1.0, s);
  const M id = M::Identity();
  const M x2 = x * x;
  const M x4 = x2 * x2;
  const M x6 = x4 * x2;
  const M u = x * (x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 +
                   b[5] * x4 + b[3] * x2 + b[1] * id);
  const M v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) + b[6] * x6 + b[4] * x4 +
              b[2] * x2 + b[0] * id;
  M r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < s; ++i) r = r * r;
  return r;
}

template <int N>
Eigen::Matrix<double, N, N> sqrtm(const Eigen::Matrix<double, N, N>& a) {
  using M = Eigen::Matrix<double, N, N>;
  const M id = M::Identity();
  M m = a;
  M y = a;
  for (int k = 0; k < 100; ++k) {
    const M m_inv = m.partialPivLu().inverse();
    y = 0.5 * y * (id + m_inv);
    m = 0.5 * (id + 0.5 * (m + m_inv));
    if (max_abs(M(m - id)) <= 1e-14) return y;
  }
  throw ConvergenceError("sqrtm: Denman-Beavers iteration did not converge");
}

template <int N>
Eigen::Matrix<double, N, N> logm(const Eigen::Matrix<double, N, N>& a) {
  using M = Eigen::Matrix<double, N, N>;
  const Eigen::EigenSolver<M> eig(a, false);
  for (int i = 0; i < N; ++i) {
    const std::complex<double> lambda = eig.eigenvalues()[i];
    if (std::abs(lambda.imag()) <= 1e-12 * (1.0 + std::abs(lambda)) &&
        lambda.real() <= 1e-14 * (1.0 + std::abs(lambda))) {
      throw SpectrumError("logm: eigenvalue on the closed negative real axis");
    }
  }

  const M id = M::Identity();
  M x = a;
  int k = 0;
  while (norm1(M(x - id)) > 0.25) {
    if (++k > 64) throw ConvergenceError("logm: too many square roots");
    x = sqrtm<N>(x);
  }

  static constexpr std::array<double, 4> nodes = {
      0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363};
  static constexpr std::array<double, 4> weights = {
      0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
  const M e = x - id;
  M sum = M::Zero();
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    for (double sign : {-1.0, 1.0}) {
      const double t = 0.5 * (1.0 + sign * nodes[j]);
      sum += 0.5 * weights[j] * M(id + t * e).partialPivLu().solve(e);
    }
  }
  return std::ldexp(1.0, k) * sum;
}

template Mat3 expm<3>(const Mat3&);
template Mat6 expm<6>(const Mat6&);
template Mat3 sqrtm<3>(const Mat3&);
template Mat6 sqrtm<6>(const Mat6&);
template Mat3 logm<3>(const Mat3&);
template Mat6 logm<6>(const Mat6&);

}  // namespace vinberg
