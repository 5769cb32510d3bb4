#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>
#include <Eigen/Eigenvalues>

#include "samplers.hpp"
#include "vinberg/errors.hpp"
#include "vinberg/metric.hpp"
#include "vinberg/semigroup.hpp"

using namespace vinberg;

namespace {

const VVector kProbe{1, 0, 1, 1, 0};

// Direction scaled to unit length in the metric at x.
VVector unit_direction(Rng& rng, const VVector& x) {
  const VVector v = testing::random_v(rng);
  return (1.0 / std::sqrt(metric_omega(x, v, v))) * v;
}

}  // namespace

TEST_CASE("metric on the cone: closed form values") {
  CHECK(metric_omega(VVector::identity(), kProbe, kProbe) == 7.5);
  CHECK(metric_omega(VVector::identity(), {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}) ==
        doctest::Approx(1.5).epsilon(1e-15));
  const double expected = -0.125 + 2.0 * std::pow(6.01 / 3.02, 2);
  CHECK(std::abs(metric_omega({2, 2, 2.01, -1, 0}, kProbe, kProbe) - expected) <= 1e-12);
  CHECK_THROWS_AS(metric_omega({1, 1, 1, 1, 0}, kProbe, kProbe), DomainError);
}

TEST_CASE("metric on the cone is symmetric and positive definite") {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const VVector x = sample_cone(rng);
    Mat5 gram;
    for (int a = 0; a < 5; ++a) {
      for (int b = 0; b < 5; ++b) {
        VVector ea, eb;
        ea[a] = 1.0;
        eb[b] = 1.0;
        gram(a, b) = metric_omega(x, ea, eb);
      }
    }
    CHECK(max_abs(Mat5(gram - gram.transpose())) <= 1e-12 * max_abs(gram));
    Eigen::SelfAdjointEigenSolver<Mat5> eig(gram);
    CHECK(eig.eigenvalues().minCoeff() > 0.0);
  }
}

TEST_CASE("trace metric on positive definite matrices") {
  const Mat3 id = Mat3::Identity();
  CHECK(metric_sym(id, id, id) == 6.0);
  CHECK(metric_sym(id, kProbe.embed(), kProbe.embed()) == 8.0);
  const Mat3 x = VVector(2, 3, 4, 0.5, -1).embed();
  const Mat3 v = VVector(1, -1, 2, 0.3, 0.7).embed();
  CHECK(metric_sym(2 * x, 2 * v, 2 * v) == doctest::Approx(metric_sym(x, v, v)).epsilon(1e-14));
  CHECK_THROWS_AS(metric_sym(-id, id, id), DomainError);
}

TEST_CASE("closed-form metric equals the Hessian of log phi") {
  CHECK(std::abs(hessian_log_phi_fd(VVector::identity(), kProbe, kProbe) - 7.5) <= 7.5e-6);
  CHECK(hessian_log_phi_fd(VVector::identity(), {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}) ==
        doctest::Approx(1.5).epsilon(1e-6));

  Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    const VVector x = sample_cone(rng);
    const VVector v = unit_direction(rng, x);
    const VVector w = unit_direction(rng, x);
    // |<v, w>| <= 1 for unit directions, so this is a relative error.
    CHECK(std::abs(hessian_log_phi_fd(x, v, w) - metric_omega(x, v, w)) <= 1e-5);
  }
  const VVector off{0, 0, 0, 1, 0};
  CHECK_THROWS_AS(hessian_log_phi_fd({1, 1, 1, 0.99999, 0}, off, off, 1e-3), DomainError);
}

TEST_CASE("the difference stencil is exact on quadratics") {
  // log phi replaced by a quadratic form q(x) = x^T Q x: D_v D_w q = 2 v^T Q w.
  Rng rng(43);
  Mat5 q;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) q(i, j) = rng.normal();
  q = Mat5(0.5 * (q + q.transpose()));
  auto f = [&](const Vec5& x) { return x.dot(q * x); };
  const Vec5 x = testing::random_v(rng).c;
  const Vec5 v = testing::random_v(rng).c;
  const Vec5 w = testing::random_v(rng).c;
  const double h = 0.25;  // dyadic: every stencil point is exact
  const double fd =
      (f(x + h * v + h * w) - f(x + h * v - h * w) - f(x - h * v + h * w) + f(x - h * v - h * w)) /
      (4 * h * h);
  CHECK(fd == doctest::Approx(2 * v.dot(q * w)).epsilon(1e-12));
}

TEST_CASE("Jacobian of the action") {
  const VVector v{0.3, -1, 2, 0.5, 0.25};
  const VVector x{2, 3, 4, 0.5, -1};
  CHECK(jacobian_action(translation({1, 1, 1.01, -1, 0}), x, v) == v);
  const HMatrix a{2, -1, 0.5, 1, 3};
  CHECK((jacobian_action(rho_embed(a), x, v).c - rho(a, v).c).cwiseAbs().maxCoeff() <= 1e-13);

  // s: d(-1/x1) = v1 / x1^2, so at I3 a diagonal v is returned unchanged.
  const VVector diag{0.3, -0.7, 1.1, 0, 0};
  CHECK((jacobian_action(inversion_s(), VVector::identity(), diag).c - diag.c)
            .cwiseAbs()
            .maxCoeff() <= 1e-15);

  const VVector fd_t = jacobian_fd(translation({1, 1, 1, 0, 0}), x, v);
  CHECK((fd_t.c - v.c).cwiseAbs().maxCoeff() <= 1e-10);

  Rng rng(44);
  std::vector<double> orders;
  for (int i = 0; i < 500; ++i) {
    const GElement g = sample_gamma(rng, rng.coin());
    const VVector xi = sample_cone(rng);
    VVector vi = testing::random_v(rng);
    vi = (1.0 / vi.c.norm()) * vi;
    const VVector exact = jacobian_action(g, xi, vi);
    const double err = (jacobian_fd(g, xi, vi).c - exact.c).norm() / exact.c.norm();
    CHECK(err <= 1e-6);

    const double e3 = (jacobian_fd(g, xi, vi, 1e-3).c - exact.c).norm() / exact.c.norm();
    const double e4 = (jacobian_fd(g, xi, vi, 1e-4).c - exact.c).norm() / exact.c.norm();
    if (e3 > 1e-9 && e4 > 0.0) orders.push_back(std::log10(e3 / e4));
  }
  REQUIRE(orders.size() > 100);
  std::nth_element(orders.begin(), orders.begin() + orders.size() / 2, orders.end());
  const double median_order = orders[orders.size() / 2];
  CHECK(median_order == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("contraction ratios") {
  const ContractionRecord ce = counterexample();
  CHECK(ce.before == 7.5);
  CHECK(std::abs(ce.after - (-0.125 + 2.0 * std::pow(6.01 / 3.02, 2))) <= 1e-9);
  CHECK(ce.ratio == doctest::Approx(1.03943).epsilon(1e-5));
  CHECK(ce.violated);

  const ContractionRecord id = contraction_ratio(GElement(), VVector::identity(), kProbe);
  CHECK(id.ratio == 1.0);
  CHECK_FALSE(id.violated);
  CHECK_THROWS_AS(contraction_ratio(GElement(), VVector::identity(), VVector{}), DomainError);
  CHECK_THROWS_AS(contraction_ratio(inversion_s(), VVector::identity(), kProbe), MembershipError);

  Rng rng(45);
  for (int i = 0; i < 100; ++i) {
    const HMatrix a = sample_h_plus(rng);
    const VVector x = sample_cone(rng);
    const ContractionRecord r = contraction_ratio(rho_embed(a), x, testing::random_v(rng));
    CHECK(std::abs(r.ratio - 1.0) <= 1e-9);
  }
}

TEST_CASE("symmetric-cone contraction ratios") {
  const Mat3 id = Mat3::Identity();
  CHECK(contraction_ratio_sym(Mat6::Identity(), id, id) == 1.0);
  const Mat6 t = from_blocks(id, id, Mat3::Zero(), id);
  CHECK(contraction_ratio_sym(t, id, id) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(contraction_ratio_sym(inversion_s().matrix(), id, id), MembershipError);

  Rng rng(46);
  for (int i = 0; i < 1000; ++i) {
    const Mat6 g = sample_gamma_sp(rng);
    const Mat3 f = testing::random_mat3(rng);
    const Mat3 x = f * f.transpose() + 1e-2 * id;
    CHECK(contraction_ratio_sym(g, x, testing::random_sym(rng)) <= 1.0 + 1e-9);
  }
}
