#include <cmath>

#include <doctest.h>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "samplers.hpp"
#include "vinberg/cone.hpp"
#include "vinberg/errors.hpp"

using namespace vinberg;

TEST_CASE("embed and unembed are inverse on V") {
  const VVector x{1.5, -2.0, 3.25, 0.5, -0.75};
  const Mat3 m = x.embed();
  CHECK(m(0, 1) == 0.0);
  CHECK(m(1, 0) == 0.0);
  CHECK(m(0, 2) == m(2, 0));
  CHECK(VVector::unembed(m) == x);
  CHECK(in_v(m, 0.0));
  CHECK(VPrimeVector{2.0, 3.0}.embed() == VVector(2, 3, 0, 0, 0).embed());
}

TEST_CASE("minors") {
  auto check = [](const VVector& x, double d1, double d2, double d3) {
    const Minors m = minors(x);
    CHECK(m.d1 == doctest::Approx(d1).epsilon(1e-15));
    CHECK(m.d2 == doctest::Approx(d2).epsilon(1e-15));
    CHECK(m.d3 == doctest::Approx(d3).epsilon(1e-15));
  };
  check(VVector::identity(), 1, 1, 1);
  check({1, 1, 1, 1, 0}, 1, 1, 0);
  check({2, 2, 2.01, -1, 0}, 2, 4, 6.04);

  // Brute-force determinant.
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const VVector x = testing::random_v(rng);
    const Minors m = minors(x);
    CHECK(m.d3 == doctest::Approx(x.embed().determinant()).epsilon(1e-12));
    CHECK(m.d2 == doctest::Approx(x.embed().topLeftCorner<2, 2>().determinant()));
  }
}

TEST_CASE("open and closed cone membership") {
  CHECK(in_open_cone(VVector::identity()));
  CHECK_FALSE(in_open_cone({-1, 1, 1, 0, 0}));
  CHECK_FALSE(in_open_cone({1, 1, 1, 1, 0}));

  CHECK(in_closed_cone({1, 1, 1, 1, 0}, 0.0));
  CHECK(in_closed_cone({0, 0, 0, 0, 0}, 0.0));
  // The (2,3) block [[0, 1], [1, 1]] has a negative eigenvalue.
  const VVector bad{1, 0, 1, 0, 1};
  Eigen::SelfAdjointEigenSolver<Mat3> eig(bad.embed());
  REQUIRE(eig.eigenvalues().minCoeff() < -0.5);
  CHECK_FALSE(in_closed_cone(bad, 1e-9));

  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const VVector x = testing::random_v(rng);
    const bool open = in_open_cone(x);
    Eigen::SelfAdjointEigenSolver<Mat3> e(x.embed());
    CHECK(open == (e.eigenvalues().minCoeff() > 0.0));
    if (open) CHECK(in_closed_cone(x, 0.0));
  }
}

TEST_CASE("delta_s and the characteristic function") {
  CHECK(delta_s(VVector::identity(), 0.3, -1.7, 2.2) == doctest::Approx(1.0));
  CHECK(delta_s({4, 1, 1, 0, 0}, 1, 0, 0) == doctest::Approx(4.0));
  CHECK(delta_s({1, 1, 2, 0, 0}, -1.5, -1.5, -2) == doctest::Approx(0.25));
  CHECK(char_function(VVector::identity()) == doctest::Approx(1.0));
  CHECK(char_function({4, 1, 1, 0, 0}) == doctest::Approx(0.125));
  CHECK(char_function({1, 1, 2, 0, 0}) == doctest::Approx(0.25));
  CHECK_THROWS_AS(delta_s({1, 1, 1, 1, 0}, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(char_function({-1, 1, 1, 0, 0}), DomainError);

  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const VVector x = sample_cone(rng);
    const double s1 = rng.normal(), s2 = rng.normal(), s3 = rng.normal();
    CHECK(delta_s(x, s1, s2, s3) ==
          doctest::Approx(delta_s_minors(x, s1, s2, s3)).epsilon(1e-10));
    CHECK(char_function(x) == doctest::Approx(delta_s(x, -1.5, -1.5, -2.0)).epsilon(1e-12));
  }
}

TEST_CASE("rho and det_rho") {
  const VVector x{0.3, 1.2, 2.5, -0.4, 0.7};
  CHECK(rho(HMatrix::identity(), x) == x);

  const VVector d = rho(HMatrix::diag(2, 3, 5), x);
  CHECK(d[0] == doctest::Approx(4 * 0.3));
  CHECK(d[1] == doctest::Approx(9 * 1.2));
  CHECK(d[2] == doctest::Approx(25 * 2.5));
  CHECK(d[3] == doctest::Approx(10 * -0.4));
  CHECK(d[4] == doctest::Approx(15 * 0.7));

  CHECK(rho({1, 1, 1, 1, 0}, VVector::identity()) == VVector(1, 1, 2, 1, 0));

  CHECK(det_rho(HMatrix::identity()) == 1.0);
  CHECK(det_rho(HMatrix::diag(2, 1, 1)) == 8.0);
  CHECK(det_rho(HMatrix::diag(1, 1, 2)) == 16.0);

  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const HMatrix a = sample_h_plus(rng);
    const double exact = rho_matrix(a).determinant();
    CHECK(std::abs(det_rho(a) - exact) <= 1e-10 * std::abs(exact));
  }
}

TEST_CASE("relative invariance under H+") {
  Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    const HMatrix a = sample_h_plus(rng);
    const VVector x = sample_cone(rng);
    const double s1 = rng.normal(), s2 = rng.normal(), s3 = rng.normal();
    const double factor =
        std::pow(a.a[0], 2 * s1) * std::pow(a.a[1], 2 * s2) * std::pow(a.a[2], 2 * s3);
    const double lhs = delta_s(rho(a, x), s1, s2, s3);
    CHECK(std::abs(lhs - factor * delta_s(x, s1, s2, s3)) <= 1e-10 * std::abs(lhs));

    const double phi = char_function(rho(a, x));
    CHECK(std::abs(phi - char_function(x) / det_rho(a)) <= 1e-10 * phi);
  }
}

TEST_CASE("sampling") {
  std::array<double, 5> zeros{};
  CHECK(rho(h_plus_from_normals(zeros), VVector::identity()) == VVector::identity());

  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const VVector x = sample_cone(a);
    CHECK(in_open_cone(x));
    CHECK(x == sample_cone(b));
  }
}

TEST_CASE("isotropy group of I3") {
  const auto group = isotropy_group();
  REQUIRE(group.size() == 8);
  CHECK(group.front().m == Mat5::Identity());

  const VVector x{1, 2, 3, 4, 5};
  CHECK(rho_sigma().apply(x) == VVector(2, 1, 3, 5, 4));

  auto index_of = [&](const Mat5& m) {
    for (std::size_t i = 0; i < group.size(); ++i)
      if (group[i].m == m) return static_cast<int>(i);
    return -1;
  };
  // Cayley table: closed, and every element has order 1, 2 or 4.
  for (const auto& g : group) {
    for (const auto& h : group) CHECK(index_of((g * h).m) >= 0);
    const Mat5 g2 = g.m * g.m;
    CHECK((g2 == Mat5::Identity() || Mat5(g2 * g2) == Mat5::Identity()));
    CHECK(g.apply(VVector::identity()) == VVector::identity());
  }

  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const VVector y = sample_cone(rng);
    for (const auto& g : group) CHECK(in_open_cone(g.apply(y)));
  }
}
