#include <doctest.h>

#include <cmath>
#include <random>

#include "paraslant/linalg.hpp"

using namespace paraslant;

TEST_CASE("determinant") {
  Mat a = zeros(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  CHECK(det(a) == doctest::Approx(-2.0));
  CHECK(det(identity(5)) == doctest::Approx(1.0));
  Mat s = zeros(3, 3);  // rank 1
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s(i, j) = (i + 1.0) * (j + 1.0);
  CHECK(det(s) == doctest::Approx(0.0));
}

TEST_CASE("solve against random systems") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(trial % 5);
    Mat a = zeros(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = dist(rng);
      a(i, i) += 3.0;  // keep it well conditioned
    }
    Mat b = zeros(n, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < 2; ++j) b(i, j) = dist(rng);
    Mat x = solve(a, b);
    Mat r = matmul(a, x);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < 2; ++j) CHECK(r(i, j) == doctest::Approx(b(i, j)).epsilon(1e-10));
  }
}

TEST_CASE("solve rejects singular matrices") {
  Mat a = zeros(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  CHECK_THROWS_AS(solve(a, identity(2)), DegenerateMetricError);
}

TEST_CASE("kernel basis of a known rank-deficient matrix") {
  // rows (1, 1, 0) and (0, 0, 1): kernel = span{(1, -1, 0)}
  Mat a = zeros(2, 3);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 2) = 1;
  Mat k = kernel_basis(a, 1e-12);
  REQUIRE(k.cols() == 1);
  REQUIRE(k.rows() == 3);
  Vec v = col(k, 0);
  CHECK(std::fabs(v[0] + v[1]) <= 1e-12);
  CHECK(std::fabs(v[2]) <= 1e-12);
  CHECK(max_abs(v) > 0.1);

  CHECK(kernel_basis(identity(4), 1e-12).cols() == 0);
  CHECK(kernel_basis(zeros(3, 3), 1e-12).cols() == 3);
}

TEST_CASE("kernel vectors annihilate their matrix") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  // random 3x5: kernel dimension at least 2
  Mat a = zeros(3, 5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j) a(i, j) = dist(rng);
  Mat k = kernel_basis(a, 1e-10);
  CHECK(k.cols() >= 2);
  for (int j = 0; j < k.cols(); ++j) {
    Vec v = col(k, j);
    CHECK(max_abs(matvec(a, v)) <= 1e-9);
    CHECK(max_abs(v) > 1e-6);
  }
}

TEST_CASE("symmetric eigenvalues") {
  Mat d = zeros(3, 3);
  d(0, 0) = 2;
  d(1, 1) = -1;
  d(2, 2) = 5;
  auto ev = sym_eigenvalues(d);
  REQUIRE(ev.size() == 3);
  CHECK(ev[0] == doctest::Approx(-1.0));
  CHECK(ev[1] == doctest::Approx(2.0));
  CHECK(ev[2] == doctest::Approx(5.0));

  // 2x2 with known spectrum {1, 3}
  Mat s = zeros(2, 2);
  s(0, 0) = 2;
  s(0, 1) = 1;
  s(1, 0) = 1;
  s(1, 1) = 2;
  auto ev2 = sym_eigenvalues(s);
  CHECK(ev2[0] == doctest::Approx(1.0));
  CHECK(ev2[1] == doctest::Approx(3.0));
}

TEST_CASE("vector helpers") {
  Mat a = zeros(2, 2);
  a(0, 0) = 1;
  a(0, 1) = -2;
  a(1, 0) = 0.5;
  a(1, 1) = 3;
  Vec x = {2.0, 1.0};
  Vec y = matvec(a, x);
  CHECK(y[0] == doctest::Approx(0.0));
  CHECK(y[1] == doctest::Approx(4.0));
  CHECK(dot(x, y) == doctest::Approx(4.0));
  CHECK(form(x, a, x) == doctest::Approx(2.0 * (2.0 - 2.0) + 1.0 * (1.0 + 3.0)));
  Vec b = {1.0, 2.0};
  Vec sol = solve_vec(a, b);
  Vec back = matvec(a, sol);
  CHECK(back[0] == doctest::Approx(1.0));
  CHECK(back[1] == doctest::Approx(2.0));
  CHECK(max_abs(a) == 3.0);
}
