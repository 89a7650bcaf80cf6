#include "doctest.h"

#include <random>

#include "vak/linalg.hpp"

using namespace vak;

namespace {

Mat mk(std::vector<std::vector<long>> rows) {
  Mat m(static_cast<int>(rows.size()),
        rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = Rational(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("rref of a rank-1 matrix") {
  Rref r = rref(mk({{1, 2}, {2, 4}}));
  CHECK(r.pivots == std::vector<int>{0});
  CHECK(r.m == mk({{1, 2}, {0, 0}}));
}

TEST_CASE("rref fixes the identity") {
  Mat id = Mat::identity(3);
  Rref r = rref(id);
  CHECK(r.m == id);
  CHECK(r.pivots == std::vector<int>{0, 1, 2});
}

TEST_CASE("rref of the zero matrix") {
  Mat z(2, 2);
  Rref r = rref(z);
  CHECK(r.m == z);
  CHECK(r.pivots.empty());
}

TEST_CASE("rank examples") {
  CHECK(rank(mk({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Mat::identity(4)) == 4);
  CHECK(rank(Mat(3, 3)) == 0);
}

TEST_CASE("kernel basis canonical form") {
  auto k = kernel_basis(mk({{1, 2}, {2, 4}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{Rational(-2), Rational(1)});

  CHECK(kernel_basis(Mat::identity(2)).empty());

  // rank-nullity: a single 1x3 row leaves a 2-dimensional kernel when the
  // row is nonzero, and all of k^3 when it is zero.
  CHECK(kernel_basis(mk({{1, 2, 5}})).size() == 2);
  CHECK(kernel_basis(mk({{0, 0, 0}})).size() == 3);
}

TEST_CASE("solve") {
  auto x = solve(Mat::identity(3), Vec{Rational(1), Rational(2), Rational(3)});
  REQUIRE(x.has_value());
  CHECK(*x == Vec{Rational(1), Rational(2), Rational(3)});

  // inconsistent
  CHECK(!solve(mk({{1, 1}, {1, 1}}), Vec{Rational(0), Rational(1)}).has_value());

  // underdetermined: canonical particular solution with free variables 0
  auto u = solve(mk({{1, 2}}), Vec{Rational(3)});
  REQUIRE(u.has_value());
  CHECK(*u == Vec{Rational(3), Rational(0)});
}

TEST_CASE("rank-nullity, idempotence and exact kernels on random matrices") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        m.at(i, j) = Rational(static_cast<long>(rng() % 7) - 3);

    Rref r1 = rref(m);
    Rref r2 = rref(r1.m);
    CHECK(r1.m == r2.m);

    auto ker = kernel_basis(m);
    CHECK(static_cast<int>(r1.pivots.size() + ker.size()) == cols);
    for (auto& v : ker) {
      Vec mv = mat_vec(m, v);
      for (auto& e : mv) CHECK(e == 0);
    }

    // m x = m * (random x) must be solvable and exact
    Vec x0(cols);
    for (auto& e : x0) e = Rational(static_cast<long>(rng() % 9) - 4);
    Vec b = mat_vec(m, x0);
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(mat_vec(m, *sol) == b);
  }
}
