#include <doctest.h>

#include "rigidline/matrix.hpp"
#include "rigidline/rng.hpp"

using namespace rigidline;

namespace {

MatrixR random_matrix(Rng& rng, int rows, int cols) {
  MatrixR m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.next_rational(30, 6);
  return m;
}

}  // namespace

TEST_CASE("rref_kernel on the stated shapes") {
  CHECK(rref_kernel(MatrixR::identity(2)).rank == 2);
  CHECK(rref_kernel(MatrixR::identity(2)).basis.empty());

  KernelResult zero = rref_kernel(MatrixR(3, 3));
  CHECK(zero.rank == 0);
  REQUIRE(zero.basis.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(zero.basis[i][j] == (i == j ? Rational(1) : Rational(0)));

  MatrixR proportional{{Rational(1), Rational(2), Rational(3)},
                       {Rational(2), Rational(4), Rational(6)}};
  KernelResult kr = rref_kernel(proportional);
  CHECK(kr.rank == 1);
  CHECK(kr.basis.size() == 2);
  for (const Vec& v : kr.basis) CHECK(is_zero_vec(proportional * v));
}

TEST_CASE("kernel basis is canonical: free coordinate 1, increasing order") {
  MatrixR m{{Rational(1), Rational(2), Rational(3)}};
  KernelResult kr = rref_kernel(m);
  REQUIRE(kr.basis.size() == 2);
  CHECK(kr.basis[0][1] == 1);
  CHECK(kr.basis[0][2] == 0);
  CHECK(kr.basis[1][1] == 0);
  CHECK(kr.basis[1][2] == 1);
}

TEST_CASE("rank + kernel dimension = columns on random matrices") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng.next_int(0, 5));
    int cols = 1 + static_cast<int>(rng.next_int(0, 5));
    MatrixR m = random_matrix(rng, rows, cols);
    KernelResult kr = rref_kernel(m);
    CHECK(kr.rank + static_cast<int>(kr.basis.size()) == cols);
    for (const Vec& v : kr.basis) CHECK(is_zero_vec(m * v));
  }
}

TEST_CASE("solve returns a particular solution or detects inconsistency") {
  MatrixR a{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
  CHECK(!solve(a, {Rational(1), Rational(3)}).has_value());
  auto x = solve(a, {Rational(1), Rational(2)});
  REQUIRE(x.has_value());
  CHECK(a * *x == Vec{Rational(1), Rational(2)});
}

TEST_CASE("determinant by elimination") {
  MatrixR m{{Rational(2), Rational(1)}, {Rational(7), Rational(4)}};
  CHECK(determinant(m) == Rational(1));
  CHECK(determinant(MatrixR(3, 3)) == 0);
  CHECK(determinant(MatrixR::identity(4)) == 1);
}

TEST_CASE("gram_schmidt produces pairwise orthogonal spanning vectors") {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> vs;
    for (int i = 0; i < 3; ++i) {
      Vec v(4);
      for (auto& x : v) x = rng.next_rational(10, 3);
      vs.push_back(v);
    }
    std::vector<Vec> basis = gram_schmidt(vs);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        CHECK(dot(basis[i], basis[j]) == 0);
    // Same span: every input reduces to zero against the basis.
    for (const Vec& v : vs) {
      Vec w = v;
      for (const Vec& b : basis) w = vec_sub(w, scaled(b, dot(w, b) / dot(b, b)));
      CHECK(is_zero_vec(w));
    }
  }
}
