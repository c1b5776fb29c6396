#include <doctest.h>

#include <algorithm>
#include <vector>

#include "lnps/errors.hpp"
#include "lnps/tensor.hpp"
#include "support.hpp"

using namespace lnps;
using testsupport::random_tensor;

TEST_CASE("inner_product matches hand values and the flatten-dot oracle") {
  DenseTensor a({2, 2}, {1, 3, 2, 4});  // [[1,2],[3,4]] fastest-first
  CHECK(inner_product(a, a) == doctest::Approx(30.0));

  DenseTensor z({2, 2});
  CHECK(inner_product(a, z) == 0.0);

  Rng rng(11);
  DenseTensor x = random_tensor({2, 2, 2}, rng);
  DenseTensor y = random_tensor({2, 2, 2}, rng);
  CHECK(inner_product(x, y) == doctest::Approx(dot(x.values(), y.values())).epsilon(1e-12));

  DenseTensor w({3});
  CHECK_THROWS_AS(inner_product(a, w), DimError);
}

TEST_CASE("frobenius_norm") {
  DenseTensor a({2, 2}, {3, 0, 4, 0});  // [[3,4],[0,0]]
  CHECK(frobenius_norm(a) == doctest::Approx(5.0));
  CHECK(frobenius_norm(DenseTensor({3, 2})) == 0.0);

  Rng rng(5);
  DenseTensor x = random_tensor({3, 2, 2}, rng);
  CHECK(testsupport::rel_err(frobenius_norm(x) * frobenius_norm(x),
                             inner_product(x, x)) < 1e-12);
}

TEST_CASE("outer_product") {
  DenseTensor t = outer_product({{1, 2}, {3, 4}});
  // [[3,4],[6,8]]: entry (i,j) = u_i v_j
  CHECK(t.at({0, 0}) == 3);
  CHECK(t.at({0, 1}) == 4);
  CHECK(t.at({1, 0}) == 6);
  CHECK(t.at({1, 1}) == 8);

  // x outer e_1: slice j=0 equals x, rest zero
  DenseTensor s = outer_product({{2, -1, 5}, {1, 0}});
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(s.at({i, 0}) == outer_product({{2, -1, 5}}).values()[i]);
    CHECK(s.at({i, 1}) == 0.0);
  }

  Rng rng(7);
  std::vector<Vector> vs = {{}, {}, {}};
  for (auto& v : vs) {
    v.resize(3);
    for (double& x : v) x = rng.normal();
  }
  DenseTensor r = outer_product(vs);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t i = 0; i < 3; ++i)
        CHECK(r.at({i, j, k}) == doctest::Approx(vs[0][i] * vs[1][j] * vs[2][k]));

  CHECK_THROWS_AS(outer_product({}), ArgError);
  CHECK_THROWS_AS(outer_product({Vector{}}), ArgError);
}

TEST_CASE("unfold follows the index map") {
  // value at (i1,i2,i3), 1-based, is i1 + 2(i2-1) + 4(i3-1)
  DenseTensor t({2, 2, 2}, {1, 2, 3, 4, 5, 6, 7, 8});
  Matrix m0 = unfold(t, 0);
  REQUIRE(m0.rows() == 2);
  REQUIRE(m0.cols() == 4);
  const double want0[2][4] = {{1, 3, 5, 7}, {2, 4, 6, 8}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(m0(i, j) == want0[i][j]);

  Matrix m1 = unfold(t, 1);
  const double want1[2][4] = {{1, 2, 5, 6}, {3, 4, 7, 8}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(m1(i, j) == want1[i][j]);

  // order-2 tensor: mode-0 unfold is the matrix itself
  DenseTensor a({3, 2}, {1, 2, 3, 4, 5, 6});
  Matrix ma = unfold(a, 0);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 3; ++i) CHECK(ma(i, j) == a.at({i, j}));

  CHECK_THROWS_AS(unfold(t, 3), ArgError);
}

TEST_CASE("unfold preserves the entry multiset on every mode") {
  Rng rng(13);
  DenseTensor t = random_tensor({3, 2, 4}, rng);
  Vector sorted_vals = t.values();
  std::sort(sorted_vals.begin(), sorted_vals.end());
  for (std::size_t mode = 0; mode < 3; ++mode) {
    Vector u = unfold(t, mode).data();
    std::sort(u.begin(), u.end());
    CHECK(u == sorted_vals);
  }
}

TEST_CASE("kronecker") {
  Matrix i2 = Matrix::identity(2);
  Matrix k = kronecker(i2, i2);
  CHECK(testsupport::max_abs_diff(k, Matrix::identity(4)) == 0.0);

  Matrix a(2, 2, {1, 3, 2, 4});  // [[1,2],[3,4]]
  Matrix b(2, 2, {0, 1, 1, 0});  // [[0,1],[1,0]]
  Matrix ab = kronecker(a, b);
  // block (i,j) = a_ij * B, spelled out by hand
  const double want[4][4] = {{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(ab(i, j) == want[i][j]);
}

TEST_CASE("kronecker of vectors agrees with vec of the outer product") {
  // vec stacks the first factor's index fastest, so vec(u outer v) = v kron u
  Rng rng(3);
  Vector u(3), v(2);
  for (double& x : u) x = rng.normal();
  for (double& x : v) x = rng.normal();
  Matrix k = kronecker(Matrix::column(v), Matrix::column(u));
  DenseTensor t = outer_product({u, v});
  REQUIRE(k.size() == t.value_count());
  for (std::size_t i = 0; i < k.size(); ++i)
    CHECK(k.data()[i] == doctest::Approx(t.values()[i]).epsilon(1e-14));
}

TEST_CASE("khatri_rao") {
  // single-column matrices: identical to kronecker
  Matrix a(3, 1, {1, 2, 3});
  Matrix b(2, 1, {4, 5});
  CHECK(testsupport::max_abs_diff(khatri_rao(a, b), kronecker(a, b)) == 0.0);

  Rng rng(9);
  Matrix x = testsupport::random_matrix(3, 2, rng);
  Matrix y = testsupport::random_matrix(2, 2, rng);
  Matrix kr = khatri_rao(x, y);
  REQUIRE(kr.rows() == 6);
  REQUIRE(kr.cols() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    Matrix xk(3, 1), yk(2, 1);
    for (std::size_t i = 0; i < 3; ++i) xk(i, 0) = x(i, k);
    for (std::size_t i = 0; i < 2; ++i) yk(i, 0) = y(i, k);
    Matrix col = kronecker(xk, yk);
    for (std::size_t i = 0; i < 6; ++i) CHECK(kr(i, k) == col(i, 0));
  }

  // zero column propagates
  Matrix z(2, 2);
  z(0, 0) = 1;
  z(1, 0) = 2;
  Matrix kz = khatri_rao(x, z);
  for (std::size_t i = 0; i < kz.rows(); ++i) CHECK(kz(i, 1) == 0.0);

  Matrix wrong(2, 3);
  CHECK_THROWS_AS(khatri_rao(x, wrong), DimError);
}
