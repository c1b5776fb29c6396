#include <doctest.h>

#include <string>

#include "lnps/errors.hpp"
#include "lnps/linalg.hpp"
#include "lnps/warnings.hpp"
#include "support.hpp"

using namespace lnps;

namespace {

std::string g_last_warning;
void capture_warning(const std::string& msg) { g_last_warning = msg; }

}  // namespace

TEST_CASE("sym_eig basics") {
  EigResult id = sym_eig(Matrix::identity(3));
  for (double v : id.values) CHECK(v == doctest::Approx(1.0));

  Matrix d(2, 2);
  d(0, 0) = 4;
  d(1, 1) = 9;
  EigResult e = sym_eig(d);
  CHECK(e.values[0] == doctest::Approx(9.0));
  CHECK(e.values[1] == doctest::Approx(4.0));
  CHECK(std::abs(e.vectors(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(e.vectors(0, 1)) == doctest::Approx(1.0));

  Matrix bad(2, 2, {1, 2, 3, 4});
  CHECK_THROWS_AS(sym_eig(bad), ArgError);
}

TEST_CASE("sym_eig reconstructs random symmetric matrices") {
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix s = symmetrize(testsupport::random_matrix(5, 5, rng));
    EigResult e = sym_eig(s);

    // Q Lambda Q^T residual
    Matrix lam(5, 5);
    for (std::size_t i = 0; i < 5; ++i) lam(i, i) = e.values[i];
    Matrix recon = matmul(matmul(e.vectors, lam), transpose(e.vectors));
    CHECK(testsupport::rel_frob_diff(recon, s) < 1e-8);

    Matrix qtq = matmul_tn(e.vectors, e.vectors);
    CHECK(testsupport::max_abs_diff(qtq, Matrix::identity(5)) < 1e-8);

    for (std::size_t i = 1; i < 5; ++i) CHECK(e.values[i - 1] >= e.values[i]);
  }
}

TEST_CASE("sym_inv_sqrt") {
  SqrtPair id = sym_inv_sqrt(Matrix::identity(3));
  CHECK(testsupport::max_abs_diff(id.half, Matrix::identity(3)) < 1e-12);
  CHECK(testsupport::max_abs_diff(id.inv_half, Matrix::identity(3)) < 1e-12);

  Matrix d(2, 2);
  d(0, 0) = 4;
  d(1, 1) = 9;
  SqrtPair p = sym_inv_sqrt(d);
  CHECK(p.half(0, 0) == doctest::Approx(2.0));
  CHECK(p.half(1, 1) == doctest::Approx(3.0));
  CHECK(p.inv_half(0, 0) == doctest::Approx(0.5));
  CHECK(p.inv_half(1, 1) == doctest::Approx(1.0 / 3.0));

  Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix s = testsupport::random_spd(4, rng);
    SqrtPair sp = sym_inv_sqrt(s);
    Matrix conj = matmul(matmul(sp.inv_half, s), sp.inv_half);
    CHECK(testsupport::max_abs_diff(conj, Matrix::identity(4)) < 1e-8);
    CHECK(testsupport::rel_frob_diff(matmul(sp.half, sp.half), s) < 1e-8);
  }
}

TEST_CASE("sym_inv_sqrt degenerates to identities on a zero matrix") {
  g_last_warning.clear();
  set_warn_handler(&capture_warning);
  SqrtPair p = sym_inv_sqrt(Matrix(3, 3));
  set_warn_handler(nullptr);
  CHECK(testsupport::max_abs_diff(p.half, Matrix::identity(3)) == 0.0);
  CHECK(testsupport::max_abs_diff(p.inv_half, Matrix::identity(3)) == 0.0);
  CHECK(g_last_warning.find("degenerate") != std::string::npos);
}

TEST_CASE("spd_solve") {
  Matrix b(2, 1, {2, 4});
  Matrix x = spd_solve(Matrix::identity(2), b);
  CHECK(testsupport::max_abs_diff(x, b) == 0.0);

  Matrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 4;
  Matrix y = spd_solve(d, b);
  CHECK(y(0, 0) == doctest::Approx(1.0));
  CHECK(y(1, 0) == doctest::Approx(1.0));

  Rng rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix s = testsupport::random_spd(10, rng);
    for (std::size_t i = 0; i < 10; ++i) s(i, i) += 0.5;
    Matrix rhs = testsupport::random_matrix(10, 3, rng);
    Matrix sol = spd_solve(s, rhs);
    Matrix resid = matmul(s, sol);
    for (std::size_t i = 0; i < resid.size(); ++i)
      resid.data()[i] -= rhs.data()[i];
    CHECK(frobenius(resid) <= 1e-8 * frobenius(rhs));
  }

  CHECK_THROWS_AS(spd_solve(Matrix(3, 3), Matrix(3, 1)), NumericError);
}
