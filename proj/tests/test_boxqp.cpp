#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "lnps/boxqp.hpp"
#include "lnps/errors.hpp"
#include "qp_oracle.hpp"
#include "support.hpp"

using namespace lnps;
using testsupport::brute_force_objective;

namespace {

BoxQp random_qp(std::size_t m, Rng& rng, double c = 1.0) {
  BoxQp qp;
  qp.h = testsupport::random_spd(m, rng);
  qp.f.resize(m);
  for (double& v : qp.f) v = rng.normal();
  qp.c = c;
  return qp;
}

}  // namespace

TEST_CASE("one-dimensional cases") {
  BoxQp inside{Matrix(1, 1, {2}), {1}, 3};
  CHECK(solve_boxqp(inside).alpha[0] == doctest::Approx(0.5));

  BoxQp low{Matrix(1, 1, {2}), {-1}, 3};
  CHECK(solve_boxqp(low).alpha[0] == 0.0);
}

TEST_CASE("separable two-dimensional case clips at the bound") {
  BoxQp qp{Matrix(2, 2, {2, 0, 0, 2}), {5, 1}, 1};
  QpSolution sol = solve_boxqp(qp);
  CHECK(sol.alpha[0] == doctest::Approx(1.0));
  CHECK(sol.alpha[1] == doctest::Approx(0.5));
  CHECK(sol.converged);
}

TEST_CASE("matches the active-set oracle on small random problems") {
  Rng rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t m = 2 + trial % 3;  // 2..4 here; acceptance pushes to 8
    BoxQp qp = random_qp(m, rng);
    QpSolution sol = solve_boxqp(qp, 1e-10);
    const double got = qp_objective(qp, sol.alpha);
    const double want = brute_force_objective(qp);
    CHECK(std::abs(got - want) < 1e-8);
  }
}

TEST_CASE("kkt_residual definition") {
  // alpha = 0 with f <= 0: gradient -f >= 0 at the lower bound
  BoxQp qp{Matrix(2, 2, {1, 0, 0, 1}), {-0.5, -2.0}, 1};
  CHECK(kkt_residual(qp, {0, 0}) == 0.0);

  // interior point with g = (0.3, -0.2)
  BoxQp qp2{Matrix(2, 2, {1, 0, 0, 1}), {0.2, 0.7}, 10};
  CHECK(kkt_residual(qp2, {0.5, 0.5}) == doctest::Approx(0.3));

  Rng rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    BoxQp r = random_qp(5, rng);
    QpSolution sol = solve_boxqp(r, 1e-9);
    CHECK(kkt_residual(r, sol.alpha) <= 1e-9);
  }
}

TEST_CASE("objective is monotone across sweeps") {
  Rng rng(107);
  BoxQp qp = random_qp(12, rng);
  // replay the solver one sweep at a time via warm starts
  Vector warm(12, 0.0);
  double prev = qp_objective(qp, warm);
  for (int sweep = 0; sweep < 30; ++sweep) {
    QpSolution sol = solve_boxqp(qp, 1e-16, 1, &warm);
    const double now = qp_objective(qp, sol.alpha);
    CHECK(now <= prev + 1e-12);
    prev = now;
    warm = sol.alpha;
  }
}

TEST_CASE("box is satisfied exactly and solves are deterministic") {
  Rng rng(109);
  BoxQp qp = random_qp(20, rng, 0.7);
  QpSolution a = solve_boxqp(qp);
  QpSolution b = solve_boxqp(qp);
  CHECK(a.alpha == b.alpha);  // bit-identical
  for (double v : a.alpha) {
    CHECK(v >= 0.0);
    CHECK(v <= 0.7);
  }
}

TEST_CASE("warm starts are clipped and still converge") {
  Rng rng(113);
  BoxQp qp = random_qp(8, rng, 0.5);
  Vector warm(8, 5.0);  // far outside the box
  QpSolution sol = solve_boxqp(qp, 1e-9, 0, &warm);
  CHECK(sol.converged);
  CHECK(kkt_residual(qp, sol.alpha) <= 1e-9);
}

TEST_CASE("degenerate diagonal moves to the favorable bound") {
  // H = 0: purely linear objective -f^T a over the box
  BoxQp qp{Matrix(2, 2), {1.0, -2.0}, 3};
  QpSolution sol = solve_boxqp(qp, 1e-9, 5);
  CHECK(sol.alpha[0] == 3.0);  // f positive: maximize a
  CHECK(sol.alpha[1] == 0.0);  // f negative: minimize a
}

TEST_CASE("input validation") {
  BoxQp bad{Matrix(2, 2, {1, 0, 0.5, 1}), {1, 1}, 1};
  CHECK_THROWS_AS(solve_boxqp(bad), ArgError);

  BoxQp nan_f{Matrix::identity(2), {std::nan(""), 0.0}, 1};
  CHECK_THROWS_AS(solve_boxqp(nan_f), ArgError);

  BoxQp neg_c{Matrix::identity(2), {1, 1}, -1};
  CHECK_THROWS_AS(solve_boxqp(neg_c), ArgError);
}
