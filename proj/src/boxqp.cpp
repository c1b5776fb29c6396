#include "lnps/boxqp.hpp"

#include <algorithm>
#include <cmath>

#include "lnps/errors.hpp"

namespace lnps {

void BoxQp::validate() const {
  if (f.empty()) throw ArgError("boxqp: empty problem");
  if (h.rows() != f.size() || h.cols() != f.size())
    throw DimError("boxqp: H/f size mismatch");
  if (!h.all_finite() || !all_finite(f))
    throw ArgError("boxqp: non-finite H or f");
  if (asymmetry(h) > 1e-10) throw ArgError("boxqp: H not symmetric");
  if (!(c > 0.0)) throw ArgError("boxqp: bound c must be positive");
}

double qp_objective(const BoxQp& qp, const Vector& alpha) {
  Vector ha = matvec(qp.h, alpha);
  return 0.5 * dot(alpha, ha) - dot(qp.f, alpha);
}

namespace {

Vector gradient(const BoxQp& qp, const Vector& alpha) {
  Vector g = matvec(qp.h, alpha);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] -= qp.f[i];
  return g;
}

double residual_from_gradient(const BoxQp& qp, const Vector& alpha, const Vector& g) {
  double res = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    double v;
    if (alpha[i] <= 0.0)
      v = std::max(0.0, -g[i]);
    else if (alpha[i] >= qp.c)
      v = std::max(0.0, g[i]);
    else
      v = std::abs(g[i]);
    res = std::max(res, v);
  }
  return res;
}

}  // namespace

double kkt_residual(const BoxQp& qp, const Vector& alpha) {
  if (alpha.size() != qp.size()) throw DimError("kkt_residual: length mismatch");
  Vector clipped(alpha);
  for (double& a : clipped) a = std::clamp(a, 0.0, qp.c);
  return residual_from_gradient(qp, clipped, gradient(qp, clipped));
}

QpSolution solve_boxqp(const BoxQp& qp, double tol, std::size_t max_sweeps,
                       const Vector* warm_start) {
  qp.validate();
  if (!(tol > 0.0)) throw ArgError("boxqp: tol must be positive");
  const std::size_t m = qp.size();
  if (max_sweeps == 0) max_sweeps = 10 * m + 1000;

  QpSolution sol;
  sol.alpha.assign(m, 0.0);
  if (warm_start) {
    if (warm_start->size() != m) throw DimError("boxqp: warm start length mismatch");
    for (std::size_t i = 0; i < m; ++i)
      sol.alpha[i] = std::clamp((*warm_start)[i], 0.0, qp.c);
  }

  double max_diag = 0.0;
  for (std::size_t i = 0; i < m; ++i) max_diag = std::max(max_diag, qp.h(i, i));
  const double tiny_diag = 1e-12 * max_diag;

  Vector g = gradient(qp, sol.alpha);
  sol.kkt = residual_from_gradient(qp, sol.alpha, g);

  while (sol.kkt > tol && sol.sweeps < max_sweeps) {
    for (std::size_t i = 0; i < m; ++i) {
      const double hii = qp.h(i, i);
      double target;
      if (hii <= tiny_diag) {
        // linear coordinate subproblem: move to the bound it favors
        if (g[i] > 0.0)
          target = 0.0;
        else if (g[i] < 0.0)
          target = qp.c;
        else
          continue;
      } else {
        target = std::clamp(sol.alpha[i] - g[i] / hii, 0.0, qp.c);
      }
      const double delta = target - sol.alpha[i];
      if (delta == 0.0) continue;
      sol.alpha[i] = target;
      for (std::size_t k = 0; k < m; ++k) g[k] += delta * qp.h(k, i);
    }
    ++sol.sweeps;
    // refresh the gradient to cap incremental drift
    g = gradient(qp, sol.alpha);
    sol.kkt = residual_from_gradient(qp, sol.alpha, g);
  }
  sol.converged = sol.kkt <= tol;
  return sol;
}

}  // namespace lnps
