#pragma once

#include <cstddef>

#include "lnps/linalg.hpp"

namespace lnps {

/// Box-constrained quadratic program
///   minimize 1/2 a^T H a - f^T a   subject to 0 <= a <= c,
/// the minimization form of the trainer's Wolfe duals. H must be symmetric
/// PSD within 1e-10 relative and c positive.
struct BoxQp {
  Matrix h;
  Vector f;
  double c = 0.0;

  std::size_t size() const { return f.size(); }
  /// Throws when H/f are inconsistent, non-finite, asymmetric, or c <= 0.
  void validate() const;
};

struct QpSolution {
  Vector alpha;
  std::size_t sweeps = 0;
  double kkt = 0.0;
  bool converged = false;
};

/// 1/2 a^T H a - f^T a.
double qp_objective(const BoxQp& qp, const Vector& alpha);

/// Max KKT violation of the (box-clipped) point: |g_i| on interior
/// coordinates, max(0, -g_i) at the lower bound, max(0, g_i) at the upper,
/// with g = H a - f. Zero exactly at a KKT point.
double kkt_residual(const BoxQp& qp, const Vector& alpha);

/// Cyclic coordinate descent with hard clipping to the box. Deterministic:
/// fixed sweep order, no randomization; the objective never increases
/// across sweeps. An optional warm start is clipped to the box first.
/// Stops when the KKT residual reaches tol or after max_sweeps sweeps.
QpSolution solve_boxqp(const BoxQp& qp, double tol = 1e-8, std::size_t max_sweeps = 0,
                       const Vector* warm_start = nullptr);

}  // namespace lnps
