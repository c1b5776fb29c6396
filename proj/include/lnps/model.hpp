#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lnps/boxqp.hpp"
#include "lnps/cp.hpp"
#include "lnps/linalg.hpp"
#include "lnps/tensor.hpp"

namespace lnps {

/// Trainer hyperparameters. c1/c2 weight the Frobenius regularizers,
/// c3/c4 the slack penalties, lambda1..lambda4 trade off margin variance
/// and margin mean for the two tensorplanes.
struct Hyperparams {
  double c1 = 1.0, c2 = 1.0, c3 = 1.0, c4 = 1.0;
  double lambda1 = 1.0, lambda2 = 1.0, lambda3 = 1.0, lambda4 = 1.0;
  std::size_t rank = 1;
  double eps = 1e-4;
  std::size_t max_outer = 5000;
  double ridge = 1e-8;  // scaled by tr(G)/m before being added to G
  std::uint64_t seed = 0;

  void validate() const;  // throws ArgError on out-of-range values
};

/// Labeled tensor samples, positives (+1) first.
struct TrainingSet {
  std::vector<DenseTensor> positives;
  std::vector<DenseTensor> negatives;

  std::size_t m1() const { return positives.size(); }
  std::size_t m2() const { return negatives.size(); }
  std::size_t total() const { return m1() + m2(); }
  const std::vector<std::size_t>& dims() const;
  const DenseTensor& sample(std::size_t index) const;  // global index, positives first

  void validate() const;  // nonempty classes, consistent shapes
};

/// Trained classifier: one CP weight tensor per class plus training
/// metadata. Immutable after training; safe to share across threads.
struct ModelPair {
  CpFactors factors1;  // tensorplane of the positive class
  CpFactors factors2;  // tensorplane of the negative class
  Hyperparams hyper;
  std::vector<std::size_t> dims;
  double norm1 = 0.0;  // cp_frobenius(factors1)
  double norm2 = 0.0;
  bool converged = false;
  std::size_t outer_iters = 0;

  // per mode-update primal objective traces (index 0 = initial value)
  std::vector<double> objective1;
  std::vector<double> objective2;
  // worst relative residual of G beta = rhs seen while training
  double max_representer_residual = 0.0;
};

/// Everything the mode-j subproblem of one tensorplane needs: the
/// Khatri-Rao complement and its Gram roots, the transformed samples,
/// their stacked vecs V, the kernel K = V^T V, the class row blocks, and
/// the regularized quadratic matrix G.
struct ModeCache {
  int problem = 1;  // 1: positive plane, 2: negative plane
  std::size_t mode = 0;
  Matrix ucomp;          // prod_{k != j} I_k x R
  Matrix a_half;         // A^{1/2}, A = ucomp^T ucomp
  Matrix a_inv_half;     // A^{-1/2}
  std::vector<Matrix> transformed;  // per sample, I_j x R, positives first
  Matrix v;              // (I_j R) x m, column l = vec(transformed[l])
  Matrix k;              // m x m Gram of V
  Matrix k_own;          // rows of K for the plane's own class (m_own x m)
  Matrix m_opp;          // rows of K for the other class (m_opp x m)
  Matrix g;              // m x m, positive definite after the ridge
  double ridge_applied = 0.0;  // value actually added to the diagonal
};

/// (1/m) sum of label * <W, sample>.
double margin_mean(const CpFactors& f, const std::vector<DenseTensor>& samples,
                   int label);

/// ((m-1)/m^2) sum of <W, sample>^2, the simplified variance the duals embed.
double margin_variance(const CpFactors& f, const std::vector<DenseTensor>& samples);

ModeCache build_mode_cache(const CpFactors& f_own, const TrainingSet& ts,
                           std::size_t mode, int problem, const Hyperparams& hyper);

/// Dual of the mode subproblem: H = M G^{-1} M^T (via solves, symmetrized),
/// f = (lambda_mean/m_opp) H y_opp + e, bound c3 or c4.
BoxQp assemble_dual(const ModeCache& cache, const TrainingSet& ts,
                    const Hyperparams& hyper);

/// beta = G^{-1}((lambda_mean/m_opp) M^T y_opp - M^T alpha). When
/// residual_out is given it receives ||G beta - rhs|| / (1 + ||rhs||).
Vector recover_beta(const ModeCache& cache, const Vector& alpha,
                    const TrainingSet& ts, const Hyperparams& hyper,
                    double* residual_out = nullptr);

/// Reshape V beta to I_j x R and undo the A^{1/2} change of variables.
Matrix update_mode_factor(const ModeCache& cache, const Vector& beta);

/// Value of the tensorplane objective with slacks realized as hinges.
double primal_objective(const CpFactors& f, const TrainingSet& ts,
                        const Hyperparams& hyper, int problem);

/// Alternating projection over modes; deterministic for a fixed seed.
ModelPair train(const TrainingSet& ts, const Hyperparams& hyper);

/// Normalized distance of X to each tensorplane: |<W_i, X>| / ||W_i||_F.
/// A zero-norm plane is infinitely far.
std::pair<double, double> plane_distances(const ModelPair& model, const DenseTensor& x);

/// Nearest-plane rule: +1 when plane 1 is at least as close as plane 2.
int decide(const ModelPair& model, const DenseTensor& x);

/// Binary model format "LNPS" v1 (little-endian). Round trips factors
/// bit-exactly.
void save_model(const ModelPair& model, std::ostream& out);
ModelPair load_model(std::istream& in);
void save_model_file(const ModelPair& model, const std::string& path);
ModelPair load_model_file(const std::string& path);

}  // namespace lnps
