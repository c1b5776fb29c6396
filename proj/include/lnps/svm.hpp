#pragma once

#include <vector>

#include "lnps/linalg.hpp"
#include "lnps/tensor.hpp"

namespace lnps {

/// No-bias linear soft-margin SVM on flattened tensors. The dual has no
/// equality constraint, so it is a plain box QP.
struct LinearSvmModel {
  Vector w;
  double c = 0.0;
  Vector support_alphas;
};

/// Solves min 1/2 a^T Q a - e^T a, 0 <= a <= C with Q_ij = y_i y_j x_i.x_j
/// and recovers w = sum a_i y_i x_i. All-zero data degenerates to w = 0
/// with a warning.
LinearSvmModel train_svm(const std::vector<Vector>& vectors,
                         const std::vector<int>& labels, double c);

/// sign(w.x) with 0 mapping to +1.
int predict_svm(const LinearSvmModel& model, const Vector& x);

/// Linear value array of the tensor (fastest-first layout, the same order
/// the dataset files use).
Vector flatten(const DenseTensor& x);

/// Inverse of flatten for a known shape.
DenseTensor unflatten(const std::vector<std::size_t>& dims, Vector values);

}  // namespace lnps
