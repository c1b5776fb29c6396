#include "lnps/svm.hpp"

#include <cmath>

#include "lnps/boxqp.hpp"
#include "lnps/errors.hpp"
#include "lnps/warnings.hpp"

namespace lnps {

LinearSvmModel train_svm(const std::vector<Vector>& vectors,
                         const std::vector<int>& labels, double c) {
  if (vectors.empty() || vectors.size() != labels.size())
    throw ArgError("train_svm: vectors/labels mismatch");
  if (!(c > 0.0)) throw ArgError("train_svm: C must be positive");

  const std::size_t m = vectors.size();
  const std::size_t n = vectors.front().size();
  bool has_pos = false, has_neg = false, all_zero = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (vectors[i].size() != n) throw DimError("train_svm: ragged feature vectors");
    if (labels[i] == 1)
      has_pos = true;
    else if (labels[i] == -1)
      has_neg = true;
    else
      throw ArgError("train_svm: labels must be +1 or -1");
    if (norm2(vectors[i]) > 0.0) all_zero = false;
  }
  if (!has_pos || !has_neg)
    throw ArgError("train_svm: need at least one sample per class");
  if (all_zero) warn("train_svm: all-zero data, returning w = 0");

  BoxQp qp;
  qp.h = Matrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const double q = labels[i] * labels[j] * dot(vectors[i], vectors[j]);
      qp.h(i, j) = q;
      qp.h(j, i) = q;
    }
  qp.f.assign(m, 1.0);
  qp.c = c;

  QpSolution sol = solve_boxqp(qp);

  LinearSvmModel model;
  model.c = c;
  model.support_alphas = sol.alpha;
  model.w.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double coef = sol.alpha[i] * labels[i];
    if (coef == 0.0) continue;
    for (std::size_t d = 0; d < n; ++d) model.w[d] += coef * vectors[i][d];
  }
  return model;
}

int predict_svm(const LinearSvmModel& model, const Vector& x) {
  if (x.size() != model.w.size()) throw DimError("predict_svm: feature length mismatch");
  return dot(model.w, x) < 0.0 ? -1 : +1;
}

Vector flatten(const DenseTensor& x) { return x.values(); }

DenseTensor unflatten(const std::vector<std::size_t>& dims, Vector values) {
  return DenseTensor(dims, std::move(values));
}

}  // namespace lnps
