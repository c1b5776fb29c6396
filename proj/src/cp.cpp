#include "lnps/cp.hpp"

#include <cmath>

#include "lnps/errors.hpp"

namespace lnps {

CpFactors::CpFactors(std::vector<Matrix> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ArgError("cp factors: empty factor list");
  rank_ = factors_.front().cols();
  if (rank_ == 0) throw ArgError("cp factors: rank must be >= 1");
  for (const Matrix& u : factors_) {
    if (u.cols() != rank_) throw DimError("cp factors: inconsistent rank");
    if (u.rows() == 0) throw DimError("cp factors: empty factor rows");
  }
}

std::vector<std::size_t> CpFactors::dims() const {
  std::vector<std::size_t> d;
  d.reserve(factors_.size());
  for (const Matrix& u : factors_) d.push_back(u.rows());
  return d;
}

Matrix khatri_rao_complement(const CpFactors& f, std::size_t mode) {
  const std::size_t m = f.order();
  if (mode >= m) throw ArgError("khatri_rao_complement: mode out of range");
  if (m == 1) {
    Matrix ones(1, f.rank());
    for (std::size_t r = 0; r < f.rank(); ++r) ones(0, r) = 1.0;
    return ones;
  }
  bool seeded = false;
  Matrix acc;
  for (std::size_t k = m; k-- > 0;) {
    if (k == mode) continue;
    if (!seeded) {
      acc = f.factor(k);
      seeded = true;
    } else {
      acc = khatri_rao(acc, f.factor(k));
    }
  }
  return acc;
}

DenseTensor cp_reconstruct(const CpFactors& f) {
  DenseTensor t(f.dims());
  std::vector<Vector> cols(f.order());
  for (std::size_t r = 0; r < f.rank(); ++r) {
    for (std::size_t j = 0; j < f.order(); ++j) {
      const Matrix& u = f.factor(j);
      cols[j].resize(u.rows());
      for (std::size_t i = 0; i < u.rows(); ++i) cols[j][i] = u(i, r);
    }
    DenseTensor term = outer_product(cols);
    for (std::size_t off = 0; off < t.value_count(); ++off)
      t.values()[off] += term.values()[off];
  }
  return t;
}

Matrix cp_unfold(const CpFactors& f, std::size_t mode) {
  return matmul_nt(f.factor(mode), khatri_rao_complement(f, mode));
}

double cp_inner(const CpFactors& f, const DenseTensor& x) {
  if (f.dims() != x.dims()) throw DimError("cp_inner: shape mismatch");
  const std::size_t m = f.order();
  double total = 0.0;
  Vector buf, next;
  for (std::size_t r = 0; r < f.rank(); ++r) {
    buf = x.values();
    // contract the trailing mode repeatedly
    for (std::size_t j = m; j-- > 1;) {
      const Matrix& u = f.factor(j);
      const std::size_t len = buf.size() / u.rows();
      next.assign(len, 0.0);
      for (std::size_t t = 0; t < u.rows(); ++t) {
        const double w = u(t, r);
        if (w == 0.0) continue;
        const double* slab = buf.data() + t * len;
        for (std::size_t s = 0; s < len; ++s) next[s] += slab[s] * w;
      }
      buf.swap(next);
    }
    const Matrix& u0 = f.factor(0);
    double v = 0.0;
    for (std::size_t i = 0; i < u0.rows(); ++i) v += buf[i] * u0(i, r);
    total += v;
  }
  return total;
}

namespace {

// hadamard product of U^(j)^T U^(j) over the given modes
Matrix gram_hadamard(const CpFactors& f, std::size_t skip_mode, bool skip) {
  const std::size_t r = f.rank();
  Matrix acc(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) acc(i, j) = 1.0;
  for (std::size_t k = 0; k < f.order(); ++k) {
    if (skip && k == skip_mode) continue;
    Matrix g = matmul_tn(f.factor(k), f.factor(k));
    for (std::size_t i = 0; i < r * r; ++i) acc.data()[i] *= g.data()[i];
  }
  return acc;
}

}  // namespace

double cp_frobenius(const CpFactors& f) {
  Matrix g = gram_hadamard(f, 0, false);
  double s = 0.0;
  for (double x : g.data()) s += x;
  // tiny negative values are roundoff from cancellation
  return std::sqrt(std::max(s, 0.0));
}

double cp_inner_factors(const CpFactors& f, const CpFactors& g) {
  if (f.dims() != g.dims()) throw DimError("cp_inner_factors: shape mismatch");
  Matrix acc(f.rank(), g.rank());
  for (std::size_t i = 0; i < f.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j) acc(i, j) = 1.0;
  for (std::size_t k = 0; k < f.order(); ++k) {
    Matrix cross = matmul_tn(f.factor(k), g.factor(k));
    for (std::size_t i = 0; i < acc.size(); ++i) acc.data()[i] *= cross.data()[i];
  }
  double s = 0.0;
  for (double x : acc.data()) s += x;
  return s;
}

Matrix gram_complement(const CpFactors& f, std::size_t mode) {
  if (mode >= f.order()) throw ArgError("gram_complement: mode out of range");
  return gram_hadamard(f, mode, true);
}

}  // namespace lnps
