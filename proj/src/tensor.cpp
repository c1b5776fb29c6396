#include "lnps/tensor.hpp"

#include <cmath>

#include "lnps/errors.hpp"

namespace lnps {

std::size_t dim_product(const std::vector<std::size_t>& dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

namespace {

void check_dims(const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw ArgError("tensor must have order >= 1");
  for (std::size_t d : dims)
    if (d == 0) throw ArgError("tensor dims must be >= 1");
}

}  // namespace

DenseTensor::DenseTensor(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  check_dims(dims_);
  values_.assign(dim_product(dims_), 0.0);
}

DenseTensor::DenseTensor(std::vector<std::size_t> dims, Vector values)
    : dims_(std::move(dims)), values_(std::move(values)) {
  check_dims(dims_);
  if (values_.size() != dim_product(dims_))
    throw DimError("tensor value count does not match dim product");
  if (!all_finite(values_)) throw ArgError("tensor contains non-finite values");
}

std::size_t DenseTensor::offset(const std::vector<std::size_t>& index) const {
  if (index.size() != dims_.size()) throw DimError("index order mismatch");
  std::size_t off = 0, stride = 1;
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (index[j] >= dims_[j]) throw ArgError("tensor index out of range");
    off += index[j] * stride;
    stride *= dims_[j];
  }
  return off;
}

double DenseTensor::at(const std::vector<std::size_t>& index) const {
  return values_[offset(index)];
}

double& DenseTensor::at(const std::vector<std::size_t>& index) {
  return values_[offset(index)];
}

double inner_product(const DenseTensor& a, const DenseTensor& b) {
  if (a.dims() != b.dims()) throw DimError("inner_product: shape mismatch");
  return dot(a.values(), b.values());
}

double frobenius_norm(const DenseTensor& a) {
  return std::sqrt(inner_product(a, a));
}

DenseTensor outer_product(const std::vector<Vector>& vs) {
  if (vs.empty()) throw ArgError("outer_product: empty vector list");
  std::vector<std::size_t> dims;
  dims.reserve(vs.size());
  for (const Vector& v : vs) {
    if (v.empty()) throw ArgError("outer_product: empty vector");
    dims.push_back(v.size());
  }
  DenseTensor t(dims);
  const std::size_t total = t.value_count();
  std::vector<std::size_t> idx(dims.size(), 0);
  for (std::size_t off = 0; off < total; ++off) {
    double prod = 1.0;
    for (std::size_t j = 0; j < dims.size(); ++j) prod *= vs[j][idx[j]];
    t.values()[off] = prod;
    for (std::size_t j = 0; j < dims.size(); ++j) {
      if (++idx[j] < dims[j]) break;
      idx[j] = 0;
    }
  }
  return t;
}

Matrix unfold(const DenseTensor& a, std::size_t mode) {
  const std::size_t m = a.order();
  if (mode >= m) throw ArgError("unfold: mode out of range");

  // J_k: column stride of index k (product of dims before k, skipping mode)
  std::vector<std::size_t> col_stride(m, 0);
  std::size_t acc = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (k == mode) continue;
    col_stride[k] = acc;
    acc *= a.dim(k);
  }

  Matrix out(a.dim(mode), acc);
  std::vector<std::size_t> idx(m, 0);
  const std::size_t total = a.value_count();
  std::size_t col = 0;
  for (std::size_t off = 0; off < total; ++off) {
    out(idx[mode], col) = a.values()[off];
    for (std::size_t j = 0; j < m; ++j) {
      ++idx[j];
      if (j != mode) col += col_stride[j];
      if (idx[j] < a.dim(j)) break;
      if (j != mode) col -= col_stride[j] * a.dim(j);
      idx[j] = 0;
    }
  }
  return out;
}

}  // namespace lnps
