#pragma once

#include <cstddef>
#include <vector>

#include "lnps/linalg.hpp"

namespace lnps {

/// Dense order-M real tensor. Values are stored with the FIRST index
/// varying fastest: entry (i_1, ..., i_M) sits at linear offset
/// i_1 + I_1*i_2 + I_1*I_2*i_3 + ...  (all indices 0-based).
class DenseTensor {
public:
  DenseTensor() = default;
  /// Zero tensor of the given shape.
  explicit DenseTensor(std::vector<std::size_t> dims);
  /// Tensor from explicit values; length must equal the dim product and
  /// every entry must be finite.
  DenseTensor(std::vector<std::size_t> dims, Vector values);

  std::size_t order() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t mode) const { return dims_[mode]; }
  std::size_t value_count() const { return values_.size(); }

  const Vector& values() const { return values_; }
  Vector& values() { return values_; }

  double at(const std::vector<std::size_t>& index) const;
  double& at(const std::vector<std::size_t>& index);
  std::size_t offset(const std::vector<std::size_t>& index) const;

private:
  std::vector<std::size_t> dims_;
  Vector values_;
};

std::size_t dim_product(const std::vector<std::size_t>& dims);

/// Sum of elementwise products; shapes must match.
double inner_product(const DenseTensor& a, const DenseTensor& b);

/// sqrt(<A, A>).
double frobenius_norm(const DenseTensor& a);

/// Outer product of one vector per mode: entry (i_1,...,i_M) is the
/// product of vs[j][i_j]. Throws ArgError on an empty list or empty vector.
DenseTensor outer_product(const std::vector<Vector>& vs);

/// Mode-n matricization (0-based mode). Entry (i_1,...,i_M) lands at row
/// i_n and column sum_{k != n} i_k * J_k with J_k the product of the
/// dims before k, skipping n. Result is I_n x prod_{k != n} I_k.
Matrix unfold(const DenseTensor& a, std::size_t mode);

}  // namespace lnps
