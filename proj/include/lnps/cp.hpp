#pragma once

#include <cstddef>
#include <vector>

#include "lnps/linalg.hpp"
#include "lnps/tensor.hpp"

namespace lnps {

/// CP representation of a weight tensor: one I_j x R factor matrix per
/// mode, the represented tensor being the sum over r of the outer products
/// of the factor columns.
class CpFactors {
public:
  CpFactors() = default;
  explicit CpFactors(std::vector<Matrix> factors);

  std::size_t order() const { return factors_.size(); }
  std::size_t rank() const { return rank_; }
  std::vector<std::size_t> dims() const;

  const Matrix& factor(std::size_t mode) const { return factors_[mode]; }
  Matrix& factor(std::size_t mode) { return factors_[mode]; }
  const std::vector<Matrix>& factors() const { return factors_; }

private:
  std::vector<Matrix> factors_;
  std::size_t rank_ = 0;
};

/// Khatri-Rao product of all factors except the given mode, highest mode
/// first: U^(M) kr ... kr U^(j+1) kr U^(j-1) kr ... kr U^(1).
/// Shape prod_{k != j} I_k x R; for an order-1 factor set this is the
/// 1 x R all-ones row (empty product).
Matrix khatri_rao_complement(const CpFactors& f, std::size_t mode);

/// Materialize the represented tensor: sum of R rank-one outer products.
DenseTensor cp_reconstruct(const CpFactors& f);

/// Mode-j unfolding of the represented tensor without materializing it:
/// U^(j) * khatri_rao_complement(f, j)^T.
Matrix cp_unfold(const CpFactors& f, std::size_t mode);

/// <W, X> via successive mode contractions per rank-one term; never forms W.
double cp_inner(const CpFactors& f, const DenseTensor& x);

/// ||W||_F via the factor Grams: sqrt(1^T (hadamard of U^(j)^T U^(j)) 1).
double cp_frobenius(const CpFactors& f);

/// <W, W'> for two factor sets over the same shape, via Gram products.
double cp_inner_factors(const CpFactors& f, const CpFactors& g);

/// R x R Gram of the Khatri-Rao complement, formed as the Hadamard product
/// of the per-factor Grams U^(k)^T U^(k) over k != mode.
Matrix gram_complement(const CpFactors& f, std::size_t mode);

}  // namespace lnps
