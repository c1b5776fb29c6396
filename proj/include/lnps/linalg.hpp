#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace lnps {

using Vector = std::vector<double>;

/// Dense column-major matrix. vec() of a matrix is its storage order, so
/// reshaping between vectors and matrices is plain bookkeeping.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  Matrix(std::size_t rows, std::size_t cols, Vector values);

  static Matrix identity(std::size_t n);
  /// Column vector view of a Vector (n x 1).
  static Matrix column(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i + rows_ * j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i + rows_ * j]; }

  const Vector& data() const { return data_; }
  Vector& data() { return data_; }

  bool all_finite() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

// vector helpers
double dot(const Vector& a, const Vector& b);
double norm2(const Vector& v);
bool all_finite(const Vector& v);

// elementary matrix algebra
Matrix transpose(const Matrix& a);
Matrix matmul(const Matrix& a, const Matrix& b);     // A * B
Matrix matmul_tn(const Matrix& a, const Matrix& b);  // A^T * B
Matrix matmul_nt(const Matrix& a, const Matrix& b);  // A * B^T
Vector matvec(const Matrix& a, const Vector& x);     // A * x
Vector matvec_t(const Matrix& a, const Vector& x);   // A^T * x
double trace(const Matrix& a);
double frobenius(const Matrix& a);
/// Largest |a_ij - a_ji| relative to max |a_ij| (0 for empty/scalar).
double asymmetry(const Matrix& a);
Matrix symmetrize(const Matrix& a);  // (A + A^T)/2

/// Kronecker product: block (i,j) of the result equals a_ij * B.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Khatri-Rao product: column k of the result is a_k kron b_k.
/// Requires matching column counts.
Matrix khatri_rao(const Matrix& a, const Matrix& b);

/// Eigendecomposition of a symmetric matrix via cyclic Jacobi sweeps
/// (off-diagonal tolerance 1e-12 * ||S||_F, at most 100 sweeps).
/// Returns eigenvalues in descending order with matching eigenvector
/// columns; S = Q diag(lambda) Q^T. Throws ArgError when S is not
/// symmetric within 1e-10 relative.
struct EigResult {
  Vector values;
  Matrix vectors;
};
EigResult sym_eig(const Matrix& s);

/// Square root and inverse square root of a symmetric PSD matrix.
/// Eigenvalues below floor_ratio * lambda_max are clamped to the floor
/// before the roots are formed. An all-zero (or non-positive) spectrum
/// degenerates to a pair of identities and emits a warning.
struct SqrtPair {
  Matrix half;      // S^{1/2}
  Matrix inv_half;  // S^{-1/2}
};
SqrtPair sym_inv_sqrt(const Matrix& s, double floor_ratio = 1e-12);

/// Solve S X = B for symmetric positive definite S via Cholesky with
/// jitter escalation (1e-12 * tr(S)/n doubling up to 1e-4 * tr(S)/n).
/// One step of iterative refinement tightens the residual. Throws
/// NumericError when the factorization fails at the jitter cap.
Matrix spd_solve(const Matrix& s, const Matrix& b);
Vector spd_solve(const Matrix& s, const Vector& b);

}  // namespace lnps
