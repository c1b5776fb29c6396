#include "lnps/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lnps/errors.hpp"
#include "lnps/warnings.hpp"

namespace lnps {

Matrix::Matrix(std::size_t rows, std::size_t cols, Vector values)
    : rows_(rows), cols_(cols), data_(std::move(values)) {
  if (data_.size() != rows_ * cols_)
    throw DimError("matrix data length does not match rows*cols");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::column(const Vector& v) { return Matrix(v.size(), 1, v); }

bool Matrix::all_finite() const { return lnps::all_finite(data_); }

double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimError("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vector& v) { return std::sqrt(dot(v, v)); }

bool all_finite(const Vector& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) t(j, i) = a(i, j);
  return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimError("matmul: inner dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double blj = b(l, j);
      if (blj == 0.0) continue;
      for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) += a(i, l) * blj;
    }
  return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimError("matmul_tn: row mismatch");
  Matrix c(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) {
      double s = 0.0;
      for (std::size_t l = 0; l < a.rows(); ++l) s += a(l, i) * b(l, j);
      c(i, j) = s;
    }
  return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimError("matmul_nt: column mismatch");
  Matrix c(a.rows(), b.rows());
  for (std::size_t l = 0; l < a.cols(); ++l)
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const double bjl = b(j, l);
      if (bjl == 0.0) continue;
      for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) += a(i, l) * bjl;
    }
  return c;
}

Vector matvec(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw DimError("matvec: length mismatch");
  Vector y(a.rows(), 0.0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const double xj = x[j];
    if (xj == 0.0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] += a(i, j) * xj;
  }
  return y;
}

Vector matvec_t(const Matrix& a, const Vector& x) {
  if (a.rows() != x.size()) throw DimError("matvec_t: length mismatch");
  Vector y(a.cols(), 0.0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, j) * x[i];
    y[j] = s;
  }
  return y;
}

double trace(const Matrix& a) {
  const std::size_t n = std::min(a.rows(), a.cols());
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a(i, i);
  return s;
}

double frobenius(const Matrix& a) { return norm2(a.data()); }

double asymmetry(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimError("asymmetry: matrix not square");
  double amax = 0.0, dmax = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) {
      amax = std::max(amax, std::abs(a(i, j)));
      dmax = std::max(dmax, std::abs(a(i, j) - a(j, i)));
    }
  return amax == 0.0 ? 0.0 : dmax / amax;
}

Matrix symmetrize(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimError("symmetrize: matrix not square");
  Matrix s(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) s(i, j) = 0.5 * (a(i, j) + a(j, i));
  return s;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ja = 0; ja < a.cols(); ++ja)
    for (std::size_t ia = 0; ia < a.rows(); ++ia) {
      const double aij = a(ia, ja);
      if (aij == 0.0) continue;
      for (std::size_t jb = 0; jb < b.cols(); ++jb)
        for (std::size_t ib = 0; ib < b.rows(); ++ib)
          c(ia * b.rows() + ib, ja * b.cols() + jb) = aij * b(ib, jb);
    }
  return c;
}

Matrix khatri_rao(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimError("khatri_rao: column count mismatch");
  Matrix c(a.rows() * b.rows(), a.cols());
  for (std::size_t k = 0; k < a.cols(); ++k)
    for (std::size_t ia = 0; ia < a.rows(); ++ia) {
      const double av = a(ia, k);
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        c(ia * b.rows() + ib, k) = av * b(ib, k);
    }
  return c;
}

namespace {

double off_diagonal_norm(const Matrix& s) {
  double acc = 0.0;
  for (std::size_t j = 0; j < s.cols(); ++j)
    for (std::size_t i = 0; i < s.rows(); ++i)
      if (i != j) acc += s(i, j) * s(i, j);
  return std::sqrt(acc);
}

}  // namespace

EigResult sym_eig(const Matrix& s_in) {
  if (s_in.rows() != s_in.cols()) throw ArgError("sym_eig: matrix not square");
  if (asymmetry(s_in) > 1e-10) throw ArgError("sym_eig: matrix not symmetric");

  const std::size_t n = s_in.rows();
  Matrix s = symmetrize(s_in);
  Matrix q = Matrix::identity(n);
  const double tol = 1e-12 * frobenius(s);

  for (int sweep = 0; sweep < 100 && off_diagonal_norm(s) > tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t r = p + 1; r < n; ++r) {
        const double spr = s(p, r);
        if (spr == 0.0) continue;
        const double theta = (s(r, r) - s(p, p)) / (2.0 * spr);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double skp = s(k, p), skr = s(k, r);
          s(k, p) = c * skp - sn * skr;
          s(k, r) = sn * skp + c * skr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double spk = s(p, k), srk = s(r, k);
          s(p, k) = c * spk - sn * srk;
          s(r, k) = sn * spk + c * srk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double qkp = q(k, p), qkr = q(k, r);
          q(k, p) = c * qkp - sn * qkr;
          q(k, r) = sn * qkp + c * qkr;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return s(a, a) > s(b, b); });

  EigResult out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = s(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = q(i, order[j]);
  }
  return out;
}

SqrtPair sym_inv_sqrt(const Matrix& s, double floor_ratio) {
  if (floor_ratio <= 0.0) throw ArgError("sym_inv_sqrt: floor_ratio must be positive");
  EigResult eig = sym_eig(s);
  const std::size_t n = s.rows();
  const double lmax = eig.values.empty() ? 0.0 : eig.values.front();

  if (lmax <= 0.0) {
    warn("sym_inv_sqrt: degenerate (non-positive) spectrum, returning identities");
    return {Matrix::identity(n), Matrix::identity(n)};
  }

  const double floor = floor_ratio * lmax;
  SqrtPair out{Matrix(n, n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    const double lam = std::max(eig.values[j], floor);
    const double rt = std::sqrt(lam);
    for (std::size_t c = 0; c < n; ++c) {
      const double qc = eig.vectors(c, j);
      for (std::size_t r = 0; r < n; ++r) {
        const double qr = eig.vectors(r, j);
        out.half(r, c) += qr * rt * qc;
        out.inv_half(r, c) += qr * (1.0 / rt) * qc;
      }
    }
  }
  return out;
}

namespace {

// lower-triangular Cholesky, true on success
bool cholesky(Matrix& a) {
  const std::size_t n = a.rows();
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    const double lj = std::sqrt(d);
    a(j, j) = lj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
      a(i, j) = s / lj;
    }
  }
  return true;
}

void chol_solve_inplace(const Matrix& l, Vector& x) {
  const std::size_t n = l.rows();
  for (std::size_t i = 0; i < n; ++i) {
    double s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x[k];
    x[i] = s / l(i, i);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = x[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * x[k];
    x[ii] = s / l(ii, ii);
  }
}

}  // namespace

Matrix spd_solve(const Matrix& s, const Matrix& b) {
  if (s.rows() != s.cols()) throw ArgError("spd_solve: matrix not square");
  if (s.rows() != b.rows()) throw DimError("spd_solve: rhs row mismatch");

  const std::size_t n = s.rows();
  const double diag_scale = trace(s) / static_cast<double>(n);
  const double jitter_cap = 1e-4 * diag_scale;

  Matrix l;
  double jitter = 0.0;
  bool ok = false;
  while (true) {
    l = s;
    if (jitter > 0.0)
      for (std::size_t i = 0; i < n; ++i) l(i, i) += jitter;
    if (cholesky(l)) {
      ok = true;
      break;
    }
    if (jitter == 0.0)
      jitter = 1e-12 * diag_scale;
    else
      jitter *= 2.0;
    if (!(jitter > 0.0) || jitter > jitter_cap) break;
  }
  if (!ok) throw NumericError("spd_solve: factorization failed at jitter cap");

  Matrix x(b.rows(), b.cols());
  Vector col(n);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = b(i, j);
    chol_solve_inplace(l, col);
    // one refinement pass against the unjittered matrix
    Vector resid(n);
    for (std::size_t i = 0; i < n; ++i) {
      double r = b(i, j);
      for (std::size_t k = 0; k < n; ++k) r -= s(i, k) * col[k];
      resid[i] = r;
    }
    chol_solve_inplace(l, resid);
    for (std::size_t i = 0; i < n; ++i) x(i, j) = col[i] + resid[i];
  }
  return x;
}

Vector spd_solve(const Matrix& s, const Vector& b) {
  Matrix x = spd_solve(s, Matrix::column(b));
  return x.data();
}

}  // namespace lnps
