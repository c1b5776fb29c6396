#pragma once

// shared generators for the test suites

#include <cstdint>
#include <vector>

#include "lnps/cp.hpp"
#include "lnps/linalg.hpp"
#include "lnps/rng.hpp"
#include "lnps/tensor.hpp"

namespace testsupport {

inline lnps::DenseTensor random_tensor(const std::vector<std::size_t>& dims,
                                       lnps::Rng& rng) {
  lnps::DenseTensor t(dims);
  for (double& v : t.values()) v = rng.normal();
  return t;
}

inline lnps::Matrix random_matrix(std::size_t rows, std::size_t cols, lnps::Rng& rng) {
  lnps::Matrix m(rows, cols);
  for (double& v : m.data()) v = rng.normal();
  return m;
}

inline lnps::CpFactors random_factors(const std::vector<std::size_t>& dims,
                                      std::size_t rank, lnps::Rng& rng) {
  std::vector<lnps::Matrix> fs;
  fs.reserve(dims.size());
  for (std::size_t d : dims) fs.push_back(random_matrix(d, rank, rng));
  return lnps::CpFactors(std::move(fs));
}

// random symmetric positive semidefinite matrix R^T R (full rank a.s.)
inline lnps::Matrix random_spd(std::size_t n, lnps::Rng& rng) {
  lnps::Matrix r = random_matrix(n, n, rng);
  return lnps::matmul_tn(r, r);
}

inline double rel_err(double got, double want) {
  const double denom = std::abs(want) > 1e-300 ? std::abs(want) : 1.0;
  return std::abs(got - want) / denom;
}

inline double max_abs_diff(const lnps::Matrix& a, const lnps::Matrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  return d;
}

inline double rel_frob_diff(const lnps::Matrix& a, const lnps::Matrix& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a.data()[i] - b.data()[i];
    num += d * d;
    den += b.data()[i] * b.data()[i];
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace testsupport
