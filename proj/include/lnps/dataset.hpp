#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lnps/model.hpp"
#include "lnps/tensor.hpp"

namespace lnps {

/// Labeled collection of same-shaped tensors with a bit-exact binary
/// container format (magic "TNSD").
struct TensorDataset {
  std::vector<std::size_t> dims;
  std::vector<int> labels;  // +1 / -1, parallel to samples
  std::vector<DenseTensor> samples;

  std::size_t count() const { return samples.size(); }
  std::size_t positives() const;
  std::size_t negatives() const;

  void validate() const;

  /// Split into the trainer's positives-first representation.
  TrainingSet to_training_set() const;
  /// Subset by sample indices (order preserved).
  TensorDataset subset(const std::vector<std::size_t>& indices) const;
};

/// Stratified k-fold plan over a dataset, repeated with fresh shuffles.
/// Within each repeat the folds partition the sample indices exactly once
/// and per-fold class counts differ from proportional by at most one.
struct FoldPlan {
  std::size_t folds = 0;
  std::size_t repeats = 0;
  std::uint64_t seed = 0;
  // assignments[repeat][fold] = test indices of that fold
  std::vector<std::vector<std::vector<std::size_t>>> assignments;

  const std::vector<std::size_t>& test_indices(std::size_t repeat,
                                               std::size_t fold) const;
  std::vector<std::size_t> train_indices(std::size_t repeat, std::size_t fold,
                                         std::size_t count) const;
};

/// TNSD v1: magic, version u32, order u32, dims order x u32, count u32,
/// labels count x i8, zero padding to the next 8-byte file offset, then
/// count * prod(dims) f64 values (little-endian, fastest-first per sample).
void write_tds(const TensorDataset& ds, std::ostream& out);
TensorDataset read_tds(std::istream& in);
void write_tds_file(const TensorDataset& ds, const std::string& path);
TensorDataset read_tds_file(const std::string& path);

/// CSV rows "label,v1,...,vN" with N = prod(dims), values filled in
/// fastest-first order. Throws DataError naming the offending line.
TensorDataset read_csv(std::istream& in, const std::vector<std::size_t>& dims);
TensorDataset read_csv_file(const std::string& path,
                            const std::vector<std::size_t>& dims);

/// Two-class synthetic data: class means are +-(separation/2) times one
/// seeded unit-norm rank-one tensor, plus elementwise Gaussian noise.
/// Pure function of its arguments.
TensorDataset generate_synthetic(const std::vector<std::size_t>& dims,
                                 std::size_t m1, std::size_t m2,
                                 double separation, double noise,
                                 std::uint64_t seed);

/// Stratified folds: per repeat, a seeded shuffle within each class
/// followed by round-robin fold assignment. The per-repeat stream is
/// seeded with seed * 1000003 + repeat. Emits a warning when a class has
/// fewer than k members.
FoldPlan make_folds(const TensorDataset& ds, std::size_t k, std::size_t repeats,
                    std::uint64_t seed);

}  // namespace lnps
