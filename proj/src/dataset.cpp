#include "lnps/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lnps/binio.hpp"
#include "lnps/errors.hpp"
#include "lnps/rng.hpp"
#include "lnps/warnings.hpp"

namespace lnps {

std::size_t TensorDataset::positives() const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 1));
}

std::size_t TensorDataset::negatives() const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), -1));
}

void TensorDataset::validate() const {
  if (samples.empty()) throw DataError("dataset: no samples");
  if (labels.size() != samples.size())
    throw DataError("dataset: label/sample count mismatch");
  for (int l : labels)
    if (l != 1 && l != -1) throw DataError("dataset: label outside {-1, +1}");
  for (const DenseTensor& t : samples)
    if (t.dims() != dims) throw DataError("dataset: sample shape mismatch");
}

TrainingSet TensorDataset::to_training_set() const {
  validate();
  TrainingSet ts;
  for (std::size_t i = 0; i < samples.size(); ++i)
    (labels[i] == 1 ? ts.positives : ts.negatives).push_back(samples[i]);
  return ts;
}

TensorDataset TensorDataset::subset(const std::vector<std::size_t>& indices) const {
  TensorDataset out;
  out.dims = dims;
  out.labels.reserve(indices.size());
  out.samples.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= samples.size()) throw ArgError("dataset subset: index out of range");
    out.labels.push_back(labels[i]);
    out.samples.push_back(samples[i]);
  }
  return out;
}

const std::vector<std::size_t>& FoldPlan::test_indices(std::size_t repeat,
                                                       std::size_t fold) const {
  return assignments.at(repeat).at(fold);
}

std::vector<std::size_t> FoldPlan::train_indices(std::size_t repeat, std::size_t fold,
                                                 std::size_t count) const {
  std::vector<char> in_test(count, 0);
  for (std::size_t i : test_indices(repeat, fold)) in_test.at(i) = 1;
  std::vector<std::size_t> train;
  train.reserve(count - test_indices(repeat, fold).size());
  for (std::size_t i = 0; i < count; ++i)
    if (!in_test[i]) train.push_back(i);
  return train;
}

namespace {

constexpr char kMagic[4] = {'T', 'N', 'S', 'D'};
constexpr std::uint32_t kVersion = 1;

}  // namespace

void write_tds(const TensorDataset& ds, std::ostream& out) {
  ds.validate();
  out.write(kMagic, 4);
  binio::write_u32(out, kVersion);
  binio::write_u32(out, static_cast<std::uint32_t>(ds.dims.size()));
  for (std::size_t d : ds.dims) binio::write_u32(out, static_cast<std::uint32_t>(d));
  binio::write_u32(out, static_cast<std::uint32_t>(ds.count()));
  for (int l : ds.labels) binio::write_i8(out, static_cast<std::int8_t>(l));

  const std::size_t header = 16 + 4 * ds.dims.size() + ds.count();
  for (std::size_t pad = (8 - header % 8) % 8; pad > 0; --pad)
    binio::write_i8(out, 0);

  for (const DenseTensor& t : ds.samples)
    for (double v : t.values()) binio::write_f64(out, v);
  if (!out) throw DataError("write_tds: write failure");
}

TensorDataset read_tds(std::istream& in) {
  binio::Reader r(in);
  char magic[4];
  r.read_bytes(magic, 4, "magic");
  if (!std::equal(magic, magic + 4, kMagic)) throw FormatError("read_tds: bad magic", 0);
  const std::uint32_t version = r.read_u32("version");
  if (version != kVersion) throw FormatError("read_tds: unsupported version", 4);
  const std::uint32_t order = r.read_u32("order");
  if (order == 0) throw FormatError("read_tds: zero order", 8);

  TensorDataset ds;
  ds.dims.resize(order);
  for (std::uint32_t j = 0; j < order; ++j) {
    const std::size_t at = r.offset();
    ds.dims[j] = r.read_u32("dim");
    if (ds.dims[j] == 0) throw FormatError("read_tds: zero dim", at);
  }
  const std::size_t count_at = r.offset();
  const std::uint32_t count = r.read_u32("count");
  if (count == 0) throw FormatError("read_tds: zero sample count", count_at);

  ds.labels.resize(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::size_t at = r.offset();
    const int l = r.read_i8("label");
    if (l != 1 && l != -1)
      throw DataError("read_tds: label outside {-1, +1} at byte offset " +
                      std::to_string(at));
    ds.labels[i] = l;
  }

  for (std::size_t pad = (8 - r.offset() % 8) % 8; pad > 0; --pad) r.read_i8("padding");

  const std::size_t per_sample = dim_product(ds.dims);
  ds.samples.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    Vector values(per_sample);
    const std::size_t at = r.offset();
    for (std::size_t p = 0; p < per_sample; ++p) values[p] = r.read_f64("value");
    if (!all_finite(values))
      throw DataError("read_tds: non-finite sample values at byte offset " +
                      std::to_string(at));
    ds.samples.emplace_back(ds.dims, std::move(values));
  }
  return ds;
}

void write_tds_file(const TensorDataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("write_tds: cannot open " + path);
  write_tds(ds, out);
}

TensorDataset read_tds_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("read_tds: cannot open " + path);
  return read_tds(in);
}

TensorDataset read_csv(std::istream& in, const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw ArgError("read_csv: dims required");
  const std::size_t per_sample = dim_product(dims);

  TensorDataset ds;
  ds.dims = dims;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string tok;
    std::vector<double> fields;
    while (std::getline(row, tok, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used])))
          ++used;
        if (used != tok.size()) throw std::invalid_argument(tok);
        fields.push_back(v);
      } catch (const std::exception&) {
        throw DataError("read_csv: unparsable field '" + tok + "'", lineno);
      }
    }
    if (fields.size() != per_sample + 1)
      throw DataError("read_csv: expected " + std::to_string(per_sample + 1) +
                          " fields, got " + std::to_string(fields.size()),
                      lineno);
    if (fields[0] != 1.0 && fields[0] != -1.0)
      throw DataError("read_csv: label must be +1 or -1", lineno);
    ds.labels.push_back(static_cast<int>(fields[0]));
    ds.samples.emplace_back(dims, Vector(fields.begin() + 1, fields.end()));
  }
  if (ds.samples.empty()) throw DataError("read_csv: no data rows");
  return ds;
}

TensorDataset read_csv_file(const std::string& path,
                            const std::vector<std::size_t>& dims) {
  std::ifstream in(path);
  if (!in) throw DataError("read_csv: cannot open " + path);
  return read_csv(in, dims);
}

TensorDataset generate_synthetic(const std::vector<std::size_t>& dims,
                                 std::size_t m1, std::size_t m2,
                                 double separation, double noise,
                                 std::uint64_t seed) {
  if (dims.empty()) throw ArgError("generate_synthetic: dims required");
  if (m1 < 1 || m2 < 1) throw ArgError("generate_synthetic: need m1, m2 >= 1");
  if (separation < 0.0) throw ArgError("generate_synthetic: separation must be >= 0");

  Rng rng(seed);
  // one independent rank-one mean direction per class; antipodal shared
  // directions would make the two tensorplanes mirror images of each other
  auto draw_rank_one = [&]() {
    std::vector<Vector> axes;
    axes.reserve(dims.size());
    for (std::size_t d : dims) {
      Vector v(d);
      for (double& x : v) x = rng.normal();
      axes.push_back(std::move(v));
    }
    return outer_product(axes);
  };
  const DenseTensor mean_pos = draw_rank_one();
  const DenseTensor mean_neg = draw_rank_one();

  TensorDataset ds;
  ds.dims = dims;
  const std::size_t per_sample = mean_pos.value_count();
  auto emit = [&](const DenseTensor& shape, double sign, std::size_t count,
                  int label) {
    for (std::size_t i = 0; i < count; ++i) {
      Vector values(per_sample);
      for (std::size_t p = 0; p < per_sample; ++p)
        values[p] = sign * 0.5 * separation * shape.values()[p] +
                    noise * rng.normal();
      ds.samples.emplace_back(dims, std::move(values));
      ds.labels.push_back(label);
    }
  };
  emit(mean_pos, +1.0, m1, +1);
  emit(mean_neg, -1.0, m2, -1);
  return ds;
}

FoldPlan make_folds(const TensorDataset& ds, std::size_t k, std::size_t repeats,
                    std::uint64_t seed) {
  ds.validate();
  if (k < 2) throw ArgError("make_folds: k must be >= 2");
  if (k > ds.count()) throw ArgError("make_folds: k exceeds sample count");
  if (repeats < 1) throw ArgError("make_folds: repeats must be >= 1");

  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < ds.count(); ++i)
    (ds.labels[i] == 1 ? pos : neg).push_back(i);
  if (pos.size() < k || neg.size() < k)
    warn("make_folds: a class has fewer than k members, folds will miss it");

  FoldPlan plan;
  plan.folds = k;
  plan.repeats = repeats;
  plan.seed = seed;
  plan.assignments.resize(repeats);

  for (std::size_t rep = 0; rep < repeats; ++rep) {
    Rng rng(seed * 1000003ull + rep);
    plan.assignments[rep].assign(k, {});
    for (std::vector<std::size_t> cls : {pos, neg}) {
      for (std::size_t i = cls.size(); i > 1; --i)
        std::swap(cls[i - 1], cls[rng.index(i)]);
      for (std::size_t p = 0; p < cls.size(); ++p)
        plan.assignments[rep][p % k].push_back(cls[p]);
    }
  }
  return plan;
}

}  // namespace lnps
