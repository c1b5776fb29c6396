#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "lnps/dataset.hpp"
#include "lnps/errors.hpp"
#include "lnps/warnings.hpp"
#include "support.hpp"

using namespace lnps;

namespace {

std::string g_last_warning;
void capture_warning(const std::string& msg) { g_last_warning = msg; }

std::string to_bytes(const TensorDataset& ds) {
  std::ostringstream out;
  write_tds(ds, out);
  return out.str();
}

}  // namespace

TEST_CASE("tds round trip is byte identical") {
  TensorDataset ds = generate_synthetic({2, 3, 2}, 4, 3, 2.0, 1.0, 42);
  const std::string bytes = to_bytes(ds);
  std::istringstream in(bytes);
  TensorDataset back = read_tds(in);
  CHECK(back.dims == ds.dims);
  CHECK(back.labels == ds.labels);
  for (std::size_t i = 0; i < ds.count(); ++i)
    CHECK(back.samples[i].values() == ds.samples[i].values());
  CHECK(to_bytes(back) == bytes);
}

TEST_CASE("tds layout of the minimal file") {
  TensorDataset ds;
  ds.dims = {1};
  ds.labels = {+1};
  ds.samples = {DenseTensor({1}, {2.0})};
  const std::string bytes = to_bytes(ds);
  // header 4+4+4+4+4 = 20, one label byte, pad to offset 24, one f64
  CHECK(bytes.size() == 32);
  CHECK(bytes.substr(0, 4) == "TNSD");
  CHECK(static_cast<unsigned char>(bytes[20]) == 1);  // the label
  for (std::size_t i = 21; i < 24; ++i) CHECK(bytes[i] == 0);
  std::istringstream in(bytes);
  TensorDataset back = read_tds(in);
  CHECK(back.samples[0].values()[0] == 2.0);
}

TEST_CASE("tds rejects bad magic, truncation, and bad labels") {
  TensorDataset ds = generate_synthetic({2}, 1, 1, 1.0, 0.5, 1);
  const std::string bytes = to_bytes(ds);

  std::istringstream wrong("XXXX" + bytes.substr(4));
  try {
    read_tds(wrong);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.offset() == 0);
  }

  std::istringstream cut(bytes.substr(0, bytes.size() - 5));
  CHECK_THROWS_AS(read_tds(cut), FormatError);

  std::string tainted = bytes;
  tainted[20] = 2;  // first label byte
  std::istringstream bad_label(tainted);
  CHECK_THROWS_AS(read_tds(bad_label), DataError);
}

TEST_CASE("csv parsing fills fastest-first") {
  std::istringstream in("1,1,2,3,4\n");
  TensorDataset ds = read_csv(in, {2, 2});
  REQUIRE(ds.count() == 1);
  CHECK(ds.labels[0] == 1);
  // row-listed values land in storage order: sample [[1,3],[2,4]]
  CHECK(ds.samples[0].at({0, 0}) == 1);
  CHECK(ds.samples[0].at({1, 0}) == 2);
  CHECK(ds.samples[0].at({0, 1}) == 3);
  CHECK(ds.samples[0].at({1, 1}) == 4);

  std::istringstream neg("-1,0,0\n");
  TensorDataset n = read_csv(neg, {2});
  CHECK(n.labels[0] == -1);
  CHECK(n.samples[0].values() == Vector{0, 0});
}

TEST_CASE("csv errors carry line numbers") {
  std::istringstream bad_label("2,1,2\n");
  try {
    read_csv(bad_label, {2});
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(e.line() == 1);
  }

  std::istringstream ragged("1,1,2\n-1,3\n");
  try {
    read_csv(ragged, {2});
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(e.line() == 2);
  }

  std::istringstream junk("1,abc,2\n");
  CHECK_THROWS_AS(read_csv(junk, {2}), DataError);
}

TEST_CASE("generate_synthetic") {
  // zero separation and zero noise collapse both classes to zero tensors
  TensorDataset flat = generate_synthetic({2, 2}, 2, 2, 0.0, 0.0, 3);
  for (const DenseTensor& t : flat.samples)
    CHECK(frobenius_norm(t) == 0.0);

  // same seed reproduces the dataset exactly
  TensorDataset a = generate_synthetic({4, 4}, 20, 20, 3.0, 1.0, 7);
  TensorDataset b = generate_synthetic({4, 4}, 20, 20, 3.0, 1.0, 7);
  for (std::size_t i = 0; i < a.count(); ++i)
    CHECK(a.samples[i].values() == b.samples[i].values());

  // regenerate the per-class mean directions from the seed; the projected
  // class gap is separation times the mean of the two rank-one norms
  Rng rng(7);
  auto redraw = [&]() {
    std::vector<Vector> axes;
    for (std::size_t d : std::vector<std::size_t>{4, 4}) {
      Vector v(d);
      for (double& x : v) x = rng.normal();
      axes.push_back(v);
    }
    return outer_product(axes);
  };
  DenseTensor dir_pos = redraw();
  DenseTensor dir_neg = redraw();
  TensorDataset clean = generate_synthetic({4, 4}, 20, 20, 3.0, 0.0, 7);
  const double pos = inner_product(clean.samples[0], dir_pos) / frobenius_norm(dir_pos);
  const double neg = inner_product(clean.samples[39], dir_neg) / frobenius_norm(dir_neg);
  const double want_gap =
      0.5 * 3.0 * (frobenius_norm(dir_pos) + frobenius_norm(dir_neg));
  CHECK(pos - neg == doctest::Approx(want_gap).epsilon(1e-12));
}

TEST_CASE("make_folds partitions and stratifies") {
  TensorDataset ds = generate_synthetic({2}, 2, 2, 1.0, 0.1, 5);
  FoldPlan plan = make_folds(ds, 2, 1, 9);
  // k=2 over 2+2 samples: every fold holds one of each class
  for (std::size_t fold = 0; fold < 2; ++fold) {
    const auto& test = plan.test_indices(0, fold);
    REQUIRE(test.size() == 2);
    int pos = 0, neg = 0;
    for (std::size_t i : test) (ds.labels[i] == 1 ? pos : neg) += 1;
    CHECK(pos == 1);
    CHECK(neg == 1);
  }

  TensorDataset big = generate_synthetic({2, 2}, 13, 9, 1.0, 0.5, 6);
  FoldPlan p2 = make_folds(big, 4, 3, 17);
  for (std::size_t rep = 0; rep < 3; ++rep) {
    std::set<std::size_t> seen;
    for (std::size_t fold = 0; fold < 4; ++fold) {
      int pos = 0, neg = 0;
      for (std::size_t i : p2.test_indices(rep, fold)) {
        CHECK(seen.insert(i).second);  // pairwise disjoint
        (big.labels[i] == 1 ? pos : neg) += 1;
      }
      // 13 positives over 4 folds: 3..4 per fold; 9 negatives: 2..3
      CHECK(pos >= 3);
      CHECK(pos <= 4);
      CHECK(neg >= 2);
      CHECK(neg <= 3);
    }
    CHECK(seen.size() == big.count());  // union covers everything
  }

  // repeats differ but the plan is reproducible
  FoldPlan p3 = make_folds(big, 4, 3, 17);
  CHECK(p3.assignments == p2.assignments);
  CHECK(p2.assignments[0] != p2.assignments[1]);

  // train indices complement the fold
  std::vector<std::size_t> train = p2.train_indices(0, 0, big.count());
  CHECK(train.size() == big.count() - p2.test_indices(0, 0).size());

  CHECK_THROWS_AS(make_folds(ds, 5, 1, 0), ArgError);  // k > count
  CHECK_THROWS_AS(make_folds(ds, 1, 1, 0), ArgError);  // k < 2

  // thin class warning
  TensorDataset thin = generate_synthetic({2}, 1, 5, 1.0, 0.1, 2);
  g_last_warning.clear();
  set_warn_handler(&capture_warning);
  make_folds(thin, 3, 1, 0);
  set_warn_handler(nullptr);
  CHECK(g_last_warning.find("fewer than k") != std::string::npos);
}

TEST_CASE("dataset validation and adapters") {
  TensorDataset ds = generate_synthetic({2, 2}, 2, 3, 1.0, 0.5, 8);
  TrainingSet ts = ds.to_training_set();
  CHECK(ts.m1() == 2);
  CHECK(ts.m2() == 3);

  TensorDataset sub = ds.subset({0, 4});
  CHECK(sub.count() == 2);
  CHECK(sub.labels[0] == 1);
  CHECK(sub.labels[1] == -1);
  CHECK(sub.samples[1].values() == ds.samples[4].values());

  TensorDataset bad = ds;
  bad.labels[0] = 0;
  CHECK_THROWS_AS(bad.validate(), DataError);
}
