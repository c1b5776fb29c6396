// Command-line front end: dataset synthesis/conversion, training,
// prediction, cross-validation, benchmarking, and rank statistics.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lnps/dataset.hpp"
#include "lnps/errors.hpp"
#include "lnps/model.hpp"
#include "lnps/stats.hpp"
#include "lnps/svm.hpp"
#include "lnps/tensor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw lnps::ArgError("bad --dims value '" + tok + "'");
    }
    if (used != tok.size() || v < 1)
      throw lnps::ArgError("bad --dims value '" + tok + "'");
    dims.push_back(static_cast<std::size_t>(v));
  }
  if (dims.empty()) throw lnps::ArgError("--dims must name at least one mode");
  return dims;
}

std::string dims_to_string(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(dims[i]);
  }
  return s;
}

std::string dataset_label(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

struct HyperFlags {
  lnps::Hyperparams hyper;
  double svm_c = 1.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--rank", hyper.rank, "CP rank of both weight tensors");
    cmd->add_option("--c1", hyper.c1, "regularization weight, plane 1");
    cmd->add_option("--c2", hyper.c2, "regularization weight, plane 2");
    cmd->add_option("--c3", hyper.c3, "slack penalty, plane 1");
    cmd->add_option("--c4", hyper.c4, "slack penalty, plane 2");
    cmd->add_option("--l1", hyper.lambda1, "margin variance weight, plane 1");
    cmd->add_option("--l2", hyper.lambda2, "margin variance weight, plane 2");
    cmd->add_option("--l3", hyper.lambda3, "margin mean weight, plane 1");
    cmd->add_option("--l4", hyper.lambda4, "margin mean weight, plane 2");
    cmd->add_option("--eps", hyper.eps, "relative-change stopping threshold");
    cmd->add_option("--max-iter", hyper.max_outer, "outer iteration cap");
    cmd->add_option("--ridge", hyper.ridge, "relative ridge added to G");
    cmd->add_option("--seed", hyper.seed, "RNG seed");
    cmd->add_option("--svm-c", svm_c, "penalty C of the svm baseline");
  }
};

// ---------------------------------------------------------------------------
// cross-validation driver shared by crossval and bench

struct CvOutcome {
  double acc_mean = 0.0, acc_std = 0.0;
  double time_mean = 0.0, time_std = 0.0;
};

void mean_std(const std::vector<double>& xs, double& mean, double& std_out) {
  mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  std_out = std::sqrt(var / static_cast<double>(xs.size()));
}

CvOutcome run_crossval(const lnps::TensorDataset& ds, const std::string& classifier,
                       const HyperFlags& hf, std::size_t folds, std::size_t repeats,
                       std::uint64_t seed) {
  lnps::FoldPlan plan = lnps::make_folds(ds, folds, repeats, seed);
  std::vector<double> repeat_accs;
  std::vector<double> fold_times;

  for (std::size_t rep = 0; rep < repeats; ++rep) {
    std::size_t tc = 0, fc = 0;
    for (std::size_t fold = 0; fold < folds; ++fold) {
      const std::vector<std::size_t>& test = plan.test_indices(rep, fold);
      if (test.empty()) continue;
      lnps::TensorDataset train_ds =
          ds.subset(plan.train_indices(rep, fold, ds.count()));
      lnps::TensorDataset test_ds = ds.subset(test);

      const auto t0 = std::chrono::steady_clock::now();
      std::vector<int> predicted(test_ds.count());
      if (classifier == "ldm-npstm") {
        lnps::Hyperparams h = hf.hyper;
        h.seed = hf.hyper.seed * 1000003ull + rep * folds + fold;
        lnps::ModelPair model = lnps::train(train_ds.to_training_set(), h);
        for (std::size_t i = 0; i < test_ds.count(); ++i)
          predicted[i] = lnps::decide(model, test_ds.samples[i]);
      } else if (classifier == "svm") {
        std::vector<lnps::Vector> feats(train_ds.count());
        for (std::size_t i = 0; i < train_ds.count(); ++i)
          feats[i] = lnps::flatten(train_ds.samples[i]);
        lnps::LinearSvmModel model =
            lnps::train_svm(feats, train_ds.labels, hf.svm_c);
        for (std::size_t i = 0; i < test_ds.count(); ++i)
          predicted[i] = lnps::predict_svm(model, lnps::flatten(test_ds.samples[i]));
      } else {
        throw lnps::ArgError("unknown classifier '" + classifier + "'");
      }
      const auto t1 = std::chrono::steady_clock::now();
      fold_times.push_back(std::chrono::duration<double>(t1 - t0).count());

      for (std::size_t i = 0; i < test_ds.count(); ++i)
        (predicted[i] == test_ds.labels[i] ? tc : fc) += 1;
    }
    repeat_accs.push_back(lnps::accuracy(tc, fc));
  }

  CvOutcome out;
  mean_std(repeat_accs, out.acc_mean, out.acc_std);
  mean_std(fold_times, out.time_mean, out.time_std);
  return out;
}

// ---------------------------------------------------------------------------
// subcommand configs

struct SynthArgs {
  std::string dims_text, out_path;
  std::size_t m1 = 20, m2 = 20;
  double sep = 3.0, noise = 1.0;
  std::uint64_t seed = 0;
};

struct ConvertArgs {
  std::string csv_path, dims_text, out_path;
};

struct TrainArgs {
  std::string data_path, model_path;
  HyperFlags hf;
};

struct PredictArgs {
  std::string model_path, data_path;
  bool ignore_labels = false;
};

struct CrossvalArgs {
  std::string data_path, classifier = "ldm-npstm";
  std::size_t folds = 10, repeats = 10;
  HyperFlags hf;
};

struct BenchArgs {
  std::vector<std::string> data_paths;
  std::string classifiers_text = "ldm-npstm,svm";
  std::size_t folds = 10, repeats = 10;
  HyperFlags hf;
  bool grid = false;
  std::string grid_params = "c12,c34,l12,l34";
  std::size_t grid_folds = 3;
  std::size_t stats_n = 0;  // 0: use dataset count
  double alpha = 0.05;
  std::string format = "markdown";
  std::string out_path;
};

struct StatsArgs {
  std::string csv_path;
  double alpha = 0.05;
  bool lower_better = false;
  bool ranks_given = false;
  std::size_t n_override = 0;
};

int cmd_synth(const SynthArgs& a) {
  const std::vector<std::size_t> dims = parse_dims(a.dims_text);
  lnps::TensorDataset ds =
      lnps::generate_synthetic(dims, a.m1, a.m2, a.sep, a.noise, a.seed);
  lnps::write_tds_file(ds, a.out_path);
  std::printf("wrote %s: %zu samples (%zu positive, %zu negative), dims %s\n",
              a.out_path.c_str(), ds.count(), ds.positives(), ds.negatives(),
              dims_to_string(dims).c_str());
  return kExitOk;
}

int cmd_convert(const ConvertArgs& a) {
  const std::vector<std::size_t> dims = parse_dims(a.dims_text);
  lnps::TensorDataset ds = lnps::read_csv_file(a.csv_path, dims);
  lnps::write_tds_file(ds, a.out_path);
  std::printf("wrote %s: %zu samples (%zu positive, %zu negative), dims %s\n",
              a.out_path.c_str(), ds.count(), ds.positives(), ds.negatives(),
              dims_to_string(dims).c_str());
  return kExitOk;
}

int cmd_train(const TrainArgs& a) {
  a.hf.hyper.validate();
  lnps::TensorDataset ds = lnps::read_tds_file(a.data_path);
  lnps::ModelPair model = lnps::train(ds.to_training_set(), a.hf.hyper);
  lnps::save_model_file(model, a.model_path);
  std::printf("outer_iters=%zu converged=%s objective1=%.6f objective2=%.6f\n",
              model.outer_iters, model.converged ? "yes" : "no",
              model.objective1.back(), model.objective2.back());
  std::printf("wrote %s\n", a.model_path.c_str());
  return kExitOk;
}

int cmd_predict(const PredictArgs& a) {
  lnps::ModelPair model = lnps::load_model_file(a.model_path);
  lnps::TensorDataset ds = lnps::read_tds_file(a.data_path);
  if (ds.dims != model.dims)
    throw lnps::DataError("shape mismatch: model dims " +
                          dims_to_string(model.dims) + ", data dims " +
                          dims_to_string(ds.dims));
  std::size_t tc = 0, fc = 0;
  for (std::size_t i = 0; i < ds.count(); ++i) {
    const auto [d1, d2] = lnps::plane_distances(model, ds.samples[i]);
    const int label = lnps::decide(model, ds.samples[i]);
    std::printf("%zu\t%+d\t%.6f\t%.6f\n", i, label, d1, d2);
    if (!a.ignore_labels) (label == ds.labels[i] ? tc : fc) += 1;
  }
  if (!a.ignore_labels) std::printf("ACCU = %.4f\n", lnps::accuracy(tc, fc));
  return kExitOk;
}

int cmd_crossval(const CrossvalArgs& a) {
  a.hf.hyper.validate();
  lnps::TensorDataset ds = lnps::read_tds_file(a.data_path);
  CvOutcome o = run_crossval(ds, a.classifier, a.hf, a.folds, a.repeats,
                             a.hf.hyper.seed);
  std::printf("%s: ACCU %.4f +- %.4f (folds=%zu repeats=%zu seed=%llu)\n",
              a.classifier.c_str(), o.acc_mean, o.acc_std, a.folds, a.repeats,
              static_cast<unsigned long long>(a.hf.hyper.seed));
  // timings go to stderr so stdout stays deterministic per seed
  std::fprintf(stderr, "time per fold: %.4f +- %.4f s\n", o.time_mean, o.time_std);
  return kExitOk;
}

// grid-search candidates: 2^{-5}, 2^{-3}, ..., 2^{7}
const std::vector<double>& theta_domain() {
  static const std::vector<double> d = {1.0 / 32, 1.0 / 8, 0.5, 2.0, 8.0, 32.0, 128.0};
  return d;
}

HyperFlags grid_search(const lnps::TensorDataset& ds, const std::string& classifier,
                       const HyperFlags& base, const BenchArgs& a) {
  bool vary_c12 = a.grid_params.find("c12") != std::string::npos;
  bool vary_c34 = a.grid_params.find("c34") != std::string::npos;
  bool vary_l12 = a.grid_params.find("l12") != std::string::npos;
  bool vary_l34 = a.grid_params.find("l34") != std::string::npos;
  if (classifier == "svm") {
    vary_c12 = vary_l12 = vary_l34 = false;
    vary_c34 = true;  // maps to the single C
  }

  const std::vector<double> unit = {0.0};
  auto domain_or = [&](bool vary) -> const std::vector<double>& {
    return vary ? theta_domain() : unit;
  };

  HyperFlags best = base;
  double best_acc = -1.0;
  for (double c12 : domain_or(vary_c12))
    for (double c34 : domain_or(vary_c34))
      for (double l12 : domain_or(vary_l12))
        for (double l34 : domain_or(vary_l34)) {
          HyperFlags cand = base;
          if (vary_c12) cand.hyper.c1 = cand.hyper.c2 = c12;
          if (vary_c34) {
            cand.hyper.c3 = cand.hyper.c4 = c34;
            cand.svm_c = c34;
          }
          if (vary_l12) cand.hyper.lambda1 = cand.hyper.lambda2 = l12;
          if (vary_l34) cand.hyper.lambda3 = cand.hyper.lambda4 = l34;
          CvOutcome o = run_crossval(ds, classifier, cand, a.grid_folds, 1,
                                     base.hyper.seed + 1);
          if (o.acc_mean > best_acc) {
            best_acc = o.acc_mean;
            best = cand;
          }
        }
  return best;
}

int cmd_bench(const BenchArgs& a) {
  a.hf.hyper.validate();
  if (a.data_paths.empty()) throw lnps::ArgError("bench: need at least one --data");
  if (a.format != "csv" && a.format != "markdown")
    throw lnps::ArgError("bench: --format must be csv or markdown");

  std::vector<std::string> classifiers;
  {
    std::stringstream ss(a.classifiers_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok != "ldm-npstm" && tok != "svm")
        throw lnps::ArgError("bench: unknown classifier '" + tok + "'");
      classifiers.push_back(tok);
    }
  }
  if (classifiers.empty()) throw lnps::ArgError("bench: empty classifier list");

  lnps::ResultTable table;
  table.classifiers = classifiers;
  for (const std::string& path : a.data_paths) {
    lnps::TensorDataset ds = lnps::read_tds_file(path);
    table.datasets.push_back(dataset_label(path));
    std::vector<lnps::ResultCell> row;
    for (const std::string& clf : classifiers) {
      HyperFlags hf = a.hf;
      if (a.grid) hf = grid_search(ds, clf, a.hf, a);
      CvOutcome o =
          run_crossval(ds, clf, hf, a.folds, a.repeats, a.hf.hyper.seed);
      row.push_back({o.acc_mean, o.acc_std, o.time_mean, o.time_std});
    }
    table.cells.push_back(std::move(row));
  }

  lnps::ReportStats stats;
  lnps::RankTable accu_ranks, time_ranks;
  lnps::FriedmanResult accu_fr, time_fr;
  std::vector<lnps::WtlEntry> wtl_rows;
  const std::size_t k = classifiers.size();
  const std::size_t n =
      a.stats_n ? a.stats_n : table.datasets.size();

  if (k >= 2) {
    accu_ranks.datasets = time_ranks.datasets = table.datasets;
    accu_ranks.classifiers = time_ranks.classifiers = classifiers;
    for (const auto& row : table.cells) {
      lnps::Vector accs, times;
      for (const lnps::ResultCell& cell : row) {
        accs.push_back(cell.acc_mean);
        times.push_back(cell.time_mean);
      }
      accu_ranks.ranks.push_back(lnps::rank_row(accs, true));
      time_ranks.ranks.push_back(lnps::rank_row(times, false));
    }
    accu_fr = lnps::friedman_chi2(accu_ranks.average_ranks(), n);
    time_fr = lnps::friedman_chi2(time_ranks.average_ranks(), n);
    stats.accu_ranks = &accu_ranks;
    stats.time_ranks = &time_ranks;
    stats.accu_friedman = &accu_fr;
    stats.time_friedman = &time_fr;
    stats.alpha = a.alpha;
    stats.n_used = n;
    stats.cd = lnps::nemenyi_cd(k, n, a.alpha);
    const std::string reference =
        std::find(classifiers.begin(), classifiers.end(), "ldm-npstm") !=
                classifiers.end()
            ? "ldm-npstm"
            : classifiers.front();
    wtl_rows = lnps::wtl(table, reference);
    stats.wtl = &wtl_rows;
    stats.reference = reference;
  } else {
    stats.note = "note: statistics omitted (K < 2 classifiers)";
  }

  const lnps::ReportFormat fmt =
      a.format == "csv" ? lnps::ReportFormat::kCsv : lnps::ReportFormat::kMarkdown;
  if (a.out_path.empty()) {
    lnps::emit_report(table, stats, fmt, std::cout);
  } else {
    std::ofstream out(a.out_path);
    if (!out) throw lnps::DataError("bench: cannot open " + a.out_path);
    lnps::emit_report(table, stats, fmt, out);
  }
  return kExitOk;
}

int cmd_stats(const StatsArgs& a) {
  if (std::abs(a.alpha - 0.05) > 1e-12 && std::abs(a.alpha - 0.10) > 1e-12)
    throw lnps::ArgError("stats: --alpha must be 0.05 or 0.10");

  std::ifstream in(a.csv_path);
  if (!in) throw lnps::DataError("stats: cannot open " + a.csv_path);

  std::string line;
  if (!std::getline(in, line)) throw lnps::DataError("stats: empty csv");
  std::vector<std::string> classifiers;
  {
    std::stringstream ss(line);
    std::string tok;
    bool first = true;
    while (std::getline(ss, tok, ',')) {
      if (!first) classifiers.push_back(tok);
      first = false;
    }
  }
  if (classifiers.size() < 2)
    throw lnps::DataError("stats: need at least two classifier columns");

  std::vector<std::string> names;
  std::vector<lnps::Vector> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string tok;
    std::getline(ss, tok, ',');
    names.push_back(tok);
    lnps::Vector vals;
    while (std::getline(ss, tok, ',')) {
      try {
        vals.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw lnps::DataError("stats: unparsable value '" + tok + "'", lineno);
      }
    }
    if (vals.size() != classifiers.size())
      throw lnps::DataError("stats: ragged row", lineno);
    rows.push_back(std::move(vals));
  }
  if (rows.empty()) throw lnps::DataError("stats: no data rows");

  lnps::Vector avg(classifiers.size(), 0.0);
  std::size_t n = 0;
  if (a.ranks_given) {
    if (rows.size() != 1)
      throw lnps::DataError("stats: --ranks expects exactly one row of average ranks");
    if (a.n_override == 0)
      throw lnps::ArgError("stats: --ranks requires --n (dataset count)");
    avg = rows.front();
    n = a.n_override;
  } else {
    for (std::size_t d = 0; d < rows.size(); ++d) {
      lnps::Vector r = lnps::rank_row(rows[d], !a.lower_better);
      std::printf("%s:", names[d].c_str());
      for (double v : r) std::printf(" %.4f", v);
      std::printf("\n");
      for (std::size_t j = 0; j < avg.size(); ++j) avg[j] += r[j];
    }
    for (double& v : avg) v /= static_cast<double>(rows.size());
    n = a.n_override ? a.n_override : rows.size();
  }

  std::printf("average ranks:");
  for (std::size_t j = 0; j < avg.size(); ++j)
    std::printf(" %s=%.4f", classifiers[j].c_str(), avg[j]);
  std::printf("\n");

  lnps::FriedmanResult fr = lnps::friedman_chi2(avg, n);
  std::printf("chi2_F = %.4f  dof = %zu  p = %.6e\n", fr.chi2, fr.dof, fr.p);
  std::printf("CD(alpha=%.2f, K=%zu, N=%zu) = %.4f\n", a.alpha, classifiers.size(),
              n, lnps::nemenyi_cd(classifiers.size(), n, a.alpha));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LDM-NPSTM: nonparallel support tensor machine toolkit"};
  app.require_subcommand(1);

  SynthArgs synth_args;
  CLI::App* synth = app.add_subcommand("synth", "generate a synthetic dataset");
  synth->add_option("--dims", synth_args.dims_text, "tensor dims, e.g. 4,4")->required();
  synth->add_option("--m1", synth_args.m1, "positive sample count");
  synth->add_option("--m2", synth_args.m2, "negative sample count");
  synth->add_option("--sep", synth_args.sep, "class mean separation");
  synth->add_option("--noise", synth_args.noise, "noise standard deviation");
  synth->add_option("--seed", synth_args.seed, "RNG seed");
  synth->add_option("--out", synth_args.out_path, "output .tds path")->required();

  ConvertArgs convert_args;
  CLI::App* convert = app.add_subcommand("convert", "convert csv rows to tds");
  convert->add_option("--csv", convert_args.csv_path, "input csv")->required();
  convert->add_option("--dims", convert_args.dims_text, "tensor dims")->required();
  convert->add_option("--out", convert_args.out_path, "output .tds path")->required();

  TrainArgs train_args;
  CLI::App* train = app.add_subcommand("train", "train an LDM-NPSTM model");
  train->add_option("--data", train_args.data_path, "training .tds")->required();
  train->add_option("--model", train_args.model_path, "output model path")->required();
  train_args.hf.attach(train);

  PredictArgs predict_args;
  CLI::App* predict = app.add_subcommand("predict", "classify a dataset");
  predict->add_option("--model", predict_args.model_path, "model path")->required();
  predict->add_option("--data", predict_args.data_path, "input .tds")->required();
  predict->add_flag("--ignore-labels", predict_args.ignore_labels,
                    "treat the input as unlabeled (no ACCU line)");

  CrossvalArgs cv_args;
  CLI::App* crossval = app.add_subcommand("crossval", "stratified cross-validation");
  crossval->add_option("--data", cv_args.data_path, "input .tds")->required();
  crossval->add_option("--classifier", cv_args.classifier, "ldm-npstm or svm");
  crossval->add_option("--folds", cv_args.folds, "fold count");
  crossval->add_option("--repeats", cv_args.repeats, "repeat count");
  cv_args.hf.attach(crossval);

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "benchmark classifiers over datasets");
  bench->add_option("--data", bench_args.data_paths, "input .tds (repeatable)")
      ->required();
  bench->add_option("--classifiers", bench_args.classifiers_text,
                    "comma list from {ldm-npstm, svm}");
  bench->add_option("--folds", bench_args.folds, "fold count");
  bench->add_option("--repeats", bench_args.repeats, "repeat count");
  bench->add_flag("--grid", bench_args.grid, "grid-search hyperparameters");
  bench->add_option("--grid-params", bench_args.grid_params,
                    "tied pairs to vary: c12,c34,l12,l34");
  bench->add_option("--grid-folds", bench_args.grid_folds, "inner CV folds");
  bench->add_option("--stats-n", bench_args.stats_n,
                    "dataset count N for the Friedman test");
  bench->add_option("--alpha", bench_args.alpha, "Nemenyi significance level");
  bench->add_option("--format", bench_args.format, "csv or markdown");
  bench->add_option("--out", bench_args.out_path, "report path (default stdout)");
  bench_args.hf.attach(bench);

  StatsArgs stats_args;
  CLI::App* stats = app.add_subcommand("stats", "Friedman / Nemenyi over a csv");
  stats->add_option("--csv", stats_args.csv_path, "metric csv")->required();
  stats->add_option("--alpha", stats_args.alpha, "0.05 or 0.10");
  stats->add_flag("--lower-better", stats_args.lower_better,
                  "smaller metric values are better");
  stats->add_flag("--ranks", stats_args.ranks_given,
                  "input row already holds average ranks");
  stats->add_option("--n", stats_args.n_override, "dataset count N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (synth->parsed()) return cmd_synth(synth_args);
    if (convert->parsed()) return cmd_convert(convert_args);
    if (train->parsed()) return cmd_train(train_args);
    if (predict->parsed()) return cmd_predict(predict_args);
    if (crossval->parsed()) return cmd_crossval(cv_args);
    if (bench->parsed()) return cmd_bench(bench_args);
    if (stats->parsed()) return cmd_stats(stats_args);
  } catch (const lnps::ArgError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const lnps::NumericError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  } catch (const lnps::FormatError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  } catch (const lnps::DataError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  } catch (const lnps::DimError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  }
  return kExitUsage;
}
