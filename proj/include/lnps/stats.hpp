#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "lnps/linalg.hpp"

namespace lnps {

/// Per dataset x classifier cell of a benchmark: accuracy and wall time
/// summarized over cross-validation repeats.
struct ResultCell {
  double acc_mean = 0.0;
  double acc_std = 0.0;
  double time_mean = 0.0;
  double time_std = 0.0;
};

struct ResultTable {
  std::vector<std::string> datasets;
  std::vector<std::string> classifiers;
  std::vector<std::vector<ResultCell>> cells;  // [dataset][classifier]

  void validate() const;
};

struct RankTable {
  std::vector<std::string> datasets;
  std::vector<std::string> classifiers;
  std::vector<std::vector<double>> ranks;  // [dataset][classifier]

  Vector average_ranks() const;
};

struct FriedmanResult {
  double chi2 = 0.0;
  std::size_t dof = 0;
  double p = 1.0;
};

struct WtlEntry {
  std::string classifier;
  std::size_t wins = 0;
  std::size_t ties = 0;
  std::size_t losses = 0;
};

/// tc / (tc + fc); throws ArgError when both counts are zero.
double accuracy(std::size_t tc, std::size_t fc);

/// Fractional ranks: the best value receives rank K, the worst rank 1,
/// ties share the mean of their occupied positions. With
/// higher_is_better = false the smallest value is best (rank K).
Vector rank_row(const Vector& values, bool higher_is_better);

/// Friedman statistic over average ranks:
/// chi2 = 12N/(K(K+1)) (sum R_j^2 - K(K+1)^2/4), dof = K-1, upper-tail p.
FriedmanResult friedman_chi2(const Vector& avg_ranks, std::size_t n_datasets);

/// Upper tail of the chi-square distribution via the regularized
/// incomplete gamma function (series / continued fraction).
double chi_square_upper_tail(double x, std::size_t dof);

/// Nemenyi critical difference q_alpha(K) sqrt(K(K+1)/(6N)); alpha must be
/// 0.05 or 0.10 and K in 2..10 (embedded Studentized-range table).
double nemenyi_cd(std::size_t k, std::size_t n, double alpha);

/// Wins/ties/losses of the reference classifier against every other one,
/// comparing mean accuracies per dataset (ties within 1e-9).
std::vector<WtlEntry> wtl(const ResultTable& table, const std::string& reference);

enum class ReportFormat { kCsv, kMarkdown };

/// Optional statistics block accompanying a report.
struct ReportStats {
  const RankTable* accu_ranks = nullptr;
  const RankTable* time_ranks = nullptr;
  const FriedmanResult* accu_friedman = nullptr;
  const FriedmanResult* time_friedman = nullptr;
  double cd = 0.0;
  double alpha = 0.0;
  std::size_t n_used = 0;
  const std::vector<WtlEntry>* wtl = nullptr;
  std::string reference;
  std::string note;
};

/// Deterministic report writer. CSV emits exactly the long-format table
/// (header "dataset,classifier,acc_mean,acc_std,time_mean,time_std");
/// markdown adds rank tables, Friedman/Nemenyi numbers, and W/T/L.
void emit_report(const ResultTable& table, const ReportStats& stats,
                 ReportFormat format, std::ostream& out);

}  // namespace lnps
