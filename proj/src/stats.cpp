#include "lnps/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "lnps/errors.hpp"

namespace lnps {

void ResultTable::validate() const {
  if (datasets.empty() || classifiers.empty())
    throw ArgError("result table: empty axis");
  if (cells.size() != datasets.size()) throw DimError("result table: row mismatch");
  for (const auto& row : cells)
    if (row.size() != classifiers.size())
      throw DimError("result table: column mismatch");
}

Vector RankTable::average_ranks() const {
  Vector avg(classifiers.size(), 0.0);
  for (const auto& row : ranks)
    for (std::size_t j = 0; j < avg.size(); ++j) avg[j] += row[j];
  for (double& v : avg) v /= static_cast<double>(ranks.size());
  return avg;
}

double accuracy(std::size_t tc, std::size_t fc) {
  if (tc + fc == 0) throw ArgError("accuracy: no outcomes counted");
  return static_cast<double>(tc) / static_cast<double>(tc + fc);
}

Vector rank_row(const Vector& values, bool higher_is_better) {
  const std::size_t k = values.size();
  if (k < 2) throw ArgError("rank_row: need at least two values");

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // sort worst first so position p (1-based) is the rank
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return higher_is_better ? values[a] < values[b] : values[a] > values[b];
  });

  Vector ranks(k, 0.0);
  std::size_t i = 0;
  while (i < k) {
    std::size_t j = i;
    while (j + 1 < k && values[order[j + 1]] == values[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + 1 + j + 1);
    for (std::size_t p = i; p <= j; ++p) ranks[order[p]] = avg;
    i = j + 1;
  }
  return ranks;
}

namespace {

// regularized lower incomplete gamma P(s, x) by series expansion
double gamma_p_series(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  for (int n = 1; n < 1000; ++n) {
    term *= x / (s + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// regularized upper incomplete gamma Q(s, x) by continued fraction
double gamma_q_cf(double s, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int n = 1; n < 1000; ++n) {
    const double an = -n * (n - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) break;
  }
  return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

}  // namespace

double chi_square_upper_tail(double x, std::size_t dof) {
  if (dof == 0) throw ArgError("chi_square_upper_tail: dof must be >= 1");
  if (x <= 0.0) return 1.0;
  const double s = 0.5 * static_cast<double>(dof);
  const double half_x = 0.5 * x;
  if (half_x < s + 1.0) return 1.0 - gamma_p_series(s, half_x);
  return gamma_q_cf(s, half_x);
}

FriedmanResult friedman_chi2(const Vector& avg_ranks, std::size_t n_datasets) {
  const std::size_t k = avg_ranks.size();
  if (k < 2) throw ArgError("friedman_chi2: need at least two classifiers");
  if (n_datasets < 1) throw ArgError("friedman_chi2: need at least one dataset");

  const double kd = static_cast<double>(k);
  double sum_sq = 0.0;
  for (double r : avg_ranks) sum_sq += r * r;
  FriedmanResult out;
  out.chi2 = 12.0 * static_cast<double>(n_datasets) / (kd * (kd + 1.0)) *
             (sum_sq - kd * (kd + 1.0) * (kd + 1.0) / 4.0);
  out.chi2 = std::max(out.chi2, 0.0);
  out.dof = k - 1;
  out.p = out.chi2 == 0.0 ? 1.0 : chi_square_upper_tail(out.chi2, out.dof);
  return out;
}

namespace {

// critical values of the Studentized range statistic divided by sqrt(2),
// Demsar (JMLR 2006), Table 5; K = 2..10
constexpr double kQ05[] = {1.960, 2.343, 2.569, 2.728, 2.850,
                           2.949, 3.031, 3.102, 3.164};
constexpr double kQ10[] = {1.645, 2.052, 2.291, 2.459, 2.589,
                           2.693, 2.780, 2.855, 2.920};

}  // namespace

double nemenyi_cd(std::size_t k, std::size_t n, double alpha) {
  if (k < 2 || k > 10) throw ArgError("nemenyi_cd: K must be in 2..10");
  if (n < 1) throw ArgError("nemenyi_cd: N must be >= 1");
  double q;
  if (std::abs(alpha - 0.05) < 1e-12)
    q = kQ05[k - 2];
  else if (std::abs(alpha - 0.10) < 1e-12)
    q = kQ10[k - 2];
  else
    throw ArgError("nemenyi_cd: alpha must be 0.05 or 0.10");
  const double kd = static_cast<double>(k);
  return q * std::sqrt(kd * (kd + 1.0) / (6.0 * static_cast<double>(n)));
}

std::vector<WtlEntry> wtl(const ResultTable& table, const std::string& reference) {
  table.validate();
  const auto it =
      std::find(table.classifiers.begin(), table.classifiers.end(), reference);
  if (it == table.classifiers.end())
    throw ArgError("wtl: unknown reference classifier " + reference);
  const std::size_t ref = static_cast<std::size_t>(it - table.classifiers.begin());

  std::vector<WtlEntry> out;
  for (std::size_t j = 0; j < table.classifiers.size(); ++j) {
    if (j == ref) continue;
    WtlEntry e;
    e.classifier = table.classifiers[j];
    for (std::size_t d = 0; d < table.datasets.size(); ++d) {
      const double a = table.cells[d][ref].acc_mean;
      const double b = table.cells[d][j].acc_mean;
      if (std::abs(a - b) <= 1e-9)
        ++e.ties;
      else if (a > b)
        ++e.wins;
      else
        ++e.losses;
    }
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

void emit_csv(const ResultTable& table, std::ostream& out) {
  out << "dataset,classifier,acc_mean,acc_std,time_mean,time_std\n";
  for (std::size_t d = 0; d < table.datasets.size(); ++d)
    for (std::size_t c = 0; c < table.classifiers.size(); ++c) {
      const ResultCell& cell = table.cells[d][c];
      out << table.datasets[d] << ',' << table.classifiers[c] << ','
          << fmt("%.6f", cell.acc_mean) << ',' << fmt("%.6f", cell.acc_std) << ','
          << fmt("%.6f", cell.time_mean) << ',' << fmt("%.6f", cell.time_std) << '\n';
    }
}

void emit_rank_table(const RankTable& rt, const char* title, std::ostream& out) {
  out << "\n### " << title << "\n\n| Dataset |";
  for (const std::string& c : rt.classifiers) out << ' ' << c << " |";
  out << "\n|---|";
  for (std::size_t c = 0; c < rt.classifiers.size(); ++c) out << "---|";
  out << '\n';
  for (std::size_t d = 0; d < rt.datasets.size(); ++d) {
    out << "| " << rt.datasets[d] << " |";
    for (double r : rt.ranks[d]) out << ' ' << fmt("%.4f", r) << " |";
    out << '\n';
  }
  out << "| R_j |";
  for (double r : rt.average_ranks()) out << ' ' << fmt("%.4f", r) << " |";
  out << '\n';
}

void emit_markdown(const ResultTable& table, const ReportStats& stats,
                   std::ostream& out) {
  out << "## Benchmark report\n\n### Accuracy (mean" << "\xC2\xB1" << "std)\n\n";
  out << "| Dataset |";
  for (const std::string& c : table.classifiers) out << ' ' << c << " |";
  out << "\n|---|";
  for (std::size_t c = 0; c < table.classifiers.size(); ++c) out << "---|";
  out << '\n';
  for (std::size_t d = 0; d < table.datasets.size(); ++d) {
    out << "| " << table.datasets[d] << " |";
    for (const ResultCell& cell : table.cells[d])
      out << ' ' << fmt("%.4f", cell.acc_mean) << "\xC2\xB1" << fmt("%.4f", cell.acc_std)
          << " |";
    out << '\n';
  }

  out << "\n### Time seconds (mean" << "\xC2\xB1" << "std)\n\n| Dataset |";
  for (const std::string& c : table.classifiers) out << ' ' << c << " |";
  out << "\n|---|";
  for (std::size_t c = 0; c < table.classifiers.size(); ++c) out << "---|";
  out << '\n';
  for (std::size_t d = 0; d < table.datasets.size(); ++d) {
    out << "| " << table.datasets[d] << " |";
    for (const ResultCell& cell : table.cells[d])
      out << ' ' << fmt("%.4f", cell.time_mean) << "\xC2\xB1"
          << fmt("%.4f", cell.time_std) << " |";
    out << '\n';
  }

  if (!stats.note.empty()) out << '\n' << stats.note << '\n';
  if (stats.accu_ranks) emit_rank_table(*stats.accu_ranks, "Ranks (accuracy)", out);
  if (stats.time_ranks) emit_rank_table(*stats.time_ranks, "Ranks (time)", out);

  if (stats.accu_friedman) {
    out << "\n### Friedman / Nemenyi\n\n";
    out << "accuracy: chi2_F = " << fmt("%.4f", stats.accu_friedman->chi2)
        << ", dof = " << stats.accu_friedman->dof
        << ", p = " << fmt("%.6e", stats.accu_friedman->p) << '\n';
    if (stats.time_friedman)
      out << "time: chi2_F = " << fmt("%.4f", stats.time_friedman->chi2)
          << ", dof = " << stats.time_friedman->dof
          << ", p = " << fmt("%.6e", stats.time_friedman->p) << '\n';
    out << "CD(alpha = " << fmt("%.2f", stats.alpha) << ", N = " << stats.n_used
        << ") = " << fmt("%.4f", stats.cd) << '\n';
  }

  if (stats.wtl) {
    out << "\n### W/T/L of " << stats.reference << "\n\n";
    for (const WtlEntry& e : *stats.wtl)
      out << "vs " << e.classifier << ": " << e.wins << '/' << e.ties << '/'
          << e.losses << '\n';
  }
}

}  // namespace

void emit_report(const ResultTable& table, const ReportStats& stats,
                 ReportFormat format, std::ostream& out) {
  table.validate();
  if (format == ReportFormat::kCsv)
    emit_csv(table, out);
  else
    emit_markdown(table, stats, out);
  if (!out) throw DataError("emit_report: write failure");
}

}  // namespace lnps
