#include "lnps/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "lnps/binio.hpp"
#include "lnps/errors.hpp"
#include "lnps/rng.hpp"
#include "lnps/warnings.hpp"

namespace lnps {

void Hyperparams::validate() const {
  if (!(c1 > 0.0 && c2 > 0.0 && c3 > 0.0 && c4 > 0.0))
    throw ArgError("hyperparams: c1..c4 must be positive");
  if (lambda1 < 0.0 || lambda2 < 0.0 || lambda3 < 0.0 || lambda4 < 0.0)
    throw ArgError("hyperparams: lambda1..lambda4 must be nonnegative");
  if (rank < 1) throw ArgError("hyperparams: rank must be >= 1");
  if (!(eps > 0.0)) throw ArgError("hyperparams: eps must be positive");
  if (max_outer < 1) throw ArgError("hyperparams: max_outer must be >= 1");
  if (ridge < 0.0) throw ArgError("hyperparams: ridge must be nonnegative");
}

const std::vector<std::size_t>& TrainingSet::dims() const {
  if (!positives.empty()) return positives.front().dims();
  if (!negatives.empty()) return negatives.front().dims();
  throw ArgError("training set: empty");
}

const DenseTensor& TrainingSet::sample(std::size_t index) const {
  return index < m1() ? positives[index] : negatives[index - m1()];
}

void TrainingSet::validate() const {
  if (positives.empty() || negatives.empty())
    throw ArgError("training set: both classes need at least one sample");
  const std::vector<std::size_t>& d = positives.front().dims();
  for (const DenseTensor& t : positives)
    if (t.dims() != d) throw DimError("training set: positive sample shape mismatch");
  for (const DenseTensor& t : negatives)
    if (t.dims() != d) throw DimError("training set: negative sample shape mismatch");
}

double margin_mean(const CpFactors& f, const std::vector<DenseTensor>& samples,
                   int label) {
  if (samples.empty()) throw ArgError("margin_mean: empty sample list");
  double s = 0.0;
  for (const DenseTensor& t : samples) s += label * cp_inner(f, t);
  return s / static_cast<double>(samples.size());
}

double margin_variance(const CpFactors& f, const std::vector<DenseTensor>& samples) {
  if (samples.empty()) throw ArgError("margin_variance: empty sample list");
  const double m = static_cast<double>(samples.size());
  double s = 0.0;
  for (const DenseTensor& t : samples) {
    const double v = cp_inner(f, t);
    s += v * v;
  }
  return (m - 1.0) / (m * m) * s;
}

namespace {

struct ProblemRoles {
  double c_reg;        // c1 or c2
  double c_slack;      // c3 or c4
  double lambda_var;   // lambda1 or lambda2
  double lambda_mean;  // lambda3 or lambda4
  int opp_label;       // -1 for problem 1, +1 for problem 2
  std::size_t own_begin, own_count;  // global sample index range of own class
  std::size_t opp_begin, opp_count;
};

ProblemRoles roles_for(int problem, const TrainingSet& ts, const Hyperparams& h) {
  if (problem == 1)
    return {h.c1, h.c3, h.lambda1, h.lambda3, -1, 0, ts.m1(), ts.m1(), ts.m2()};
  if (problem == 2)
    return {h.c2, h.c4, h.lambda2, h.lambda4, +1, ts.m1(), ts.m2(), 0, ts.m1()};
  throw ArgError("problem must be 1 or 2");
}

Matrix row_block(const Matrix& k, std::size_t begin, std::size_t count) {
  Matrix out(count, k.cols());
  for (std::size_t j = 0; j < k.cols(); ++j)
    for (std::size_t i = 0; i < count; ++i) out(i, j) = k(begin + i, j);
  return out;
}

void add_scaled(Matrix& acc, const Matrix& m, double scale) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc.data()[i] += scale * m.data()[i];
}

}  // namespace

ModeCache build_mode_cache(const CpFactors& f_own, const TrainingSet& ts,
                           std::size_t mode, int problem, const Hyperparams& hyper) {
  ts.validate();
  if (f_own.dims() != ts.dims()) throw DimError("build_mode_cache: factor/sample shape mismatch");
  if (mode >= f_own.order()) throw ArgError("build_mode_cache: mode out of range");
  const ProblemRoles pr = roles_for(problem, ts, hyper);

  ModeCache cache;
  cache.problem = problem;
  cache.mode = mode;
  cache.ucomp = khatri_rao_complement(f_own, mode);

  const Matrix a = gram_complement(f_own, mode);
  SqrtPair roots = sym_inv_sqrt(a);
  cache.a_half = std::move(roots.half);
  cache.a_inv_half = std::move(roots.inv_half);

  const std::size_t m = ts.total();
  const std::size_t rows = f_own.factor(mode).rows();
  const std::size_t rank = f_own.rank();

  cache.transformed.reserve(m);
  cache.v = Matrix(rows * rank, m);
  for (std::size_t l = 0; l < m; ++l) {
    Matrix t = matmul(matmul(unfold(ts.sample(l), mode), cache.ucomp), cache.a_inv_half);
    for (std::size_t p = 0; p < t.size(); ++p) cache.v(p, l) = t.data()[p];
    cache.transformed.push_back(std::move(t));
  }

  cache.k = matmul_tn(cache.v, cache.v);
  cache.k_own = row_block(cache.k, pr.own_begin, pr.own_count);
  cache.m_opp = row_block(cache.k, pr.opp_begin, pr.opp_count);

  const double m_opp = static_cast<double>(pr.opp_count);
  cache.g = matmul_tn(cache.k_own, cache.k_own);
  add_scaled(cache.g, cache.k, pr.c_reg);
  add_scaled(cache.g, matmul_tn(cache.m_opp, cache.m_opp),
             2.0 * pr.lambda_var * (m_opp - 1.0) / (m_opp * m_opp));
  cache.g = symmetrize(cache.g);

  double scale = trace(cache.g) / static_cast<double>(m);
  if (!(scale > 0.0)) scale = 1.0;
  cache.ridge_applied = hyper.ridge * scale;
  for (std::size_t i = 0; i < m; ++i) cache.g(i, i) += cache.ridge_applied;
  return cache;
}

namespace {

Vector opposite_labels(const ModeCache& cache) {
  Vector y(cache.m_opp.rows(), cache.problem == 1 ? -1.0 : 1.0);
  return y;
}

Vector dual_rhs(const ModeCache& cache, const Vector& alpha, double lambda_mean) {
  // (lambda/m_opp) M^T y_opp - M^T alpha
  const Vector y = opposite_labels(cache);
  const double m_opp = static_cast<double>(cache.m_opp.rows());
  Vector scaled(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    scaled[i] = lambda_mean / m_opp * y[i] - alpha[i];
  return matvec_t(cache.m_opp, scaled);
}

}  // namespace

BoxQp assemble_dual(const ModeCache& cache, const TrainingSet& ts,
                    const Hyperparams& hyper) {
  const ProblemRoles pr = roles_for(cache.problem, ts, hyper);
  const Matrix z = spd_solve(cache.g, transpose(cache.m_opp));
  BoxQp qp;
  qp.h = symmetrize(matmul(cache.m_opp, z));
  const Vector y = opposite_labels(cache);
  const double m_opp = static_cast<double>(pr.opp_count);
  Vector f = matvec(qp.h, y);
  for (double& v : f) v *= pr.lambda_mean / m_opp;
  for (double& v : f) v += 1.0;
  qp.f = std::move(f);
  qp.c = pr.c_slack;
  return qp;
}

Vector recover_beta(const ModeCache& cache, const Vector& alpha,
                    const TrainingSet& ts, const Hyperparams& hyper,
                    double* residual_out) {
  const ProblemRoles pr = roles_for(cache.problem, ts, hyper);
  if (alpha.size() != pr.opp_count) throw DimError("recover_beta: alpha length mismatch");
  const Vector rhs = dual_rhs(cache, alpha, pr.lambda_mean);
  Vector beta = spd_solve(cache.g, rhs);
  if (residual_out) {
    Vector resid = matvec(cache.g, beta);
    for (std::size_t i = 0; i < resid.size(); ++i) resid[i] -= rhs[i];
    *residual_out = norm2(resid) / (1.0 + norm2(rhs));
  }
  return beta;
}

Matrix update_mode_factor(const ModeCache& cache, const Vector& beta) {
  const Vector u_vec = matvec(cache.v, beta);
  const std::size_t rank = cache.a_inv_half.rows();
  const std::size_t rows = u_vec.size() / rank;
  Matrix u_tilde(rows, rank, u_vec);
  return matmul(u_tilde, cache.a_inv_half);
}

double primal_objective(const CpFactors& f, const TrainingSet& ts,
                        const Hyperparams& hyper, int problem) {
  const ProblemRoles pr = roles_for(problem, ts, hyper);
  const std::vector<DenseTensor>& own = problem == 1 ? ts.positives : ts.negatives;
  const std::vector<DenseTensor>& opp = problem == 1 ? ts.negatives : ts.positives;

  double quad = 0.0;
  for (const DenseTensor& t : own) {
    const double v = cp_inner(f, t);
    quad += v * v;
  }
  const double norm = cp_frobenius(f);
  double hinge = 0.0;
  for (const DenseTensor& t : opp)
    hinge += std::max(0.0, 1.0 + cp_inner(f, t));

  return 0.5 * quad + 0.5 * pr.c_reg * norm * norm +
         pr.lambda_var * margin_variance(f, opp) -
         pr.lambda_mean * margin_mean(f, opp, pr.opp_label) + pr.c_slack * hinge;
}

namespace {

CpFactors random_unit_factors(const std::vector<std::size_t>& dims, std::size_t rank,
                              Rng& rng) {
  std::vector<Matrix> factors;
  factors.reserve(dims.size());
  for (std::size_t d : dims) {
    Matrix u(d, rank);
    for (std::size_t j = 0; j < rank; ++j)
      for (std::size_t i = 0; i < d; ++i) u(i, j) = rng.normal();
    for (std::size_t j = 0; j < rank; ++j) {
      double n = 0.0;
      for (std::size_t i = 0; i < d; ++i) n += u(i, j) * u(i, j);
      n = std::sqrt(n);
      if (n > 0.0)
        for (std::size_t i = 0; i < d; ++i) u(i, j) /= n;
    }
    factors.push_back(std::move(u));
  }
  return CpFactors(std::move(factors));
}

// ||W_new - W_old||_F / ||W_old||_F through factor Grams
double relative_change(const CpFactors& now, const CpFactors& before) {
  const double nn = cp_frobenius(now);
  const double nb = cp_frobenius(before);
  if (nb == 0.0) return nn == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  const double cross = cp_inner_factors(now, before);
  const double diff2 = std::max(0.0, nn * nn + nb * nb - 2.0 * cross);
  return std::sqrt(diff2) / nb;
}

constexpr double kDualTol = 1e-10;

}  // namespace

ModelPair train(const TrainingSet& ts, const Hyperparams& hyper) {
  ts.validate();
  hyper.validate();

  const std::vector<std::size_t> dims = ts.dims();
  const std::size_t n_modes = dims.size();

  Rng rng(hyper.seed);
  ModelPair model;
  model.hyper = hyper;
  model.dims = dims;
  model.factors1 = random_unit_factors(dims, hyper.rank, rng);
  model.factors2 = random_unit_factors(dims, hyper.rank, rng);
  model.objective1.push_back(primal_objective(model.factors1, ts, hyper, 1));
  model.objective2.push_back(primal_objective(model.factors2, ts, hyper, 2));

  // warm starts per (problem, mode)
  std::vector<Vector> warm1(n_modes), warm2(n_modes);

  for (std::size_t outer = 1; outer <= hyper.max_outer; ++outer) {
    const CpFactors prev1 = model.factors1;
    const CpFactors prev2 = model.factors2;

    for (std::size_t j = 0; j < n_modes; ++j) {
      for (int problem : {1, 2}) {
        CpFactors& own = problem == 1 ? model.factors1 : model.factors2;
        Vector& warm = problem == 1 ? warm1[j] : warm2[j];
        std::vector<double>& objectives =
            problem == 1 ? model.objective1 : model.objective2;
        try {
          ModeCache cache = build_mode_cache(own, ts, j, problem, hyper);
          BoxQp qp = assemble_dual(cache, ts, hyper);
          QpSolution sol =
              solve_boxqp(qp, kDualTol, 0, warm.empty() ? nullptr : &warm);
          double residual = 0.0;
          Vector beta = recover_beta(cache, sol.alpha, ts, hyper, &residual);
          model.max_representer_residual =
              std::max(model.max_representer_residual, residual);

          // monotone safeguard: the ridge perturbs the dual, so near a
          // fixed point the recovered factor can be a hair worse than the
          // incumbent; keep the incumbent in that case
          const Matrix incumbent = own.factor(j);
          own.factor(j) = update_mode_factor(cache, beta);
          const double after = primal_objective(own, ts, hyper, problem);
          if (after > objectives.back()) {
            own.factor(j) = incumbent;
            objectives.push_back(objectives.back());
          } else {
            objectives.push_back(after);
          }
          warm = std::move(sol.alpha);
        } catch (const NumericError& e) {
          std::ostringstream msg;
          msg << "train: outer " << outer << ", mode " << j << ", problem "
              << problem << ": " << e.what();
          throw NumericError(msg.str());
        }
      }
    }

    model.outer_iters = outer;
    const double rel1 = relative_change(model.factors1, prev1);
    const double rel2 = relative_change(model.factors2, prev2);
    if (rel1 <= hyper.eps && rel2 <= hyper.eps) {
      model.converged = true;
      break;
    }
  }

  model.norm1 = cp_frobenius(model.factors1);
  model.norm2 = cp_frobenius(model.factors2);
  return model;
}

std::pair<double, double> plane_distances(const ModelPair& model, const DenseTensor& x) {
  if (x.dims() != model.dims) throw DimError("plane_distances: sample shape mismatch");
  const double inf = std::numeric_limits<double>::infinity();
  const double d1 =
      model.norm1 > 0.0 ? std::abs(cp_inner(model.factors1, x)) / model.norm1 : inf;
  const double d2 =
      model.norm2 > 0.0 ? std::abs(cp_inner(model.factors2, x)) / model.norm2 : inf;
  return {d1, d2};
}

int decide(const ModelPair& model, const DenseTensor& x) {
  const auto [d1, d2] = plane_distances(model, x);
  if (model.norm1 <= 0.0 && model.norm2 <= 0.0) {
    warn("decide: both weight tensors are zero, defaulting to +1");
    return +1;
  }
  return d1 <= d2 ? +1 : -1;
}

namespace {

constexpr char kMagic[4] = {'L', 'N', 'P', 'S'};
constexpr std::uint32_t kVersion = 1;

void write_factors(std::ostream& out, const CpFactors& f) {
  for (std::size_t j = 0; j < f.order(); ++j)
    for (double v : f.factor(j).data()) binio::write_f64(out, v);
}

CpFactors read_factors(binio::Reader& r, const std::vector<std::size_t>& dims,
                       std::size_t rank) {
  std::vector<Matrix> factors;
  factors.reserve(dims.size());
  for (std::size_t d : dims) {
    Matrix u(d, rank);
    for (std::size_t p = 0; p < u.size(); ++p) u.data()[p] = r.read_f64("factor value");
    factors.push_back(std::move(u));
  }
  return CpFactors(std::move(factors));
}

}  // namespace

void save_model(const ModelPair& model, std::ostream& out) {
  out.write(kMagic, 4);
  binio::write_u32(out, kVersion);
  binio::write_u32(out, static_cast<std::uint32_t>(model.dims.size()));
  for (std::size_t d : model.dims) binio::write_u32(out, static_cast<std::uint32_t>(d));
  binio::write_u32(out, static_cast<std::uint32_t>(model.hyper.rank));
  write_factors(out, model.factors1);
  write_factors(out, model.factors2);
  const Hyperparams& h = model.hyper;
  const double fields[12] = {h.c1,
                             h.c2,
                             h.c3,
                             h.c4,
                             h.lambda1,
                             h.lambda2,
                             h.lambda3,
                             h.lambda4,
                             h.eps,
                             h.ridge,
                             static_cast<double>(h.seed),
                             static_cast<double>(model.outer_iters)};
  for (double v : fields) binio::write_f64(out, v);
  if (!out) throw DataError("save_model: write failure");
}

ModelPair load_model(std::istream& in) {
  binio::Reader r(in);
  char magic[4];
  r.read_bytes(magic, 4, "magic");
  if (!std::equal(magic, magic + 4, kMagic))
    throw FormatError("load_model: bad magic", 0);
  const std::uint32_t version = r.read_u32("version");
  if (version != kVersion) throw FormatError("load_model: unsupported version", 4);
  const std::uint32_t order = r.read_u32("order");
  if (order == 0) throw FormatError("load_model: zero order", 8);
  std::vector<std::size_t> dims(order);
  for (std::uint32_t j = 0; j < order; ++j) {
    const std::size_t at = r.offset();
    dims[j] = r.read_u32("dim");
    if (dims[j] == 0) throw FormatError("load_model: zero dim", at);
  }
  const std::size_t rank_at = r.offset();
  const std::uint32_t rank = r.read_u32("rank");
  if (rank == 0) throw FormatError("load_model: zero rank", rank_at);

  ModelPair model;
  model.dims = dims;
  model.factors1 = read_factors(r, dims, rank);
  model.factors2 = read_factors(r, dims, rank);
  Hyperparams h;
  h.rank = rank;
  h.c1 = r.read_f64("c1");
  h.c2 = r.read_f64("c2");
  h.c3 = r.read_f64("c3");
  h.c4 = r.read_f64("c4");
  h.lambda1 = r.read_f64("lambda1");
  h.lambda2 = r.read_f64("lambda2");
  h.lambda3 = r.read_f64("lambda3");
  h.lambda4 = r.read_f64("lambda4");
  h.eps = r.read_f64("eps");
  h.ridge = r.read_f64("ridge");
  h.seed = static_cast<std::uint64_t>(r.read_f64("seed"));
  model.outer_iters = static_cast<std::size_t>(r.read_f64("outer_iters"));
  model.hyper = h;
  model.norm1 = cp_frobenius(model.factors1);
  model.norm2 = cp_frobenius(model.factors2);
  model.converged = true;  // a saved model is a finished training run
  return model;
}

void save_model_file(const ModelPair& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("save_model: cannot open " + path);
  save_model(model, out);
}

ModelPair load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("load_model: cannot open " + path);
  return load_model(in);
}

}  // namespace lnps
