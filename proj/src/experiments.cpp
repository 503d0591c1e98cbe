#include "degseq/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "degseq/asymptotics.hpp"
#include "degseq/counting.hpp"
#include "degseq/enumerate.hpp"
#include "degseq/errors.hpp"
#include "degseq/exact_pmf.hpp"
#include "degseq/logspace.hpp"
#include "degseq/sampling.hpp"
#include "degseq/stats.hpp"
#include "degseq/version.hpp"

namespace degseq {

std::string experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::ratio: return "ratio";
    case ExperimentKind::tv_exact: return "tv_exact";
    case ExperimentKind::concentration: return "concentration";
    case ExperimentKind::expectation_R: return "expectation_R";
    case ExperimentKind::enum_accuracy: return "enum_accuracy";
    case ExperimentKind::normalization: return "normalization";
  }
  return "?";
}

std::vector<int> near_regular_margins(int n, long long k) {
  if (n < 1 || k < 0) throw DomainError("bad margin parameters");
  const long long base = k / n;
  const long long rem = k - base * n;
  std::vector<int> margins(static_cast<std::size_t>(n),
                           static_cast<int>(base));
  for (long long j = 0; j < rem; ++j)
    margins[static_cast<std::size_t>(j)] = static_cast<int>(base) + 1;
  return margins;
}

namespace {

// Runs fn(0..trials-1); chunks are pulled by a worker pool but every result
// lands in its own slot, so parallel and serial runs are identical.
void for_each_trial(long long trials,
                    const std::function<void(long long)>& fn) {
  const unsigned hardware = std::thread::hardware_concurrency();
  const unsigned workers =
      std::max(1u, std::min<unsigned>(hardware ? hardware : 1, 16));
  if (trials < 512 || workers == 1) {
    for (long long r = 0; r < trials; ++r) fn(r);
    return;
  }
  std::atomic<long long> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&]() {
    constexpr long long kChunk = 64;
    for (;;) {
      const long long start = cursor.fetch_add(kChunk);
      if (start >= trials) return;
      const long long stop = std::min(trials, start + kChunk);
      try {
        for (long long r = start; r < stop; ++r) fn(r);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& worker : pool) worker.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
  return out.str();
}

void base_provenance(ExperimentReport& report, const ExperimentConfig& cfg) {
  report.provenance.emplace_back("tool", "degseq");
  report.provenance.emplace_back("version", kVersion);
  report.provenance.emplace_back("experiment",
                                 experiment_name(cfg.experiment));
  if (cfg.model) report.provenance.emplace_back("model", cfg.model->describe());
  if (cfg.model_prime)
    report.provenance.emplace_back("model_prime", cfg.model_prime->describe());
  report.provenance.emplace_back("trials", std::to_string(cfg.trials));
  report.provenance.emplace_back("seed", std::to_string(cfg.seed));
  report.provenance.emplace_back(
      "count_mode",
      cfg.count_mode == CountProvider::Mode::exact ? "exact" : "asymptotic");
  report.provenance.emplace_back("eps", std::to_string(cfg.reg.eps));
  report.provenance.emplace_back("creg", std::to_string(cfg.reg.c_reg));
  report.provenance.emplace_back("a", std::to_string(cfg.reg.a));
  if (!cfg.sizes.empty())
    report.provenance.emplace_back("sizes", join_ints(cfg.sizes));
  report.provenance.emplace_back(
      "conventions",
      "pass thresholds: 4 standard errors; regular fraction >= 0.99; "
      "trend checks require strict monotone decrease");
}

CountProvider provider_for(const ExperimentConfig& cfg) {
  CountProvider provider;
  provider.mode = cfg.count_mode;
  provider.eps = cfg.reg.eps;
  provider.c_reg = cfg.reg.c_reg;
  provider.warn = nullptr;  // reports stay byte-deterministic
  return provider;
}

ModelSpec counterpart_of(const ModelSpec& model) {
  const Family f = counterpart_family(model.family());
  switch (f) {
    case Family::Vp: return ModelSpec::with_p(f, model.shape(), model.p());
    case Family::Bk: return ModelSpec::with_k(f, model.shape(), model.k());
    case Family::Bt: return ModelSpec::with_t(f, model.shape(), model.t());
    default: break;
  }
  throw DomainError("no counterpart");
}

bool is_paper_pair(const ModelSpec& d, const ModelSpec& d_prime) {
  if (!(d.shape() == d_prime.shape())) return false;
  if (!family_is_graph(d.family())) return false;
  if (d_prime.family() != counterpart_family(d.family())) return false;
  if (family_uses_p(d.family()) && !(d.p() == d_prime.p())) return false;
  if (family_uses_k(d.family()) && d.k() != d_prime.k()) return false;
  if (family_uses_t(d.family()) && d.t() != d_prime.t()) return false;
  return true;
}

// Rescale a square-shape model to size n preserving density.
ModelSpec rescale_model(const ModelSpec& model, int n) {
  const Shape& base = model.shape();
  if (base.m != base.n)
    throw DomainError("size sweeps need square shapes");
  Shape shape(n, n, base.loops_forbidden);
  switch (model.family()) {
    case Family::Gp:
      return ModelSpec::with_p(model.family(), shape, model.p());
    case Family::Gk: {
      const long long k =
          model.k() * shape.cell_count() / base.cell_count();
      return ModelSpec::with_k(model.family(), shape, k);
    }
    case Family::Gt: {
      long long k_base = model.fixed_total();
      const long long k = k_base * shape.cell_count() / base.cell_count();
      return ModelSpec::with_t(model.family(), shape,
                               near_regular_margins(n, k));
    }
    default:
      throw DomainError("size sweeps are for graph models");
  }
}

struct RatioStats {
  double mean_abs, median_abs, max_abs, p99_abs;
};

RatioStats summarize_abs(const std::vector<double>& ratios) {
  std::vector<double> abs_ratios;
  abs_ratios.reserve(ratios.size());
  for (double r : ratios) abs_ratios.push_back(std::abs(r));
  return RatioStats{mean(abs_ratios), median(abs_ratios),
                    *std::max_element(abs_ratios.begin(), abs_ratios.end()),
                    quantile(abs_ratios, 0.99)};
}

}  // namespace

ExperimentReport run_ratio_experiment(const ExperimentConfig& cfg) {
  if (!cfg.model) throw DomainError("ratio experiment needs a model");
  if (!family_is_graph(cfg.model->family()))
    throw DomainError("ratio experiment samples from a graph model");
  ExperimentReport report;
  base_provenance(report, cfg);
  report.columns = {"n", "trial", "k", "log_d", "log_d_prime", "log_ratio"};

  const CountProvider provider = provider_for(cfg);
  std::vector<int> sizes = cfg.sizes;
  if (sizes.empty()) sizes.push_back(cfg.model->shape().n);

  std::vector<double> medians;
  for (int n : sizes) {
    const ModelSpec model = cfg.sizes.empty()
                                ? *cfg.model
                                : rescale_model(*cfg.model, n);
    const ModelSpec model_prime =
        cfg.model_prime && cfg.sizes.empty() ? *cfg.model_prime
                                             : counterpart_of(model);
    if (!is_paper_pair(model, model_prime))
      throw DomainError("(D, D') is not one of the paper's model pairs");

    std::vector<std::vector<ReportCell>> rows(
        static_cast<std::size_t>(cfg.trials));
    std::vector<double> ratios(static_cast<std::size_t>(cfg.trials));
    RngStream base{cfg.seed, 0};
    for_each_trial(cfg.trials, [&](long long r) {
      const DegreeSequence ds =
          sample_degrees(model, base.substream(static_cast<std::uint64_t>(r)));
      const double log_d = log_pmf(model, ds, provider).log_value();
      const double log_dp = log_pmf(model_prime, ds, provider).log_value();
      const double ratio = log_d - log_dp;
      ratios[static_cast<std::size_t>(r)] = ratio;
      rows[static_cast<std::size_t>(r)] = {
          static_cast<long long>(n), r, ds.total_s(), log_d, log_dp, ratio};
    });
    for (auto& row : rows) report.rows.push_back(std::move(row));

    const RatioStats stats = summarize_abs(ratios);
    const std::string suffix = "_n" + std::to_string(n);
    report.add_summary("mean_abs_log_ratio" + suffix, stats.mean_abs);
    report.add_summary("median_abs_log_ratio" + suffix, stats.median_abs);
    report.add_summary("max_abs_log_ratio" + suffix, stats.max_abs);
    report.add_summary("p99_abs_log_ratio" + suffix, stats.p99_abs);
    medians.push_back(stats.median_abs);
  }

  if (medians.size() >= 2) {
    bool decreasing = true;
    for (std::size_t i = 1; i < medians.size(); ++i)
      decreasing = decreasing && (medians[i] < medians[i - 1]);
    report.verdict = decreasing;
    report.add_summary("median_trend_strictly_decreasing",
                       std::string(decreasing ? "true" : "false"));
  }
  return report;
}

ExperimentReport run_tv_exact(const ExperimentConfig& cfg) {
  if (!cfg.model) throw DomainError("tv experiment needs a model");
  const ModelSpec& model = *cfg.model;
  const Shape& shape = model.shape();
  if (shape.cell_count() > 12)
    throw CapacityError("exact TV limited to 12 cells");
  const ModelSpec model_prime =
      cfg.model_prime ? *cfg.model_prime : counterpart_of(model);
  if (model.family() == Family::Vp || model_prime.family() == Family::Vp)
    throw DomainError("V_p has no exact path");
  if (!(model_prime.shape() == shape))
    throw DomainError("TV needs both models on one index set");

  ExperimentReport report;
  base_provenance(report, cfg);

  std::vector<Rational> gaps;
  for_each_pair(shape, [&](const std::vector<int>& s,
                           const std::vector<int>& t) {
    DegreeSequence ds(shape, s, t);
    Rational gap = exact_pmf(model, ds).rational() -
                   exact_pmf(model_prime, ds).rational();
    if (sgn(gap) < 0) gap = -gap;
    gaps.push_back(std::move(gap));
  });

  Rational forward(0), backward(0);
  for (const Rational& g : gaps) forward += g;
  for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) backward += *it;
  const bool crosscheck = (forward == backward);
  Rational tv = forward / 2;

  report.add_summary("tv", to_string(tv));
  report.add_summary("tv_double", to_double(tv));
  report.add_summary("points", static_cast<long long>(gaps.size()));
  report.add_summary("crosscheck_equal",
                     std::string(crosscheck ? "true" : "false"));
  report.verdict = crosscheck;
  return report;
}

ExperimentReport run_concentration(const ExperimentConfig& cfg) {
  if (!cfg.model) throw DomainError("concentration experiment needs a model");
  const ModelSpec& model = *cfg.model;
  const Shape& shape = model.shape();
  const bool square = shape.m == shape.n;
  const bool is_t_model = family_uses_t(model.family());

  ExperimentReport report;
  base_provenance(report, cfg);
  report.columns = {"trial", "k",     "lambda",       "r_s",
                    "r_t",   "flat_s", "s_regular",    "t_regular",
                    "pair_regular"};
  if (square) report.columns.push_back("cross");

  std::vector<std::vector<ReportCell>> rows(
      static_cast<std::size_t>(cfg.trials));
  std::vector<std::uint8_t> regular_flags(
      static_cast<std::size_t>(cfg.trials));
  std::vector<double> flats(static_cast<std::size_t>(cfg.trials));
  std::vector<std::uint8_t> flat_defined(
      static_cast<std::size_t>(cfg.trials));
  std::vector<double> crosses(static_cast<std::size_t>(cfg.trials));

  RngStream base{cfg.seed, 0};
  const AcceptabilityParams reg = cfg.reg;
  for_each_trial(cfg.trials, [&](long long r) {
    const DegreeSequence ds =
        sample_degrees(model, base.substream(static_cast<std::uint64_t>(r)));
    const RegularityReport stats = degree_stats(ds, reg);
    const double lam = to_double(stats.lambda);
    const double denom = lam * (1.0 - lam) *
                         static_cast<double>(shape.m) * shape.n;
    const bool has_flat = denom > 0;
    const double flat = has_flat ? stats.r_s / denom : 0.0;
    const bool counted_regular =
        is_t_model ? stats.s_regular.regular : stats.pair_regular;

    regular_flags[static_cast<std::size_t>(r)] = counted_regular ? 1 : 0;
    flats[static_cast<std::size_t>(r)] = flat;
    flat_defined[static_cast<std::size_t>(r)] = has_flat ? 1 : 0;
    if (square) crosses[static_cast<std::size_t>(r)] = *stats.cross;

    std::vector<ReportCell> row = {
        r,
        ds.total_s(),
        lam,
        stats.r_s,
        stats.r_t,
        flat,
        std::string(stats.s_regular.regular ? "true" : "false"),
        std::string(stats.t_regular.regular ? "true" : "false"),
        std::string(stats.pair_regular ? "true" : "false")};
    if (square) row.push_back(*stats.cross);
    rows[static_cast<std::size_t>(r)] = std::move(row);
  });
  for (auto& row : rows) report.rows.push_back(std::move(row));

  long long regular_count = 0;
  for (auto f : regular_flags) regular_count += f;
  const double fraction =
      static_cast<double>(regular_count) / static_cast<double>(cfg.trials);
  report.add_summary("regular_fraction", fraction);
  report.add_summary("regular_metric",
                     std::string(is_t_model ? "s_regular" : "pair_regular"));

  std::vector<double> defined_flats;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (flat_defined[i]) defined_flats.push_back(flats[i]);
  }
  if (!defined_flats.empty()) {
    const double flat_mean = mean(defined_flats);
    report.add_summary("flat_s_mean", flat_mean);
    report.add_summary("flat_s_mean_abs_dev_from_1",
                       std::abs(flat_mean - 1.0));
  }

  bool verdict = fraction >= kRegularFractionThreshold;

  // For the loop-free t-model, the cross-term mean has an exact target.
  if (square && shape.loops_forbidden && model.family() == Family::Gt) {
    const int n = shape.n;
    const std::vector<int>& t = model.t();
    long long k = 0;
    for (int v : t) k += v;
    const double lambda_n =
        static_cast<double>(k) / static_cast<double>(n);  // lambda * n
    double target_num = 0;
    for (int v : t) {
      const double d = static_cast<double>(v) - lambda_n;
      target_num += d * d;
    }
    const double target = -target_num / static_cast<double>(n - 1);
    const double cross_mean = mean(crosses);
    const double se = sample_sd(crosses) /
                      std::sqrt(static_cast<double>(crosses.size()));
    const double z = se > 0 ? (cross_mean - target) / se : 0.0;
    report.add_summary("cross_mean", cross_mean);
    report.add_summary("cross_se", se);
    report.add_summary("cross_target", target);
    report.add_summary("cross_z", z);
    verdict = verdict && std::abs(z) <= kSeTolerance;
  }

  report.verdict = verdict;
  return report;
}

ExperimentReport run_expectation_R(const ExperimentConfig& cfg) {
  if (!cfg.model) throw DomainError("expectation experiment needs a model");
  const ModelSpec& model = *cfg.model;
  const Shape& shape = model.shape();

  double target = 0;
  if (model.family() == Family::Gp && !shape.loops_forbidden) {
    const double p = model.p_double();
    target = p * (1.0 - p) * (shape.m - 1) * shape.n;
  } else if (model.family() == Family::Gp && shape.loops_forbidden) {
    const double p = model.p_double();
    target = p * (1.0 - p) * (shape.n - 1) * (shape.n - 1);
  } else if (model.family() == Family::Gt && !shape.loops_forbidden) {
    double acc = 0;
    for (int v : model.t())
      acc += static_cast<double>(v) * (shape.m - v);
    target = acc / shape.m;
  } else {
    throw DomainError(
        "expectation_R supports G_p, G_t and loop-free G_p only");
  }

  ExperimentReport report;
  base_provenance(report, cfg);
  report.columns = {"trial", "k", "r_s"};

  std::vector<std::vector<ReportCell>> rows(
      static_cast<std::size_t>(cfg.trials));
  std::vector<double> values(static_cast<std::size_t>(cfg.trials));
  RngStream base{cfg.seed, 0};
  for_each_trial(cfg.trials, [&](long long r) {
    const DegreeSequence ds =
        sample_degrees(model, base.substream(static_cast<std::uint64_t>(r)));
    const RegularityReport stats = degree_stats(ds, cfg.reg);
    values[static_cast<std::size_t>(r)] = stats.r_s;
    rows[static_cast<std::size_t>(r)] = {r, ds.total_s(), stats.r_s};
  });
  for (auto& row : rows) report.rows.push_back(std::move(row));

  const double sample_mean = mean(values);
  const double se =
      sample_sd(values) / std::sqrt(static_cast<double>(values.size()));
  const double z = se > 0 ? (sample_mean - target) / se : 0.0;
  report.add_summary("mean_r", sample_mean);
  report.add_summary("se", se);
  report.add_summary("target", target);
  report.add_summary("z", z);
  report.verdict = std::abs(z) <= kSeTolerance;
  return report;
}

ExperimentReport run_enum_accuracy(const ExperimentConfig& cfg) {
  if (cfg.sizes.empty())
    throw DomainError("enum_accuracy needs a list of sizes");
  ExperimentReport report;
  base_provenance(report, cfg);
  report.provenance.emplace_back("digraph", cfg.digraph ? "true" : "false");
  if (cfg.regular_degree)
    report.provenance.emplace_back("regular_degree",
                                   std::to_string(*cfg.regular_degree));
  report.columns = {"n", "k", "log_exact", "log_estimate", "abs_diff"};

  std::vector<double> diffs;
  for (int n : cfg.sizes) {
    const Shape shape(n, n, cfg.digraph);
    std::vector<int> margins;
    if (cfg.regular_degree) {
      margins.assign(static_cast<std::size_t>(n), *cfg.regular_degree);
    } else {
      // Most-regular margins at half density: k = floor(n^2/2).
      margins = near_regular_margins(n, static_cast<long long>(n) * n / 2);
    }
    for (int v : margins) {
      if (v > shape.row_capacity())
        throw DomainError("margins infeasible at this size");
    }
    const DegreeSequence ds(shape, margins, margins);
    const CountResult exact = count_exact(ds);
    if (sgn(exact.value) == 0)
      throw DomainError("margins have no realization");
    const double log_exact = log_to_double(exact.value);
    const EnumEstimate estimate =
        cfg.digraph ? estimate_logdigG(ds) : estimate_logG(ds);
    const double diff = std::abs(log_exact - estimate.log_estimate);
    diffs.push_back(diff);
    report.rows.push_back({static_cast<long long>(n), ds.total_s(),
                           log_exact, estimate.log_estimate, diff});
  }

  bool decreasing = true;
  for (std::size_t i = 1; i < diffs.size(); ++i)
    decreasing = decreasing && (diffs[i] < diffs[i - 1]);
  report.add_summary("abs_diff_strictly_decreasing",
                     std::string(decreasing ? "true" : "false"));
  report.verdict = decreasing;
  return report;
}

ExperimentReport run_normalization(const ExperimentConfig& cfg) {
  if (!cfg.model) throw DomainError("normalization needs a model");
  const ModelSpec& model = *cfg.model;
  const Shape& shape = model.shape();
  if (shape.cell_count() > 12)
    throw CapacityError("normalization limited to 12 cells");
  if (model.family() == Family::Vp)
    throw DomainError("V_p has no exact path");

  ExperimentReport report;
  base_provenance(report, cfg);

  Rational total(0);
  long long points = 0;
  for_each_pair(shape, [&](const std::vector<int>& s,
                           const std::vector<int>& t) {
    total += exact_pmf(model, DegreeSequence(shape, s, t)).rational();
    ++points;
  });

  const bool is_one = (total == 1);
  report.add_summary("total_mass", to_string(total));
  report.add_summary("total_mass_double", to_double(total));
  report.add_summary("points", points);
  report.verdict = is_one;
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case ExperimentKind::ratio: return run_ratio_experiment(cfg);
    case ExperimentKind::tv_exact: return run_tv_exact(cfg);
    case ExperimentKind::concentration: return run_concentration(cfg);
    case ExperimentKind::expectation_R: return run_expectation_R(cfg);
    case ExperimentKind::enum_accuracy: return run_enum_accuracy(cfg);
    case ExperimentKind::normalization: return run_normalization(cfg);
  }
  throw DomainError("unknown experiment");
}

}  // namespace degseq
