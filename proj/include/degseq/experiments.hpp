#ifndef DEGSEQ_EXPERIMENTS_HPP
#define DEGSEQ_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "degseq/log_pmf.hpp"
#include "degseq/model_spec.hpp"
#include "degseq/regularity.hpp"

namespace degseq {

enum class ExperimentKind {
  ratio,          // log Prob_D - log Prob_D' on samples from D
  tv_exact,       // exact total-variation distance on tiny shapes
  concentration,  // eps-regular fraction and R flatness
  expectation_R,  // Monte Carlo mean of R against the exact formula
  enum_accuracy,  // exact versus asymptotic enumeration trend
  normalization,  // exact pmf total mass
};

std::string experiment_name(ExperimentKind kind);

// Verdict conventions, fixed here rather than in the papers: Monte Carlo
// means must land within kSeTolerance standard errors; concentration
// requires at least kRegularFractionThreshold regular samples; trend
// checks require strict monotone decrease.
inline constexpr double kSeTolerance = 4.0;
inline constexpr double kRegularFractionThreshold = 0.99;

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::ratio;
  std::optional<ModelSpec> model;
  std::optional<ModelSpec> model_prime;  // defaults to the paper counterpart
  long long trials = 100;
  std::uint64_t seed = 0;
  CountProvider::Mode count_mode = CountProvider::Mode::exact;
  AcceptabilityParams reg;

  // Trend experiments (ratio, enum_accuracy): square sizes to sweep.  The
  // model parameter is rescaled to preserve density.
  std::vector<int> sizes;

  // enum_accuracy without a model: digraph flag and margin rule.
  bool digraph = false;
  // When set, every row uses the constant-degree sequence (d,...,d);
  // otherwise rows use the most-regular margins with k = floor(n^2/2).
  std::optional<int> regular_degree;

  std::string out_path;  // empty -> stdout
  enum class Format { json, csv, jsonl } format = Format::json;
};

using ReportCell = std::variant<long long, double, std::string>;

struct ExperimentReport {
  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<std::string> columns;
  std::vector<std::vector<ReportCell>> rows;
  std::vector<std::pair<std::string, ReportCell>> summary;
  std::optional<bool> verdict;

  void add_summary(const std::string& key, ReportCell value) {
    summary.emplace_back(key, std::move(value));
  }
};

ExperimentReport run_ratio_experiment(const ExperimentConfig& cfg);
ExperimentReport run_tv_exact(const ExperimentConfig& cfg);
ExperimentReport run_concentration(const ExperimentConfig& cfg);
ExperimentReport run_expectation_R(const ExperimentConfig& cfg);
ExperimentReport run_enum_accuracy(const ExperimentConfig& cfg);
ExperimentReport run_normalization(const ExperimentConfig& cfg);

ExperimentReport run_experiment(const ExperimentConfig& cfg);

// Near-regular margins: n entries summing to k, values differing by at
// most one, larger entries first.
std::vector<int> near_regular_margins(int n, long long k);

}  // namespace degseq

#endif
