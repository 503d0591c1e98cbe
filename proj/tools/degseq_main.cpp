// Command-line front end: sampling, exact counting, pmf evaluation and the
// verification experiments.  Exit codes: 0 success, 1 domain/config error,
// 2 capacity error, 3 verdict failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "degseq/asymptotics.hpp"
#include "degseq/counting.hpp"
#include "degseq/errors.hpp"
#include "degseq/exact_pmf.hpp"
#include "degseq/experiments.hpp"
#include "degseq/log_pmf.hpp"
#include "degseq/mixtures.hpp"
#include "degseq/report.hpp"
#include "degseq/sampling.hpp"
#include "degseq/version.hpp"

namespace {

using namespace degseq;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitVerdict = 3;

struct CommonFlags {
  int m = 0;
  int n = 0;
  bool digraph = false;
  std::string model;
  std::string p;
  long long k = -1;
  std::string t_csv;
  std::string s_csv;
  long long trials = 100;
  std::uint64_t seed = 0;
  std::string count_mode = "exact";
  double eps = 0.1;
  double creg = 3.0;
  double a = 0.3;
  std::string out;
  std::string format = "json";
  std::vector<int> sizes;
};

void add_shape_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--m", flags.m, "rows / vertices in U");
  cmd->add_option("--n", flags.n, "columns / vertices in V");
  cmd->add_flag("--digraph", flags.digraph, "loop-free digraph mode (m=n)");
}

void add_model_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--model", flags.model,
                  "model family: gp|gk|gt|ip|bp|bk|bt|vp");
  cmd->add_option("--p", flags.p, "edge probability (decimal or a/b)");
  cmd->add_option("--k", flags.k, "edge count parameter");
  cmd->add_option("--t", flags.t_csv, "column degrees, comma separated");
}

void add_output_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--out", flags.out, "output path (default stdout)");
  cmd->add_option("--format", flags.format, "json|csv|jsonl");
}

void add_experiment_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--trials", flags.trials, "number of Monte Carlo trials");
  cmd->add_option("--seed", flags.seed, "64-bit RNG seed");
  cmd->add_option("--count-mode", flags.count_mode, "exact|asymptotic");
  cmd->add_option("--eps", flags.eps, "regularity exponent epsilon");
  cmd->add_option("--creg", flags.creg, "regularity constant C_reg");
  cmd->add_option("--a", flags.a, "acceptability constant a");
  cmd->add_option("--sizes", flags.sizes,
                  "square sizes for trend sweeps (comma separated)")
      ->delimiter(',');
}

std::vector<int> parse_csv_ints(const std::string& csv) {
  std::vector<int> values;
  if (csv.empty()) return values;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    values.push_back(std::stoi(item));
  }
  return values;
}

Shape shape_from(const CommonFlags& flags) {
  if (flags.m <= 0 || flags.n <= 0)
    throw DomainError("--m and --n are required and positive");
  return Shape(flags.m, flags.n, flags.digraph);
}

ModelSpec model_from(const CommonFlags& flags) {
  auto family = parse_family(flags.model);
  if (!family) throw DomainError("unknown model: " + flags.model);
  const Shape shape = shape_from(flags);
  if (family_uses_p(*family)) {
    if (flags.p.empty()) throw DomainError("--p required for this model");
    return ModelSpec::with_p(*family, shape, rational_from_string(flags.p));
  }
  if (family_uses_k(*family)) {
    if (flags.k < 0) throw DomainError("--k required for this model");
    return ModelSpec::with_k(*family, shape, flags.k);
  }
  if (flags.t_csv.empty()) throw DomainError("--t required for this model");
  return ModelSpec::with_t(*family, shape, parse_csv_ints(flags.t_csv));
}

CountProvider::Mode count_mode_from(const CommonFlags& flags) {
  if (flags.count_mode == "exact") return CountProvider::Mode::exact;
  if (flags.count_mode == "asymptotic")
    return CountProvider::Mode::asymptotic;
  throw DomainError("--count-mode must be exact or asymptotic");
}

ExperimentConfig::Format format_from(const CommonFlags& flags) {
  if (flags.format == "json") return ExperimentConfig::Format::json;
  if (flags.format == "csv") return ExperimentConfig::Format::csv;
  if (flags.format == "jsonl") return ExperimentConfig::Format::jsonl;
  throw DomainError("--format must be json, csv or jsonl");
}

ExperimentConfig config_from(const CommonFlags& flags, ExperimentKind kind,
                             bool needs_model) {
  ExperimentConfig cfg;
  cfg.experiment = kind;
  if (needs_model) cfg.model = model_from(flags);
  cfg.trials = flags.trials;
  cfg.seed = flags.seed;
  cfg.count_mode = count_mode_from(flags);
  cfg.reg = AcceptabilityParams{flags.a, flags.eps, flags.creg};
  cfg.sizes = flags.sizes;
  cfg.digraph = flags.digraph;
  cfg.out_path = flags.out;
  cfg.format = format_from(flags);
  return cfg;
}

int cmd_sample(const CommonFlags& flags) {
  const ModelSpec model = model_from(flags);
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!flags.out.empty()) {
    file.open(flags.out, std::ios::binary);
    if (!file) throw DomainError("cannot open output file: " + flags.out);
    out = &file;
  }
  const auto draws =
      sample_degree_stream(model, flags.trials, RngStream{flags.seed, 0});
  for (long long r = 0; r < flags.trials; ++r) {
    *out << sample_record_line(r, draws[static_cast<std::size_t>(r)])
         << "\n";
  }
  return kExitOk;
}

int cmd_count(const CommonFlags& flags) {
  const Shape shape = shape_from(flags);
  const DegreeSequence ds(shape, parse_csv_ints(flags.s_csv),
                          parse_csv_ints(flags.t_csv));
  if (count_mode_from(flags) == CountProvider::Mode::exact) {
    const CountResult result = count_exact(ds);
    std::cout << result.value.get_str() << "\n";
  } else {
    const EnumEstimate estimate =
        shape.loops_forbidden ? estimate_logdigG(ds) : estimate_logG(ds);
    std::cout << "log_estimate=" << estimate.log_estimate
              << " estimate=" << std::exp(estimate.log_estimate)
              << " A=" << estimate.a_term << " B=" << estimate.b_term;
    if (shape.loops_forbidden) std::cout << " Cr=" << estimate.cross_term;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_pmf(const CommonFlags& flags) {
  const ModelSpec model = model_from(flags);
  std::vector<int> t = parse_csv_ints(flags.t_csv);
  if (family_uses_t(model.family())) t = model.t();
  const DegreeSequence ds(model.shape(), parse_csv_ints(flags.s_csv), t);
  CountProvider provider;
  provider.mode = count_mode_from(flags);
  provider.eps = flags.eps;
  provider.c_reg = flags.creg;
  provider.warn = &std::cerr;
  const Probability log_value = log_pmf(model, ds, provider);
  std::cout << "log_pmf=" << log_value.log_value()
            << " pmf=" << log_value.value();
  if (model.family() != Family::Vp &&
      provider.mode == CountProvider::Mode::exact &&
      (!family_is_graph(model.family()) ||
       model.shape().cell_count() <= 24)) {
    const Probability exact = exact_pmf(model, ds);
    std::cout << " exact=" << to_string(exact.rational());
  }
  std::cout << "\n";
  return kExitOk;
}

int report_outcome(const ExperimentReport& report) {
  return report.verdict.has_value() && !*report.verdict ? kExitVerdict
                                                        : kExitOk;
}

int cmd_compare(const CommonFlags& flags) {
  ExperimentConfig cfg = config_from(flags, ExperimentKind::ratio, true);
  const ExperimentReport report = run_ratio_experiment(cfg);
  if (!flags.out.empty()) {
    write_report(report, cfg);
  }
  for (const auto& [key, value] : report.summary)
    std::cout << key << "=" << format_cell(value) << "\n";
  if (report.verdict.has_value())
    std::cout << "verdict=" << (*report.verdict ? "pass" : "fail") << "\n";
  return report_outcome(report);
}

int cmd_check(const std::string& name, const CommonFlags& flags) {
  if (name == "mixing") {
    const Shape shape = shape_from(flags);
    MixtureParams params;
    params.p = flags.p.empty() ? Rational(1, 3)
                               : rational_from_string(flags.p);
    params.k = flags.k >= 0 ? flags.k : shape.cell_count() / 2;
    params.t = flags.t_csv.empty()
                   ? near_regular_margins(shape.n, shape.cell_count() / 2)
                   : parse_csv_ints(flags.t_csv);
    bool all_zero = true;
    for (auto identity : {MixingIdentity::relp, MixingIdentity::relM,
                          MixingIdentity::relt}) {
      const Rational residual = mixture_residual(identity, shape, params);
      const char* label = identity == MixingIdentity::relp   ? "relp"
                          : identity == MixingIdentity::relM ? "relM"
                                                             : "relt";
      std::cout << label << "_residual=" << to_string(residual) << "\n";
      all_zero = all_zero && sgn(residual) == 0;
    }
    std::cout << "verdict=" << (all_zero ? "pass" : "fail") << "\n";
    return all_zero ? kExitOk : kExitVerdict;
  }

  ExperimentKind kind;
  bool needs_model = true;
  if (name == "tv") {
    kind = ExperimentKind::tv_exact;
  } else if (name == "normalization") {
    kind = ExperimentKind::normalization;
  } else if (name == "concentration") {
    kind = ExperimentKind::concentration;
  } else if (name == "expectation-r") {
    kind = ExperimentKind::expectation_R;
  } else if (name == "enum-accuracy") {
    kind = ExperimentKind::enum_accuracy;
    needs_model = false;
  } else {
    throw DomainError("unknown check: " + name);
  }
  ExperimentConfig cfg = config_from(flags, kind, needs_model);
  const ExperimentReport report = run_experiment(cfg);
  if (!flags.out.empty()) write_report(report, cfg);
  for (const auto& [key, value] : report.summary)
    std::cout << key << "=" << format_cell(value) << "\n";
  if (report.verdict.has_value())
    std::cout << "verdict=" << (*report.verdict ? "pass" : "fail") << "\n";
  return report_outcome(report);
}

int cmd_report(const std::string& name, const CommonFlags& flags) {
  ExperimentKind kind;
  bool needs_model = true;
  if (name == "ratio") {
    kind = ExperimentKind::ratio;
  } else if (name == "tv") {
    kind = ExperimentKind::tv_exact;
  } else if (name == "concentration") {
    kind = ExperimentKind::concentration;
  } else if (name == "expectation-r") {
    kind = ExperimentKind::expectation_R;
  } else if (name == "enum-accuracy") {
    kind = ExperimentKind::enum_accuracy;
    needs_model = false;
  } else if (name == "normalization") {
    kind = ExperimentKind::normalization;
  } else {
    throw DomainError("unknown experiment: " + name);
  }
  ExperimentConfig cfg = config_from(flags, kind, needs_model);
  const ExperimentReport report = run_experiment(cfg);
  write_report(report, cfg);
  return report_outcome(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree sequences of random bipartite graphs and digraphs"};
  app.set_version_flag("--version", degseq::kVersion);
  app.require_subcommand(1);

  CommonFlags flags;
  std::string check_name, report_name;

  auto* sample = app.add_subcommand("sample", "draw degree sequences");
  add_shape_flags(sample, flags);
  add_model_flags(sample, flags);
  add_experiment_flags(sample, flags);
  add_output_flags(sample, flags);

  auto* count = app.add_subcommand("count", "exact or asymptotic counts");
  add_shape_flags(count, flags);
  count->add_option("--s", flags.s_csv, "row degrees, comma separated");
  count->add_option("--t", flags.t_csv, "column degrees, comma separated");
  count->add_option("--count-mode", flags.count_mode, "exact|asymptotic");

  auto* pmf = app.add_subcommand("pmf", "evaluate a model pmf");
  add_shape_flags(pmf, flags);
  add_model_flags(pmf, flags);
  pmf->add_option("--s", flags.s_csv, "row degrees, comma separated");
  pmf->add_option("--count-mode", flags.count_mode, "exact|asymptotic");
  pmf->add_option("--eps", flags.eps, "regularity exponent epsilon");
  pmf->add_option("--creg", flags.creg, "regularity constant C_reg");

  auto* compare = app.add_subcommand(
      "compare", "log-ratio experiment against the binomial counterpart");
  add_shape_flags(compare, flags);
  add_model_flags(compare, flags);
  add_experiment_flags(compare, flags);
  add_output_flags(compare, flags);

  auto* check = app.add_subcommand("check", "run a verdicted check");
  check->add_option("name", check_name,
                    "mixing|tv|normalization|concentration|expectation-r|"
                    "enum-accuracy")
      ->required();
  add_shape_flags(check, flags);
  add_model_flags(check, flags);
  add_experiment_flags(check, flags);
  add_output_flags(check, flags);

  auto* report = app.add_subcommand("report", "emit a full report");
  report->add_option("name", report_name,
                     "ratio|tv|concentration|expectation-r|enum-accuracy|"
                     "normalization")
      ->required();
  add_shape_flags(report, flags);
  add_model_flags(report, flags);
  add_experiment_flags(report, flags);
  add_output_flags(report, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed()) return cmd_sample(flags);
    if (count->parsed()) return cmd_count(flags);
    if (pmf->parsed()) return cmd_pmf(flags);
    if (compare->parsed()) return cmd_compare(flags);
    if (check->parsed()) return cmd_check(check_name, flags);
    if (report->parsed()) return cmd_report(report_name, flags);
  } catch (const degseq::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const degseq::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}
