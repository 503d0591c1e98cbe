#ifndef DEGSEQ_STATS_HPP
#define DEGSEQ_STATS_HPP

#include <vector>

namespace degseq {

double mean(const std::vector<double>& xs);
double sample_sd(const std::vector<double>& xs);
double median(std::vector<double> xs);          // by value: sorts a copy
double quantile(std::vector<double> xs, double q);

double normal_pdf(double z);
double normal_cdf(double z);

// Upper regularized incomplete gamma Q(a,x); Q(df/2, x/2) is the
// chi-squared survival function.
double gammq(double a, double x);

struct ChiSquareResult {
  double statistic = 0;
  long long df = 0;
  double p_value = 1;
  int bins = 0;     // after pooling
  int pooled = 0;   // outcomes merged into the pooled bin
};

// Goodness-of-fit with pooling: outcomes with expected count below
// min_expected are merged into one bin.  expected and observed must cover
// the full outcome space (sums agree up to rounding).
ChiSquareResult chi_square_gof(const std::vector<double>& expected,
                               const std::vector<long long>& observed,
                               double min_expected = 5.0);

}  // namespace degseq

#endif
