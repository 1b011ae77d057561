#pragma once

#include <utility>
#include <vector>

namespace cutbench {

// Upper regularized incomplete gamma Q(s, x).
double gamma_q(double s, double x);

// Survival p-value of a chi-square statistic with the given degrees of freedom.
double chi_square_pvalue(double statistic, int dof);

// Chi-square goodness-of-fit p-value of observed counts against expected
// counts (same length, expected > 0, dof = len - 1 unless overridden).
double chi_square_gof(const std::vector<long long>& observed,
                      const std::vector<double>& expected, int dof_override = -1);

struct LineFit {
    double slope = 0, intercept = 0;
};

// Least-squares line through (x, y) pairs.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Slope of log2(y) against log2(x); the scaling exponent of a measurement grid.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

double mean(const std::vector<double>& xs);
double stddev(const std::vector<double>& xs);  // sample standard deviation

}  // namespace cutbench
