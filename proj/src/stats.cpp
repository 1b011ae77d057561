#include "cutbench/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace cutbench {

namespace {

// Series expansion of the lower regularized incomplete gamma P(s, x).
double gamma_p_series(double s, double x) {
    double sum = 1.0 / s;
    double term = sum;
    for (int k = 1; k < 1000; ++k) {
        term *= x / (s + k);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// Continued fraction for Q(s, x), modified Lentz.
double gamma_q_cf(double s, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        double an = -static_cast<double>(i) * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

}  // namespace

double gamma_q(double s, double x) {
    if (s <= 0) throw std::invalid_argument("gamma_q: s must be positive");
    if (x < 0) throw std::invalid_argument("gamma_q: x must be non-negative");
    if (x == 0) return 1.0;
    if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
    return gamma_q_cf(s, x);
}

double chi_square_pvalue(double statistic, int dof) {
    if (dof < 1) throw std::invalid_argument("chi_square_pvalue: dof must be positive");
    if (statistic <= 0) return 1.0;
    return gamma_q(dof / 2.0, statistic / 2.0);
}

double chi_square_gof(const std::vector<long long>& observed,
                      const std::vector<double>& expected, int dof_override) {
    if (observed.size() != expected.size() || observed.empty())
        throw std::invalid_argument("chi_square_gof: length mismatch");
    double stat = 0;
    for (size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0) throw std::invalid_argument("chi_square_gof: expected <= 0");
        double diff = observed[i] - expected[i];
        stat += diff * diff / expected[i];
    }
    int dof = dof_override > 0 ? dof_override : static_cast<int>(observed.size()) - 1;
    return chi_square_pvalue(stat, dof);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 points");
    double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LineFit f;
    f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    f.intercept = (sy - f.slope * sx) / n;
    return f;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx(x.size()), ly(y.size());
    for (size_t i = 0; i < x.size(); ++i) {
        lx[i] = std::log2(x[i]);
        ly[i] = std::log2(y[i]);
    }
    return fit_line(lx, ly).slope;
}

double mean(const std::vector<double>& xs) {
    double s = 0;
    for (double v : xs) s += v;
    return s / static_cast<double>(xs.size());
}

double stddev(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0;
    double m = mean(xs);
    double s = 0;
    for (double v : xs) s += (v - m) * (v - m);
    return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

}  // namespace cutbench
