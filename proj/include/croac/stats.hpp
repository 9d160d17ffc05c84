#pragma once

#include <vector>

namespace croac {

// Results below this are reported as exactly zero.
inline constexpr double kZeroThreshold = 1e-8;

inline double apply_zero_threshold(double v) { return v < kZeroThreshold ? 0.0 : v; }

struct SampleSummary {
    int n = 0;
    double mean = 0.0;
    double std_dev = 0.0;  // sample standard deviation, n-1 divisor
    std::vector<double> values;
};

// Zero-thresholds the values, then computes mean and sample standard
// deviation. Throws std::invalid_argument for fewer than two values.
SampleSummary summarize(std::vector<double> values);

// Two-sample pooled-variance Student's t. Negative means sample a is lower
// (better, for minimization). When both variances are zero: 0 for equal
// means, else +/-infinity as a dominance sentinel.
double t_statistic(const SampleSummary& a, const SampleSummary& b);

// Two-tailed 95% critical value, df clamped to [1, 200].
double t_critical_95(int df);

// |t| >= critical value at df = n_a + n_b - 2. Infinite t is significant.
bool significant_95(double t, int n_a, int n_b);

}  // namespace croac
