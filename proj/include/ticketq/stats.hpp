#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ticketq/trajectory.hpp"

namespace ticketq {

/// Steady-state estimates from one run, post-warmup.
struct SimMetrics {
    double q_bar = 0.0;     // time-average queue length
    double w_bar = 0.0;     // time-average workload (NaN when the run has no W)
    double x_bar = 0.0;     // time-average unresolved abandoned tickets
    double r_frac = 0.0;    // reneged / arrivals
    double b_frac = 0.0;    // balked / arrivals
    double idle_frac = 0.0; // 1 - busy/(window length)
    std::int64_t arrivals = 0;  // post-warmup arrivals
};

/// Exact piecewise integration over [warmup_fraction * horizon, horizon].
/// Fractions use only post-warmup arrivals (outcomes are decided at arrival).
SimMetrics time_average(const SimTrajectory& traj, double warmup_fraction);

struct ConfidenceInterval {
    double mean;
    double half_width;
};

/// Student-t interval over independent replications.
ConfidenceInterval ci(const std::vector<double>& values, double level);

/// Two-sided quantile of the t distribution with nu degrees of freedom,
/// via regularized-incomplete-beta inversion (about 1e-10 accuracy).
double t_quantile(double p, int nu);

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// One-sample Kolmogorov-Smirnov statistic against a cdf.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

/// Spearman rank correlation (average ranks on ties).
double spearman(const std::vector<double>& xs, const std::vector<double>& ys);

double median(std::vector<double> values);

}  // namespace ticketq
