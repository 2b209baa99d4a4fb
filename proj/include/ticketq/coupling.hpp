#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ticketq/primitives.hpp"
#include "ticketq/trajectory.hpp"

namespace ticketq {

/// Diffusion-scaling experiment grid. Each scale index n gets mu^n = n and
/// lambda^n = n + beta sqrt(n); scaled processes are Q/sqrt(n) and sqrt(n) W.
struct ScalingConfig {
    std::vector<double> n_values;
    double beta = 0.0;
    double theta_b = 0.1;
    double theta_r = 0.1;
    double horizon = 50.0;
    int seeds = 20;
    std::uint64_t base_seed = 1;
    double warmup_fraction = 0.2;
};

struct CoupledPair {
    SimTrajectory standard;
    SimTrajectory ticket;
    double sup_gap_q = 0.0;  // sup_t |Q_S - Q_T| (unscaled)
    double sup_gap_w = 0.0;  // sup_t |W_S - W_T| (unscaled)
};

/// Both disciplines on bit-identical primitives and initial conditions.
CoupledPair run_coupled_pair(const SystemParams& params, const CustomerPrimitives& primitives,
                             const InitialConditions& init, double horizon);
/// Convenience: generates the stream from the seed, empty initial conditions.
CoupledPair run_coupled_pair(const SystemParams& params, std::uint64_t seed, double horizon);

/// sup_t |Q(t)/sqrt(n) - mu_limit * sqrt(n) * W(t)| over event breakpoints.
double state_space_collapse_gap(const SimTrajectory& traj, double mu_limit, double n);

/// Busy fraction T(t)/t over the whole run.
double utilization(const SimTrajectory& traj);

struct ScalingRow {
    double n = 0.0;
    double median_gap_q = 0.0;       // median_s sup|Q~_S - Q~_T|
    double median_gap_w = 0.0;       // median_s sup|W~_S - W~_T|
    double median_collapse_s = 0.0;  // median_s sup|Q~_S - mu W~_S|
    double median_collapse_t = 0.0;
    double mean_idle = 0.0;          // over both disciplines, over [0, t]
    double median_avg_scaled_q = 0.0;  // post-warmup time-average of Q~_S
};

struct ScalingSeriesResult {
    std::vector<ScalingRow> rows;
    // per-(n, seed) long-form records, in (n, seed) order
    struct Record {
        double n;
        std::uint64_t seed;
        double gap_q, gap_w;           // scaled
        double collapse_s, collapse_t;  // scaled
        double util_s, util_t;
    };
    std::vector<Record> records;
    double spearman_gap_q_vs_n = 0.0;
    double spearman_collapse_s_vs_n = 0.0;
    double spearman_collapse_t_vs_n = 0.0;

    /// Long-form CSV: n,seed,gap_Q,gap_W,collapse_gap,utilization
    /// (collapse_gap = max over disciplines, utilization = mean).
    void write_csv(std::ostream& os) const;
    void write_markdown(std::ostream& os) const;
};

/// Runs the coupled grid. Requires >= 3 increasing n values and >= 10 seeds.
ScalingSeriesResult run_scaling_series(const ScalingConfig& config);

}  // namespace ticketq
