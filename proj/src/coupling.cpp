#include "ticketq/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "ticketq/standard_queue.hpp"
#include "ticketq/stats.hpp"
#include "ticketq/ticket_queue.hpp"

namespace ticketq {

CoupledPair run_coupled_pair(const SystemParams& params, const CustomerPrimitives& primitives,
                             const InitialConditions& init, double horizon) {
    CoupledPair pair;
    pair.standard = simulate_standard(params, primitives, init, horizon);
    pair.ticket = simulate_ticket(params, primitives, init, horizon);
    pair.sup_gap_q = sup_gap_q(pair.standard, pair.ticket);
    pair.sup_gap_w = sup_gap_w(pair.standard, pair.ticket);
    return pair;
}

CoupledPair run_coupled_pair(const SystemParams& params, std::uint64_t seed, double horizon) {
    CustomerPrimitives prims = generate_stream(params, seed, horizon);
    InitialConditions init;  // empty system
    return run_coupled_pair(params, prims, init, horizon);
}

double state_space_collapse_gap(const SimTrajectory& traj, double mu_limit, double n) {
    double rn = std::sqrt(n);
    double gap = 0.0;
    auto consider = [&](double t) {
        double ql = static_cast<double>(traj.q_at(t));
        gap = std::max(gap, std::abs(ql / rn - mu_limit * rn * traj.w_at(t)));
        gap = std::max(gap, std::abs(ql / rn - mu_limit * rn * traj.w_before(t)));
    };
    for (const auto& p : traj.points) consider(p.t);
    return gap;
}

double utilization(const SimTrajectory& traj) {
    if (!(traj.horizon > 0.0)) throw std::invalid_argument("utilization: empty run");
    return traj.counters.busy_time / traj.horizon;
}

ScalingSeriesResult run_scaling_series(const ScalingConfig& config) {
    if (config.n_values.size() < 3)
        throw std::invalid_argument("scaling series: need at least 3 scale indices");
    if (!std::is_sorted(config.n_values.begin(), config.n_values.end()) ||
        std::adjacent_find(config.n_values.begin(), config.n_values.end()) != config.n_values.end())
        throw std::invalid_argument("scaling series: n values must be strictly increasing");
    if (config.seeds < 10) throw std::invalid_argument("scaling series: need at least 10 seeds");

    ScalingSeriesResult out;
    std::vector<double> ns, med_gap, med_cs, med_ct;
    for (double n : config.n_values) {
        double mu = n;
        double lambda = n + config.beta * std::sqrt(n);
        SystemParams params = SystemParams::markovian(lambda, mu, config.theta_b, config.theta_r);
        double rn = std::sqrt(n);
        double mu_limit = 1.0;  // mu^n / n under this scaling convention

        std::vector<double> gq, gw, cs, ct, avq;
        double idle_sum = 0.0;
        for (int s = 0; s < config.seeds; ++s) {
            std::uint64_t seed = replication_seed(config.base_seed, static_cast<std::uint64_t>(s));
            CoupledPair pair = run_coupled_pair(params, seed, config.horizon);
            ScalingSeriesResult::Record rec;
            rec.n = n;
            rec.seed = seed;
            rec.gap_q = pair.sup_gap_q / rn;
            rec.gap_w = pair.sup_gap_w * rn;
            rec.collapse_s = state_space_collapse_gap(pair.standard, mu_limit, n);
            rec.collapse_t = state_space_collapse_gap(pair.ticket, mu_limit, n);
            rec.util_s = utilization(pair.standard);
            rec.util_t = utilization(pair.ticket);
            out.records.push_back(rec);
            gq.push_back(rec.gap_q);
            gw.push_back(rec.gap_w);
            cs.push_back(rec.collapse_s);
            ct.push_back(rec.collapse_t);
            idle_sum += 1.0 - 0.5 * (rec.util_s + rec.util_t);
            avq.push_back(time_average(pair.standard, config.warmup_fraction).q_bar / rn);
        }
        ScalingRow row;
        row.n = n;
        row.median_gap_q = median(gq);
        row.median_gap_w = median(gw);
        row.median_collapse_s = median(cs);
        row.median_collapse_t = median(ct);
        row.mean_idle = idle_sum / config.seeds;
        row.median_avg_scaled_q = median(avq);
        out.rows.push_back(row);
        ns.push_back(n);
        med_gap.push_back(row.median_gap_q);
        med_cs.push_back(row.median_collapse_s);
        med_ct.push_back(row.median_collapse_t);
    }
    out.spearman_gap_q_vs_n = spearman(ns, med_gap);
    out.spearman_collapse_s_vs_n = spearman(ns, med_cs);
    out.spearman_collapse_t_vs_n = spearman(ns, med_ct);
    return out;
}

void ScalingSeriesResult::write_csv(std::ostream& os) const {
    os << "n,seed,gap_Q,gap_W,collapse_gap,utilization\n";
    char buf[200];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%.10g,%llu,%.10g,%.10g,%.10g,%.10g\n", r.n,
                      static_cast<unsigned long long>(r.seed), r.gap_q, r.gap_w,
                      std::max(r.collapse_s, r.collapse_t), 0.5 * (r.util_s + r.util_t));
        os << buf;
    }
}

void ScalingSeriesResult::write_markdown(std::ostream& os) const {
    os << "| n | median sup|Q~S-Q~T| | median sup|W~S-W~T| | median sup|Q~-muW~| (S) | (T) | mean idle | median avg Q~ |\n";
    os << "|---|---------------------|---------------------|--------------------------|-----|-----------|----------------|\n";
    char buf[240];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "| %.6g | %.4f | %.4f | %.4f | %.4f | %.4f | %.4f |\n", r.n,
                      r.median_gap_q, r.median_gap_w, r.median_collapse_s, r.median_collapse_t,
                      r.mean_idle, r.median_avg_scaled_q);
        os << buf;
    }
    std::snprintf(buf, sizeof buf,
                  "\nSpearman(n, median gap_Q) = %.3f; Spearman(n, median collapse S/T) = %.3f / %.3f\n",
                  spearman_gap_q_vs_n, spearman_collapse_s_vs_n, spearman_collapse_t_vs_n);
    os << buf;
}

}  // namespace ticketq
