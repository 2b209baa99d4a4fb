#include "ticketq/table_runner.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "ticketq/coupling.hpp"
#include "ticketq/standard_queue.hpp"
#include "ticketq/ticket_queue.hpp"

namespace ticketq {

namespace {

/// index-stamped parallel map: results land in their slot regardless of the
/// order workers finish, keeping outputs reproducible.
template <typename Fn>
void parallel_for(int count, Fn fn) {
    unsigned hw = std::thread::hardware_concurrency();
    int workers = static_cast<int>(hw == 0 ? 1 : hw);
    if (workers > count) workers = count;
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

ConfidenceInterval ci_of(const std::vector<SimMetrics>& ms, double SimMetrics::*field) {
    std::vector<double> vals;
    vals.reserve(ms.size());
    for (const auto& m : ms) vals.push_back(m.*field);
    return ci(vals, 0.95);
}

CellStats cell_stats(const std::vector<SimMetrics>& ms) {
    return {ci_of(ms, &SimMetrics::q_bar), ci_of(ms, &SimMetrics::w_bar),
            ci_of(ms, &SimMetrics::r_frac), ci_of(ms, &SimMetrics::b_frac)};
}

}  // namespace

std::vector<GridPoint> table_grid() {
    std::vector<GridPoint> grid;
    for (double rho : {1.1, 1.01, 1.0, 0.99, 0.9, 0.8})
        for (double mu : {100.0, 25.0, 4.0})
            grid.push_back({rho, mu, (rho * mu - mu) / std::sqrt(mu)});
    return grid;
}

int fidelity_replications(Fidelity f) {
    switch (f) {
        case Fidelity::Smoke: return 2;
        case Fidelity::Desk: return 50;
        case Fidelity::Full: return 200;
    }
    return 50;
}

double fidelity_horizon(Fidelity f, double mu) {
    switch (f) {
        case Fidelity::Smoke: return 50.0;
        case Fidelity::Desk: return mu < 10.0 ? 2000.0 : 500.0;
        case Fidelity::Full: return mu < 10.0 ? 8000.0 : 2000.0;
    }
    return 500.0;
}

SystemParams params_for(Family family, double lambda, double mu, double theta_b, double theta_r) {
    return family == Family::Markovian ? SystemParams::markovian(lambda, mu, theta_b, theta_r)
                                       : SystemParams::lognormal_uniform(lambda, mu, theta_b, theta_r);
}

std::vector<SimMetrics> run_replications(Discipline d, const SystemParams& params, int reps,
                                         double horizon, double warmup, std::uint64_t seed) {
    if (reps < 1) throw std::invalid_argument("run_replications: need at least one replication");
    std::vector<SimMetrics> out(static_cast<std::size_t>(reps));
    InitialConditions empty;
    parallel_for(reps, [&](int r) {
        std::uint64_t rs = replication_seed(seed, static_cast<std::uint64_t>(r));
        SimTrajectory traj;
        switch (d) {
            case Discipline::Standard:
                traj = simulate_standard(params, generate_stream(params, rs, horizon), empty, horizon);
                break;
            case Discipline::Ticket:
                traj = simulate_ticket(params, generate_stream(params, rs, horizon), empty, horizon);
                break;
            case Discipline::TicketMarkov:
                traj = simulate_ticket_markov_aggregate(params, rs, horizon);
                break;
        }
        out[static_cast<std::size_t>(r)] = time_average(traj, warmup);
    });
    return out;
}

ReplicationSet run_paired_replications(const SystemParams& params, int reps, double horizon,
                                       double warmup, std::uint64_t seed) {
    if (reps < 1) throw std::invalid_argument("run_paired_replications: need at least one replication");
    ReplicationSet set;
    set.standard.resize(static_cast<std::size_t>(reps));
    set.ticket.resize(static_cast<std::size_t>(reps));
    InitialConditions empty;
    parallel_for(reps, [&](int r) {
        std::uint64_t rs = replication_seed(seed, static_cast<std::uint64_t>(r));
        CustomerPrimitives prims = generate_stream(params, rs, horizon);
        set.standard[static_cast<std::size_t>(r)] =
            time_average(simulate_standard(params, prims, empty, horizon), warmup);
        set.ticket[static_cast<std::size_t>(r)] =
            time_average(simulate_ticket(params, prims, empty, horizon), warmup);
    });
    return set;
}

std::vector<TableRow> run_table(const RunConfig& config) {
    if (config.table_id < 1 || config.table_id > 4)
        throw std::invalid_argument("run_table: unknown table id " + std::to_string(config.table_id));
    int reps = config.replications > 0 ? config.replications : fidelity_replications(config.fidelity);
    double theta = config.theta_each();
    std::vector<GridPoint> grid = table_grid();
    std::vector<TableRow> rows(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        const GridPoint& pt = grid[g];
        double lambda = pt.rho * pt.mu;
        double horizon = config.horizon > 0.0 ? config.horizon
                                              : fidelity_horizon(config.fidelity, pt.mu);
        SystemParams params = params_for(config.family(), lambda, pt.mu, theta, theta);
        // one seed stream per grid point so rows are independent
        std::uint64_t grid_seed = replication_seed(config.seed, 1000 + g);
        ReplicationSet set = run_paired_replications(params, reps, horizon, config.warmup, grid_seed);
        TableRow row;
        row.point = pt;
        row.theta_b = theta;
        row.theta_r = theta;
        row.standard = cell_stats(set.standard);
        row.ticket = cell_stats(set.ticket);
        row.rou = build_rou_summary(params);
        rows[g] = row;
    }
    return rows;
}

void write_table_csv(const std::vector<TableRow>& rows, std::ostream& os) {
    os << "discipline,rho,mu,beta,theta_b,theta_r,Q,Q_hw,W,W_hw,R,R_hw,B,B_hw,"
          "Q_rou,W_rou,R_rou,B_rou\n";
    char buf[512];
    for (const auto& row : rows) {
        const RouSummary& a = row.rou;
        for (int d = 0; d < 2; ++d) {
            const CellStats& c = d == 0 ? row.standard : row.ticket;
            std::snprintf(buf, sizeof buf,
                          "%s,%.6g,%.6g,%.6g,%.6g,%.6g,"
                          "%.6g,%.3g,%.6g,%.3g,%.6g,%.3g,%.6g,%.3g,"
                          "%.6g,%.6g,%.6g,%.6g\n",
                          d == 0 ? "S" : "T", row.point.rho, row.point.mu, row.point.beta,
                          row.theta_b, row.theta_r, c.q.mean, c.q.half_width, c.w.mean,
                          c.w.half_width, c.r.mean, c.r.half_width, c.b.mean, c.b.half_width,
                          a.e_q, a.e_w, a.alpha1, a.gamma1);
            os << buf;
        }
    }
}

void write_table_markdown(const std::vector<TableRow>& rows, std::ostream& os) {
    os << "| Q_a | rho | mu | beta | Q | Q_ROU | W | W_ROU | R | R_ROU | B | B_ROU |\n";
    os << "|-----|-----|----|------|---|-------|---|-------|---|-------|---|-------|\n";
    char buf[512];
    for (const auto& row : rows) {
        const RouSummary& a = row.rou;
        for (int d = 0; d < 2; ++d) {
            const CellStats& c = d == 0 ? row.standard : row.ticket;
            std::snprintf(buf, sizeof buf,
                          "| Q_%s | %.6g | %.6g | %.6g | %.4g ± %.2g | %.4g | %.4g ± %.2g | %.4g "
                          "| %.4g ± %.2g | %.4g | %.4g ± %.2g | %.4g |\n",
                          d == 0 ? "S" : "T", row.point.rho, row.point.mu, row.point.beta,
                          c.q.mean, c.q.half_width, a.e_q, c.w.mean, c.w.half_width, a.e_w,
                          c.r.mean, c.r.half_width, a.alpha1, c.b.mean, c.b.half_width, a.gamma1);
            os << buf;
        }
    }
}

}  // namespace ticketq
