#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ticketq/primitives.hpp"
#include "ticketq/rou.hpp"
#include "ticketq/stats.hpp"

namespace ticketq {

enum class Family { Markovian, LognormalUniform };
enum class Fidelity { Smoke, Desk, Full };

/// One (rho, mu, beta) cell of the experiment grids.
struct GridPoint {
    double rho;
    double mu;
    double beta;  // (lambda - mu)/sqrt(mu) with lambda = rho * mu
};

/// rho in {1.1, 1.01, 1, .99, .9, .8} x mu in {100, 25, 4}.
std::vector<GridPoint> table_grid();

struct RunConfig {
    int table_id = 1;  // 1/3 markovian, 2/4 lognormal-uniform; theta .1 or 1
    Fidelity fidelity = Fidelity::Desk;
    std::uint64_t seed = 1;
    double warmup = 0.2;
    // optional overrides (<= 0 means use the fidelity defaults)
    int replications = 0;
    double horizon = 0.0;

    Family family() const { return table_id == 1 || table_id == 3 ? Family::Markovian : Family::LognormalUniform; }
    double theta_each() const { return table_id <= 2 ? 0.1 : 1.0; }
};

int fidelity_replications(Fidelity f);
double fidelity_horizon(Fidelity f, double mu);

SystemParams params_for(Family family, double lambda, double mu, double theta_b, double theta_r);

/// Replication summary for one discipline at one grid point.
struct CellStats {
    ConfidenceInterval q, w, r, b;
};

struct TableRow {
    GridPoint point;
    double theta_b, theta_r;
    CellStats standard;
    CellStats ticket;
    RouSummary rou;
};

/// Paired (common-random-number) runs of both disciplines over the grid.
/// Runs fan out over a bounded worker pool; aggregation order is fixed, so
/// equal (config, seed) gives byte-identical output.
std::vector<TableRow> run_table(const RunConfig& config);

void write_table_csv(const std::vector<TableRow>& rows, std::ostream& os);
void write_table_markdown(const std::vector<TableRow>& rows, std::ostream& os);

/// Per-replication metrics for a single parameter point (used by `simulate`
/// and the acceptance suite).
struct ReplicationSet {
    std::vector<SimMetrics> standard;
    std::vector<SimMetrics> ticket;
};

enum class Discipline { Standard, Ticket, TicketMarkov };

std::vector<SimMetrics> run_replications(Discipline d, const SystemParams& params, int reps,
                                         double horizon, double warmup, std::uint64_t seed);

/// Both disciplines on shared primitives, one entry per replication.
ReplicationSet run_paired_replications(const SystemParams& params, int reps, double horizon,
                                       double warmup, std::uint64_t seed);

}  // namespace ticketq
