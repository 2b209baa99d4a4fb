#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ticketq {

enum class ArrivalOutcome : std::uint8_t { Balked, Abandoned, Served };

struct ArrivalRecord {
    double t;
    ArrivalOutcome outcome;
};

struct Counters {
    std::int64_t arrivals = 0;        // A
    std::int64_t balked = 0;          // B
    std::int64_t reneged = 0;         // R (detected, post-zero customers)
    std::int64_t init_reneged = 0;    // R^hat (detected, initial jobs)
    std::int64_t completions = 0;     // S (post-zero customers)
    std::int64_t init_completions = 0; // S^hat
    std::int64_t q0 = 0;              // initial job count
    double busy_time = 0.0;           // T(horizon)
};

/// Piecewise-constant Q path and piecewise-linear W path (slope -1 while
/// Q > 0), recorded at every event epoch, plus the counters at the horizon.
/// Ticket runs carry an extra X(t) channel (unresolved abandoned tickets).
struct SimTrajectory {
    struct Point {
        double t;
        std::int64_t q;  // value on [t, next t)
        double w;        // value at t (post-jump)
    };

    double horizon = 0.0;
    double w0 = 0.0;
    std::vector<Point> points;                       // first point at t = 0
    std::vector<std::pair<double, std::int64_t>> x_points;  // ticket only; value on [t, next t)
    std::vector<ArrivalRecord> arrivals;             // outcome decided at arrival
    Counters counters;
    bool has_w = true;   // Markov-aggregate ticket runs do not track W
    bool has_x = false;

    // per-run audits (max |observed - predicted| over audited events)
    double audit_wait_dev = 0.0;        // served waits vs W(arrival-)
    double audit_resolution_dev = 0.0;  // ticket resolution vs arrival + W(arrival-)

    std::int64_t q_at(double t) const;   // right-continuous
    double w_at(double t) const;         // right-continuous
    double w_before(double t) const;     // left limit
    std::int64_t x_at(double t) const;
    double idle_time() const { return horizon - counters.busy_time; }
    double utilization() const { return horizon > 0.0 ? counters.busy_time / horizon : 0.0; }

    /// CSV: header, one row per breakpoint, then a `#`-prefixed counters record.
    void write_csv(std::ostream& os) const;
};

/// sup_t |Q_a(t) - Q_b(t)| over the merged breakpoint grid (exact for
/// piecewise-constant paths).
double sup_gap_q(const SimTrajectory& a, const SimTrajectory& b);

/// sup_t |W_a(t) - W_b(t)|; both paths are piecewise linear with slopes in
/// {0,-1}, so the sup over merged breakpoints (left and right limits) is exact.
double sup_gap_w(const SimTrajectory& a, const SimTrajectory& b);

}  // namespace ticketq
