#pragma once

#include <cstdint>

#include "ticketq/primitives.hpp"
#include "ticketq/trajectory.hpp"

namespace ticketq {

/// An arriving customer joins iff b > Q(t-)/mu, where Q(t-) counts the
/// customer in service.
bool balk_decision(double b, std::int64_t q_seen, double mu);

struct RenegeDecision {
    bool abandons;
    double offset;  // queue-length decrement happens at arrival + offset
};

/// A joining customer abandons iff d <= W(t-); the decrement is scheduled at
/// arrival + d. No timer is kept for customers that will be served.
RenegeDecision renege_decision_standard(double d, double w_seen);

/// Event-driven standard queue: abandonment is visible the instant it occurs.
/// Initial jobs are served first; initial job i abandons (decrement at
/// d^hat_i) iff d^hat_i <= w^hat_{i-1}. Ties break abandonment < completion
/// < arrival.
SimTrajectory simulate_standard(const SystemParams& params, const CustomerPrimitives& primitives,
                                const InitialConditions& init, double horizon);

}  // namespace ticketq
