#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "ticketq/primitives.hpp"
#include "ticketq/trajectory.hpp"

namespace ticketq {

/// The zero/one board: outstanding tickets in arrival order, the front (a one
/// while in service) first. Zeros are tickets whose holders have left but
/// whose departure the system has not yet discovered.
struct TicketBoard {
    struct Slot {
        std::int64_t holder;    // arrival index, or -(i+1) for initial job i
        bool flag;              // 1 = will be served, 0 = abandoned
        double service = 0.0;   // time units, flag 1 only
        double departure = 0.0; // physical departure time, flag 0 only
    };

    std::deque<Slot> slots;

    std::int64_t perceived_length() const { return static_cast<std::int64_t>(slots.size()); }

    /// After a service completion: removes the completed front ticket, then all
    /// leading zeros in zero elapsed time. Returns the number of zeros removed;
    /// the new front (if any) has flag 1 and enters service.
    int resolve_front();

    /// X(t): zeros on the board whose holder has physically departed by t.
    std::int64_t unresolved_abandoned_count(double t) const;
};

/// Ticket queue: a joining customer with d <= W_T(t-) holds a flag-0 ticket
/// from arrival; the system detects the defection only when that ticket
/// reaches the front. Perceived length (all outstanding tickets) drives
/// balking.
SimTrajectory simulate_ticket(const SystemParams& params, const CustomerPrimitives& primitives,
                              const InitialConditions& init, double horizon);

/// Markov-chain formulation for exponential laws: one aggregate exponential
/// clock for all waiting unabandoned tickets, rate (#waiting ones) * theta_r,
/// recomputed at every transition; the abandoning ticket is chosen uniformly.
/// Throws for non-exponential balking/deadline laws.
SimTrajectory simulate_ticket_markov_aggregate(const SystemParams& params, std::uint64_t seed,
                                               double horizon);

}  // namespace ticketq
