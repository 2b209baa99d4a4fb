#include "ticketq/ticket_queue.hpp"

#include <cassert>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace ticketq {

int TicketBoard::resolve_front() {
    assert(!slots.empty() && slots.front().flag);
    slots.pop_front();
    int zeros = 0;
    while (!slots.empty() && !slots.front().flag) {
        slots.pop_front();
        ++zeros;
    }
    return zeros;
}

std::int64_t TicketBoard::unresolved_abandoned_count(double t) const {
    std::int64_t n = 0;
    for (const auto& s : slots)
        if (!s.flag && s.departure <= t) ++n;
    return n;
}

namespace {

enum class Ev : std::uint8_t { Departure = 0, Completion = 1, Arrival = 2 };

struct Event {
    double t;
    Ev kind;
    std::uint64_t seq;
    std::int64_t payload;

    bool operator>(const Event& o) const {
        if (t != o.t) return t > o.t;
        if (kind != o.kind) return kind > o.kind;
        return seq > o.seq;
    }
};

struct HolderInfo {
    double arrival;   // 0 for initial jobs
    double w_seen;    // W_T(t-) at arrival; w^hat_{i-1} for initial jobs
    bool is_initial;
};

}  // namespace

SimTrajectory simulate_ticket(const SystemParams& params, const CustomerPrimitives& primitives,
                              const InitialConditions& init, double horizon) {
    if (!(horizon > 0.0)) throw std::invalid_argument("simulate_ticket: horizon must be positive");

    SimTrajectory traj;
    traj.horizon = horizon;
    traj.w0 = init.w0;
    traj.has_x = true;
    traj.counters.q0 = init.q0;

    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> calendar;
    std::uint64_t seq = 0;
    TicketBoard board;
    std::vector<HolderInfo> holders;  // indexed like board holder ids (see key below)
    holders.reserve(static_cast<std::size_t>(init.q0) + primitives.count());

    // holder key: initial job i -> i; post-zero arrival i -> q0 + i
    auto info_of = [&](std::int64_t holder) -> HolderInfo& {
        return holders[static_cast<std::size_t>(holder)];
    };

    double clock = 0.0;
    double w = init.w0;
    std::int64_t x = 0;
    double busy_time = 0.0;
    bool in_service = false;

    auto point = [&] { traj.points.push_back({clock, board.perceived_length(), w}); };
    auto x_point = [&] { traj.x_points.push_back({clock, x}); };

    auto advance_to = [&](double t) {
        double dt = t - clock;
        if (dt > 0.0 && !board.slots.empty()) {
            busy_time += dt;
            w = std::max(0.0, w - dt);
        }
        clock = t;
    };

    auto begin_service = [&] {
        if (board.slots.empty()) {
            in_service = false;
            if (w < 1e-6) w = 0.0;
            return;
        }
        const auto& front = board.slots.front();
        assert(front.flag);
        const HolderInfo& hi = info_of(front.holder);
        double dev = hi.is_initial ? std::abs(clock - hi.w_seen)
                                   : std::abs((clock - hi.arrival) - hi.w_seen);
        traj.audit_wait_dev = std::max(traj.audit_wait_dev, dev);
        in_service = true;
        calendar.push({clock + front.service, Ev::Completion, seq++, front.holder});
    };

    for (std::int64_t i = 0; i < init.q0; ++i) {
        auto idx = static_cast<std::size_t>(i);
        HolderInfo hi;
        hi.arrival = 0.0;
        hi.is_initial = true;
        hi.w_seen = i == 0 ? 0.0 : init.cumulative_work[idx - 1];
        holders.push_back(hi);
        TicketBoard::Slot s;
        s.holder = i;
        s.flag = init.served_flags[idx];
        if (s.flag) {
            s.service = init.unitized_services[idx] / params.mu;
        } else {
            s.departure = init.residual_deadlines[idx];
            calendar.push({s.departure, Ev::Departure, seq++, i});
        }
        board.slots.push_back(s);
    }
    for (std::size_t i = 0; i < primitives.count(); ++i)
        calendar.push({primitives.arrival_time[i], Ev::Arrival, seq++,
                       static_cast<std::int64_t>(init.q0) + static_cast<std::int64_t>(i)});

    point();
    x_point();
    if (!board.slots.empty()) begin_service();  // first initial job is always a one

    while (!calendar.empty() && calendar.top().t <= horizon) {
        Event ev = calendar.top();
        calendar.pop();
        advance_to(ev.t);

        switch (ev.kind) {
            case Ev::Arrival: {
                auto i = static_cast<std::size_t>(ev.payload - init.q0);
                std::int64_t q_seen = board.perceived_length();
                double w_seen = w;
                traj.counters.arrivals += 1;
                if (primitives.b[i] <= static_cast<double>(q_seen) / params.mu) {
                    traj.counters.balked += 1;
                    traj.arrivals.push_back({clock, ArrivalOutcome::Balked});
                    break;
                }
                HolderInfo hi;
                hi.arrival = clock;
                hi.is_initial = false;
                hi.w_seen = w_seen;
                holders.push_back(hi);
                TicketBoard::Slot s;
                s.holder = ev.payload;
                if (primitives.d[i] <= w_seen) {
                    s.flag = false;
                    s.departure = clock + primitives.d[i];
                    calendar.push({s.departure, Ev::Departure, seq++, ev.payload});
                    traj.arrivals.push_back({clock, ArrivalOutcome::Abandoned});
                    assert(w_seen > 0.0 && !board.slots.empty());
                } else {
                    s.flag = true;
                    s.service = primitives.v[i] / params.mu;
                    w += s.service;
                    traj.arrivals.push_back({clock, ArrivalOutcome::Served});
                }
                board.slots.push_back(s);
                point();
                if (!in_service) begin_service();
                break;
            }
            case Ev::Departure: {
                // the holder walks out; the board cannot see it
                x += 1;
                x_point();
                break;
            }
            case Ev::Completion: {
                const HolderInfo& done = info_of(ev.payload);
                if (done.is_initial) traj.counters.init_completions += 1;
                else traj.counters.completions += 1;

                // audit resolution times of the zeros removed at this instant
                std::size_t k = 1;
                while (k < board.slots.size() && !board.slots[k].flag) {
                    const HolderInfo& hi = info_of(board.slots[k].holder);
                    double dev = hi.is_initial ? std::abs(clock - hi.w_seen)
                                               : std::abs(clock - (hi.arrival + hi.w_seen));
                    traj.audit_resolution_dev = std::max(traj.audit_resolution_dev, dev);
                    if (hi.is_initial) traj.counters.init_reneged += 1;
                    else traj.counters.reneged += 1;
                    ++k;
                }
                int zeros = board.resolve_front();
                assert(static_cast<std::size_t>(zeros) == k - 1);
                x -= zeros;
                if (zeros > 0) x_point();
                in_service = false;
                begin_service();
                point();
                break;
            }
        }
    }

    advance_to(horizon);
    traj.counters.busy_time = busy_time;
    traj.points.push_back({horizon, board.perceived_length(), w});

    std::int64_t still = board.perceived_length();
    std::int64_t still_init = init.q0 - traj.counters.init_reneged - traj.counters.init_completions;
    assert(traj.counters.arrivals == traj.counters.balked + traj.counters.reneged +
                                         traj.counters.completions + (still - still_init));
    (void)still;
    (void)still_init;
    return traj;
}

SimTrajectory simulate_ticket_markov_aggregate(const SystemParams& params, std::uint64_t seed,
                                               double horizon) {
    if (!(horizon > 0.0))
        throw std::invalid_argument("simulate_ticket_markov_aggregate: horizon must be positive");
    if (params.balking.kind != DistKind::Exponential && params.balking.kind != DistKind::None)
        throw std::invalid_argument("markov aggregate formulation requires an exponential balking law");
    if (params.deadline.kind != DistKind::Exponential && params.deadline.kind != DistKind::None)
        throw std::invalid_argument("markov aggregate formulation requires an exponential deadline law");
    if (params.interarrival.kind != DistKind::Exponential || params.service.kind != DistKind::Exponential)
        throw std::invalid_argument("markov aggregate formulation requires exponential arrivals/services");

    double theta_r = params.deadline.derivative_at_zero();

    Sampler clock_rng(seed, 10), balk_rng(seed, 11), pick_rng(seed, 12), which_rng(seed, 13);

    SimTrajectory traj;
    traj.horizon = horizon;
    traj.has_w = false;
    traj.has_x = true;

    // board of arrival indices; flag lives in `abandoned`
    std::deque<std::int64_t> board;
    std::vector<bool> abandoned;  // per arrival index of joiners... indexed by ticket id
    std::vector<std::int64_t> ticket_arrival;  // ticket id -> arrivals[] index
    std::int64_t waiting_ones = 0;  // waiting flag-1 tickets (excludes the one in service)
    std::int64_t x = 0;
    double clockt = 0.0;
    double busy_time = 0.0;

    auto q_len = [&] { return static_cast<std::int64_t>(board.size()); };
    auto point = [&] { traj.points.push_back({clockt, q_len(), 0.0}); };
    auto x_point = [&] { traj.x_points.push_back({clockt, x}); };

    point();
    x_point();

    for (;;) {
        double rate_arr = params.lambda;
        double rate_svc = board.empty() ? 0.0 : params.mu;
        double rate_abn = static_cast<double>(waiting_ones) * theta_r;
        double total = rate_arr + rate_svc + rate_abn;
        double dt = clock_rng.exponential(total);
        if (clockt + dt > horizon) {
            busy_time += board.empty() ? 0.0 : (horizon - clockt);
            clockt = horizon;
            break;
        }
        busy_time += board.empty() ? 0.0 : dt;
        clockt += dt;

        double u = which_rng.uniform() * total;
        if (u < rate_arr) {
            traj.counters.arrivals += 1;
            double pb = params.balking.cdf(static_cast<double>(q_len()) / params.mu);
            if (balk_rng.uniform() <= pb) {
                traj.counters.balked += 1;
                traj.arrivals.push_back({clockt, ArrivalOutcome::Balked});
                continue;
            }
            std::int64_t tid = static_cast<std::int64_t>(abandoned.size());
            abandoned.push_back(false);
            ticket_arrival.push_back(static_cast<std::int64_t>(traj.arrivals.size()));
            traj.arrivals.push_back({clockt, ArrivalOutcome::Served});  // may flip below
            if (!board.empty()) waiting_ones += 1;                      // else enters service
            board.push_back(tid);
            point();
        } else if (u < rate_arr + rate_svc) {
            traj.counters.completions += 1;
            board.pop_front();
            while (!board.empty() && abandoned[static_cast<std::size_t>(board.front())]) {
                board.pop_front();
                traj.counters.reneged += 1;
                x -= 1;
            }
            if (!board.empty()) waiting_ones -= 1;  // new front leaves the waiting pool
            point();
            x_point();
        } else {
            // aggregate clock fired: one of the waiting ones abandons, uniformly
            assert(waiting_ones > 0);
            std::int64_t pick = static_cast<std::int64_t>(pick_rng.uniform() * static_cast<double>(waiting_ones));
            if (pick >= waiting_ones) pick = waiting_ones - 1;
            for (std::size_t k = 1; k < board.size(); ++k) {
                std::int64_t tid = board[k];
                if (!abandoned[static_cast<std::size_t>(tid)]) {
                    if (pick == 0) {
                        abandoned[static_cast<std::size_t>(tid)] = true;
                        traj.arrivals[static_cast<std::size_t>(ticket_arrival[static_cast<std::size_t>(tid)])]
                            .outcome = ArrivalOutcome::Abandoned;
                        waiting_ones -= 1;
                        x += 1;
                        break;
                    }
                    --pick;
                }
            }
            x_point();
        }
    }

    traj.counters.busy_time = busy_time;
    traj.points.push_back({horizon, q_len(), 0.0});
    return traj;
}

}  // namespace ticketq
