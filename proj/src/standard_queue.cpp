#include "ticketq/standard_queue.hpp"

#include <cassert>
#include <cmath>
#include <deque>
#include <queue>
#include <stdexcept>
#include <vector>

namespace ticketq {

bool balk_decision(double b, std::int64_t q_seen, double mu) {
    return b > static_cast<double>(q_seen) / mu;
}

RenegeDecision renege_decision_standard(double d, double w_seen) {
    if (d <= w_seen) return {true, d};
    return {false, 0.0};
}

namespace {

enum class Ev : std::uint8_t { Abandon = 0, Completion = 1, Arrival = 2 };

struct Event {
    double t;
    Ev kind;
    std::uint64_t seq;   // creation order, makes ties deterministic
    std::int64_t payload; // job index, or arrival index

    bool operator>(const Event& o) const {
        if (t != o.t) return t > o.t;
        if (kind != o.kind) return kind > o.kind;
        return seq > o.seq;
    }
};

struct Job {
    double arrival;
    double service;      // time units, valid when will_serve
    double w_seen;       // W(t-) at arrival; w^hat_{i-1} for initial jobs
    bool will_serve;
    bool is_initial;
    bool alive = true;
};

}  // namespace

SimTrajectory simulate_standard(const SystemParams& params, const CustomerPrimitives& primitives,
                                const InitialConditions& init, double horizon) {
    if (!(horizon > 0.0)) throw std::invalid_argument("simulate_standard: horizon must be positive");

    SimTrajectory traj;
    traj.horizon = horizon;
    traj.w0 = init.w0;
    traj.counters.q0 = init.q0;

    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> calendar;
    std::uint64_t seq = 0;
    std::vector<Job> jobs;
    jobs.reserve(static_cast<std::size_t>(init.q0) + primitives.count());
    std::deque<std::int64_t> fifo;

    double clock = 0.0;
    double w = init.w0;
    std::int64_t q = 0;
    double busy_time = 0.0;
    std::int64_t in_service = -1;  // job index

    auto point = [&] { traj.points.push_back({clock, q, w}); };

    auto advance_to = [&](double t) {
        double dt = t - clock;
        if (dt > 0.0 && q > 0) {
            busy_time += dt;
            w = std::max(0.0, w - dt);
        }
        clock = t;
    };

    auto start_next_service = [&] {
        while (!fifo.empty() && !jobs[fifo.front()].alive) fifo.pop_front();
        if (fifo.empty()) {
            in_service = -1;
            assert(q == 0);
            if (w < 1e-6) w = 0.0;  // drop float drift at idle
            return;
        }
        std::int64_t j = fifo.front();
        fifo.pop_front();
        assert(jobs[j].will_serve);
        double expected_wait = jobs[j].is_initial ? jobs[j].w_seen : jobs[j].w_seen;
        double dev = std::abs((clock - jobs[j].arrival) - expected_wait);
        if (jobs[j].is_initial) dev = std::abs(clock - jobs[j].w_seen);  // starts at w^hat_{i-1}
        traj.audit_wait_dev = std::max(traj.audit_wait_dev, dev);
        in_service = j;
        calendar.push({clock + jobs[j].service, Ev::Completion, seq++, j});
    };

    // initial jobs occupy the head of the line; job 1 starts at t = 0
    for (std::int64_t i = 0; i < init.q0; ++i) {
        auto idx = static_cast<std::size_t>(i);
        Job job;
        job.arrival = 0.0;
        job.is_initial = true;
        job.will_serve = init.served_flags[idx];
        job.service = init.unitized_services[idx] / params.mu;
        job.w_seen = i == 0 ? 0.0 : init.cumulative_work[idx - 1];  // w^hat_{i-1}
        jobs.push_back(job);
        fifo.push_back(i);
        q += 1;
        if (!job.will_serve) calendar.push({init.residual_deadlines[idx], Ev::Abandon, seq++, i});
    }
    for (std::size_t i = 0; i < primitives.count(); ++i)
        calendar.push({primitives.arrival_time[i], Ev::Arrival, seq++, static_cast<std::int64_t>(i)});

    point();  // state at time 0 (before starting service; Q/W already set)
    if (q > 0) start_next_service();

    while (!calendar.empty() && calendar.top().t <= horizon) {
        Event ev = calendar.top();
        calendar.pop();
        advance_to(ev.t);

        switch (ev.kind) {
            case Ev::Arrival: {
                auto i = static_cast<std::size_t>(ev.payload);
                std::int64_t q_seen = q;
                double w_seen = w;
                traj.counters.arrivals += 1;
                if (!balk_decision(primitives.b[i], q_seen, params.mu)) {
                    traj.counters.balked += 1;
                    traj.arrivals.push_back({clock, ArrivalOutcome::Balked});
                    break;
                }
                Job job;
                job.arrival = clock;
                job.is_initial = false;
                job.w_seen = w_seen;
                RenegeDecision rd = renege_decision_standard(primitives.d[i], w_seen);
                if (rd.abandons) {
                    job.will_serve = false;
                    job.service = 0.0;
                    jobs.push_back(job);
                    fifo.push_back(static_cast<std::int64_t>(jobs.size()) - 1);
                    calendar.push({clock + rd.offset, Ev::Abandon, seq++,
                                   static_cast<std::int64_t>(jobs.size()) - 1});
                    traj.arrivals.push_back({clock, ArrivalOutcome::Abandoned});
                } else {
                    job.will_serve = true;
                    job.service = primitives.v[i] / params.mu;
                    jobs.push_back(job);
                    fifo.push_back(static_cast<std::int64_t>(jobs.size()) - 1);
                    w += job.service;
                    traj.arrivals.push_back({clock, ArrivalOutcome::Served});
                }
                q += 1;
                point();
                if (in_service < 0) start_next_service();
                break;
            }
            case Ev::Abandon: {
                Job& job = jobs[static_cast<std::size_t>(ev.payload)];
                assert(job.alive && !job.will_serve);
                job.alive = false;
                q -= 1;
                if (job.is_initial) traj.counters.init_reneged += 1;
                else traj.counters.reneged += 1;
                point();
                break;
            }
            case Ev::Completion: {
                assert(ev.payload == in_service);
                Job& job = jobs[static_cast<std::size_t>(ev.payload)];
                job.alive = false;
                q -= 1;
                if (job.is_initial) traj.counters.init_completions += 1;
                else traj.counters.completions += 1;
                in_service = -1;
                start_next_service();
                point();
                break;
            }
        }
    }

    advance_to(horizon);
    traj.counters.busy_time = busy_time;
    traj.points.push_back({horizon, q, w});

    // flow balance: joined customers are reneged, completed, or still present
    std::int64_t still = q;
    assert(traj.counters.arrivals == traj.counters.balked + traj.counters.reneged +
                                         traj.counters.completions +
                                         (still - (init.q0 - traj.counters.init_reneged -
                                                   traj.counters.init_completions)));
    (void)still;
    return traj;
}

}  // namespace ticketq
