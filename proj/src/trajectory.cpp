#include "ticketq/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace ticketq {

namespace {

// index of the last point with points[i].t <= t (points are sorted, first at 0)
std::size_t segment_index(const std::vector<SimTrajectory::Point>& pts, double t) {
    auto it = std::upper_bound(pts.begin(), pts.end(), t,
                               [](double x, const SimTrajectory::Point& p) { return x < p.t; });
    if (it == pts.begin()) return 0;
    return static_cast<std::size_t>(it - pts.begin()) - 1;
}

double w_on_segment(const SimTrajectory::Point& p, double t) {
    if (p.q > 0) return std::max(0.0, p.w - (t - p.t));
    return p.w;
}

}  // namespace

std::int64_t SimTrajectory::q_at(double t) const {
    if (points.empty() || t < points.front().t) return 0;
    return points[segment_index(points, t)].q;
}

double SimTrajectory::w_at(double t) const {
    if (points.empty() || t < points.front().t) return 0.0;
    return w_on_segment(points[segment_index(points, t)], t);
}

double SimTrajectory::w_before(double t) const {
    if (points.empty() || t <= points.front().t) return 0.0;
    std::size_t i = segment_index(points, t);
    if (points[i].t == t && i > 0) i -= 1;  // left limit comes from the previous segment
    return w_on_segment(points[i], t);
}

std::int64_t SimTrajectory::x_at(double t) const {
    if (x_points.empty() || t < x_points.front().first) return 0;
    auto it = std::upper_bound(x_points.begin(), x_points.end(), t,
                               [](double x, const std::pair<double, std::int64_t>& p) { return x < p.first; });
    if (it == x_points.begin()) return 0;
    return (it - 1)->second;
}

void SimTrajectory::write_csv(std::ostream& os) const {
    char buf[160];
    os << (has_x ? "time,Q,W,X\n" : "time,Q,W\n");
    std::size_t xi = 0;
    std::int64_t x = 0;
    for (const auto& p : points) {
        if (has_x) {
            while (xi < x_points.size() && x_points[xi].first <= p.t) x = x_points[xi++].second;
            std::snprintf(buf, sizeof buf, "%.10g,%lld,%.10g,%lld\n", p.t,
                          static_cast<long long>(p.q), p.w, static_cast<long long>(x));
        } else {
            std::snprintf(buf, sizeof buf, "%.10g,%lld,%.10g\n", p.t,
                          static_cast<long long>(p.q), p.w);
        }
        os << buf;
    }
    const Counters& c = counters;
    std::snprintf(buf, sizeof buf, "# horizon=%.10g W0=%.10g busy_time=%.10g\n", horizon, w0, c.busy_time);
    os << buf;
    std::snprintf(buf, sizeof buf,
                  "# A=%lld B=%lld R=%lld Rhat=%lld S=%lld Shat=%lld Q0=%lld\n",
                  static_cast<long long>(c.arrivals), static_cast<long long>(c.balked),
                  static_cast<long long>(c.reneged), static_cast<long long>(c.init_reneged),
                  static_cast<long long>(c.completions), static_cast<long long>(c.init_completions),
                  static_cast<long long>(c.q0));
    os << buf;
}

double sup_gap_q(const SimTrajectory& a, const SimTrajectory& b) {
    double gap = 0.0;
    std::size_t i = 0, j = 0;
    std::int64_t qa = 0, qb = 0;
    while (i < a.points.size() || j < b.points.size()) {
        double ta = i < a.points.size() ? a.points[i].t : std::numeric_limits<double>::infinity();
        double tb = j < b.points.size() ? b.points[j].t : std::numeric_limits<double>::infinity();
        if (ta <= tb) qa = a.points[i++].q;
        if (tb <= ta) qb = b.points[j++].q;
        gap = std::max(gap, static_cast<double>(std::llabs(qa - qb)));
    }
    return gap;
}

double sup_gap_w(const SimTrajectory& a, const SimTrajectory& b) {
    double gap = 0.0;
    auto consider = [&](double t) {
        gap = std::max(gap, std::abs(a.w_before(t) - b.w_before(t)));
        gap = std::max(gap, std::abs(a.w_at(t) - b.w_at(t)));
    };
    for (const auto& p : a.points) consider(p.t);
    for (const auto& p : b.points) consider(p.t);
    return gap;
}

}  // namespace ticketq
