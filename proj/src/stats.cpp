#include "ticketq/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ticketq {

SimMetrics time_average(const SimTrajectory& traj, double warmup_fraction) {
    if (traj.points.empty()) throw std::invalid_argument("time_average: empty trajectory");
    if (!(warmup_fraction >= 0.0) || warmup_fraction >= 1.0)
        throw std::invalid_argument("time_average: warmup_fraction must be in [0,1)");

    double lo = warmup_fraction * traj.horizon;
    double hi = traj.horizon;
    double len = hi - lo;
    if (!(len > 0.0)) throw std::invalid_argument("time_average: empty averaging window");

    SimMetrics m;
    double area_q = 0.0, area_w = 0.0, busy = 0.0;
    const auto& pts = traj.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double t0 = std::max(lo, pts[i].t);
        double t1 = std::min(hi, i + 1 < pts.size() ? pts[i + 1].t : hi);
        if (t1 <= t0) continue;
        double dt = t1 - t0;
        area_q += dt * static_cast<double>(pts[i].q);
        if (pts[i].q > 0) {
            busy += dt;
            // W declines at rate 1 on this stretch; integrate the trapezoid
            double w_start = std::max(0.0, pts[i].w - (t0 - pts[i].t));
            double w_end = std::max(0.0, pts[i].w - (t1 - pts[i].t));
            area_w += 0.5 * (w_start + w_end) * dt;
        } else {
            area_w += pts[i].w * dt;
        }
    }
    m.q_bar = area_q / len;
    m.w_bar = traj.has_w ? area_w / len : std::numeric_limits<double>::quiet_NaN();
    m.idle_frac = 1.0 - busy / len;

    if (traj.has_x) {
        double area_x = 0.0;
        const auto& xp = traj.x_points;
        for (std::size_t i = 0; i < xp.size(); ++i) {
            double t0 = std::max(lo, xp[i].first);
            double t1 = std::min(hi, i + 1 < xp.size() ? xp[i + 1].first : hi);
            if (t1 > t0) area_x += (t1 - t0) * static_cast<double>(xp[i].second);
        }
        m.x_bar = area_x / len;
    }

    std::int64_t n = 0, reneged = 0, balked = 0;
    for (const auto& a : traj.arrivals) {
        if (a.t < lo || a.t > hi) continue;
        ++n;
        if (a.outcome == ArrivalOutcome::Abandoned) ++reneged;
        if (a.outcome == ArrivalOutcome::Balked) ++balked;
    }
    m.arrivals = n;
    if (n > 0) {
        m.r_frac = static_cast<double>(reneged) / static_cast<double>(n);
        m.b_frac = static_cast<double>(balked) / static_cast<double>(n);
    }
    return m;
}

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    // continued fraction (Lentz); use the symmetry that converges fast
    auto betacf = [](double aa, double bb, double xx) {
        const double tiny = 1e-300;
        double qab = aa + bb, qap = aa + 1.0, qam = aa - 1.0;
        double c = 1.0, d = 1.0 - qab * xx / qap;
        if (std::abs(d) < tiny) d = tiny;
        d = 1.0 / d;
        double h = d;
        for (int m = 1; m <= 300; ++m) {
            double m2 = 2.0 * m;
            double num = m * (bb - m) * xx / ((qam + m2) * (aa + m2));
            d = 1.0 + num * d;
            if (std::abs(d) < tiny) d = tiny;
            c = 1.0 + num / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            h *= d * c;
            num = -(aa + m) * (qab + m) * xx / ((aa + m2) * (qap + m2));
            d = 1.0 + num * d;
            if (std::abs(d) < tiny) d = tiny;
            c = 1.0 + num / c;
            if (std::abs(c) < tiny) c = tiny;
            d = 1.0 / d;
            double del = d * c;
            h *= del;
            if (std::abs(del - 1.0) < 1e-15) break;
        }
        return h;
    };
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double t_quantile(double p, int nu) {
    if (nu < 1) throw std::invalid_argument("t_quantile: degrees of freedom must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("t_quantile: p must be in (0,1)");
    if (p == 0.5) return 0.0;
    bool upper = p > 0.5;
    double pp = upper ? p : 1.0 - p;
    // For t > 0: P(T <= t) = 1 - I_{nu/(nu+t^2)}(nu/2, 1/2) / 2, so solve for
    // z = nu/(nu+t^2) with I_z = 2(1-pp) by bisection (monotone decreasing).
    double target = 2.0 * (1.0 - pp);
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (incomplete_beta(nu / 2.0, 0.5, mid) < target) lo = mid;
        else hi = mid;
        if (hi - lo < 1e-15) break;
    }
    double z = 0.5 * (lo + hi);
    double t = std::sqrt(nu * (1.0 - z) / z);
    return upper ? t : -t;
}

ConfidenceInterval ci(const std::vector<double>& values, double level) {
    if (values.size() < 2) throw std::invalid_argument("ci: need at least two replications");
    if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("ci: level must be in (0,1)");
    double k = static_cast<double>(values.size());
    double mean = std::accumulate(values.begin(), values.end(), 0.0) / k;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    double s = std::sqrt(ss / (k - 1.0));
    double t = t_quantile(0.5 * (1.0 + level), static_cast<int>(values.size()) - 1);
    return {mean, t * s / std::sqrt(k)};
}

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(sample.begin(), sample.end());
    double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double f = cdf(sample[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

namespace {
std::vector<double> ranks(const std::vector<double>& xs) {
    std::vector<std::size_t> order(xs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> r(xs.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
        double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
        for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
        i = j + 1;
    }
    return r;
}
}  // namespace

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("spearman: need two same-length vectors");
    auto rx = ranks(xs), ry = ranks(ys);
    double n = static_cast<double>(xs.size());
    double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median: empty input");
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace ticketq
