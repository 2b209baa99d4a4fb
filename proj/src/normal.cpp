#include "ticketq/normal.hpp"

#include <cmath>
#include <limits>

namespace ticketq {

namespace {
constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;
constexpr double kInvSqrtPi = 0.564189583547756286948079451561;
constexpr double kSqrt2 = 1.414213562373095048801688724210;

// Maclaurin series for erf, |x| <= 2.2: terms fall below 1e-18 well before 60.
double erf_series(double x) {
    double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 80; ++k) {
        term *= -x2 / static_cast<double>(k);
        double add = term / static_cast<double>(2 * k + 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return 1.1283791670955125738961589031215 * sum;  // 2/sqrt(pi)
}

// Laplace continued fraction for sqrt(pi) * z * erfcx(z), z >= 2, via Lentz.
double erfcx_cf(double z) {
    const double tiny = 1e-300;
    double f = tiny, c = f, d = 0.0;
    // CF: 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + 2/(z + ...)))))
    for (int k = 0; k < 200; ++k) {
        double a = k == 0 ? 1.0 : static_cast<double>(k) / 2.0;
        double b = z;
        d = b + a * d;
        if (d == 0.0) d = tiny;
        c = b + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return kInvSqrtPi * f;
}
}  // namespace

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double erfcx_own(double z) {
    if (z < 0.0) return 2.0 * std::exp(z * z) - erfcx_own(-z);
    if (z < 2.0) return std::exp(z * z) * (1.0 - erf_series(z));
    return erfcx_cf(z);
}

double erfc_own(double x) {
    if (x < 0.0) return 2.0 - erfc_own(-x);
    if (x < 2.0) return 1.0 - erf_series(x);
    return std::exp(-x * x) * erfcx_cf(x);
}

double erf_own(double x) { return 1.0 - erfc_own(x); }

double normal_cdf(double x) { return 0.5 * erfc_own(-x / kSqrt2); }

double hazard(double x) {
    if (x > 0.0) {
        // pdf/tail = sqrt(2/pi) / erfcx(x/sqrt(2)); no cancellation, no overflow
        return 0.797884560802865355879892119869 / erfcx_own(x / kSqrt2);
    }
    double tail = 0.5 * erfc_own(x / kSqrt2);  // >= 1/2 here
    return normal_pdf(x) / tail;                // underflows to 0 below x ~ -37
}

double truncated_normal_mean(double mean, double var) {
    double sd = std::sqrt(var);
    return mean + sd * hazard(-mean / sd);
}

double truncated_normal_cdf(double x, double mean, double var) {
    if (x <= 0.0) return 0.0;
    double sd = std::sqrt(var);
    double lo = normal_cdf(-mean / sd);
    return (normal_cdf((x - mean) / sd) - lo) / (1.0 - lo);
}

}  // namespace ticketq
