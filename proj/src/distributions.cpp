#include "ticketq/distributions.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ticketq {

namespace {

bool unit_mean_role(DistRole r) {
    return r == DistRole::InterarrivalUnit || r == DistRole::ServiceUnit;
}

bool impatience_role(DistRole r) {
    return r == DistRole::Balking || r == DistRole::Deadline;
}

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument("distribution: " + msg); }

}  // namespace

DistributionSpec DistributionSpec::exponential(double rate, DistRole role) {
    DistributionSpec s{DistKind::Exponential, role, rate, 0.0};
    s.validate();
    return s;
}

DistributionSpec DistributionSpec::lognormal(double mean, double variance, DistRole role) {
    DistributionSpec s{DistKind::Lognormal, role, mean, variance};
    s.validate();
    return s;
}

DistributionSpec DistributionSpec::uniform_upper(double upper, DistRole role) {
    DistributionSpec s{DistKind::Uniform, role, upper, 0.0};
    s.validate();
    return s;
}

DistributionSpec DistributionSpec::deterministic(double value, DistRole role) {
    DistributionSpec s{DistKind::Deterministic, role, value, 0.0};
    s.validate();
    return s;
}

DistributionSpec DistributionSpec::none(DistRole role) {
    DistributionSpec s{DistKind::None, role, 0.0, 0.0};
    s.validate();
    return s;
}

void DistributionSpec::validate() const {
    switch (kind) {
        case DistKind::Exponential:
            if (!(a > 0.0)) bad("exponential rate must be positive");
            break;
        case DistKind::Lognormal:
            if (!(a > 0.0) || !(b > 0.0)) bad("lognormal mean and variance must be positive");
            if (impatience_role(role)) bad("lognormal not permitted for balking/deadline roles");
            break;
        case DistKind::Uniform:
            if (!(a > 0.0)) bad("uniform upper bound must be positive");
            break;
        case DistKind::Deterministic:
            if (impatience_role(role)) bad("deterministic not permitted for balking/deadline roles");
            if (!(a > 0.0)) bad("deterministic value must be positive");
            break;
        case DistKind::None:
            if (!impatience_role(role)) bad("`none` only applies to balking/deadline roles");
            break;
    }
    if (unit_mean_role(role) && kind != DistKind::None) {
        if (std::abs(mean() - 1.0) > 1e-12) bad("interarrival/service laws must have unit mean, got " + std::to_string(mean()));
    }
}

double DistributionSpec::mean() const {
    switch (kind) {
        case DistKind::Exponential: return 1.0 / a;
        case DistKind::Lognormal: return a;
        case DistKind::Uniform: return a / 2.0;
        case DistKind::Deterministic: return a;
        case DistKind::None: return std::numeric_limits<double>::infinity();
    }
    return 0.0;
}

double DistributionSpec::variance() const {
    switch (kind) {
        case DistKind::Exponential: return 1.0 / (a * a);
        case DistKind::Lognormal: return b;
        case DistKind::Uniform: return a * a / 12.0;
        case DistKind::Deterministic: return 0.0;
        case DistKind::None: return std::numeric_limits<double>::infinity();
    }
    return 0.0;
}

double DistributionSpec::derivative_at_zero() const {
    if (!impatience_role(role)) bad("derivative_at_zero requires a balking or deadline role");
    switch (kind) {
        case DistKind::Exponential: return a;
        case DistKind::Uniform: return 1.0 / a;
        case DistKind::None: return 0.0;
        default: bad("law has no usable derivative at zero");
    }
    return 0.0;
}

double DistributionSpec::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    switch (kind) {
        case DistKind::Exponential: return -std::expm1(-a * x);
        case DistKind::Uniform: return x >= a ? 1.0 : x / a;
        case DistKind::Deterministic: return x >= a ? 1.0 : 0.0;
        case DistKind::None: return 0.0;
        case DistKind::Lognormal: bad("cdf not provided for lognormal");
    }
    return 0.0;
}

std::string DistributionSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case DistKind::Exponential: os << "exponential(rate=" << a << ")"; break;
        case DistKind::Lognormal: os << "lognormal(mean=" << a << ",var=" << b << ")"; break;
        case DistKind::Uniform: os << "uniform(0," << a << ")"; break;
        case DistKind::Deterministic: os << "deterministic(" << a << ")"; break;
        case DistKind::None: os << "none"; break;
    }
    return os.str();
}

double sample(const DistributionSpec& spec, Sampler& rng) {
    switch (spec.kind) {
        case DistKind::Exponential:
            return rng.exponential(spec.a);
        case DistKind::Uniform:
            return rng.uniform() * spec.a;
        case DistKind::Deterministic:
            return spec.a;
        case DistKind::None:
            return std::numeric_limits<double>::infinity();
        case DistKind::Lognormal: {
            // underlying normal: s2 = ln(1 + var/mean^2), m = ln(mean) - s2/2
            double s2 = std::log1p(spec.b / (spec.a * spec.a));
            double m = std::log(spec.a) - 0.5 * s2;
            return std::exp(m + std::sqrt(s2) * rng.normal());
        }
    }
    return 0.0;
}

}  // namespace ticketq
