#pragma once

#include <string>

#include "ticketq/rng.hpp"

namespace ticketq {

enum class DistKind {
    Exponential,   // rate > 0
    Lognormal,     // mean > 0, variance > 0
    Uniform,       // on (0, upper), upper > 0
    Deterministic, // point mass at value
    None,          // never happens: samples +inf, F'(0) = 0 (impatience off)
};

enum class DistRole {
    InterarrivalUnit,  // unit mean required; draw later divided by lambda
    ServiceUnit,       // unit mean required; draw later divided by mu
    Balking,
    Deadline,
};

/// A samplable nonnegative law with known mean, variance and F'(0).
/// Balking/deadline roles admit only exponential and uniform (plus `none`),
/// the families with an exact derivative at zero.
struct DistributionSpec {
    DistKind kind = DistKind::Exponential;
    DistRole role = DistRole::InterarrivalUnit;
    double a = 1.0;  // rate | mean | upper | value
    double b = 0.0;  // lognormal variance, unused otherwise

    static DistributionSpec exponential(double rate, DistRole role);
    static DistributionSpec lognormal(double mean, double variance, DistRole role);
    static DistributionSpec uniform_upper(double upper, DistRole role);
    static DistributionSpec deterministic(double value, DistRole role);
    static DistributionSpec none(DistRole role);

    double mean() const;
    double variance() const;
    /// F'(0). Only defined for balking/deadline roles; throws otherwise.
    double derivative_at_zero() const;
    /// CDF, available for the balking/deadline families (used by tests and the
    /// Markov-aggregate ticket simulation).
    double cdf(double x) const;

    std::string describe() const;
    void validate() const;  // throws std::invalid_argument on bad parameters
};

/// One draw. Consumes exactly one uniform for exponential/uniform, one Gaussian
/// pair-member for lognormal, nothing for deterministic/none.
double sample(const DistributionSpec& spec, Sampler& rng);

}  // namespace ticketq
