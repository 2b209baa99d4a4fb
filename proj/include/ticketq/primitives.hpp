#pragma once

#include <cstdint>
#include <vector>

#include "ticketq/distributions.hpp"

namespace ticketq {

/// Rates plus the four primitive laws. Exactly two of {lambda, mu, beta} pin
/// the third through beta = (lambda - mu) / sqrt(mu).
struct SystemParams {
    double lambda = 0.0;
    double mu = 0.0;
    double beta = 0.0;
    DistributionSpec interarrival;  // unit mean
    DistributionSpec service;       // unit mean
    DistributionSpec balking;
    DistributionSpec deadline;

    double rho() const { return lambda / mu; }
    double theta() const { return balking.derivative_at_zero() + deadline.derivative_at_zero(); }
    double sigma_hat_sq() const { return interarrival.variance() + service.variance(); }

    static SystemParams from_rates(double lambda, double mu, DistributionSpec ia,
                                   DistributionSpec sv, DistributionSpec bk, DistributionSpec dl);
    static SystemParams from_mu_beta(double mu, double beta, DistributionSpec ia,
                                     DistributionSpec sv, DistributionSpec bk, DistributionSpec dl);
    static SystemParams from_lambda_beta(double lambda, double beta, DistributionSpec ia,
                                         DistributionSpec sv, DistributionSpec bk, DistributionSpec dl);

    /// Exponential everything: the Tables 1/3 family.
    static SystemParams markovian(double lambda, double mu, double theta_b, double theta_r);
    /// Exp arrivals, lognormal(1/mu,1/mu^2) service, uniform balking/reneging:
    /// the Tables 2/4 family.
    static SystemParams lognormal_uniform(double lambda, double mu, double theta_b, double theta_r);

    void validate() const;
};

/// Per-customer quadruples (u_i, v_i, b_i, d_i) and arrival times, shared
/// verbatim by both disciplines in a coupled run.
struct CustomerPrimitives {
    std::vector<double> u;             // unitized interarrival
    std::vector<double> v;             // unitized service
    std::vector<double> b;             // balking tolerance (time)
    std::vector<double> d;             // patience deadline (time)
    std::vector<double> arrival_time;  // t_i = (1/lambda) * sum u_j

    std::size_t count() const { return arrival_time.size(); }
};

/// All customers with t_i <= horizon. Four independent PCG32 sub-streams
/// (stream id = coordinate index), so changing one law never perturbs the
/// other coordinates.
CustomerPrimitives generate_stream(const SystemParams& params, std::uint64_t seed, double horizon);

struct InitialConditions {
    std::int64_t q0 = 0;
    std::vector<double> residual_deadlines;  // d^hat_i
    std::vector<double> unitized_services;   // v^hat_i
    std::vector<double> cumulative_work;     // w^hat_i, nondecreasing, w^hat_0 = 0 implied
    std::vector<bool> served_flags;          // 1(d^hat_i > w^hat_{i-1})
    double w0 = 0.0;                         // W(0) = w^hat_{q0}
};

/// The w^hat recursion on explicit sequences:
///   w^hat_i = w^hat_{i-1} + (v^hat_i/mu) * 1(d^hat_i > w^hat_{i-1}).
InitialConditions initial_conditions_from_sequences(const std::vector<double>& unitized_services,
                                                    const std::vector<double>& residual_deadlines,
                                                    double mu);

/// Sample v^hat from the service law and d^hat from a single deadline law.
InitialConditions build_initial_conditions(std::int64_t q0, const DistributionSpec& service_spec,
                                           const DistributionSpec& deadline_spec, double mu,
                                           std::uint64_t seed);

/// Heterogeneous residual-deadline laws, one per job.
InitialConditions build_initial_conditions(std::int64_t q0, const DistributionSpec& service_spec,
                                           const std::vector<DistributionSpec>& deadline_specs,
                                           double mu, std::uint64_t seed);

}  // namespace ticketq
