#pragma once

#include <cstdint>
#include <vector>

#include "ticketq/primitives.hpp"

namespace ticketq {

/// Closed-form heavy-traffic summary for a (lambda, mu, F_b, F_d) system.
/// The queue length is approximated by Normal((lambda-mu)/theta,
/// mu*sigma_hat^2/(2 theta)) truncated to [0, inf).
struct RouSummary {
    double lambda = 0.0;
    double mu = 0.0;
    double rho = 0.0;
    double beta = 0.0;       // (lambda - mu)/sqrt(mu)
    double theta = 0.0;      // f(0) + g(0)
    double f0 = 0.0;         // F_b'(0)
    double g0 = 0.0;         // F_d'(0)
    double sigma_hat = 0.0;  // sqrt(cv_a^2 + cv_s^2) of the unitized laws
    double sigma = 0.0;      // mu * sigma_hat
    double tn_mean = 0.0;    // (lambda - mu)/theta
    double tn_var = 0.0;     // mu sigma_hat^2 / (2 theta)
    double e_q = 0.0;        // mean of the truncated normal
    double e_w = 0.0;        // e_q / mu
    double alpha1 = 0.0, alpha2 = 0.0, alpha3 = 0.0;  // abandonment fractions
    double gamma1 = 0.0, gamma2 = 0.0, gamma3 = 0.0;  // balking fractions
    double e_x = 0.0;        // expected unresolved abandoned tickets
};

struct TruncatedNormal {
    double mean;  // pre-truncation
    double var;
};

/// Steady-state law parameters; throws std::domain_error for theta <= 0.
TruncatedNormal steady_state_distribution(const SystemParams& params);

/// E[Q] = (lambda-mu)/theta + sigma_hat sqrt(mu/(2 theta))
///        * h((1-rho)/sigma_hat * sqrt(2 mu/theta)).
double expected_queue_length(const SystemParams& params);

struct Fractions {
    double v1, v2, v3;
};

/// alpha1 = g(0) E[Q]/lambda, alpha2 = g(0) E[Q]/mu, and alpha3 the rho = 1
/// simplification (all three coincide at rho = 1).
Fractions abandonment_fractions(const SystemParams& params);
Fractions balking_fractions(const SystemParams& params);

/// E[X] ~= g(0) E[Q]^2 / (2 mu).
double expected_unresolved_abandoned(const SystemParams& params);

RouSummary build_rou_summary(const SystemParams& params);

/// Euler-Maruyama for the reflected OU process
///   dQ = (beta - theta Q) dt + sigma dB,  reflected at 0,
/// whose stationary law is Normal(beta/theta, sigma^2/(2 theta)) truncated at
/// zero. Requires dt < 1/theta for stability.
struct RouPath {
    std::vector<double> sample;  // post burn-in values, every `thin` steps
    double mean = 0.0;           // post burn-in average over the full grid
    std::int64_t steps = 0;
};

RouPath simulate_rou_path(double beta, double theta, double sigma, double dt, double horizon,
                          std::uint64_t seed, double q0 = 0.0, double burn_in_fraction = 0.0,
                          int thin = 1);

}  // namespace ticketq
