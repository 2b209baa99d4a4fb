#include "ticketq/rou.hpp"

#include <cmath>
#include <stdexcept>

#include "ticketq/normal.hpp"
#include "ticketq/rng.hpp"

namespace ticketq {

namespace {
double require_theta(const SystemParams& params) {
    double theta = params.theta();
    if (!(theta > 0.0)) throw std::domain_error("rou: theta must be positive");
    return theta;
}
}  // namespace

TruncatedNormal steady_state_distribution(const SystemParams& params) {
    double theta = require_theta(params);
    return {(params.lambda - params.mu) / theta,
            params.mu * params.sigma_hat_sq() / (2.0 * theta)};
}

double expected_queue_length(const SystemParams& params) {
    double theta = require_theta(params);
    double sigma_hat = std::sqrt(params.sigma_hat_sq());
    double arg = (1.0 - params.rho()) / sigma_hat * std::sqrt(2.0 * params.mu / theta);
    return (params.lambda - params.mu) / theta +
           sigma_hat * std::sqrt(params.mu / (2.0 * theta)) * hazard(arg);
}

Fractions abandonment_fractions(const SystemParams& params) {
    double theta = require_theta(params);
    if (!(params.lambda > 0.0)) throw std::domain_error("rou: lambda must be positive");
    double g0 = params.deadline.derivative_at_zero();
    double eq = expected_queue_length(params);
    double sigma_hat = std::sqrt(params.sigma_hat_sq());
    // rho = 1 simplification of the first two; equals them when lambda = mu
    double v3 = sigma_hat * g0 / std::sqrt(3.14159265358979323846 * theta * params.mu);
    return {g0 * eq / params.lambda, g0 * eq / params.mu, v3};
}

Fractions balking_fractions(const SystemParams& params) {
    double theta = require_theta(params);
    if (!(params.lambda > 0.0)) throw std::domain_error("rou: lambda must be positive");
    double f0 = params.balking.derivative_at_zero();
    double eq = expected_queue_length(params);
    double sigma_hat = std::sqrt(params.sigma_hat_sq());
    double v3 = sigma_hat * f0 / std::sqrt(3.14159265358979323846 * theta * params.mu);
    return {f0 * eq / params.lambda, f0 * eq / params.mu, v3};
}

double expected_unresolved_abandoned(const SystemParams& params) {
    double g0 = params.deadline.derivative_at_zero();
    if (g0 == 0.0) return 0.0;
    double eq = expected_queue_length(params);
    return g0 * eq * eq / (2.0 * params.mu);
}

RouSummary build_rou_summary(const SystemParams& params) {
    RouSummary s;
    s.lambda = params.lambda;
    s.mu = params.mu;
    s.rho = params.rho();
    s.beta = params.beta;
    s.theta = require_theta(params);
    s.f0 = params.balking.derivative_at_zero();
    s.g0 = params.deadline.derivative_at_zero();
    s.sigma_hat = std::sqrt(params.sigma_hat_sq());
    s.sigma = params.mu * s.sigma_hat;
    TruncatedNormal tn = steady_state_distribution(params);
    s.tn_mean = tn.mean;
    s.tn_var = tn.var;
    s.e_q = expected_queue_length(params);
    s.e_w = s.e_q / params.mu;
    Fractions a = abandonment_fractions(params);
    Fractions g = balking_fractions(params);
    s.alpha1 = a.v1;
    s.alpha2 = a.v2;
    s.alpha3 = a.v3;
    s.gamma1 = g.v1;
    s.gamma2 = g.v2;
    s.gamma3 = g.v3;
    s.e_x = expected_unresolved_abandoned(params);
    return s;
}

RouPath simulate_rou_path(double beta, double theta, double sigma, double dt, double horizon,
                          std::uint64_t seed, double q0, double burn_in_fraction, int thin) {
    if (!(dt > 0.0)) throw std::domain_error("rou path: dt must be positive");
    if (!(theta > 0.0)) throw std::domain_error("rou path: theta must be positive");
    if (dt >= 1.0 / theta) throw std::domain_error("rou path: dt >= 1/theta is unstable");
    if (!(horizon > 0.0)) throw std::domain_error("rou path: horizon must be positive");
    if (thin < 1) throw std::domain_error("rou path: thin must be >= 1");

    Sampler rng(seed, 20);
    auto steps = static_cast<std::int64_t>(std::llround(horizon / dt));
    auto burn = static_cast<std::int64_t>(std::floor(burn_in_fraction * static_cast<double>(steps)));
    double sq = sigma * std::sqrt(dt);

    RouPath out;
    out.steps = steps;
    out.sample.reserve(static_cast<std::size_t>((steps - burn) / thin + 1));
    double q = q0;
    double sum = 0.0;
    for (std::int64_t k = 0; k < steps; ++k) {
        q = q + (beta - theta * q) * dt + sq * rng.normal();
        if (q < 0.0) q = 0.0;  // reflection at the boundary
        if (k >= burn) {
            sum += q;
            if ((k - burn) % thin == 0) out.sample.push_back(q);
        }
    }
    out.mean = sum / static_cast<double>(steps - burn);
    return out;
}

}  // namespace ticketq
