#include "ticketq/primitives.hpp"

#include <cmath>
#include <stdexcept>

namespace ticketq {

namespace {
// stream ids for the coordinate sub-streams of a seed
constexpr std::uint64_t kStreamU = 0;
constexpr std::uint64_t kStreamV = 1;
constexpr std::uint64_t kStreamB = 2;
constexpr std::uint64_t kStreamD = 3;
constexpr std::uint64_t kStreamInitV = 4;
constexpr std::uint64_t kStreamInitD = 5;
}  // namespace

SystemParams SystemParams::from_rates(double lambda, double mu, DistributionSpec ia,
                                      DistributionSpec sv, DistributionSpec bk, DistributionSpec dl) {
    SystemParams p;
    p.lambda = lambda;
    p.mu = mu;
    p.beta = (lambda - mu) / std::sqrt(mu);
    p.interarrival = ia;
    p.service = sv;
    p.balking = bk;
    p.deadline = dl;
    p.validate();
    return p;
}

SystemParams SystemParams::from_mu_beta(double mu, double beta, DistributionSpec ia,
                                        DistributionSpec sv, DistributionSpec bk, DistributionSpec dl) {
    return from_rates(mu + beta * std::sqrt(mu), mu, ia, sv, bk, dl);
}

SystemParams SystemParams::from_lambda_beta(double lambda, double beta, DistributionSpec ia,
                                            DistributionSpec sv, DistributionSpec bk, DistributionSpec dl) {
    // mu + beta*sqrt(mu) - lambda = 0  =>  sqrt(mu) = (-beta + sqrt(beta^2 + 4 lambda)) / 2
    double s = (-beta + std::sqrt(beta * beta + 4.0 * lambda)) / 2.0;
    return from_rates(lambda, s * s, ia, sv, bk, dl);
}

SystemParams SystemParams::markovian(double lambda, double mu, double theta_b, double theta_r) {
    auto bk = theta_b > 0.0 ? DistributionSpec::exponential(theta_b, DistRole::Balking)
                            : DistributionSpec::none(DistRole::Balking);
    auto dl = theta_r > 0.0 ? DistributionSpec::exponential(theta_r, DistRole::Deadline)
                            : DistributionSpec::none(DistRole::Deadline);
    return from_rates(lambda, mu, DistributionSpec::exponential(1.0, DistRole::InterarrivalUnit),
                      DistributionSpec::exponential(1.0, DistRole::ServiceUnit), bk, dl);
}

SystemParams SystemParams::lognormal_uniform(double lambda, double mu, double theta_b, double theta_r) {
    // service LogNormal(1/mu, 1/mu^2) in time units is lognormal(1,1) unitized
    auto bk = theta_b > 0.0 ? DistributionSpec::uniform_upper(1.0 / theta_b, DistRole::Balking)
                            : DistributionSpec::none(DistRole::Balking);
    auto dl = theta_r > 0.0 ? DistributionSpec::uniform_upper(1.0 / theta_r, DistRole::Deadline)
                            : DistributionSpec::none(DistRole::Deadline);
    return from_rates(lambda, mu, DistributionSpec::exponential(1.0, DistRole::InterarrivalUnit),
                      DistributionSpec::lognormal(1.0, 1.0, DistRole::ServiceUnit), bk, dl);
}

void SystemParams::validate() const {
    if (!(lambda > 0.0)) throw std::invalid_argument("params: lambda must be positive");
    if (!(mu > 0.0)) throw std::invalid_argument("params: mu must be positive");
    interarrival.validate();
    service.validate();
    balking.validate();
    deadline.validate();
    if (interarrival.role != DistRole::InterarrivalUnit || service.role != DistRole::ServiceUnit ||
        balking.role != DistRole::Balking || deadline.role != DistRole::Deadline) {
        throw std::invalid_argument("params: distribution roles are mislabeled");
    }
    if (theta() < 0.0) throw std::invalid_argument("params: theta must be nonnegative");
}

CustomerPrimitives generate_stream(const SystemParams& params, std::uint64_t seed, double horizon) {
    if (!(horizon > 0.0)) throw std::invalid_argument("generate_stream: horizon must be positive");
    params.validate();

    Sampler su(seed, kStreamU), sv(seed, kStreamV), sb(seed, kStreamB), sd(seed, kStreamD);
    CustomerPrimitives out;
    double t = 0.0;
    for (;;) {
        double ui = sample(params.interarrival, su);
        t += ui / params.lambda;
        if (t > horizon) break;
        out.u.push_back(ui);
        out.arrival_time.push_back(t);
        out.v.push_back(sample(params.service, sv));
        out.b.push_back(sample(params.balking, sb));
        out.d.push_back(sample(params.deadline, sd));
    }
    return out;
}

InitialConditions initial_conditions_from_sequences(const std::vector<double>& unitized_services,
                                                    const std::vector<double>& residual_deadlines,
                                                    double mu) {
    if (unitized_services.size() != residual_deadlines.size())
        throw std::invalid_argument("initial conditions: sequence length mismatch");
    if (!(mu > 0.0)) throw std::invalid_argument("initial conditions: mu must be positive");

    InitialConditions ic;
    ic.q0 = static_cast<std::int64_t>(unitized_services.size());
    ic.unitized_services = unitized_services;
    ic.residual_deadlines = residual_deadlines;
    ic.cumulative_work.reserve(unitized_services.size());
    ic.served_flags.reserve(unitized_services.size());
    double w = 0.0;
    for (std::size_t i = 0; i < unitized_services.size(); ++i) {
        bool served = residual_deadlines[i] > w;
        if (served) w += unitized_services[i] / mu;
        ic.served_flags.push_back(served);
        ic.cumulative_work.push_back(w);
    }
    ic.w0 = w;
    return ic;
}

InitialConditions build_initial_conditions(std::int64_t q0, const DistributionSpec& service_spec,
                                           const DistributionSpec& deadline_spec, double mu,
                                           std::uint64_t seed) {
    return build_initial_conditions(q0, service_spec,
                                    std::vector<DistributionSpec>{deadline_spec}, mu, seed);
}

InitialConditions build_initial_conditions(std::int64_t q0, const DistributionSpec& service_spec,
                                           const std::vector<DistributionSpec>& deadline_specs,
                                           double mu, std::uint64_t seed) {
    if (q0 < 0) throw std::invalid_argument("initial conditions: q0 must be nonnegative");
    if (deadline_specs.empty()) throw std::invalid_argument("initial conditions: need a deadline law");
    if (deadline_specs.size() != 1 && deadline_specs.size() != static_cast<std::size_t>(q0))
        throw std::invalid_argument("initial conditions: per-job deadline specs must match q0");

    Sampler sv(seed, kStreamInitV), sd(seed, kStreamInitD);
    std::vector<double> vh, dh;
    vh.reserve(q0);
    dh.reserve(q0);
    for (std::int64_t i = 0; i < q0; ++i) {
        vh.push_back(sample(service_spec, sv));
        const DistributionSpec& spec = deadline_specs.size() == 1 ? deadline_specs[0]
                                                                  : deadline_specs[static_cast<std::size_t>(i)];
        dh.push_back(sample(spec, sd));
    }
    return initial_conditions_from_sequences(vh, dh, mu);
}

}  // namespace ticketq
