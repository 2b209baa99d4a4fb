#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ticketq/config.hpp"
#include "ticketq/coupling.hpp"
#include "ticketq/rou.hpp"
#include "ticketq/standard_queue.hpp"
#include "ticketq/table_runner.hpp"
#include "ticketq/ticket_queue.hpp"

namespace {

using namespace ticketq;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TICKETQ_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        std::cerr << "warning: ignoring non-numeric TICKETQ_SEED\n";
    }
    return 1;
}

/// Buffered emit: nothing touches the filesystem until the run succeeded, so
/// failed runs leave no partial output behind.
void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) {
        out.close();
        std::remove(path.c_str());
        throw std::runtime_error("write failed: " + path);
    }
    std::cerr << "wrote " << path << "\n";
}

Family parse_family(const std::string& name) {
    if (name == "markovian") return Family::Markovian;
    if (name == "lognormal-uniform" || name == "lognormal_uniform") return Family::LognormalUniform;
    throw std::invalid_argument("unknown family: " + name + " (markovian | lognormal-uniform)");
}

Fidelity parse_fidelity(const std::string& name) {
    if (name == "smoke") return Fidelity::Smoke;
    if (name == "desk") return Fidelity::Desk;
    if (name == "full") return Fidelity::Full;
    throw std::invalid_argument("unknown fidelity: " + name + " (smoke | desk | full)");
}

SystemParams params_from(double mu, double lambda, double beta, bool have_lambda, bool have_beta,
                         double theta_b, double theta_r, Family family) {
    if (have_lambda && have_beta)
        throw std::invalid_argument("give exactly two of {lambda, mu, beta}: "
                                    "--mu with either --lambda or --beta");
    if (!have_lambda && !have_beta)
        throw std::invalid_argument("missing --lambda or --beta");
    double lam = have_lambda ? lambda : mu + beta * std::sqrt(mu);
    return params_for(family, lam, mu, theta_b, theta_r);
}

std::string rou_text(const RouSummary& s) {
    char buf[1400];
    std::snprintf(buf, sizeof buf,
                  "lambda      = %.10g\n"
                  "mu          = %.10g\n"
                  "rho         = %.10g\n"
                  "beta        = %.10g\n"
                  "theta       = %.10g   (f0 = %.10g, g0 = %.10g)\n"
                  "sigma_hat   = %.10g\n"
                  "sigma       = %.10g\n"
                  "TN mean     = %.10g\n"
                  "TN variance = %.10g\n"
                  "E[Q]        = %.6g\n"
                  "E[W]        = %.6g\n"
                  "alpha1..3   = %.6g  %.6g  %.6g\n"
                  "gamma1..3   = %.6g  %.6g  %.6g\n"
                  "E[X]        = %.6g\n",
                  s.lambda, s.mu, s.rho, s.beta, s.theta, s.f0, s.g0, s.sigma_hat, s.sigma,
                  s.tn_mean, s.tn_var, s.e_q, s.e_w, s.alpha1, s.alpha2, s.alpha3, s.gamma1,
                  s.gamma2, s.gamma3, s.e_x);
    return buf;
}

std::string rou_csv(const RouSummary& s) {
    char buf[800];
    std::snprintf(buf, sizeof buf,
                  "lambda,mu,rho,beta,theta,f0,g0,sigma_hat,tn_mean,tn_var,E_Q,E_W,"
                  "alpha1,alpha2,alpha3,gamma1,gamma2,gamma3,E_X\n"
                  "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,"
                  "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n",
                  s.lambda, s.mu, s.rho, s.beta, s.theta, s.f0, s.g0, s.sigma_hat, s.tn_mean,
                  s.tn_var, s.e_q, s.e_w, s.alpha1, s.alpha2, s.alpha3, s.gamma1, s.gamma2,
                  s.gamma3, s.e_x);
    return buf;
}

Discipline parse_discipline(const std::string& name) {
    if (name == "standard") return Discipline::Standard;
    if (name == "ticket") return Discipline::Ticket;
    if (name == "ticket-markov" || name == "ticket_markov") return Discipline::TicketMarkov;
    throw std::invalid_argument("unknown discipline: " + name +
                                " (standard | ticket | ticket-markov)");
}

struct SimulateRun {
    std::string discipline = "standard";
    std::string family = "markovian";
    double mu = 100.0;
    double lambda = 0.0, beta = 0.0;
    bool have_lambda = false, have_beta = false;
    double theta_b = 0.1, theta_r = 0.1;
    double horizon = 500.0;
    int reps = 10;
    double warmup = 0.2;
    std::uint64_t seed = 1;
    std::string out;   // metrics CSV ("-" = stdout)
    std::string traj;  // optional trajectory CSV (first replication)
};

void apply_section(SimulateRun& run, const ConfigSection& sec) {
    run.discipline = sec.get("discipline", run.discipline);
    run.family = sec.get("family", run.family);
    run.mu = sec.get_double("mu", run.mu);
    if (sec.has("lambda")) {
        run.lambda = sec.get_double("lambda", 0.0);
        run.have_lambda = true;
    }
    if (sec.has("beta")) {
        run.beta = sec.get_double("beta", 0.0);
        run.have_beta = true;
    }
    run.theta_b = sec.get_double("theta_b", run.theta_b);
    run.theta_r = sec.get_double("theta_r", run.theta_r);
    run.horizon = sec.get_double("horizon", run.horizon);
    run.reps = static_cast<int>(sec.get_int("reps", run.reps));
    run.warmup = sec.get_double("warmup", run.warmup);
    run.seed = static_cast<std::uint64_t>(sec.get_int("seed", static_cast<long long>(run.seed)));
    run.out = sec.get("out", run.out);
    run.traj = sec.get("traj", run.traj);
}

int do_simulate(const SimulateRun& run) {
    SystemParams params = params_from(run.mu, run.lambda, run.beta, run.have_lambda,
                                      run.have_beta, run.theta_b, run.theta_r,
                                      parse_family(run.family));
    Discipline d = parse_discipline(run.discipline);
    std::vector<SimMetrics> ms = run_replications(d, params, run.reps, run.horizon,
                                                  run.warmup, run.seed);
    std::ostringstream os;
    os << "rep,q_bar,w_bar,x_bar,r_frac,b_frac,idle_frac,arrivals\n";
    char buf[300];
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const SimMetrics& m = ms[i];
        std::snprintf(buf, sizeof buf, "%zu,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%lld\n", i,
                      m.q_bar, m.w_bar, m.x_bar, m.r_frac, m.b_frac, m.idle_frac,
                      static_cast<long long>(m.arrivals));
        os << buf;
    }
    if (ms.size() >= 2) {
        std::vector<double> qs;
        for (const auto& m : ms) qs.push_back(m.q_bar);
        ConfidenceInterval qc = ci(qs, 0.95);
        std::snprintf(buf, sizeof buf, "# q_bar mean=%.10g half_width=%.10g (95%% CI over %zu reps)\n",
                      qc.mean, qc.half_width, ms.size());
        os << buf;
    }
    emit(run.out, os.str());

    if (!run.traj.empty()) {
        std::uint64_t rs = replication_seed(run.seed, 0);
        InitialConditions empty;
        SimTrajectory traj;
        if (d == Discipline::Standard)
            traj = simulate_standard(params, generate_stream(params, rs, run.horizon), empty, run.horizon);
        else if (d == Discipline::Ticket)
            traj = simulate_ticket(params, generate_stream(params, rs, run.horizon), empty, run.horizon);
        else
            traj = simulate_ticket_markov_aggregate(params, rs, run.horizon);
        std::ostringstream ts;
        traj.write_csv(ts);
        emit(run.traj, ts.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ticketq: single-server queues with balking and abandonment under "
                 "standard and ticket disciplines, with heavy-traffic approximations"};
    app.require_subcommand(1);

    // ---- approx ----------------------------------------------------------
    auto* approx = app.add_subcommand("approx", "closed-form heavy-traffic summary");
    double ap_mu = 0.0, ap_lambda = 0.0, ap_beta = 0.0, ap_tb = 0.1, ap_tr = 0.1;
    std::string ap_family = "markovian", ap_format = "text", ap_out;
    approx->add_option("--mu", ap_mu, "service rate")->required();
    auto* ap_l = approx->add_option("--lambda", ap_lambda, "arrival rate");
    auto* ap_b = approx->add_option("--beta", ap_beta, "drift (lambda-mu)/sqrt(mu)");
    approx->add_option("--theta-b", ap_tb, "balking F'(0)")->required();
    approx->add_option("--theta-r", ap_tr, "reneging F'(0)")->required();
    approx->add_option("--family", ap_family, "markovian | lognormal-uniform");
    approx->add_option("--format", ap_format, "text | csv");
    approx->add_option("--out", ap_out, "output file (default stdout)");

    // ---- simulate --------------------------------------------------------
    auto* simulate = app.add_subcommand("simulate", "replicated simulation of one parameter point");
    SimulateRun sim_cli;
    std::string sim_config;
    bool sim_cli_lambda = false, sim_cli_beta = false;
    simulate->add_option("--config", sim_config, "config file (key = value, [section] per run)");
    simulate->add_option("--discipline", sim_cli.discipline, "standard | ticket | ticket-markov");
    simulate->add_option("--family", sim_cli.family, "markovian | lognormal-uniform");
    auto* s_mu = simulate->add_option("--mu", sim_cli.mu, "service rate");
    auto* s_l = simulate->add_option("--lambda", sim_cli.lambda, "arrival rate");
    auto* s_b = simulate->add_option("--beta", sim_cli.beta, "drift");
    auto* s_tb = simulate->add_option("--theta-b", sim_cli.theta_b, "balking F'(0)");
    auto* s_tr = simulate->add_option("--theta-r", sim_cli.theta_r, "reneging F'(0)");
    auto* s_h = simulate->add_option("--horizon", sim_cli.horizon, "run length (time)");
    auto* s_r = simulate->add_option("--reps", sim_cli.reps, "replications");
    auto* s_w = simulate->add_option("--warmup", sim_cli.warmup, "warmup fraction");
    std::uint64_t s_seed_val = 0;
    auto* s_seed = simulate->add_option("--seed", s_seed_val, "base seed (TICKETQ_SEED fallback)");
    auto* s_out = simulate->add_option("--out", sim_cli.out, "metrics CSV (default stdout)");
    auto* s_traj = simulate->add_option("--traj", sim_cli.traj, "trajectory CSV for replication 0");

    // ---- tables ----------------------------------------------------------
    auto* tables = app.add_subcommand("tables", "regenerate an experiment table");
    int tb_id = 0;
    std::string tb_fidelity = "desk", tb_out, tb_format = "csv";
    std::uint64_t tb_seed_val = 0;
    int tb_reps = 0;
    double tb_horizon = 0.0, tb_warmup = 0.2;
    tables->add_option("--id", tb_id, "table id (1-4)")->required();
    tables->add_option("--fidelity", tb_fidelity, "smoke | desk | full");
    auto* tb_seed = tables->add_option("--seed", tb_seed_val, "base seed");
    tables->add_option("--out", tb_out, "output file (default stdout)");
    tables->add_option("--format", tb_format, "csv | markdown");
    tables->add_option("--reps", tb_reps, "override replications");
    tables->add_option("--horizon", tb_horizon, "override horizon");
    tables->add_option("--warmup", tb_warmup, "warmup fraction");

    // ---- couple ----------------------------------------------------------
    auto* couple = app.add_subcommand("couple", "diffusion-scaling coupling experiments");
    std::vector<double> cp_n{4, 25, 100, 400};
    double cp_beta = 0.0, cp_tb = 0.1, cp_tr = 0.1, cp_horizon = 50.0;
    int cp_seeds = 20;
    std::uint64_t cp_seed_val = 0;
    std::string cp_out, cp_summary;
    couple->add_option("--n-values", cp_n, "scale indices (>=3, increasing)");
    couple->add_option("--beta", cp_beta, "drift");
    couple->add_option("--theta-b", cp_tb, "balking F'(0)");
    couple->add_option("--theta-r", cp_tr, "reneging F'(0)");
    couple->add_option("--horizon", cp_horizon, "run length per n");
    couple->add_option("--seeds", cp_seeds, "seeds per n (>=10)");
    auto* cp_seed = couple->add_option("--seed", cp_seed_val, "base seed");
    couple->add_option("--out", cp_out, "long-form CSV (default stdout)");
    couple->add_option("--summary", cp_summary, "markdown summary file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return 2;
    }

    try {
        if (approx->parsed()) {
            SystemParams params = params_from(ap_mu, ap_lambda, ap_beta, ap_l->count() > 0,
                                              ap_b->count() > 0, ap_tb, ap_tr,
                                              parse_family(ap_family));
            RouSummary s = build_rou_summary(params);
            emit(ap_out, ap_format == "csv" ? rou_csv(s) : rou_text(s));
            return 0;
        }
        if (simulate->parsed()) {
            std::vector<SimulateRun> runs;
            if (!sim_config.empty()) {
                ConfigFile cfg = parse_config(sim_config);
                SimulateRun base;
                apply_section(base, cfg.sections.front());
                bool any_named = cfg.sections.size() > 1;
                if (any_named) {
                    for (std::size_t i = 1; i < cfg.sections.size(); ++i) {
                        SimulateRun run = base;
                        apply_section(run, cfg.sections[i]);
                        runs.push_back(run);
                    }
                } else {
                    runs.push_back(base);
                }
            } else {
                runs.push_back(SimulateRun{});
            }
            for (SimulateRun& run : runs) {
                // CLI flags override config values
                if (s_mu->count()) run.mu = sim_cli.mu;
                if (s_l->count()) { run.lambda = sim_cli.lambda; run.have_lambda = true; run.have_beta = false; }
                if (s_b->count()) { run.beta = sim_cli.beta; run.have_beta = true; run.have_lambda = false; }
                if (s_tb->count()) run.theta_b = sim_cli.theta_b;
                if (s_tr->count()) run.theta_r = sim_cli.theta_r;
                if (s_h->count()) run.horizon = sim_cli.horizon;
                if (s_r->count()) run.reps = sim_cli.reps;
                if (s_w->count()) run.warmup = sim_cli.warmup;
                if (simulate->count("--discipline")) run.discipline = sim_cli.discipline;
                if (simulate->count("--family")) run.family = sim_cli.family;
                if (s_out->count()) run.out = sim_cli.out;
                if (s_traj->count()) run.traj = sim_cli.traj;
                run.seed = s_seed->count() ? s_seed_val : (run.seed != 1 ? run.seed : default_seed());
                int rc = do_simulate(run);
                if (rc != 0) return rc;
            }
            return 0;
        }
        if (tables->parsed()) {
            RunConfig cfg;
            cfg.table_id = tb_id;
            cfg.fidelity = parse_fidelity(tb_fidelity);
            cfg.seed = tb_seed->count() ? tb_seed_val : default_seed();
            cfg.warmup = tb_warmup;
            cfg.replications = tb_reps;
            cfg.horizon = tb_horizon;
            std::vector<TableRow> rows = run_table(cfg);
            std::ostringstream os;
            if (tb_format == "markdown") write_table_markdown(rows, os);
            else write_table_csv(rows, os);
            emit(tb_out, os.str());
            return 0;
        }
        if (couple->parsed()) {
            ScalingConfig cfg;
            cfg.n_values = cp_n;
            cfg.beta = cp_beta;
            cfg.theta_b = cp_tb;
            cfg.theta_r = cp_tr;
            cfg.horizon = cp_horizon;
            cfg.seeds = cp_seeds;
            cfg.base_seed = cp_seed->count() ? cp_seed_val : default_seed();
            ScalingSeriesResult res = run_scaling_series(cfg);
            std::ostringstream os;
            res.write_csv(os);
            emit(cp_out, os.str());
            if (!cp_summary.empty()) {
                std::ostringstream ms;
                res.write_markdown(ms);
                emit(cp_summary, ms.str());
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
