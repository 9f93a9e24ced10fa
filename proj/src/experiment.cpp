#include "gal/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

#include "gal/log.hpp"

namespace gal {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::int64_t default_horizon(const SpectralParams& spectral, double periods) {
    if (spectral.regime == Regime::CircularPlus || spectral.regime == Regime::CircularMinus ||
        spectral.regime == Regime::Dead) {
        return kConstantRegimeHorizon;
    }
    return static_cast<std::int64_t>(std::ceil(periods * std::numbers::pi / spectral.omega));
}

struct AnalyticContext {
    SearchInstance instance;
    StateVector init;
    InitialMoments moments;
    SpectralParams spectral;
    ProbabilityProfile profile;
};

AnalyticContext analyze(const InstanceFile& file) {
    SearchInstance instance = make_instance(file);
    StateVector init = generate(file.init, instance);
    InitialMoments moments = moments_of(init, instance);
    SpectralParams spectral = compute_spectral(instance, moments);
    if (spectral.regime == Regime::Generic || spectral.regime == Regime::LinearReal) {
        // alpha e^{+-i phi} must reproduce f+-(0) within the algebra tolerance
        const Complex i_unit{0.0, 1.0};
        const double err = std::max(
                std::abs(spectral.alpha * std::exp(i_unit * spectral.phi) - spectral.f_plus0),
                std::abs(spectral.alpha * std::exp(-i_unit * spectral.phi) - spectral.f_minus0));
        if (err > file.tolerances.algebra) {
            throw Error(ErrorCode::ValidationError,
                        "spectral identity violated beyond the algebra tolerance: " +
                                std::to_string(err));
        }
    }
    ProbabilityProfile profile = probability_profile(instance, moments, spectral);
    log_debug(std::string("regime ") + regime_name(spectral.regime) +
              ", omega=" + std::to_string(spectral.omega));
    return {std::move(instance), std::move(init), std::move(moments), spectral, profile};
}

void audit_drift(const GroverRunner& runner, const InstanceFile& file) {
    const double drift = std::max(runner.norm_drift_max(), runner.current_norm_drift());
    if (drift > file.tolerances.norm) {
        throw Error(ErrorCode::ToleranceExceeded,
                    "norm drift " + std::to_string(drift) + " exceeds the configured tolerance " +
                            std::to_string(file.tolerances.norm) +
                            " (renormalization is never applied silently)");
    }
}

RunSummary base_summary(const AnalyticContext& ctx, const InstanceFile& file,
                        const char* command, const char* method) {
    RunSummary summary;
    summary.command = command;
    summary.method = method;
    summary.n = ctx.instance.n();
    summary.r = ctx.instance.r();
    summary.spectral = ctx.spectral;
    summary.profile = ctx.profile;
    summary.seed = file.init.seed;
    return summary;
}

// Sample-std aggregation for sweep columns.
struct Stats {
    double mean = 0.0;
    double sample_std = 0.0;
};

Stats stats_of(const std::vector<double>& values) {
    Stats s;
    detail::KahanSum sum;
    for (double v : values) sum.add(v);
    s.mean = sum.value() / static_cast<double>(values.size());
    if (values.size() > 1) {
        detail::KahanSum sq;
        for (double v : values) sq.add((v - s.mean) * (v - s.mean));
        s.sample_std = std::sqrt(sq.value() / static_cast<double>(values.size() - 1));
    }
    return s;
}

struct SweepCell {
    double sigma_l_sq = 0.0;
    double p_max_formula = 0.0;
    double p_best_pred = 0.0;
    double p_best_sim = 0.0;
    std::int64_t t_star = 0;
};

SweepCell run_sweep_cell(const SearchInstance& instance, double noise_sigma,
                         std::uint64_t seed) {
    const StateVector init = generate(DistributionSpec::noisy_uniform(noise_sigma, seed), instance);
    const InitialMoments moments = moments_of(init, instance);
    const SpectralParams spectral = compute_spectral(instance, moments);
    const ProbabilityProfile profile = probability_profile(instance, moments, spectral);
    const MeasurementPlan plan = optimal_measurement_times(spectral, profile, 0);

    SweepCell cell;
    cell.sigma_l_sq = moments.sigma_l_sq;
    cell.p_max_formula = profile.p_max;
    cell.p_best_pred = plan.strategy == Strategy::Hopeless ? plan.constant_p
                                                           : plan.p_at_t_int.front();

    // Exhaustive integer scan of the simulated P over one full period.
    const std::int64_t horizon = default_horizon(spectral, 1.0);
    GroverRunner runner(instance, StateVector::unchecked(std::vector<Complex>(
                                          init.amplitudes().begin(), init.amplitudes().end())),
                        SimConfig{});
    cell.p_best_sim = runner.marked_probability();
    cell.t_star = 0;
    for (std::int64_t t = 1; t <= horizon; ++t) {
        runner.step();
        const double p = runner.marked_probability();
        if (p > cell.p_best_sim) {
            cell.p_best_sim = p;
            cell.t_star = t;
        }
    }
    return cell;
}

}  // namespace

RunOutput run_predict(const InstanceFile& file) {
    const auto start = Clock::now();
    AnalyticContext ctx = analyze(file);

    RunOutput out;
    out.summary = base_summary(ctx, file, "predict", "analytic");
    out.summary.plan = optimal_measurement_times(ctx.spectral, ctx.profile, 2);
    out.summary.has_plan = true;
    out.summary.two_time = robust_two_time_plan(ctx.spectral, ctx.profile);
    out.summary.has_two_time = true;

    const std::int64_t horizon = default_horizon(ctx.spectral, 2.0);
    out.rows.reserve(static_cast<std::size_t>(horizon) + 1);
    for (std::int64_t t = 0; t <= horizon; ++t) {
        StepRow row;
        row.t = t;
        const MeanPair means = mean_amplitudes(ctx.spectral, ctx.instance, t);
        row.k_analytic = means.k_bar;
        row.l_analytic = means.l_bar;
        row.p_analytic = success_probability(ctx.instance, ctx.moments, ctx.spectral, t);
        out.rows.push_back(row);
    }
    out.summary.wall_time_ms = elapsed_ms(start);
    return out;
}

RunOutput run_simulate(const InstanceFile& file, std::int64_t t_max, DiffusionMethod method) {
    const auto start = Clock::now();
    AnalyticContext ctx = analyze(file);
    if (t_max < 0) t_max = default_horizon(ctx.spectral, 2.0);

    SimConfig config = file.sim;
    config.diffusion_method = method;
    GroverRunner runner(ctx.instance,
                        StateVector::unchecked(std::vector<Complex>(
                                ctx.init.amplitudes().begin(), ctx.init.amplitudes().end())),
                        config);

    RunOutput out;
    out.summary = base_summary(ctx, file, "simulate", diffusion_method_name(method));
    out.rows.reserve(static_cast<std::size_t>(t_max) + 1);
    for (std::int64_t t = 0; t <= t_max; ++t) {
        if (t > 0) runner.step();
        const TraceRow trace = runner.trace_row();
        StepRow row;
        row.t = t;
        row.p_sim = trace.p;
        row.k_sim = trace.k_bar;
        row.l_sim = trace.l_bar;
        row.norm_drift = trace.norm_drift;
        out.rows.push_back(row);
    }
    audit_drift(runner, file);
    out.summary.norm_drift_max = runner.norm_drift_max();
    out.summary.wall_time_ms = elapsed_ms(start);
    return out;
}

CompareOutput run_compare(const InstanceFile& file, std::int64_t t_max, DiffusionMethod method,
                          double tolerance, double omega_corruption) {
    const auto start = Clock::now();
    AnalyticContext ctx = analyze(file);
    if (omega_corruption != 1.0) {
        ctx.spectral.omega *= omega_corruption;  // negative-control hook
    }
    if (t_max < 0) t_max = default_horizon(ctx.spectral, 3.0);

    SimConfig config = file.sim;
    config.diffusion_method = method;
    GroverRunner runner(ctx.instance,
                        StateVector::unchecked(std::vector<Complex>(
                                ctx.init.amplitudes().begin(), ctx.init.amplitudes().end())),
                        config);
    const bool align_phase = method == DiffusionMethod::WalshHadamard;

    CompareOutput out;
    out.rows.reserve(static_cast<std::size_t>(t_max) + 1);
    for (std::int64_t t = 0; t <= t_max; ++t) {
        if (t > 0) runner.step();
        const TraceRow trace = runner.trace_row();
        StepRow row;
        row.t = t;
        row.p_sim = trace.p;
        row.k_sim = trace.k_bar;
        row.l_sim = trace.l_bar;
        row.norm_drift = trace.norm_drift;
        const MeanPair means = mean_amplitudes(ctx.spectral, ctx.instance, t);
        row.k_analytic = means.k_bar;
        row.l_analytic = means.l_bar;
        row.p_analytic = success_probability(ctx.instance, ctx.moments, ctx.spectral, t);
        out.rows.push_back(row);

        out.max_p_divergence = std::max(out.max_p_divergence,
                                        std::abs(row.p_analytic - row.p_sim));
        const StateVector expected = reconstruct_state(ctx.moments, ctx.instance, ctx.spectral, t);
        const double amp_dev = align_phase
                ? max_deviation_up_to_phase(expected.amplitudes(), runner.amplitudes())
                : max_deviation(expected.amplitudes(), runner.amplitudes());
        out.max_amp_divergence = std::max(out.max_amp_divergence, amp_dev);
    }
    out.within_tolerance =
            out.max_p_divergence <= tolerance && out.max_amp_divergence <= tolerance;

    audit_drift(runner, file);
    out.summary = base_summary(ctx, file, "compare", diffusion_method_name(method));
    out.summary.max_p_divergence = out.max_p_divergence;
    out.summary.max_amp_divergence = out.max_amp_divergence;
    out.summary.norm_drift_max = runner.norm_drift_max();
    out.summary.wall_time_ms = elapsed_ms(start);
    return out;
}

SweepOutput run_sweep(const SweepSpec& spec, unsigned jobs) {
    std::vector<std::size_t> marked;
    for (std::size_t i = spec.n - spec.r; i < spec.n; ++i) marked.push_back(i);
    const SearchInstance instance = validate_instance(spec.n, marked);

    struct CellKey {
        std::size_t level;
        std::size_t seed_index;
    };
    std::vector<CellKey> keys;
    keys.reserve(spec.noise_levels.size() * spec.seeds_per_level);
    for (std::size_t level = 0; level < spec.noise_levels.size(); ++level) {
        for (std::size_t s = 0; s < spec.seeds_per_level; ++s) keys.push_back({level, s});
    }

    std::vector<SweepCell> cells(keys.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= keys.size()) break;
            const CellKey key = keys[i];
            const std::uint64_t seed =
                    spec.base_seed + 1000003ULL * key.level + key.seed_index;
            cells[i] = run_sweep_cell(instance, spec.noise_levels[key.level], seed);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }

    SweepOutput out;
    out.rows.reserve(spec.noise_levels.size());
    for (std::size_t level = 0; level < spec.noise_levels.size(); ++level) {
        std::vector<double> sigma, p_formula, p_pred, p_sim, t_star;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (keys[i].level != level) continue;
            sigma.push_back(cells[i].sigma_l_sq);
            p_formula.push_back(cells[i].p_max_formula);
            p_pred.push_back(cells[i].p_best_pred);
            p_sim.push_back(cells[i].p_best_sim);
            t_star.push_back(static_cast<double>(cells[i].t_star));
        }
        const Stats sigma_stats = stats_of(sigma);
        const Stats formula_stats = stats_of(p_formula);
        const Stats pred_stats = stats_of(p_pred);
        const Stats sim_stats = stats_of(p_sim);

        SweepLevelRow row;
        row.noise_sigma = spec.noise_levels[level];
        row.seeds = sigma.size();
        row.sigma_l_sq_mean = sigma_stats.mean;
        row.sigma_l_sq_std = sigma_stats.sample_std;
        row.p_max_formula_mean = formula_stats.mean;
        row.p_max_formula_std = formula_stats.sample_std;
        row.p_best_pred_mean = pred_stats.mean;
        row.p_best_pred_std = pred_stats.sample_std;
        row.p_best_sim_mean = sim_stats.mean;
        row.p_best_sim_std = sim_stats.sample_std;
        row.t_star_mean = stats_of(t_star).mean;
        out.rows.push_back(row);

        const double se = sim_stats.sample_std / std::sqrt(static_cast<double>(row.seeds));
        const double diff = std::abs(sim_stats.mean - pred_stats.mean);
        const double z = se > 0.0 ? diff / se : (diff == 0.0 ? 0.0 : INFINITY);
        out.agreement_z.push_back(z);
        if (z > 3.0) out.agreement_within_3se = false;
    }
    return out;
}

PlanOutput run_plan(const InstanceFile& file, bool two_time_only) {
    const auto start = Clock::now();
    AnalyticContext ctx = analyze(file);

    PlanOutput out;
    out.summary = base_summary(ctx, file, "plan", "analytic");
    if (two_time_only) {
        // Moment-dependent fields omitted: the schedule needs only omega.
        out.summary.two_time = robust_two_time_plan(ctx.spectral, std::nullopt);
        out.summary.has_two_time = true;
    } else {
        out.summary.plan = optimal_measurement_times(ctx.spectral, ctx.profile, 2);
        out.summary.has_plan = true;
        out.summary.two_time = robust_two_time_plan(ctx.spectral, ctx.profile);
        out.summary.has_two_time = true;
    }
    out.hopeless = ctx.profile.p_max <= kHopelessPmax;
    out.summary.wall_time_ms = elapsed_ms(start);
    return out;
}

}  // namespace gal
