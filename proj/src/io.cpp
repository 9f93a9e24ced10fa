#include "gal/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

namespace gal {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void parse_fail(const std::string& message) {
    throw Error(ErrorCode::ParseError, message);
}

const nlohmann::json& require_field(const nlohmann::json& node, const char* key) {
    auto it = node.find(key);
    if (it == node.end()) parse_fail(std::string("missing field \"") + key + "\"");
    return *it;
}

double json_finite_or_nan(double value) {
    return std::isfinite(value) ? value : kNaN;
}

nlohmann::json json_number_or_null(double value) {
    if (std::isnan(value)) return nullptr;
    if (std::isinf(value)) return nullptr;
    return value;
}

}  // namespace

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12e", value);
    return buffer;
}

nlohmann::json complex_to_json(Complex value) {
    return nlohmann::json{{"re", value.real()}, {"im", value.imag()}};
}

Complex complex_from_json(const nlohmann::json& node) {
    if (!node.is_object() || !node.contains("re") || !node.contains("im")) {
        parse_fail("complex values must be objects with \"re\" and \"im\"");
    }
    return {node["re"].get<double>(), node["im"].get<double>()};
}

namespace {

DistributionKind kind_from_string(const std::string& raw) {
    if (raw == "uniform") return DistributionKind::Uniform;
    if (raw == "noisy_uniform") return DistributionKind::NoisyUniform;
    if (raw == "random_complex") return DistributionKind::RandomComplex;
    if (raw == "worst_case") return DistributionKind::WorstCase;
    if (raw == "circular") return DistributionKind::Circular;
    if (raw == "explicit") return DistributionKind::Explicit;
    throw Error(ErrorCode::UnknownKind, "unknown distribution kind \"" + raw + "\"");
}

DistributionSpec init_from_json(const nlohmann::json& node) {
    if (!node.is_object()) parse_fail("\"init\" must be an object");
    DistributionSpec spec;
    spec.kind = kind_from_string(require_field(node, "kind").get<std::string>());
    if (node.contains("seed")) spec.seed = node["seed"].get<std::uint64_t>();
    switch (spec.kind) {
        case DistributionKind::NoisyUniform:
            spec.noise_sigma = require_field(node, "noise_sigma").get<double>();
            break;
        case DistributionKind::Circular: {
            const std::string branch = require_field(node, "branch").get<std::string>();
            if (branch == "plus") {
                spec.branch = CircularBranch::Plus;
            } else if (branch == "minus") {
                spec.branch = CircularBranch::Minus;
            } else {
                parse_fail("circular branch must be \"plus\" or \"minus\"");
            }
            break;
        }
        case DistributionKind::Explicit: {
            const auto& raw = require_field(node, "amplitudes");
            if (!raw.is_array()) parse_fail("\"amplitudes\" must be an array");
            spec.amplitudes.reserve(raw.size());
            for (const auto& item : raw) spec.amplitudes.push_back(complex_from_json(item));
            break;
        }
        default:
            break;
    }
    return spec;
}

nlohmann::json init_to_json(const DistributionSpec& spec) {
    nlohmann::json node{{"kind", distribution_kind_name(spec.kind)}, {"seed", spec.seed}};
    switch (spec.kind) {
        case DistributionKind::NoisyUniform:
            node["noise_sigma"] = spec.noise_sigma;
            break;
        case DistributionKind::Circular:
            node["branch"] = circular_branch_name(spec.branch);
            break;
        case DistributionKind::Explicit: {
            nlohmann::json amps = nlohmann::json::array();
            for (Complex a : spec.amplitudes) amps.push_back(complex_to_json(a));
            node["amplitudes"] = std::move(amps);
            break;
        }
        default:
            break;
    }
    return node;
}

}  // namespace

InstanceFile instance_from_json(const nlohmann::json& node) {
    if (!node.is_object()) parse_fail("instance file must be a JSON object");
    InstanceFile file;
    file.n = require_field(node, "n").get<std::size_t>();
    const bool has_marked = node.contains("marked");
    const bool has_r = node.contains("r");
    if (has_marked == has_r) {
        parse_fail("exactly one of \"marked\" or \"r\" is required");
    }
    if (has_marked) {
        file.marked = node["marked"].get<std::vector<std::size_t>>();
    } else {
        const auto r = node["r"].get<std::size_t>();
        if (r > file.n) parse_fail("\"r\" exceeds n");
        file.marked_by_count = true;
        file.marked.reserve(r);
        for (std::size_t i = file.n - r; i < file.n; ++i) file.marked.push_back(i);
    }
    file.init = init_from_json(require_field(node, "init"));
    if (node.contains("sim")) {
        file.has_sim = true;
        const auto& sim = node["sim"];
        if (sim.contains("method")) {
            const std::string method = sim["method"].get<std::string>();
            if (method == "direct") {
                file.sim.diffusion_method = DiffusionMethod::DirectReflection;
            } else if (method == "wht") {
                file.sim.diffusion_method = DiffusionMethod::WalshHadamard;
            } else {
                parse_fail("sim method must be \"direct\" or \"wht\"");
            }
        }
        if (sim.contains("norm_check_every")) {
            file.sim.norm_check_every = sim["norm_check_every"].get<std::size_t>();
        }
    }
    if (node.contains("tolerances")) {
        file.has_tolerances = true;
        const auto& tol = node["tolerances"];
        if (tol.contains("norm")) file.tolerances.norm = tol["norm"].get<double>();
        if (tol.contains("algebra")) file.tolerances.algebra = tol["algebra"].get<double>();
    }
    return file;
}

nlohmann::json instance_to_json(const InstanceFile& file) {
    nlohmann::json node{{"n", file.n}};
    if (file.marked_by_count) {
        node["r"] = file.marked.size();
    } else {
        node["marked"] = file.marked;
    }
    node["init"] = init_to_json(file.init);
    if (file.has_sim) {
        node["sim"] = nlohmann::json{
                {"method", diffusion_method_name(file.sim.diffusion_method)},
                {"norm_check_every", file.sim.norm_check_every},
        };
    }
    if (file.has_tolerances) {
        node["tolerances"] = nlohmann::json{
                {"norm", file.tolerances.norm},
                {"algebra", file.tolerances.algebra},
        };
    }
    return node;
}

InstanceFile load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open instance file: " + path);
    }
    nlohmann::json node;
    try {
        in >> node;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return instance_from_json(node);
}

SearchInstance make_instance(const InstanceFile& file) {
    return validate_instance(file.n, file.marked);
}

StepRow::StepRow()
        : p_analytic(kNaN),
          p_sim(kNaN),
          k_analytic(kNaN, kNaN),
          l_analytic(kNaN, kNaN),
          k_sim(kNaN, kNaN),
          l_sim(kNaN, kNaN),
          norm_drift(kNaN) {}

void write_trajectory_csv(std::ostream& out, const std::vector<StepRow>& rows) {
    out << "# " << kRunCsvSchema << "\n" << kTrajectoryCsvHeader << "\n";
    for (const StepRow& row : rows) {
        out << row.t << ',' << format_double(row.p_analytic) << ',' << format_double(row.p_sim)
            << ',' << format_double(row.k_analytic.real()) << ','
            << format_double(row.k_analytic.imag()) << ',' << format_double(row.l_analytic.real())
            << ',' << format_double(row.l_analytic.imag()) << ',' << format_double(row.k_sim.real())
            << ',' << format_double(row.k_sim.imag()) << ',' << format_double(row.l_sim.real())
            << ',' << format_double(row.l_sim.imag()) << ',' << format_double(row.norm_drift)
            << '\n';
    }
}

RunSummary::RunSummary()
        : max_p_divergence(kNaN), max_amp_divergence(kNaN), norm_drift_max(kNaN) {}

nlohmann::json plan_to_json(const MeasurementPlan& plan) {
    nlohmann::json node{
            {"strategy", strategy_name(plan.strategy)},
            {"expected_repetitions", json_number_or_null(plan.expected_repetitions)},
    };
    if (plan.strategy == Strategy::Hopeless) {
        node["constant_p"] = plan.constant_p;
    } else {
        node["t_real"] = plan.t_real;
        node["t_int"] = plan.t_int;
        node["p_at_t_int"] = plan.p_at_t_int;
    }
    return node;
}

nlohmann::json two_time_to_json(const TwoTimePlan& plan) {
    nlohmann::json node{
            {"strategy", strategy_name(plan.strategy)},
            {"t1", plan.t1},
            {"t2", plan.t2},
            {"slowdown_bound", plan.slowdown_bound},
    };
    if (plan.has_profile) {
        node["guarantee_p_av"] = json_number_or_null(plan.guarantee);
        node["epsilon_round"] = json_number_or_null(plan.epsilon_round);
        node["realized_p1"] = json_number_or_null(plan.realized_p1);
        node["realized_p2"] = json_number_or_null(plan.realized_p2);
    }
    return node;
}

nlohmann::json summary_to_json(const RunSummary& summary) {
    nlohmann::json node{
            {"schema", kSummarySchema},
            {"command", summary.command},
            {"n", summary.n},
            {"r", summary.r},
            {"method", summary.method},
            {"omega", summary.spectral.omega},
            {"f_plus0", complex_to_json(summary.spectral.f_plus0)},
            {"f_minus0", complex_to_json(summary.spectral.f_minus0)},
            {"alpha", complex_to_json(summary.spectral.alpha)},
            {"phi", complex_to_json(summary.spectral.phi)},
            {"regime", regime_name(summary.spectral.regime)},
            {"p_av", summary.profile.p_av},
            {"delta_p", summary.profile.delta_p},
            {"p_max", summary.profile.p_max},
            {"p_min", summary.profile.p_min},
            {"period", summary.profile.period},
            {"seed", summary.seed},
            {"generator", kGeneratorName},
            {"wall_time_ms", json_finite_or_nan(summary.wall_time_ms)},
    };
    if (summary.has_plan) node["plan"] = plan_to_json(summary.plan);
    if (summary.has_two_time) node["two_time"] = two_time_to_json(summary.two_time);
    if (!std::isnan(summary.max_p_divergence)) {
        node["max_p_divergence"] = summary.max_p_divergence;
    }
    if (!std::isnan(summary.max_amp_divergence)) {
        node["max_amp_divergence"] = summary.max_amp_divergence;
    }
    if (!std::isnan(summary.norm_drift_max)) {
        node["norm_drift_max"] = summary.norm_drift_max;
    }
    return node;
}

SweepSpec sweep_spec_from_json(const nlohmann::json& node) {
    if (!node.is_object()) parse_fail("sweep spec must be a JSON object");
    SweepSpec spec;
    spec.n = require_field(node, "n").get<std::size_t>();
    spec.r = require_field(node, "r").get<std::size_t>();
    spec.noise_levels = require_field(node, "noise_levels").get<std::vector<double>>();
    spec.seeds_per_level = require_field(node, "seeds_per_level").get<std::size_t>();
    if (node.contains("base_seed")) spec.base_seed = node["base_seed"].get<std::uint64_t>();
    if (spec.noise_levels.empty() || spec.seeds_per_level == 0) {
        parse_fail("sweep spec needs at least one noise level and one seed per level");
    }
    return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open sweep spec: " + path);
    nlohmann::json node;
    try {
        in >> node;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return sweep_spec_from_json(node);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepLevelRow>& rows) {
    out << "# " << kSweepCsvSchema << "\n" << kSweepCsvHeader << "\n";
    for (const SweepLevelRow& row : rows) {
        out << format_double(row.noise_sigma) << ',' << row.seeds << ','
            << format_double(row.sigma_l_sq_mean) << ',' << format_double(row.sigma_l_sq_std)
            << ',' << format_double(row.p_max_formula_mean) << ','
            << format_double(row.p_max_formula_std) << ',' << format_double(row.p_best_pred_mean)
            << ',' << format_double(row.p_best_pred_std) << ',' << format_double(row.p_best_sim_mean)
            << ',' << format_double(row.p_best_sim_std) << ',' << format_double(row.t_star_mean)
            << '\n';
    }
}

}  // namespace gal
