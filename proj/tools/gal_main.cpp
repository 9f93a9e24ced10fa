// gal — dual-engine laboratory for Grover search with arbitrary complex
// initial amplitudes. Subcommands: predict | simulate | compare | sweep | plan.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gal/experiment.hpp"
#include "gal/log.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitHopeless = 4;

int exit_code_for(const gal::Error& error) {
    switch (error.code()) {
        case gal::ErrorCode::ToleranceExceeded:
            return kExitTolerance;
        case gal::ErrorCode::HopelessInstance:
            return kExitHopeless;
        default:
            return kExitValidation;
    }
}

struct OutputOptions {
    std::string out_path;
    std::string format = "json";
};

void emit(const OutputOptions& options, const std::string& payload) {
    if (options.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(options.out_path, std::ios::binary);
    if (!out) {
        throw gal::Error(gal::ErrorCode::ValidationError,
                         "cannot open output file: " + options.out_path);
    }
    out << payload;
}

std::string render_run(const gal::RunSummary& summary, const std::vector<gal::StepRow>& rows,
                       const std::string& format) {
    if (format == "csv") {
        std::ostringstream csv;
        gal::write_trajectory_csv(csv, rows);
        return csv.str();
    }
    return gal::summary_to_json(summary).dump(2) + "\n";
}

gal::DiffusionMethod method_from_string(const std::string& raw) {
    if (raw == "direct") return gal::DiffusionMethod::DirectReflection;
    if (raw == "wht") return gal::DiffusionMethod::WalshHadamard;
    throw gal::Error(gal::ErrorCode::ValidationError,
                     "unknown method \"" + raw + "\" (expected direct or wht)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gal — exact predictor and brute-force simulator for Grover search\n"
                 "with arbitrary complex initial amplitudes"};
    app.require_subcommand(1);

    OutputOptions output;
    std::string instance_path;
    std::string method = "direct";
    std::int64_t t_max = -1;
    double tolerance = 1e-10;
    std::optional<std::uint64_t> seed_override;
    unsigned jobs = 1;
    bool two_time = false;
    double corrupt_omega = 1.0;

    auto add_common = [&](CLI::App* cmd, bool with_instance = true) {
        if (with_instance) {
            cmd->add_option("instance", instance_path, "instance JSON file")->required();
        }
        cmd->add_option("--out", output.out_path, "write output to this path instead of stdout");
        cmd->add_option("--format", output.format, "output format")
                ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--seed", seed_override, "override the instance init seed");
    };

    auto* predict = app.add_subcommand("predict", "closed-form trajectory, profile and plan");
    add_common(predict);

    auto* simulate = app.add_subcommand("simulate", "brute-force statevector run");
    add_common(simulate);
    simulate->add_option("--t-max", t_max, "number of Grover iterations (default: two periods)");
    simulate->add_option("--method", method, "diffusion implementation")
            ->check(CLI::IsMember({"direct", "wht"}));

    auto* compare = app.add_subcommand("compare", "run both engines and report divergence");
    add_common(compare);
    compare->add_option("--t-max", t_max, "horizon (default: three periods)");
    compare->add_option("--method", method, "diffusion implementation")
            ->check(CLI::IsMember({"direct", "wht"}));
    compare->add_option("--tolerance", tolerance, "max allowed divergence before exit 3");
    compare->add_option("--corrupt-omega", corrupt_omega,
                        "test hook: scale the analytic omega by this factor")
            ->group("");  // hidden

    auto* sweep = app.add_subcommand("sweep", "noise robustness sweep over (level, seed) cells");
    sweep->add_option("spec", instance_path, "sweep spec JSON file")->required();
    sweep->add_option("--out", output.out_path, "write output to this path instead of stdout");
    sweep->add_option("--format", output.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--jobs", jobs, "parallel cells (aggregation stays deterministic)");

    auto* plan = app.add_subcommand("plan", "measurement schedule from the instance moments");
    add_common(plan);
    plan->add_flag("--two-time", two_time, "omit moment-dependent fields; two-run schedule only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }
    if (*sweep && sweep->count("--format") == 0) {
        output.format = "csv";  // sweeps are tabular by default
    }

    try {
        if (*predict || *simulate || *compare || *plan) {
            gal::InstanceFile file = gal::load_instance_file(instance_path);
            if (seed_override) file.init.seed = *seed_override;

            if (*predict) {
                gal::RunOutput run = gal::run_predict(file);
                emit(output, render_run(run.summary, run.rows, output.format));
            } else if (*simulate) {
                gal::RunOutput run =
                        gal::run_simulate(file, t_max, method_from_string(method));
                emit(output, render_run(run.summary, run.rows, output.format));
            } else if (*compare) {
                gal::CompareOutput run = gal::run_compare(file, t_max, method_from_string(method),
                                                          tolerance, corrupt_omega);
                emit(output, render_run(run.summary, run.rows, output.format));
                if (!run.within_tolerance) {
                    std::cerr << "compare: divergence above tolerance (P: "
                              << gal::format_double(run.max_p_divergence)
                              << ", amplitude: " << gal::format_double(run.max_amp_divergence)
                              << ", tolerance " << gal::format_double(tolerance) << ")\n";
                    return kExitTolerance;
                }
            } else {
                gal::PlanOutput run = gal::run_plan(file, two_time);
                emit(output, gal::summary_to_json(run.summary).dump(2) + "\n");
                if (run.hopeless) {
                    std::cerr << "plan: P_max = 0; no measurement schedule can succeed\n";
                    return kExitHopeless;
                }
            }
            return kExitOk;
        }

        // sweep
        gal::SweepSpec spec = gal::load_sweep_spec(instance_path);
        gal::SweepOutput run = gal::run_sweep(spec, jobs);
        if (output.format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            std::ostringstream csv;
            gal::write_sweep_csv(csv, run.rows);
            for (const auto& row : run.rows) {
                rows.push_back({{"noise_sigma", row.noise_sigma},
                                {"seeds", row.seeds},
                                {"sigma_l_sq_mean", row.sigma_l_sq_mean},
                                {"sigma_l_sq_std", row.sigma_l_sq_std},
                                {"p_max_formula_mean", row.p_max_formula_mean},
                                {"p_max_formula_std", row.p_max_formula_std},
                                {"p_best_pred_mean", row.p_best_pred_mean},
                                {"p_best_pred_std", row.p_best_pred_std},
                                {"p_best_sim_mean", row.p_best_sim_mean},
                                {"p_best_sim_std", row.p_best_sim_std},
                                {"t_star_mean", row.t_star_mean}});
            }
            emit(output, nlohmann::json{{"schema", "gal.sweep.v1"}, {"rows", rows}}.dump(2) + "\n");
        } else {
            std::ostringstream csv;
            gal::write_sweep_csv(csv, run.rows);
            emit(output, csv.str());
        }
        return kExitOk;
    } catch (const gal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
