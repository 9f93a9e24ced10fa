#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gal/analytic.hpp"
#include "gal/core.hpp"
#include "gal/distributions.hpp"
#include "gal/planner.hpp"
#include "gal/simulator.hpp"

namespace gal {

inline constexpr const char* kSummarySchema = "gal.summary.v1";
inline constexpr const char* kRunCsvSchema = "gal.run.v1";
inline constexpr const char* kSweepCsvSchema = "gal.sweep.v1";
inline constexpr const char* kTrajectoryCsvHeader =
        "t,p_analytic,p_sim,k_re_analytic,k_im_analytic,l_re_analytic,l_im_analytic,"
        "k_re_sim,k_im_sim,l_re_sim,l_im_sim,norm_drift";
inline constexpr const char* kSweepCsvHeader =
        "noise_sigma,seeds,sigma_l_sq_mean,sigma_l_sq_std,p_max_formula_mean,p_max_formula_std,"
        "p_best_pred_mean,p_best_pred_std,p_best_sim_mean,p_best_sim_std,t_star_mean";

/// Fixed-width scientific notation with '.' separator, locale-proof.
std::string format_double(double value);

nlohmann::json complex_to_json(Complex value);
Complex complex_from_json(const nlohmann::json& node);

/// Parsed instance file: dimensions, marked set (explicit or the last-r
/// default), initial distribution, optional simulator config and tolerances.
struct InstanceFile {
    std::size_t n = 0;
    std::vector<std::size_t> marked;
    bool marked_by_count = false;  // "r" form: marked defaults to the last r indices
    DistributionSpec init;
    SimConfig sim;
    bool has_sim = false;
    Tolerances tolerances;
    bool has_tolerances = false;
};

InstanceFile instance_from_json(const nlohmann::json& node);
nlohmann::json instance_to_json(const InstanceFile& file);
InstanceFile load_instance_file(const std::string& path);
SearchInstance make_instance(const InstanceFile& file);

/// One row of a trajectory; NaN marks columns the producing engine did not fill.
struct StepRow {
    std::int64_t t = 0;
    double p_analytic;
    double p_sim;
    Complex k_analytic, l_analytic;
    Complex k_sim, l_sim;
    double norm_drift;
    StepRow();
};

void write_trajectory_csv(std::ostream& out, const std::vector<StepRow>& rows);

struct RunSummary {
    std::size_t n = 0;
    std::size_t r = 0;
    std::string command;
    std::string method;  // "analytic", "direct", "wht"
    SpectralParams spectral;
    ProbabilityProfile profile;
    MeasurementPlan plan;
    TwoTimePlan two_time;
    bool has_plan = false;
    bool has_two_time = false;
    std::uint64_t seed = 0;
    double wall_time_ms = 0.0;
    // compare diagnostics
    double max_p_divergence;
    double max_amp_divergence;
    double norm_drift_max;
    RunSummary();
};

nlohmann::json summary_to_json(const RunSummary& summary);

nlohmann::json plan_to_json(const MeasurementPlan& plan);
nlohmann::json two_time_to_json(const TwoTimePlan& plan);

/// Sweep harness specification (JSON file).
struct SweepSpec {
    std::size_t n = 0;
    std::size_t r = 1;
    std::vector<double> noise_levels;
    std::size_t seeds_per_level = 0;
    std::uint64_t base_seed = 0;
};

SweepSpec sweep_spec_from_json(const nlohmann::json& node);
SweepSpec load_sweep_spec(const std::string& path);

/// Per-level aggregate (mean +- sample std over seeds).
struct SweepLevelRow {
    double noise_sigma = 0.0;
    std::size_t seeds = 0;
    double sigma_l_sq_mean = 0.0, sigma_l_sq_std = 0.0;
    double p_max_formula_mean = 0.0, p_max_formula_std = 0.0;  // P_av + dP
    double p_best_pred_mean = 0.0, p_best_pred_std = 0.0;      // analytic best at integer t
    double p_best_sim_mean = 0.0, p_best_sim_std = 0.0;        // scanned simulator best
    double t_star_mean = 0.0;                                  // argmax step of the scan
};

void write_sweep_csv(std::ostream& out, const std::vector<SweepLevelRow>& rows);

}  // namespace gal
