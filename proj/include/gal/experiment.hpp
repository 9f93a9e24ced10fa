#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gal/io.hpp"

namespace gal {

/// Fixed horizon used for trajectories when P(t) is constant (circular/dead).
inline constexpr std::int64_t kConstantRegimeHorizon = 16;

struct RunOutput {
    RunSummary summary;
    std::vector<StepRow> rows;
};

/// Analytic engine only: spectral data, profile, plan, trajectory over
/// t in [0, ceil(2 pi / omega)] (fixed horizon in constant regimes).
RunOutput run_predict(const InstanceFile& file);

/// Brute-force simulation only. t_max < 0 picks the predict horizon.
RunOutput run_simulate(const InstanceFile& file, std::int64_t t_max, DiffusionMethod method);

struct CompareOutput {
    RunSummary summary;
    std::vector<StepRow> rows;
    double max_p_divergence = 0.0;
    double max_amp_divergence = 0.0;
    bool within_tolerance = true;
};

/// Runs both engines over t in [0, t_max] (default ceil(3 pi / omega)) and
/// reports the worst per-step P and per-amplitude deviations. With the WHT
/// path amplitudes are compared after best-fit global-phase alignment.
/// omega_corruption is a test hook scaling omega in the analytic path.
CompareOutput run_compare(const InstanceFile& file, std::int64_t t_max, DiffusionMethod method,
                          double tolerance, double omega_corruption = 1.0);

struct SweepOutput {
    std::vector<SweepLevelRow> rows;
    /// Per level: |mean(best_sim) - mean(best_pred)| / SE(best_sim).
    std::vector<double> agreement_z;
    bool agreement_within_3se = true;
};

/// Noisy-initialization robustness sweep; cells (level, seed) run in parallel
/// up to `jobs` threads, aggregation is deterministic (sorted by level, seed).
SweepOutput run_sweep(const SweepSpec& spec, unsigned jobs);

struct PlanOutput {
    RunSummary summary;
    bool hopeless = false;  // P_max is zero; distinct exit code
};

PlanOutput run_plan(const InstanceFile& file, bool two_time_only);

}  // namespace gal
