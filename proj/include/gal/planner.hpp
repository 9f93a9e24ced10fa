#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gal/analytic.hpp"
#include "gal/core.hpp"

namespace gal {

enum class Strategy {
    KnownMoments,  // measure at the optimal times T(j)
    TwoTime,       // two runs spaced by ~pi/(2 omega), moments unknown
    Hopeless,      // P(t) is constant; no schedule helps
};

const char* strategy_name(Strategy strategy);

/// Measurement schedule from known moments. Real optimal times follow
/// T(j) = [(j+1/2) pi - Re(phi)] / omega; integer steps pick the better of
/// the two neighbors of each T(j).
struct MeasurementPlan {
    Strategy strategy = Strategy::KnownMoments;
    std::vector<double> t_real;
    std::vector<std::int64_t> t_int;
    std::vector<double> p_at_t_int;
    double expected_repetitions = 0.0;  // 1 / P_max; +inf when P_max = 0
    double constant_p = 0.0;            // meaningful for Hopeless plans
};

/// Two-run schedule for unknown initial moments. t2 - t1 = round(pi/(2 omega))
/// guarantees max(P(t1), P(t2)) >= P_av - epsilon_round with
/// epsilon_round = dP * omega (Lipschitz bound on the integer rounding).
struct TwoTimePlan {
    Strategy strategy = Strategy::TwoTime;
    std::int64_t t1 = 0;
    std::int64_t t2 = 0;
    double slowdown_bound = 4.0;
    // Filled when the profile is known; NaN otherwise.
    double guarantee = 0.0;       // P_av lower bound
    double epsilon_round = 0.0;   // dP * omega
    double realized_p1 = 0.0;
    double realized_p2 = 0.0;
    bool has_profile = false;
};

/// Threshold below which P_max counts as zero (hopeless instance).
inline constexpr double kHopelessPmax = 1e-12;

MeasurementPlan optimal_measurement_times(const SpectralParams& spectral,
                                          const ProbabilityProfile& profile,
                                          std::size_t j_max);

TwoTimePlan robust_two_time_plan(const SpectralParams& spectral,
                                 const std::optional<ProbabilityProfile>& profile_known);

/// 1 / P_max. Throws HopelessInstance when P_max is (numerically) zero.
double expected_repetitions(const ProbabilityProfile& profile);

}  // namespace gal
