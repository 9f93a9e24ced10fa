#include "gal/planner.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace gal {

namespace {

bool constant_probability(Regime regime) {
    return regime == Regime::CircularPlus || regime == Regime::CircularMinus ||
           regime == Regime::Dead;
}

double repetitions_or_inf(double p_max) {
    if (p_max <= kHopelessPmax) return std::numeric_limits<double>::infinity();
    return 1.0 / p_max;
}

}  // namespace

const char* strategy_name(Strategy strategy) {
    switch (strategy) {
        case Strategy::KnownMoments: return "KnownMoments";
        case Strategy::TwoTime: return "TwoTime";
        case Strategy::Hopeless: return "Hopeless";
    }
    return "?";
}

MeasurementPlan optimal_measurement_times(const SpectralParams& spectral,
                                          const ProbabilityProfile& profile,
                                          std::size_t j_max) {
    MeasurementPlan plan;
    if (constant_probability(spectral.regime)) {
        plan.strategy = Strategy::Hopeless;
        plan.constant_p = profile.p_av;
        plan.expected_repetitions = repetitions_or_inf(profile.p_av);
        return plan;
    }

    plan.strategy = Strategy::KnownMoments;
    const double pi = std::numbers::pi;
    const double half_period = pi / spectral.omega;
    double t0 = (0.5 * pi - spectral.phi.real()) / spectral.omega;
    // Re(phi) <= pi/2 under the principal branch, so T(0) >= 0 already; the
    // whole-period shift is kept for the exact boundary.
    while (t0 < 0.0) t0 += half_period;

    plan.t_real.reserve(j_max + 1);
    plan.t_int.reserve(j_max + 1);
    plan.p_at_t_int.reserve(j_max + 1);
    for (std::size_t j = 0; j <= j_max; ++j) {
        const double t_real = t0 + static_cast<double>(j) * half_period;
        auto lo = static_cast<std::int64_t>(std::floor(t_real));
        if (lo < 0) lo = 0;
        const std::int64_t hi = lo + 1;
        // Better neighbor wins; ties go to the smaller step count. The first
        // entry also considers step 0: when the preceding (negative-time) peak
        // lands within one period of the origin, t=0 can beat both neighbors
        // of T(0).
        std::int64_t best = -1;
        double p_best = -1.0;
        auto consider = [&](std::int64_t candidate) {
            const double p = probability_at(profile, spectral, static_cast<double>(candidate));
            if (p > p_best || (p == p_best && candidate < best)) {
                p_best = p;
                best = candidate;
            }
        };
        if (j == 0) consider(0);
        consider(lo);
        consider(hi);
        plan.t_real.push_back(t_real);
        plan.t_int.push_back(best);
        plan.p_at_t_int.push_back(p_best);
    }
    plan.expected_repetitions = repetitions_or_inf(profile.p_max);
    return plan;
}

TwoTimePlan robust_two_time_plan(const SpectralParams& spectral,
                                 const std::optional<ProbabilityProfile>& profile_known) {
    const double pi = std::numbers::pi;
    TwoTimePlan plan;
    // Default t1 offset keeps both probes inside the first oscillation period.
    plan.t1 = std::llround(pi / (4.0 * spectral.omega));
    plan.t2 = plan.t1 + std::llround(pi / (2.0 * spectral.omega));
    plan.strategy = constant_probability(spectral.regime) ? Strategy::Hopeless : Strategy::TwoTime;

    const double nan = std::numeric_limits<double>::quiet_NaN();
    plan.guarantee = nan;
    plan.epsilon_round = nan;
    plan.realized_p1 = nan;
    plan.realized_p2 = nan;
    if (profile_known) {
        plan.has_profile = true;
        plan.guarantee = profile_known->p_av;
        plan.epsilon_round = profile_known->delta_p * spectral.omega;
        plan.realized_p1 =
                probability_at(*profile_known, spectral, static_cast<double>(plan.t1));
        plan.realized_p2 =
                probability_at(*profile_known, spectral, static_cast<double>(plan.t2));
    }
    return plan;
}

double expected_repetitions(const ProbabilityProfile& profile) {
    if (profile.p_max <= kHopelessPmax) {
        throw Error(ErrorCode::HopelessInstance,
                    "P_max is zero; the search can never succeed from this initialization");
    }
    return 1.0 / profile.p_max;
}

}  // namespace gal
