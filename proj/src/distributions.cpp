#include "gal/distributions.hpp"

#include <cmath>
#include <numbers>

namespace gal {

const char* distribution_kind_name(DistributionKind kind) {
    switch (kind) {
        case DistributionKind::Uniform: return "uniform";
        case DistributionKind::NoisyUniform: return "noisy_uniform";
        case DistributionKind::RandomComplex: return "random_complex";
        case DistributionKind::WorstCase: return "worst_case";
        case DistributionKind::Circular: return "circular";
        case DistributionKind::Explicit: return "explicit";
    }
    return "?";
}

const char* circular_branch_name(CircularBranch branch) {
    return branch == CircularBranch::Plus ? "plus" : "minus";
}

DistributionSpec DistributionSpec::uniform() {
    return DistributionSpec{};
}

DistributionSpec DistributionSpec::noisy_uniform(double noise_sigma, std::uint64_t seed) {
    DistributionSpec spec;
    spec.kind = DistributionKind::NoisyUniform;
    spec.noise_sigma = noise_sigma;
    spec.seed = seed;
    return spec;
}

DistributionSpec DistributionSpec::random_complex(std::uint64_t seed) {
    DistributionSpec spec;
    spec.kind = DistributionKind::RandomComplex;
    spec.seed = seed;
    return spec;
}

DistributionSpec DistributionSpec::worst_case() {
    DistributionSpec spec;
    spec.kind = DistributionKind::WorstCase;
    return spec;
}

DistributionSpec DistributionSpec::circular(CircularBranch branch) {
    DistributionSpec spec;
    spec.kind = DistributionKind::Circular;
    spec.branch = branch;
    return spec;
}

DistributionSpec DistributionSpec::explicit_amplitudes(std::vector<Complex> amplitudes) {
    DistributionSpec spec;
    spec.kind = DistributionKind::Explicit;
    spec.amplitudes = std::move(amplitudes);
    return spec;
}

double SeededGaussian::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

namespace {

void normalize(std::vector<Complex>& amps) {
    const double n2 = squared_norm(amps);
    if (n2 < 1e-24) {
        throw Error(ErrorCode::ValidationError, "cannot normalize a (near-)zero vector");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (Complex& a : amps) a *= scale;
}

std::vector<Complex> make_uniform(std::size_t n) {
    return std::vector<Complex>(n, Complex{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
}

std::vector<Complex> make_noisy_uniform(const DistributionSpec& spec, std::size_t n) {
    if (spec.noise_sigma < 0.0) {
        throw Error(ErrorCode::ValidationError, "noise_sigma must be nonnegative");
    }
    std::vector<Complex> amps = make_uniform(n);
    if (spec.noise_sigma == 0.0) return amps;
    SeededGaussian rng(spec.seed);
    const double sd = spec.noise_sigma / std::sqrt(2.0 * static_cast<double>(n));
    for (Complex& a : amps) a += sd * rng.complex_normal();
    normalize(amps);
    return amps;
}

std::vector<Complex> make_random_complex(const DistributionSpec& spec, std::size_t n) {
    SeededGaussian rng(spec.seed);
    std::vector<Complex> amps(n);
    for (Complex& a : amps) a = rng.complex_normal();
    normalize(amps);
    return amps;
}

// Marked amplitudes zero; unmarked alternate +c, -c over an even count
// (zero-padding one state if N-r is odd), which pins k_bar = l_bar = 0 and
// (N-r) sigma_l^2 = 1 exactly.
std::vector<Complex> make_worst_case(const SearchInstance& instance) {
    const std::size_t unmarked = instance.unmarked_count();
    if (unmarked < 2) {
        throw Error(ErrorCode::WorstCaseImpossible,
                    "worst-case construction needs at least two unmarked states");
    }
    const std::size_t paired = unmarked - (unmarked % 2);
    const double c = 1.0 / std::sqrt(static_cast<double>(paired));

    std::vector<Complex> amps(instance.n(), Complex{0.0, 0.0});
    const auto& marked = instance.marked();
    std::size_t next_marked = 0;
    std::size_t placed = 0;
    for (std::size_t i = 0; i < instance.n(); ++i) {
        if (next_marked < marked.size() && marked[next_marked] == i) {
            ++next_marked;
            continue;
        }
        if (placed < paired) {
            amps[i] = Complex{(placed % 2 == 0) ? c : -c, 0.0};
            ++placed;
        }
    }
    return amps;
}

// All marked states at k_bar, all unmarked at l_bar = -+ i sqrt(r/(N-r)) k_bar,
// zeroing f+ (branch plus) or f- (branch minus). Zero deviations.
std::vector<Complex> make_circular(const DistributionSpec& spec, const SearchInstance& instance) {
    const double r = static_cast<double>(instance.r());
    const double u = static_cast<double>(instance.unmarked_count());
    const double k = 1.0 / std::sqrt(2.0 * r);
    const double sign = spec.branch == CircularBranch::Minus ? 1.0 : -1.0;
    const Complex l = Complex{0.0, sign} * std::sqrt(r / u) * k;

    std::vector<Complex> amps(instance.n(), l);
    for (std::size_t index : instance.marked()) amps[index] = Complex{k, 0.0};
    normalize(amps);
    return amps;
}

std::vector<Complex> make_explicit(const DistributionSpec& spec, const SearchInstance& instance) {
    if (spec.amplitudes.size() != instance.n()) {
        throw Error(ErrorCode::LengthMismatch,
                    "explicit amplitude array length " + std::to_string(spec.amplitudes.size()) +
                            " does not match N=" + std::to_string(instance.n()));
    }
    std::vector<Complex> amps = spec.amplitudes;
    normalize(amps);
    return amps;
}

}  // namespace

StateVector generate(const DistributionSpec& spec, const SearchInstance& instance) {
    switch (spec.kind) {
        case DistributionKind::Uniform:
            return StateVector(make_uniform(instance.n()));
        case DistributionKind::NoisyUniform:
            return StateVector(make_noisy_uniform(spec, instance.n()));
        case DistributionKind::RandomComplex:
            return StateVector(make_random_complex(spec, instance.n()));
        case DistributionKind::WorstCase:
            return StateVector(make_worst_case(instance));
        case DistributionKind::Circular:
            return StateVector(make_circular(spec, instance));
        case DistributionKind::Explicit:
            return StateVector(make_explicit(spec, instance));
    }
    throw Error(ErrorCode::UnknownKind, "unknown distribution kind");
}

}  // namespace gal
