#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gal/core.hpp"

namespace gal {

enum class DistributionKind {
    Uniform,
    NoisyUniform,
    RandomComplex,
    WorstCase,
    Circular,
    Explicit,
};

enum class CircularBranch { Plus, Minus };

const char* distribution_kind_name(DistributionKind kind);
const char* circular_branch_name(CircularBranch branch);

/// Recorded in output metadata; seeds are binding within this implementation.
inline constexpr const char* kGeneratorName = "mt19937_64/box-muller";

struct DistributionSpec {
    DistributionKind kind = DistributionKind::Uniform;
    double noise_sigma = 0.0;                // NoisyUniform
    CircularBranch branch = CircularBranch::Minus;  // Circular
    std::vector<Complex> amplitudes;         // Explicit
    std::uint64_t seed = 0;

    static DistributionSpec uniform();
    static DistributionSpec noisy_uniform(double noise_sigma, std::uint64_t seed);
    static DistributionSpec random_complex(std::uint64_t seed);
    static DistributionSpec worst_case();
    static DistributionSpec circular(CircularBranch branch);
    static DistributionSpec explicit_amplitudes(std::vector<Complex> amplitudes);
};

/// Seeded normal deviates: 53-bit uniforms from mt19937_64 through Box-Muller,
/// bit-exact for a given seed on any conforming platform.
class SeededGaussian {
public:
    explicit SeededGaussian(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {  // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    double normal();
    Complex complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Deterministic under fixed (spec, seed); output is normalized.
StateVector generate(const DistributionSpec& spec, const SearchInstance& instance);

}  // namespace gal
