#include "gal/simulator.hpp"

#include <cmath>
#include <utility>

namespace gal {

const char* diffusion_method_name(DiffusionMethod method) {
    switch (method) {
        case DiffusionMethod::DirectReflection: return "direct";
        case DiffusionMethod::WalshHadamard: return "wht";
    }
    return "?";
}

bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

void oracle_flip_inplace(std::span<Complex> amplitudes, const SearchInstance& instance) {
    if (amplitudes.size() != instance.n()) {
        throw Error(ErrorCode::LengthMismatch, "oracle_flip: vector length does not match N");
    }
    for (std::size_t index : instance.marked()) {
        amplitudes[index] = -amplitudes[index];
    }
}

void invert_about_average_inplace(std::span<Complex> amplitudes) {
    const Complex twice_mean = 2.0 * mean_of(amplitudes);
    for (Complex& a : amplitudes) {
        a = twice_mean - a;
    }
}

void walsh_hadamard_inplace(std::span<Complex> amplitudes) {
    const std::size_t n = amplitudes.size();
    if (!is_power_of_two(n)) {
        throw Error(ErrorCode::NotPowerOfTwo,
                    "Walsh-Hadamard transform requires N to be a power of two, got " +
                            std::to_string(n));
    }
    // In-place butterfly with 1/sqrt(2) per stage: the orthonormal transform,
    // involutive, no global scaling pass.
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t half = 1; half < n; half <<= 1) {
        const std::size_t stride = half << 1;
        for (std::size_t base = 0; base < n; base += stride) {
            for (std::size_t i = base; i < base + half; ++i) {
                const Complex x = amplitudes[i];
                const Complex y = amplitudes[i + half];
                amplitudes[i] = (x + y) * inv_sqrt2;
                amplitudes[i + half] = (x - y) * inv_sqrt2;
            }
        }
    }
}

void diffusion_wht_inplace(std::span<Complex> amplitudes) {
    walsh_hadamard_inplace(amplitudes);
    amplitudes[0] = -amplitudes[0];
    walsh_hadamard_inplace(amplitudes);
}

double marked_probability(std::span<const Complex> amplitudes, const SearchInstance& instance) {
    detail::KahanSum p;
    for (std::size_t index : instance.marked()) {
        p.add(std::norm(amplitudes[index]));
    }
    return p.value();
}

double marked_probability(const StateVector& vector, const SearchInstance& instance) {
    return marked_probability(vector.amplitudes(), instance);
}

MeanPair class_means(std::span<const Complex> amplitudes, const SearchInstance& instance) {
    const auto& marked = instance.marked();
    const std::size_t n = amplitudes.size();
    const std::size_t r = marked.size();
    detail::KahanComplexSum k_sum, l_sum;
    std::size_t next_marked = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (next_marked < r && marked[next_marked] == i) {
            k_sum.add(amplitudes[i]);
            ++next_marked;
        } else {
            l_sum.add(amplitudes[i]);
        }
    }
    return {k_sum.value() / static_cast<double>(r),
            l_sum.value() / static_cast<double>(n - r)};
}

GroverRunner::GroverRunner(SearchInstance instance, StateVector init, SimConfig config)
        : instance_(std::move(instance)),
          amps_(std::move(init).take()),
          config_(config) {
    if (amps_.size() != instance_.n()) {
        throw Error(ErrorCode::LengthMismatch, "initial state length does not match N");
    }
    if (config_.diffusion_method == DiffusionMethod::WalshHadamard && !is_power_of_two(amps_.size())) {
        throw Error(ErrorCode::NotPowerOfTwo,
                    "WalshHadamard diffusion requires N to be a power of two");
    }
    if (config_.norm_check_every == 0) {
        throw Error(ErrorCode::ValidationError, "norm_check_every must be positive");
    }
}

void GroverRunner::step() {
    oracle_flip_inplace(amps_, instance_);
    if (config_.diffusion_method == DiffusionMethod::DirectReflection) {
        invert_about_average_inplace(amps_);
    } else {
        diffusion_wht_inplace(amps_);
    }
    ++t_;
    if (static_cast<std::size_t>(t_) % config_.norm_check_every == 0) {
        audit_norm();
    }
}

void GroverRunner::run(std::int64_t steps) {
    for (std::int64_t i = 0; i < steps; ++i) step();
}

double GroverRunner::marked_probability() const {
    return gal::marked_probability(amps_, instance_);
}

double GroverRunner::current_norm_drift() const {
    return std::abs(squared_norm(amps_) - 1.0);
}

void GroverRunner::audit_norm() {
    const double drift = current_norm_drift();
    if (drift > drift_max_) drift_max_ = drift;
}

TraceRow GroverRunner::trace_row() const {
    const MeanPair means = class_means(amps_, instance_);
    return TraceRow{t_, means.k_bar, means.l_bar, marked_probability(), current_norm_drift()};
}

StateVector GroverRunner::take_state() && {
    return StateVector::unchecked(std::move(amps_));
}

StateVector oracle_flip(const StateVector& vector, const SearchInstance& instance) {
    std::vector<Complex> amps(vector.amplitudes().begin(), vector.amplitudes().end());
    oracle_flip_inplace(amps, instance);
    return StateVector::unchecked(std::move(amps));
}

StateVector invert_about_average(const StateVector& vector) {
    std::vector<Complex> amps(vector.amplitudes().begin(), vector.amplitudes().end());
    invert_about_average_inplace(amps);
    return StateVector::unchecked(std::move(amps));
}

StateVector diffusion_wht(const StateVector& vector) {
    std::vector<Complex> amps(vector.amplitudes().begin(), vector.amplitudes().end());
    diffusion_wht_inplace(amps);
    return StateVector::unchecked(std::move(amps));
}

StateVector grover_run(const SearchInstance& instance, const StateVector& init, std::int64_t t,
                       const SimConfig& config, std::vector<TraceRow>* trace) {
    std::vector<Complex> amps(init.amplitudes().begin(), init.amplitudes().end());
    GroverRunner runner(instance, StateVector::unchecked(std::move(amps)), config);
    if (trace) {
        trace->clear();
        trace->reserve(static_cast<std::size_t>(t) + 1);
        trace->push_back(runner.trace_row());
    }
    for (std::int64_t i = 0; i < t; ++i) {
        runner.step();
        if (trace) trace->push_back(runner.trace_row());
    }
    return std::move(runner).take_state();
}

double best_fit_global_phase(std::span<const Complex> a, std::span<const Complex> b) {
    detail::KahanComplexSum overlap;
    for (std::size_t i = 0; i < a.size(); ++i) {
        overlap.add(a[i] * std::conj(b[i]));
    }
    const Complex o = overlap.value();
    if (std::abs(o) == 0.0) return 0.0;
    return std::arg(o);
}

double max_deviation_up_to_phase(std::span<const Complex> a, std::span<const Complex> b) {
    const Complex rot = std::polar(1.0, best_fit_global_phase(a, b));
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - rot * b[i]));
    }
    return worst;
}

double max_deviation(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace gal
