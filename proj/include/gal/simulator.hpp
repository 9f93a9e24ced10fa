#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gal/core.hpp"

namespace gal {

enum class DiffusionMethod {
    DirectReflection,  // a_i <- 2*mean - a_i, any N
    WalshHadamard,     // H^n, phase-pi on |0>, H^n; N must be a power of two
};

const char* diffusion_method_name(DiffusionMethod method);

struct SimConfig {
    DiffusionMethod diffusion_method = DiffusionMethod::DirectReflection;
    std::size_t norm_check_every = 64;  // renormalization audit cadence
};

bool is_power_of_two(std::size_t n);

// In-place kernels. One Grover iteration is oracle_flip followed by one of
// the two diffusion implementations; neither allocates.
void oracle_flip_inplace(std::span<Complex> amplitudes, const SearchInstance& instance);
void invert_about_average_inplace(std::span<Complex> amplitudes);
void walsh_hadamard_inplace(std::span<Complex> amplitudes);
void diffusion_wht_inplace(std::span<Complex> amplitudes);

double marked_probability(std::span<const Complex> amplitudes, const SearchInstance& instance);
double marked_probability(const StateVector& vector, const SearchInstance& instance);

/// Class means (k_bar, l_bar) of a live simulator state.
struct MeanPair {
    Complex k_bar;
    Complex l_bar;
};
MeanPair class_means(std::span<const Complex> amplitudes, const SearchInstance& instance);

struct TraceRow {
    std::int64_t t = 0;
    Complex k_bar;
    Complex l_bar;
    double p = 0.0;
    double norm_drift = 0.0;  // |sum |a|^2 - 1| at this step
};

/// Owns one contiguous state buffer and mutates it in place; no per-step
/// allocation once constructed. Norm drift is audited, never repaired.
class GroverRunner {
public:
    GroverRunner(SearchInstance instance, StateVector init, SimConfig config = {});

    void step();
    void run(std::int64_t steps);

    std::span<const Complex> amplitudes() const { return amps_; }
    const SearchInstance& instance() const { return instance_; }
    std::int64_t steps_done() const { return t_; }
    double marked_probability() const;
    /// Max |norm^2 - 1| seen across audits (cadence norm_check_every).
    double norm_drift_max() const { return drift_max_; }
    double current_norm_drift() const;
    TraceRow trace_row() const;

    StateVector take_state() &&;

private:
    void audit_norm();

    SearchInstance instance_;
    std::vector<Complex> amps_;
    SimConfig config_;
    std::int64_t t_ = 0;
    double drift_max_ = 0.0;
};

// Functional forms of the individual steps (copying).
StateVector oracle_flip(const StateVector& vector, const SearchInstance& instance);
StateVector invert_about_average(const StateVector& vector);
StateVector diffusion_wht(const StateVector& vector);

/// Applies (diffusion . oracle_flip) t times; optionally records a per-step
/// trace (t+1 rows including the initial state).
StateVector grover_run(const SearchInstance& instance, const StateVector& init, std::int64_t t,
                       const SimConfig& config = {}, std::vector<TraceRow>* trace = nullptr);

/// Least-squares optimal global phase theta aligning b to a:
/// theta = arg(sum a_i * conj(b_i)).
double best_fit_global_phase(std::span<const Complex> a, std::span<const Complex> b);
/// max_i |a_i - e^{i theta} b_i| after optimal alignment.
double max_deviation_up_to_phase(std::span<const Complex> a, std::span<const Complex> b);
/// Plain max_i |a_i - b_i|.
double max_deviation(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace gal
