#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gal {

using Complex = std::complex<double>;

enum class ErrorCode {
    RMarkedOutOfRange,
    IndexOutOfRange,
    DuplicateIndex,
    LengthMismatch,
    NotPowerOfTwo,
    WorstCaseImpossible,
    UnknownKind,
    DegenerateEllipse,
    HopelessInstance,
    ParseError,
    ValidationError,
    ToleranceExceeded,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
            : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Module-wide default tolerances. Overridable via instance files.
struct Tolerances {
    double norm = 1e-9;      // state normalization at construction
    double algebra = 1e-12;  // exact algebraic identities
};

namespace detail {

// Compensated (Kahan) accumulator. The simulator's reflection kernel and the
// moment sums both hinge on accurate means of ~N cancelling terms.
class KahanSum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

class KahanComplexSum {
public:
    void add(Complex z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    Complex value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_, im_;
};

}  // namespace detail

/// Problem dimensions N and r plus the marked index set.
/// Standing assumption 1 <= r <= N/2 is enforced at construction.
class SearchInstance {
public:
    static SearchInstance validated(std::size_t n, std::vector<std::size_t> marked);

    std::size_t n() const { return n_; }
    std::size_t r() const { return marked_.size(); }
    std::size_t unmarked_count() const { return n_ - marked_.size(); }
    const std::vector<std::size_t>& marked() const { return marked_; }  // sorted

    bool is_marked(std::size_t index) const;
    /// Position of `index` within the sorted marked list, if marked.
    std::optional<std::size_t> marked_rank(std::size_t index) const;
    /// Position of `index` within the unmarked states. Precondition: not marked.
    std::size_t unmarked_rank(std::size_t index) const;

private:
    SearchInstance(std::size_t n, std::vector<std::size_t> marked)
            : n_(n), marked_(std::move(marked)) {}

    std::size_t n_ = 0;
    std::vector<std::size_t> marked_;
};

/// Spec operation name for SearchInstance::validated.
SearchInstance validate_instance(std::size_t n, std::vector<std::size_t> marked);

/// Length-N array of complex amplitudes with unit norm.
class StateVector {
public:
    explicit StateVector(std::vector<Complex> amplitudes, double norm_tolerance = Tolerances{}.norm);
    /// Adopts the buffer without the norm check (for audited simulator output).
    static StateVector unchecked(std::vector<Complex> amplitudes);

    std::size_t size() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }

    /// sqrt(sum |a_i|^2), compensated.
    double norm() const;
    std::vector<Complex> take() && { return std::move(amps_); }

private:
    struct UncheckedTag {};
    StateVector(std::vector<Complex> amps, UncheckedTag) : amps_(std::move(amps)) {}

    std::vector<Complex> amps_;
};

/// First and second moments of the initial amplitudes, split by class.
/// The deviation arrays are the per-state constants of motion.
struct InitialMoments {
    Complex k_bar0;                // mean marked amplitude
    Complex l_bar0;                // mean unmarked amplitude
    double sigma_k_sq = 0.0;       // mean |k_i - k_bar|^2
    double sigma_l_sq = 0.0;       // mean |l_i - l_bar|^2
    std::vector<Complex> delta_k;  // k_i(0) - k_bar(0), length r
    std::vector<Complex> delta_l;  // l_i(0) - l_bar(0), length N-r
};

/// Means, variances and deviations of `vector` under the marked/unmarked split.
InitialMoments moments_of(const StateVector& vector, const SearchInstance& instance);

/// Post-flip diffusion constants: c_t = (2/N)[(N-r) l_bar - r k_bar], x_t = c_t/2.
struct DiffusionKernel {
    Complex c_t;
    Complex x_t;
};

double squared_norm(std::span<const Complex> amplitudes);
Complex mean_of(std::span<const Complex> amplitudes);

}  // namespace gal
