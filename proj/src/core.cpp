#include "gal/core.hpp"

#include <algorithm>
#include <cmath>

namespace gal {

SearchInstance SearchInstance::validated(std::size_t n, std::vector<std::size_t> marked) {
    if (n < 2) {
        throw Error(ErrorCode::ValidationError, "N must be at least 2, got " + std::to_string(n));
    }
    for (std::size_t index : marked) {
        if (index >= n) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "marked index " + std::to_string(index) + " out of range [0, " +
                                std::to_string(n) + ")");
        }
    }
    std::sort(marked.begin(), marked.end());
    if (std::adjacent_find(marked.begin(), marked.end()) != marked.end()) {
        throw Error(ErrorCode::DuplicateIndex, "marked indices must be distinct");
    }
    const std::size_t r = marked.size();
    if (r < 1 || 2 * r > n) {
        throw Error(ErrorCode::RMarkedOutOfRange,
                    "number of marked states r=" + std::to_string(r) +
                            " violates 1 <= r <= N/2 for N=" + std::to_string(n));
    }
    return SearchInstance(n, std::move(marked));
}

SearchInstance validate_instance(std::size_t n, std::vector<std::size_t> marked) {
    return SearchInstance::validated(n, std::move(marked));
}

bool SearchInstance::is_marked(std::size_t index) const {
    return std::binary_search(marked_.begin(), marked_.end(), index);
}

std::optional<std::size_t> SearchInstance::marked_rank(std::size_t index) const {
    auto it = std::lower_bound(marked_.begin(), marked_.end(), index);
    if (it == marked_.end() || *it != index) return std::nullopt;
    return static_cast<std::size_t>(it - marked_.begin());
}

std::size_t SearchInstance::unmarked_rank(std::size_t index) const {
    auto it = std::lower_bound(marked_.begin(), marked_.end(), index);
    return index - static_cast<std::size_t>(it - marked_.begin());
}

double squared_norm(std::span<const Complex> amplitudes) {
    detail::KahanSum sum;
    for (const Complex& a : amplitudes) sum.add(std::norm(a));
    return sum.value();
}

Complex mean_of(std::span<const Complex> amplitudes) {
    detail::KahanComplexSum sum;
    for (const Complex& a : amplitudes) sum.add(a);
    return sum.value() / static_cast<double>(amplitudes.size());
}

StateVector::StateVector(std::vector<Complex> amplitudes, double norm_tolerance)
        : amps_(std::move(amplitudes)) {
    if (amps_.empty()) {
        throw Error(ErrorCode::ValidationError, "state vector must be non-empty");
    }
    const double n2 = squared_norm(amps_);
    if (std::abs(n2 - 1.0) > norm_tolerance) {
        throw Error(ErrorCode::ValidationError,
                    "state vector norm^2 deviates from 1 by " + std::to_string(n2 - 1.0));
    }
}

StateVector StateVector::unchecked(std::vector<Complex> amplitudes) {
    return StateVector(std::move(amplitudes), UncheckedTag{});
}

double StateVector::norm() const {
    return std::sqrt(squared_norm(amps_));
}

InitialMoments moments_of(const StateVector& vector, const SearchInstance& instance) {
    if (vector.size() != instance.n()) {
        throw Error(ErrorCode::LengthMismatch,
                    "state vector length " + std::to_string(vector.size()) +
                            " does not match N=" + std::to_string(instance.n()));
    }
    const auto amps = vector.amplitudes();
    const auto& marked = instance.marked();
    const std::size_t n = instance.n();
    const std::size_t r = instance.r();

    detail::KahanComplexSum k_sum, l_sum;
    {
        std::size_t next_marked = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (next_marked < r && marked[next_marked] == i) {
                k_sum.add(amps[i]);
                ++next_marked;
            } else {
                l_sum.add(amps[i]);
            }
        }
    }

    InitialMoments m;
    m.k_bar0 = k_sum.value() / static_cast<double>(r);
    m.l_bar0 = l_sum.value() / static_cast<double>(n - r);
    m.delta_k.reserve(r);
    m.delta_l.reserve(n - r);

    detail::KahanSum k_var, l_var;
    {
        std::size_t next_marked = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (next_marked < r && marked[next_marked] == i) {
                const Complex d = amps[i] - m.k_bar0;
                m.delta_k.push_back(d);
                k_var.add(std::norm(d));
                ++next_marked;
            } else {
                const Complex d = amps[i] - m.l_bar0;
                m.delta_l.push_back(d);
                l_var.add(std::norm(d));
            }
        }
    }
    m.sigma_k_sq = k_var.value() / static_cast<double>(r);
    m.sigma_l_sq = l_var.value() / static_cast<double>(n - r);
    return m;
}

}  // namespace gal
