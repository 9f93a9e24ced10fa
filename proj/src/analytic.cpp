#include "gal/analytic.hpp"

#include <cmath>
#include <numbers>

namespace gal {

namespace {

constexpr Complex kImaginary{0.0, 1.0};

bool has_sinusoidal_form(Regime regime) {
    return regime == Regime::Generic || regime == Regime::LinearReal;
}

}  // namespace

const char* regime_name(Regime regime) {
    switch (regime) {
        case Regime::Generic: return "Generic";
        case Regime::LinearReal: return "LinearReal";
        case Regime::CircularPlus: return "CircularPlus";
        case Regime::CircularMinus: return "CircularMinus";
        case Regime::Dead: return "Dead";
    }
    return "?";
}

double grover_frequency(const SearchInstance& instance) {
    const double ratio = static_cast<double>(instance.r()) / static_cast<double>(instance.n());
    return 2.0 * std::asin(std::sqrt(ratio));
}

SpectralParams compute_spectral(const SearchInstance& instance, const InitialMoments& moments,
                                const RegimeThresholds& thresholds) {
    const double r = static_cast<double>(instance.r());
    const double u = static_cast<double>(instance.unmarked_count());

    SpectralParams sp;
    sp.omega = grover_frequency(instance);
    const double mix = std::sqrt(r / u);
    sp.f_plus0 = moments.l_bar0 + kImaginary * mix * moments.k_bar0;
    sp.f_minus0 = moments.l_bar0 - kImaginary * mix * moments.k_bar0;

    const double ap = std::abs(sp.f_plus0);
    const double am = std::abs(sp.f_minus0);
    if (ap <= thresholds.dead_abs && am <= thresholds.dead_abs) {
        sp.regime = Regime::Dead;
        return sp;
    }
    if (am <= thresholds.circ_rel * (ap + am)) {
        sp.regime = Regime::CircularMinus;
        return sp;
    }
    if (ap <= thresholds.circ_rel * (ap + am)) {
        sp.regime = Regime::CircularPlus;
        return sp;
    }

    // phi from the principal log keeps Re(phi) in (-pi/2, pi/2]; defining
    // alpha as f+(0) e^{-i phi} then satisfies alpha e^{+-i phi} = f+-(0)
    // without the sign ambiguity of the square root.
    sp.phi = Complex{0.0, -0.5} * std::log(sp.f_plus0 / sp.f_minus0);
    sp.alpha = sp.f_plus0 * std::exp(-kImaginary * sp.phi);
    sp.regime = std::abs(sp.phi.imag()) <= thresholds.linear_im ? Regime::LinearReal
                                                                : Regime::Generic;
    return sp;
}

MeanPair mean_amplitudes(const SpectralParams& spectral, const SearchInstance& instance,
                         std::int64_t t) {
    const double r = static_cast<double>(instance.r());
    const double u = static_cast<double>(instance.unmarked_count());
    const double td = static_cast<double>(t);

    if (has_sinusoidal_form(spectral.regime)) {
        const Complex arg = spectral.omega * td + spectral.phi;
        return {std::sqrt(u / r) * spectral.alpha * std::sin(arg),
                spectral.alpha * std::cos(arg)};
    }
    // Circular/dead: phi is undefined; the rotating-phasor form is the
    // definition of record.
    const Complex f_plus_t = std::polar(1.0, spectral.omega * td) * spectral.f_plus0;
    const Complex f_minus_t = std::polar(1.0, -spectral.omega * td) * spectral.f_minus0;
    return {-kImaginary * std::sqrt(u / (4.0 * r)) * (f_plus_t - f_minus_t),
            0.5 * (f_plus_t + f_minus_t)};
}

RecursionStep recursion_step_exact(Complex k_bar, Complex l_bar, const SearchInstance& instance) {
    const double n = static_cast<double>(instance.n());
    const double r = static_cast<double>(instance.r());
    const double u = static_cast<double>(instance.unmarked_count());

    const Complex c = (2.0 / n) * (u * l_bar - r * k_bar);
    return RecursionStep{c + k_bar, c - l_bar, DiffusionKernel{c, 0.5 * c}};
}

Complex reconstruct_amplitude(const InitialMoments& moments, const SearchInstance& instance,
                              Complex k_bar_t, Complex l_bar_t, std::int64_t t,
                              std::size_t index) {
    if (index >= instance.n()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "state index " + std::to_string(index) + " out of range");
    }
    if (auto rank = instance.marked_rank(index)) {
        return k_bar_t + moments.delta_k[*rank];
    }
    const double sign = (t % 2 == 0) ? 1.0 : -1.0;
    return l_bar_t + sign * moments.delta_l[instance.unmarked_rank(index)];
}

StateVector reconstruct_state(const InitialMoments& moments, const SearchInstance& instance,
                              const SpectralParams& spectral, std::int64_t t) {
    const MeanPair means = mean_amplitudes(spectral, instance, t);
    const auto& marked = instance.marked();
    const std::size_t n = instance.n();
    const std::size_t r = instance.r();
    const double sign = (t % 2 == 0) ? 1.0 : -1.0;

    std::vector<Complex> amps(n);
    std::size_t next_marked = 0;
    std::size_t unmarked_pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (next_marked < r && marked[next_marked] == i) {
            amps[i] = means.k_bar + moments.delta_k[next_marked];
            ++next_marked;
        } else {
            amps[i] = means.l_bar + sign * moments.delta_l[unmarked_pos];
            ++unmarked_pos;
        }
    }
    return StateVector::unchecked(std::move(amps));
}

ProbabilityProfile probability_profile(const SearchInstance& instance,
                                       const InitialMoments& moments,
                                       const SpectralParams& spectral) {
    const double r = static_cast<double>(instance.r());
    const double u = static_cast<double>(instance.unmarked_count());

    ProbabilityProfile profile;
    profile.p_av = 1.0 - u * moments.sigma_l_sq -
                   0.5 * (u * std::norm(moments.l_bar0) + r * std::norm(moments.k_bar0));
    // Squares of the complex means themselves, not squared moduli; the
    // absolute value makes the law exact for complex phi.
    profile.delta_p =
            0.5 * std::abs(u * moments.l_bar0 * moments.l_bar0 + r * moments.k_bar0 * moments.k_bar0);
    profile.p_max = profile.p_av + profile.delta_p;
    profile.p_min = profile.p_av - profile.delta_p;
    profile.period = std::numbers::pi / spectral.omega;
    return profile;
}

double probability_at(const ProbabilityProfile& profile, const SpectralParams& spectral,
                      double t) {
    if (!has_sinusoidal_form(spectral.regime)) {
        return profile.p_av;
    }
    return profile.p_av -
           profile.delta_p * std::cos(2.0 * (spectral.omega * t + spectral.phi.real()));
}

double success_probability(const SearchInstance& instance, const InitialMoments& moments,
                           const SpectralParams& spectral, std::int64_t t) {
    const double r = static_cast<double>(instance.r());
    if (!has_sinusoidal_form(spectral.regime)) {
        // |k_bar(t)| is constant here, so P(t) = P(0).
        return r * (moments.sigma_k_sq + std::norm(moments.k_bar0));
    }
    const ProbabilityProfile profile = probability_profile(instance, moments, spectral);
    return probability_at(profile, spectral, static_cast<double>(t));
}

EllipseGeometry ellipse_geometry(const SpectralParams& spectral, const SearchInstance& instance) {
    if (!has_sinusoidal_form(spectral.regime)) {
        throw Error(ErrorCode::DegenerateEllipse,
                    std::string("locus is not an ellipse in regime ") +
                            regime_name(spectral.regime));
    }
    const double r = static_cast<double>(instance.r());
    const double u = static_cast<double>(instance.unmarked_count());
    const double mod_alpha = std::abs(spectral.alpha);
    const double im_phi = spectral.phi.imag();

    EllipseGeometry geometry;
    geometry.eta = std::arg(spectral.alpha);
    geometry.a = mod_alpha * std::cosh(im_phi);
    geometry.b = mod_alpha * std::abs(std::sinh(im_phi));
    geometry.k_scale = std::sqrt(u / r);
    geometry.k_eta = geometry.eta + std::numbers::pi / 2.0;
    return geometry;
}

}  // namespace gal
