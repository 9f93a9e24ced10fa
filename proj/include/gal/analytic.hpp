#pragma once

#include <cstdint>

#include "gal/core.hpp"
#include "gal/simulator.hpp"

namespace gal {

/// Classification of the initial moments.
///   Generic      — both phasors f+(0), f-(0) nonzero, complex ratio
///   LinearReal   — |f+| = |f-| (real l_bar/k_bar ratio); means move on a line
///   CircularPlus — f+(0) = 0; P(t) constant
///   CircularMinus— f-(0) = 0; P(t) constant
///   Dead         — all means and sigma_k vanish; P(t) = 0 forever
enum class Regime {
    Generic,
    LinearReal,
    CircularPlus,
    CircularMinus,
    Dead,
};

const char* regime_name(Regime regime);

/// Classification thresholds, stable under double-precision moment noise.
struct RegimeThresholds {
    double circ_rel = 1e-9;   // |f_alt| <= circ_rel * (|f+| + |f-|)
    double dead_abs = 1e-12;  // both |f+|, |f-| below this
    double linear_im = 1e-9;  // |Im phi| below this
};

/// Spectral data of the mean-amplitude recursion: rotation angle omega per
/// iteration (cos omega = 1 - 2r/N), the decoupled phasors f+-(0), and the
/// sinusoidal parametrization (alpha, phi).
struct SpectralParams {
    double omega = 0.0;
    Complex f_plus0;
    Complex f_minus0;
    Complex alpha;  // 0 in circular/dead regimes
    Complex phi;    // undefined (0) in circular/dead regimes
    Regime regime = Regime::Generic;
};

/// omega = 2 asin(sqrt(r/N)); equals arccos(1 - 2r/N) without cancellation.
double grover_frequency(const SearchInstance& instance);

SpectralParams compute_spectral(const SearchInstance& instance, const InitialMoments& moments,
                                const RegimeThresholds& thresholds = {});

/// Mean amplitudes after t iterations.
/// Generic/LinearReal: k_bar = sqrt((N-r)/r) alpha sin(omega t + phi),
///                     l_bar = alpha cos(omega t + phi).
/// Circular/Dead: from the rotating phasors f+-(t) = e^{+-i omega t} f+-(0)
/// via k_bar = -i sqrt((N-r)/(4r)) (f+ - f-), l_bar = (f+ + f-)/2.
MeanPair mean_amplitudes(const SpectralParams& spectral, const SearchInstance& instance,
                         std::int64_t t);

/// One exact step of the coupled mean recursion:
/// C = (2/N)[(N-r) l_bar - r k_bar]; k_bar' = C + k_bar; l_bar' = C - l_bar.
struct RecursionStep {
    Complex k_bar_next;
    Complex l_bar_next;
    DiffusionKernel kernel;
};
RecursionStep recursion_step_exact(Complex k_bar, Complex l_bar, const SearchInstance& instance);

/// Per-state amplitude at step t from the means and the frozen deviations:
/// marked: k_bar(t) + dk_i; unmarked: l_bar(t) + (-1)^t dl_i.
Complex reconstruct_amplitude(const InitialMoments& moments, const SearchInstance& instance,
                              Complex k_bar_t, Complex l_bar_t, std::int64_t t, std::size_t index);

/// Full reconstructed state at step t (norm 1 by unitarity).
StateVector reconstruct_state(const InitialMoments& moments, const SearchInstance& instance,
                              const SpectralParams& spectral, std::int64_t t);

/// Success probability law P(t) = P_av - dP cos 2[omega t + Re(phi)] and its
/// envelope. In circular/dead regimes dP = 0 and P is constant.
struct ProbabilityProfile {
    double p_av = 0.0;
    double delta_p = 0.0;
    double p_max = 0.0;  // p_av + delta_p
    double p_min = 0.0;  // p_av - delta_p
    double period = 0.0; // pi / omega, in iterations
};

ProbabilityProfile probability_profile(const SearchInstance& instance,
                                       const InitialMoments& moments,
                                       const SpectralParams& spectral);

/// P at real-valued t (planner interpolation); public integer-step queries
/// should go through success_probability.
double probability_at(const ProbabilityProfile& profile, const SpectralParams& spectral, double t);

double success_probability(const SearchInstance& instance, const InitialMoments& moments,
                           const SpectralParams& spectral, std::int64_t t);

/// Geometry of the l_bar trajectory ellipse in the complex plane; the k_bar
/// ellipse is the same shape rotated by pi/2 and scaled by sqrt((N-r)/r).
struct EllipseGeometry {
    double eta = 0.0;      // major-axis angle of the l_bar ellipse, arg(alpha)
    double a = 0.0;        // |alpha| cosh(Im phi)
    double b = 0.0;        // |alpha| |sinh(Im phi)|; 0 iff Im phi = 0
    double k_scale = 0.0;  // sqrt((N-r)/r)
    double k_eta = 0.0;    // eta + pi/2
};

/// Throws DegenerateEllipse in circular/dead regimes (locus is a circle or a
/// point, classified through the regime instead).
EllipseGeometry ellipse_geometry(const SpectralParams& spectral, const SearchInstance& instance);

}  // namespace gal
