#pragma once

// Closed-form perturbative expansions (leading order in the coupling) and
// the optimal-cavity-frequency root.  These are for physical insight and
// calibration against the exact spectrum; they are never substituted for
// exact values in rate computations.

#include <array>
#include <utility>

#include "vsc/model.hpp"

namespace vsc {

/// A perturbative formula was asked to evaluate inside its resonance
/// guard band, where the expansion diverges.
class ResonanceDivergence : public std::runtime_error {
public:
    ResonanceDivergence(const std::string& what, double freq_a, double freq_b)
        : std::runtime_error(what), freq_a(freq_a), freq_b(freq_b) {}
    double freq_a;
    double freq_b;
};

enum class Region { Well, Barrier };

/// Individual well frequencies:
///   lambda_+ = we + (g wc)^2 w / (2 (w^2 - wc^2))
///   lambda_- = wc - (g wc)^2 wc / (2 (w^2 - wc^2))
/// Guarded: diverges at resonance w = wc.
std::pair<double, double> well_freqs_pert(const ReactionParams& rp, const CavitySetup& cs);

/// Frequency sum w + wc + g^2 wc^2 / (2 (w + wc)); regular at resonance,
/// the shift term is strictly positive for g > 0.
double well_sum_pert(const ReactionParams& rp, const CavitySetup& cs);

/// Barrier frequencies (lambda_b, lambda_unstable); denominators are
/// strictly positive so no guard is needed:
///   lambda_b = wc + J_b^4 / (2 wc (wb^2 + wc^2))
///   lambda_u = wb - (gb wc)^2 wb / (2 (wb^2 + wc^2))
std::pair<double, double> barrier_freqs_pert(const ReactionParams& rp, const CavitySetup& cs);

/// ZPE shift S = (wc^3/2) [g^2/(wc^2 + wc w) - gb^2/(wc^2 + wb^2)].
double zpe_shift_pert(const ReactionParams& rp, const CavitySetup& cs);

/// Leading-order three-mode frequencies for the N-molecule model
/// (well: omega_1 = omega; barrier: omega_1^2 = -wb^2, g_1 = gb).
/// Returned in the order (lambda_1, lambda_c, lambda_{N-1}); for the
/// barrier lambda_1 is the unstable magnitude.  The well variant guards
/// its resonant denominators; the barrier variant is evaluated as written.
std::array<double, 3> three_mode_pert(const ReactionParams& rp, const CavitySetup& cs,
                                      Region region);

/// S(N) = S(1) to leading order; returns zpe_shift_pert at N = 1 to make
/// the N-independence claim executable.
double zpe_shift_pert_N(const ReactionParams& rp, const CavitySetup& cs);

/// Positive root of 2 wc^2 + B wc - 2 wb^2 = 0 with B = 4 eta_b^2 omega:
/// the cavity frequency minimizing the unstable mode (and kappa_GH).
double optimal_cavity_frequency(const ReactionParams& rp);

/// Exact closed form lambda_u^2 = sqrt(Om^4 + 4 wb^2 wc^2)/2 - Om^2/2 with
/// Om^2 = wc^2 - wb^2 + B wc; matches the diagonalized spectrum (N = 1).
double lambda_unstable_exact_form(const ReactionParams& rp, const CavitySetup& cs);

} // namespace vsc
