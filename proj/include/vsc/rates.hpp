#pragma once

// Rate and correction-factor formulas: quantum TST, kappa and its
// entropy/enthalpy decomposition, Grote-Hynes and ZPE limits, centroid
// tunneling, and two-channel branching.  All sinh products are evaluated
// in the log domain; dark modes cancel analytically and are never
// evaluated.

#include <optional>

#include "vsc/model.hpp"
#include "vsc/spectrum.hpp"

namespace vsc {

/// The parabolic-barrier tunneling prefactor diverges: a sine argument
/// reached pi (at or below the crossover temperature).
class CrossoverTemperature : public std::runtime_error {
public:
    CrossoverTemperature(const std::string& what, double frequency)
        : std::runtime_error(what), frequency(frequency) {}
    double frequency;  ///< the frequency whose beta*freq/2 crossed pi
};

/// One reactive channel of a two-channel reaction.
struct ChannelSpec {
    double omega_b;  ///< barrier frequency (> 0)
    double eta_b;    ///< barrier VSC strength (>= 0)
    double e_a;      ///< activation energy (>= 0)
};

/// Reactant-well parameters shared by both channels.
struct SharedWell {
    double omega;
    double eta;
    double omega_c;
    double beta;
    int n_molecules   = 1;
    CouplingMode mode = CouplingMode::Incoherent;
};

/// Everything the sweep reports for one parameter point.
struct CorrectionBreakdown {
    double kappa;
    double kappa_star;
    double s_shift;
    double kappa_gh;
    double kappa_zpe;
    std::optional<double> kappa_centroid;  ///< absent above crossover
    double delta_g;
};

/// ln sinh(x) = x - ln 2 + ln1p(-e^{-2x}) for x > 0; overflow-safe.
double log_sinh(double x);

/// Bare single-mode quantum TST rate (1/(pi beta)) sinh(w beta/2) e^{-beta Ea}.
double k_tst_single(double omega, double e_a, double beta);

/// Exact ZPE shift S = sum(lambda) - sum_TS(lambda_b) - omega with the dark
/// modes cancelled between well and barrier.
double zpe_shift_exact(const WellSpectrum& ws, const BarrierSpectrum& bs, double omega);

/// Full correction factor kappa, log-domain sinh products.
double kappa(const WellSpectrum& ws, const BarrierSpectrum& bs, double beta, double omega);

/// Entropy factor kappa^* from the (1 - e^{-lambda beta}) product form,
/// computed directly (not by dividing kappa).
double kappa_star(const WellSpectrum& ws, const BarrierSpectrum& bs, double beta, double omega);

/// Grote-Hynes factor lambda_unstable / omega_b (high-T limit of kappa).
double kappa_gh(const BarrierSpectrum& bs, double omega_b);

/// Low-T limit exp(beta S / 2).
double kappa_zpe(double s_shift, double beta);

/// Cavity-induced free-energy change: kappa = exp(-beta dG).
double delta_g(double kappa, double beta);

/// Interpolation kappa_GH * exp(beta S / 2); diagnostic only.
double kappa_gh_zpe_interp(const BarrierSpectrum& bs, double omega_b, double s_shift,
                           double beta);

/// Centroid correction (lambda_u/wb) (sin(wb beta/2)/sin(lambda_u beta/2)) kappa.
/// Throws CrossoverTemperature when either sine argument reaches pi.
double kappa_centroid(const WellSpectrum& ws, const BarrierSpectrum& bs, double beta,
                      double omega, double omega_b);

/// Centroid TST rate (wb/2pi) sinh(w beta/2)/sin(wb beta/2) e^{-beta Ea}.
double k_centroid_tst(double omega, double omega_b, double e_a, double beta);

/// Branching ratio phi_1 = 1/(1 + k2/k1) of two channels sharing a well.
double branching_ratio(const ChannelSpec& ch1, const ChannelSpec& ch2,
                       const SharedWell& shared);

/// Perturbative selectivity estimate
/// hbar dS/2 - dEa = (wc^3/4)[gb1^2/(wc^2+wb1^2) - gb2^2/(wc^2+wb2^2)] + (Ea1 - Ea2).
double selectivity_estimate(const ChannelSpec& ch1, const ChannelSpec& ch2,
                            const SharedWell& shared);

/// Convenience: exact spectra plus every correction factor at one point.
CorrectionBreakdown correction_breakdown(const ReactionParams& rp, const CavitySetup& cs);

} // namespace vsc
