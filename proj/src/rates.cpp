#include "vsc/rates.hpp"

#include <cmath>
#include <numbers>

namespace vsc {

namespace {

// Net exponent of the bare sinh(w beta/2) factor after the dark modes
// cancel between well and barrier: the well contributes dark_count copies,
// the barrier dark_count copies plus the explicit 1/sinh(w beta/2) of the
// bare-rate division.  Always -1 (single/coherent) or 0 (incoherent N>=2).
int bare_omega_exponent(const WellSpectrum& ws, const BarrierSpectrum& bs) {
    const int diff = ws.dark_count - bs.dark_count;
    if (diff != 0 && diff != 1)
        throw StructuralError("inconsistent dark-mode counts between well and barrier");
    return diff - 1;
}

void check_beta(double beta) {
    if (!(beta > 0)) throw DomainError("beta must be > 0");
}

// ln(1 - e^{-x}) for x > 0.
double log1mexp(double x) {
    return std::log1p(-std::exp(-x));
}

} // namespace

double log_sinh(double x) {
    if (!(x > 0)) throw DomainError("log_sinh: argument must be > 0");
    return x - std::numbers::ln2 + log1mexp(2.0 * x);
}

double k_tst_single(double omega, double e_a, double beta) {
    if (!(omega > 0) || !(e_a >= 0)) throw DomainError("k_tst_single: invalid parameters");
    check_beta(beta);
    return std::exp(log_sinh(omega * beta / 2.0) - beta * e_a) / (std::numbers::pi * beta);
}

double zpe_shift_exact(const WellSpectrum& ws, const BarrierSpectrum& bs, double omega) {
    const int bare = bare_omega_exponent(ws, bs);
    double s = ws.lambda_plus + ws.lambda_minus + bare * omega;
    for (double lb : bs.stable) s -= lb;
    return s;
}

namespace {

double log_kappa(const WellSpectrum& ws, const BarrierSpectrum& bs, double beta,
                 double omega) {
    check_beta(beta);
    const int bare = bare_omega_exponent(ws, bs);
    double ln = log_sinh(ws.lambda_plus * beta / 2.0) +
                log_sinh(ws.lambda_minus * beta / 2.0) +
                bare * log_sinh(omega * beta / 2.0);
    for (double lb : bs.stable) ln -= log_sinh(lb * beta / 2.0);
    return ln;
}

} // namespace

double kappa(const WellSpectrum& ws, const BarrierSpectrum& bs, double beta, double omega) {
    return std::exp(log_kappa(ws, bs, beta, omega));
}

double kappa_star(const WellSpectrum& ws, const BarrierSpectrum& bs, double beta,
                  double omega) {
    check_beta(beta);
    const int bare = bare_omega_exponent(ws, bs);
    double ln = log1mexp(ws.lambda_plus * beta) + log1mexp(ws.lambda_minus * beta) +
                bare * log1mexp(omega * beta);
    for (double lb : bs.stable) ln -= log1mexp(lb * beta);
    return std::exp(ln);
}

double kappa_gh(const BarrierSpectrum& bs, double omega_b) {
    if (!(omega_b > 0)) throw DomainError("kappa_gh: omega_b must be > 0");
    return bs.lambda_unstable / omega_b;
}

double kappa_zpe(double s_shift, double beta) {
    check_beta(beta);
    return std::exp(beta * s_shift / 2.0);
}

double delta_g(double kappa, double beta) {
    if (!(kappa > 0)) throw DomainError("delta_g: kappa must be > 0");
    check_beta(beta);
    return -std::log(kappa) / beta;
}

double kappa_gh_zpe_interp(const BarrierSpectrum& bs, double omega_b, double s_shift,
                           double beta) {
    return kappa_gh(bs, omega_b) * kappa_zpe(s_shift, beta);
}

double kappa_centroid(const WellSpectrum& ws, const BarrierSpectrum& bs, double beta,
                      double omega, double omega_b) {
    check_beta(beta);
    const double lam_u = bs.lambda_unstable;
    // Closed boundary: sin vanishes at exactly pi.
    if (omega_b * beta / 2.0 >= std::numbers::pi)
        throw CrossoverTemperature("kappa_centroid: omega_b at or below crossover", omega_b);
    if (lam_u * beta / 2.0 >= std::numbers::pi)
        throw CrossoverTemperature("kappa_centroid: lambda_unstable at or below crossover",
                                   lam_u);
    return (lam_u / omega_b) *
           (std::sin(omega_b * beta / 2.0) / std::sin(lam_u * beta / 2.0)) *
           kappa(ws, bs, beta, omega);
}

double k_centroid_tst(double omega, double omega_b, double e_a, double beta) {
    if (!(omega > 0) || !(omega_b > 0) || !(e_a >= 0))
        throw DomainError("k_centroid_tst: invalid parameters");
    check_beta(beta);
    const double x = omega_b * beta / 2.0;
    if (x >= std::numbers::pi)
        throw CrossoverTemperature("k_centroid_tst: at or below crossover", omega_b);
    return omega_b / (2.0 * std::numbers::pi) *
           std::exp(log_sinh(omega * beta / 2.0) - beta * e_a) / std::sin(x);
}

namespace {

ReactionParams channel_params(const ChannelSpec& ch, const SharedWell& shared) {
    return ReactionParams{shared.omega, ch.omega_b, ch.e_a, shared.eta, ch.eta_b};
}

// ln(kappa_i * k_TST,i) up to channel-independent terms.
double log_channel_rate(const ChannelSpec& ch, const SharedWell& shared) {
    const ReactionParams rp = channel_params(ch, shared);
    const CavitySetup cs{shared.omega_c, shared.n_molecules, shared.mode, shared.beta};
    const WellSpectrum ws = well_spectrum(rp, cs);
    const BarrierSpectrum bs = barrier_spectrum(rp, cs);
    return log_kappa(ws, bs, shared.beta, shared.omega) - shared.beta * ch.e_a;
}

} // namespace

double branching_ratio(const ChannelSpec& ch1, const ChannelSpec& ch2,
                       const SharedWell& shared) {
    // Both channels share the reactant well, so the bare TST prefactors
    // cancel in k2/k1 and only kappa and exp(-beta Ea) survive.
    const double log_ratio = log_channel_rate(ch2, shared) - log_channel_rate(ch1, shared);
    return 1.0 / (1.0 + std::exp(log_ratio));
}

double selectivity_estimate(const ChannelSpec& ch1, const ChannelSpec& ch2,
                            const SharedWell& shared) {
    const double wc = shared.omega_c;
    const double gb1 = coupling_g(ch1.eta_b, shared.omega, wc);
    const double gb2 = coupling_g(ch2.eta_b, shared.omega, wc);
    return 0.25 * wc * wc * wc *
               (gb1 * gb1 / (wc * wc + ch1.omega_b * ch1.omega_b) -
                gb2 * gb2 / (wc * wc + ch2.omega_b * ch2.omega_b)) +
           (ch1.e_a - ch2.e_a);
}

CorrectionBreakdown correction_breakdown(const ReactionParams& rp, const CavitySetup& cs) {
    const WellSpectrum ws = well_spectrum(rp, cs);
    const BarrierSpectrum bs = barrier_spectrum(rp, cs);

    CorrectionBreakdown out;
    out.s_shift = zpe_shift_exact(ws, bs, rp.omega);
    out.kappa = kappa(ws, bs, cs.beta, rp.omega);
    out.kappa_star = kappa_star(ws, bs, cs.beta, rp.omega);
    out.kappa_gh = kappa_gh(bs, rp.omega_b);
    out.kappa_zpe = kappa_zpe(out.s_shift, cs.beta);
    out.delta_g = delta_g(out.kappa, cs.beta);
    try {
        out.kappa_centroid = kappa_centroid(ws, bs, cs.beta, rp.omega, rp.omega_b);
    } catch (const CrossoverTemperature&) {
        out.kappa_centroid = std::nullopt;
    }
    return out;
}

} // namespace vsc
