#include "vsc/perturbation.hpp"

#include <cmath>

namespace vsc {

namespace {

constexpr double kResonanceGuard = 1e-3;  // relative band on |w_a^2 - w_b^2|

void guard_resonance(double wa, double wb, const char* where) {
    if (std::abs(wa * wa - wb * wb) < kResonanceGuard * wa * wa)
        throw ResonanceDivergence(std::string(where) +
                                      ": perturbative expansion diverges at resonance",
                                  wa, wb);
}

} // namespace

std::pair<double, double> well_freqs_pert(const ReactionParams& rp, const CavitySetup& cs) {
    const auto c = make_couplings(rp, cs);
    guard_resonance(rp.omega, cs.omega_c, "well_freqs_pert");
    const double w = rp.omega, wc = cs.omega_c;
    const double we2 = w * w + c.g * c.g * wc * wc;
    const double we = std::sqrt(we2);
    const double j4 = c.g * c.g * wc * wc * wc * wc;  // J^4 = g^2 wc^4
    const double d2 = 0.5 * (we2 - wc * wc);          // delta^2
    return {we + j4 / (4.0 * we * d2), wc - j4 / (4.0 * wc * d2)};
}

double well_sum_pert(const ReactionParams& rp, const CavitySetup& cs) {
    const auto c = make_couplings(rp, cs);
    const double w = rp.omega, wc = cs.omega_c;
    return w + wc + c.g * c.g * wc * wc / (2.0 * (w + wc));
}

std::pair<double, double> barrier_freqs_pert(const ReactionParams& rp, const CavitySetup& cs) {
    const auto c = make_couplings(rp, cs);
    const double wb = rp.omega_b, wc = cs.omega_c;
    const double j4 = c.g_b * c.g_b * wc * wc * wc * wc;
    const double denom = wb * wb + wc * wc;
    const double lambda_b = wc + j4 / (2.0 * wc * denom);
    const double lambda_u = wb - (c.g_b * wc) * (c.g_b * wc) * wb / (2.0 * denom);
    return {lambda_b, lambda_u};
}

double zpe_shift_pert(const ReactionParams& rp, const CavitySetup& cs) {
    const auto c = make_couplings(rp, cs);
    const double w = rp.omega, wb = rp.omega_b, wc = cs.omega_c;
    return 0.5 * wc * wc * wc *
           (c.g * c.g / (wc * wc + wc * w) - c.g_b * c.g_b / (wc * wc + wb * wb));
}

std::array<double, 3> three_mode_pert(const ReactionParams& rp, const CavitySetup& cs,
                                      Region region) {
    if (cs.n_molecules < 2)
        throw DomainError("three_mode_pert: requires N >= 2");
    const auto c = make_couplings(rp, cs);
    const double w = rp.omega, wc = cs.omega_c;
    const double g_n1 = collective_coupling(c.g, cs.n_molecules - 1);
    const double wc2 = wc * wc;

    if (region == Region::Well) {
        // omega_1 = omega, g_1 = g; all three denominators hit resonance at
        // omega = omega_c.
        guard_resonance(w, wc, "three_mode_pert");
        const double lambda_1 = w + (wc2 / (2.0 * w)) * (c.g * w) * (c.g * w) /
                                        (w * w - wc2);
        const double lambda_c =
            wc + (wc / 2.0) * ((c.g * wc) * (c.g * wc) / (wc2 - w * w) +
                               (g_n1 * wc) * (g_n1 * wc) / (wc2 - w * w));
        const double lambda_n1 = w + (wc2 / (2.0 * w)) * (g_n1 * w) * (g_n1 * w) /
                                         (w * w - wc2);
        return {lambda_1, lambda_c, lambda_n1};
    }

    // Barrier: omega_1^2 = -omega_b^2, g_1 = g_b; the reactive-mode
    // denominators are strictly positive.
    const double wb = rp.omega_b;
    const double lambda_u =
        wb - (wc2 / (2.0 * wb)) * (c.g_b * wb) * (c.g_b * wb) / (wb * wb + wc2);
    const double lambda_c =
        wc + (wc2 * wc / 2.0) * (c.g_b * c.g_b / (wc2 + wb * wb) +
                                 g_n1 * g_n1 / (wc2 - w * w));
    const double lambda_n1 =
        w + (wc2 / (2.0 * w)) * (g_n1 * w) * (g_n1 * w) / (w * w - wc2);
    return {lambda_u, lambda_c, lambda_n1};
}

double zpe_shift_pert_N(const ReactionParams& rp, const CavitySetup& cs) {
    CavitySetup single = cs;
    single.n_molecules = 1;
    return zpe_shift_pert(rp, single);
}

double optimal_cavity_frequency(const ReactionParams& rp) {
    rp.validate();
    const double b = 4.0 * rp.eta_b * rp.eta_b * rp.omega;
    return (-b + std::sqrt(b * b + 16.0 * rp.omega_b * rp.omega_b)) / 4.0;
}

double lambda_unstable_exact_form(const ReactionParams& rp, const CavitySetup& cs) {
    const auto c = make_couplings(rp, cs);
    const double wb = rp.omega_b, wc = cs.omega_c;
    const double om2 = wc * wc - wb * wb + c.b_param * wc;
    const double lam2 = 0.5 * std::sqrt(om2 * om2 + 4.0 * wb * wb * wc * wc) - 0.5 * om2;
    return std::sqrt(lam2);
}

} // namespace vsc
