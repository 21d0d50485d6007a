#include "vsc/model.hpp"

#include <cmath>

namespace vsc {

void ReactionParams::validate() const {
    if (!(omega > 0))   throw DomainError("omega must be > 0");
    if (!(omega_b > 0)) throw DomainError("omega_b must be > 0");
    if (!(e_a >= 0))    throw DomainError("e_a must be >= 0");
    if (!(eta >= 0))    throw DomainError("eta must be >= 0");
    if (!(eta_b >= 0))  throw DomainError("eta_b must be >= 0");
}

void CavitySetup::validate() const {
    if (!(omega_c > 0))     throw DomainError("omega_c must be > 0");
    if (n_molecules < 1)    throw DomainError("n_molecules must be >= 1");
    if (!(beta > 0))        throw DomainError("beta must be > 0");
}

double coupling_g(double eta, double omega, double omega_c) {
    if (!(omega > 0))   throw DomainError("coupling_g: omega must be > 0");
    if (!(omega_c > 0)) throw DomainError("coupling_g: omega_c must be > 0");
    if (!(eta >= 0))    throw DomainError("coupling_g: eta must be >= 0");
    return 2.0 * eta * std::sqrt(omega / omega_c);
}

double rabi_frequency(double eta, double omega_c) {
    if (!(omega_c > 0)) throw DomainError("rabi_frequency: omega_c must be > 0");
    return 2.0 * omega_c * eta;
}

double eta_from_rabi(double omega_r, double omega_c) {
    if (!(omega_c > 0)) throw DomainError("eta_from_rabi: omega_c must be > 0");
    if (!(omega_r >= 0)) throw DomainError("eta_from_rabi: omega_r must be >= 0");
    return omega_r / (2.0 * omega_c);
}

double collective_coupling(double g, int n) {
    if (n < 1) throw DomainError("collective_coupling: n must be >= 1");
    if (n == 1) return g;
    return g * std::sqrt(static_cast<double>(n));
}

CouplingSet make_couplings(const ReactionParams& rp, const CavitySetup& cs) {
    rp.validate();
    cs.validate();
    CouplingSet out;
    out.g = coupling_g(rp.eta, rp.omega, cs.omega_c);
    out.g_b = coupling_g(rp.eta_b, rp.omega, cs.omega_c);
    out.j_sq = out.g * cs.omega_c * cs.omega_c;
    // B = g_b^2 omega_c = 4 eta_b^2 omega, constant as omega_c is tuned.
    out.b_param = 4.0 * rp.eta_b * rp.eta_b * rp.omega;
    return out;
}

} // namespace vsc
