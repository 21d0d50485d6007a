#pragma once

// Parameter definitions and conversions between the coupling
// representations (eta, g, Rabi frequency, J^2, B).
//
// Unit convention: hbar = 1 and all frequencies are expressed in units of
// a reference frequency (typically the well frequency omega); beta is then
// dimensionless in the same units.

#include <stdexcept>

namespace vsc {

/// Thrown when a parameter violates its domain (non-positive frequency, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class CouplingMode { Incoherent, Coherent };

/// Bare molecular quantities of a single reactive channel.
struct ReactionParams {
    double omega   = 1.0;  ///< well vibrational frequency (> 0)
    double omega_b = 0.5;  ///< barrier frequency, magnitude of the imaginary mode (> 0)
    double e_a     = 0.0;  ///< activation energy (>= 0)
    double eta     = 0.0;  ///< well VSC strength (>= 0)
    double eta_b   = 0.0;  ///< barrier VSC strength (>= 0)

    void validate() const;
};

/// Cavity and ensemble configuration.
struct CavitySetup {
    double omega_c    = 1.0;  ///< cavity frequency (> 0)
    int n_molecules   = 1;    ///< molecule count N (>= 1)
    CouplingMode mode = CouplingMode::Incoherent;
    double beta       = 10.0; ///< inverse temperature (> 0, hbar = 1)

    void validate() const;
};

/// Derived coupling constants for one (ReactionParams, CavitySetup) point.
struct CouplingSet {
    double g;       ///< dimensionless linear coupling
    double g_b;     ///< barrier coupling
    double j_sq;    ///< J^2 = g * omega_c^2
    double b_param; ///< B = g_b^2 omega_c = 4 eta_b^2 omega
};

/// g = 2 eta sqrt(omega / omega_c).
double coupling_g(double eta, double omega, double omega_c);

/// Rabi splitting Omega_R = 2 omega_c eta.
double rabi_frequency(double eta, double omega_c);

/// Inverse of rabi_frequency, for ingesting reported Rabi splittings.
double eta_from_rabi(double omega_r, double omega_c);

/// Collective coupling g_N = sqrt(N) g for homogeneous coupling.
double collective_coupling(double g, int n);

/// Recomputes all couplings from (eta, eta_b); never cached across sweep points.
CouplingSet make_couplings(const ReactionParams& rp, const CavitySetup& cs);

} // namespace vsc
