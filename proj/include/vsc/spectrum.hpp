#pragma once

// Eigen-frequency extraction: closed-form 2x2, an independent iterative
// symmetric eigensolver (Jacobi rotations), the frequency-sum identity,
// and classification into stable/unstable/dark frequencies.

#include <utility>
#include <vector>

#include "vsc/hessian.hpp"
#include "vsc/model.hpp"

namespace vsc {

/// Iterative eigensolver exceeded its sweep cap (flags corrupted input).
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A spectrum violated its structural contract (e.g. wrong count of
/// negative eigenvalues at the barrier).
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Polariton frequencies in the reactant well, lambda_plus >= lambda_minus > 0,
/// plus the dark-mode bookkeeping.
struct WellSpectrum {
    double lambda_plus;
    double lambda_minus;
    double dark_freq;  ///< = omega
    int dark_count;
};

/// Barrier frequencies: stable modes sorted descending (one for a 2x2
/// barrier, two for the 3x3), and the unstable frequency reported as the
/// positive magnitude of the imaginary mode.
struct BarrierSpectrum {
    std::vector<double> stable;
    double lambda_unstable;
    double dark_freq;
    int dark_count;
};

/// Eigenvalues of a symmetric 2x2, descending; the smaller root is formed
/// from det/larger when cancellation threatens.
std::pair<double, double> eigvals_2x2(const SymmetricMatrix& m);

/// Cyclic Jacobi diagonalization, independent of the closed forms.
/// Returns all eigenvalues sorted descending; off-diagonals annihilated
/// below tol * ||m||_F.  Sweep cap 100.
std::vector<double> eig_symmetric(const SymmetricMatrix& m, double tol = 1e-14);

/// Well spectrum from the single or collective Hessian per cs.n_molecules.
WellSpectrum well_spectrum(const ReactionParams& rp, const CavitySetup& cs);

/// Barrier spectrum from the Hessian selected by cs.mode and cs.n_molecules.
BarrierSpectrum barrier_spectrum(const ReactionParams& rp, const CavitySetup& cs);

/// Closed-form lambda_+ + lambda_- = sqrt(we^2 + wc^2 + 2 sqrt(we^2 wc^2 - J^4))
/// for the (collective) well; the inner radicand simplifies to w^2 wc^2.
double frequency_sum_exact(const ReactionParams& rp, const CavitySetup& cs);

} // namespace vsc
