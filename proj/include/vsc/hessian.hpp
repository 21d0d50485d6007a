#pragma once

// Mass-weighted Hessians for every well/barrier configuration:
// single-molecule 2x2, collective well 2x2, incoherent-TS 3x3 and
// coherent-TS 2x2.  Entries are squared frequencies.

#include <utility>
#include <vector>

#include "vsc/model.hpp"

namespace vsc {

/// Small dense real symmetric matrix; construction enforces symmetry.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int dim);

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return a_[i * dim_ + j]; }

    /// Sets (i,j) and (j,i).
    void set(int i, int j, double v);

    double trace() const;
    double frobenius_norm() const;

private:
    int dim_;
    std::vector<double> a_;
};

enum class HessianTag {
    WellSingle,
    BarrierSingle,
    WellCollective,
    BarrierIncoherent,
    BarrierCoherent,
};

/// Tag plus the count of uncoupled (dark) modes at frequency omega that are
/// omitted from the matrix: N-1 for WellCollective/BarrierCoherent, N-2 for
/// BarrierIncoherent, 0 for single-molecule kinds.
struct HessianKind {
    HessianTag tag;
    int dark_modes;
};

using Hessian = std::pair<SymmetricMatrix, HessianKind>;

/// [[w^2 + g^2 wc^2, g wc^2], [g wc^2, wc^2]]
Hessian well_hessian_single(const ReactionParams& rp, const CavitySetup& cs);

/// [[-wb^2 + gb^2 wc^2, gb wc^2], [gb wc^2, wc^2]]
Hessian barrier_hessian_single(const ReactionParams& rp, const CavitySetup& cs);

/// Well matrix with g -> g sqrt(N); dark_modes = N-1.
Hessian well_hessian_collective(const ReactionParams& rp, const CavitySetup& cs);

/// 3x3 with the reactive mode, the N-1 bright mode and the cavity.
/// Delegates to barrier_hessian_single for N = 1; dark_modes = N-2.
Hessian barrier_hessian_incoherent(const ReactionParams& rp, const CavitySetup& cs);

/// Barrier matrix with g_b -> g_b sqrt(N); dark_modes = N-1.
Hessian barrier_hessian_coherent(const ReactionParams& rp, const CavitySetup& cs);

} // namespace vsc
