#include "vsc/hessian.hpp"

#include <cmath>

namespace vsc {

SymmetricMatrix::SymmetricMatrix(int dim) : dim_(dim), a_(dim * dim, 0.0) {
    if (dim < 1) throw DomainError("SymmetricMatrix: dim must be >= 1");
}

void SymmetricMatrix::set(int i, int j, double v) {
    a_[i * dim_ + j] = v;
    a_[j * dim_ + i] = v;
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double SymmetricMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

namespace {

Hessian well_2x2(double omega, double g, double omega_c, HessianTag tag, int dark) {
    const double wc2 = omega_c * omega_c;
    SymmetricMatrix m(2);
    m.set(0, 0, omega * omega + g * g * wc2);
    m.set(0, 1, g * wc2);
    m.set(1, 1, wc2);
    return {m, HessianKind{tag, dark}};
}

Hessian barrier_2x2(double omega_b, double g_b, double omega_c, HessianTag tag, int dark) {
    const double wc2 = omega_c * omega_c;
    SymmetricMatrix m(2);
    m.set(0, 0, -omega_b * omega_b + g_b * g_b * wc2);
    m.set(0, 1, g_b * wc2);
    m.set(1, 1, wc2);
    return {m, HessianKind{tag, dark}};
}

} // namespace

Hessian well_hessian_single(const ReactionParams& rp, const CavitySetup& cs) {
    const auto c = make_couplings(rp, cs);
    return well_2x2(rp.omega, c.g, cs.omega_c, HessianTag::WellSingle, 0);
}

Hessian barrier_hessian_single(const ReactionParams& rp, const CavitySetup& cs) {
    const auto c = make_couplings(rp, cs);
    return barrier_2x2(rp.omega_b, c.g_b, cs.omega_c, HessianTag::BarrierSingle, 0);
}

Hessian well_hessian_collective(const ReactionParams& rp, const CavitySetup& cs) {
    const auto c = make_couplings(rp, cs);
    const double g_n = collective_coupling(c.g, cs.n_molecules);
    return well_2x2(rp.omega, g_n, cs.omega_c, HessianTag::WellCollective,
                    cs.n_molecules - 1);
}

Hessian barrier_hessian_incoherent(const ReactionParams& rp, const CavitySetup& cs) {
    const int n = cs.n_molecules;
    if (n < 2) return barrier_hessian_single(rp, cs);

    const auto c = make_couplings(rp, cs);
    const double g_n1 = collective_coupling(c.g, n - 1);
    const double wc2 = cs.omega_c * cs.omega_c;

    // Rows: reactive mode, N-1 bright mode, cavity.
    SymmetricMatrix m(3);
    m.set(0, 0, -rp.omega_b * rp.omega_b + c.g_b * c.g_b * wc2);
    m.set(0, 1, g_n1 * c.g_b * wc2);
    m.set(0, 2, c.g_b * wc2);
    m.set(1, 1, rp.omega * rp.omega + g_n1 * g_n1 * wc2);
    m.set(1, 2, g_n1 * wc2);
    m.set(2, 2, wc2);
    return {m, HessianKind{HessianTag::BarrierIncoherent, n - 2}};
}

Hessian barrier_hessian_coherent(const ReactionParams& rp, const CavitySetup& cs) {
    const auto c = make_couplings(rp, cs);
    const double g_bn = collective_coupling(c.g_b, cs.n_molecules);
    return barrier_2x2(rp.omega_b, g_bn, cs.omega_c, HessianTag::BarrierCoherent,
                       cs.n_molecules - 1);
}

} // namespace vsc
