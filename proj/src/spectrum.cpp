#include "vsc/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace vsc {

std::pair<double, double> eigvals_2x2(const SymmetricMatrix& m) {
    if (m.dim() != 2) throw StructuralError("eigvals_2x2: matrix must be 2x2");
    const double a = m(0, 0), b = m(0, 1), c = m(1, 1);
    const double t = 0.5 * (a + c);
    const double d = std::hypot(0.5 * (a - c), b);
    const double det = a * c - b * b;
    if (d == 0.0) return {t, t};
    // Form the root of smaller magnitude from det/larger to avoid
    // cancellation between t and d.
    if (t >= 0.0) {
        const double hi = t + d;
        return {hi, hi == 0.0 ? 0.0 : det / hi};
    }
    const double lo = t - d;
    return {lo == 0.0 ? 0.0 : det / lo, lo};
}

std::vector<double> eig_symmetric(const SymmetricMatrix& m, double tol) {
    if (tol <= 0) throw DomainError("eig_symmetric: tol must be > 0");
    const int n = m.dim();
    // Working copy (kept symmetric throughout).
    std::vector<double> a(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j);

    const double threshold = tol * std::max(m.frobenius_norm(), 1e-300);
    constexpr int kMaxSweeps = 100;

    auto off = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
        return std::sqrt(2.0 * s);
    };

    int sweep = 0;
    while (off() > threshold) {
        if (++sweep > kMaxSweeps)
            throw ConvergenceError("eig_symmetric: sweep cap exceeded");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p], aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                // Smaller-angle rotation root, stable for large |theta|.
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cth = 1.0 / std::sqrt(t * t + 1.0);
                const double sth = t * cth;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = cth * akp - sth * akq;
                    a[k * n + q] = sth * akp + cth * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = cth * apk - sth * aqk;
                    a[q * n + k] = sth * apk + cth * aqk;
                }
            }
        }
    }

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a[i * n + i];
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

WellSpectrum well_spectrum(const ReactionParams& rp, const CavitySetup& cs) {
    const auto [m, kind] = cs.n_molecules > 1 ? well_hessian_collective(rp, cs)
                                              : well_hessian_single(rp, cs);
    const auto [hi, lo] = eigvals_2x2(m);
    if (!(lo > 0))
        throw StructuralError("well_spectrum: non-positive eigenvalue in the well");
    return WellSpectrum{std::sqrt(hi), std::sqrt(lo), rp.omega, kind.dark_modes};
}

BarrierSpectrum barrier_spectrum(const ReactionParams& rp, const CavitySetup& cs) {
    const bool incoherent_n = cs.mode == CouplingMode::Incoherent && cs.n_molecules > 1;
    const auto [m, kind] = incoherent_n ? barrier_hessian_incoherent(rp, cs)
                         : cs.mode == CouplingMode::Coherent
                               ? barrier_hessian_coherent(rp, cs)
                               : barrier_hessian_single(rp, cs);

    std::vector<double> ev;
    if (m.dim() == 2) {
        const auto [hi, lo] = eigvals_2x2(m);
        ev = {hi, lo};
    } else {
        ev = eig_symmetric(m);
    }

    BarrierSpectrum out;
    out.dark_freq = rp.omega;
    out.dark_count = kind.dark_modes;
    int negatives = 0;
    for (double e : ev) {
        if (e < 0) {
            ++negatives;
            out.lambda_unstable = std::sqrt(-e);
        } else {
            out.stable.push_back(std::sqrt(e));
        }
    }
    if (negatives != 1)
        throw StructuralError("barrier_spectrum: expected exactly one negative eigenvalue");
    std::sort(out.stable.begin(), out.stable.end(), std::greater<double>());
    return out;
}

double frequency_sum_exact(const ReactionParams& rp, const CavitySetup& cs) {
    const auto c = make_couplings(rp, cs);
    const double g_n = collective_coupling(c.g, cs.n_molecules);
    const double wc2 = cs.omega_c * cs.omega_c;
    const double we2 = rp.omega * rp.omega + g_n * g_n * wc2;
    const double j4 = g_n * g_n * wc2 * wc2;  // J^4 = g^2 wc^4
    // Inner radicand we^2 wc^2 - J^4 = w^2 wc^2 exactly.
    return std::sqrt(we2 + wc2 + 2.0 * std::sqrt(we2 * wc2 - j4));
}

} // namespace vsc
