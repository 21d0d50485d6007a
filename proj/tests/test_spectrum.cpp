#include <doctest.h>

#include <cmath>
#include <random>

#include "vsc/spectrum.hpp"

using namespace vsc;

namespace {

SymmetricMatrix sym2(double a, double b, double c) {
    SymmetricMatrix m(2);
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(1, 1, c);
    return m;
}

const ReactionParams kTestPoint{1.0, 0.5, 0.0, 0.1, 0.1};
const CavitySetup kTestCavity{1.0, 1, CouplingMode::Incoherent, 10.0};

} // namespace

TEST_CASE("eigvals_2x2 on the reference well matrix") {
    const auto [hi, lo] = eigvals_2x2(sym2(1.04, 0.2, 1.0));
    CHECK(hi == doctest::Approx(1.2209975124224178).epsilon(1e-12));
    CHECK(lo == doctest::Approx(0.8190024875775822).epsilon(1e-12));
}

TEST_CASE("eigvals_2x2 diagonal and barrier cases") {
    const auto [hi, lo] = eigvals_2x2(sym2(3.0, 0.0, -2.0));
    CHECK(hi == 3.0);
    CHECK(lo == -2.0);

    const auto [bh, bl] = eigvals_2x2(sym2(-0.21, 0.2, 1.0));
    CHECK(bh == doctest::Approx(1.0322009102316160).epsilon(1e-12));
    CHECK(bl == doctest::Approx(-0.2422009102316160).epsilon(1e-12));
    CHECK(bh * bl == doctest::Approx(-0.25).epsilon(1e-12));

    CHECK_THROWS_AS(eigvals_2x2(SymmetricMatrix(3)), StructuralError);
}

TEST_CASE("Jacobi solver: identity and cross-validation against closed form") {
    SymmetricMatrix eye(3);
    for (int i = 0; i < 3; ++i) eye.set(i, i, 1.0);
    const auto ev = eig_symmetric(eye);
    REQUIRE(ev.size() == 3);
    for (double e : ev) CHECK(e == 1.0);

    std::mt19937 rng(123);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const auto m = sym2(u(rng), u(rng), u(rng));
        const auto [hi, lo] = eigvals_2x2(m);
        const auto it = eig_symmetric(m);
        CHECK(std::abs(it[0] - hi) <= 1e-12);
        CHECK(std::abs(it[1] - lo) <= 1e-12);
    }
}

TEST_CASE("Jacobi solver: 3x3 trace and determinant of the incoherent barrier") {
    const CavitySetup cs{1.0, 2, CouplingMode::Incoherent, 10.0};
    const auto [m, kind] = barrier_hessian_incoherent(kTestPoint, cs);
    const auto ev = eig_symmetric(m);
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] * ev[1] * ev[2] == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(ev[0] + ev[1] + ev[2] == doctest::Approx(m.trace()).epsilon(1e-13));
    // Frozen from an independent high-precision diagonalization.
    CHECK(ev[0] == doctest::Approx(1.2399735252734886).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(0.8322748292259813).epsilon(1e-12));
    CHECK(ev[2] == doctest::Approx(-0.2422483544994699).epsilon(1e-12));
}

TEST_CASE("well_spectrum at the reference point") {
    const WellSpectrum ws = well_spectrum(kTestPoint, kTestCavity);
    CHECK(ws.lambda_plus == doctest::Approx(1.1049875621120890).epsilon(1e-12));
    CHECK(ws.lambda_minus == doctest::Approx(0.9049875621120890).epsilon(1e-12));
    CHECK(ws.dark_count == 0);
    CHECK(ws.dark_freq == 1.0);
}

TEST_CASE("well_spectrum uncoupled limit") {
    const ReactionParams rp{1.0, 0.5, 0.0, 0.0, 0.0};
    const CavitySetup cs{1.7, 1, CouplingMode::Incoherent, 10.0};
    const WellSpectrum ws = well_spectrum(rp, cs);
    CHECK(ws.lambda_plus == doctest::Approx(1.7).epsilon(1e-15));
    CHECK(ws.lambda_minus == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("well_spectrum sqrt(N)-eta equivalence") {
    ReactionParams rp = kTestPoint;
    rp.eta = rp.eta_b = 0.05;
    const CavitySetup cs4{1.3, 4, CouplingMode::Incoherent, 10.0};
    const WellSpectrum w4 = well_spectrum(rp, cs4);

    ReactionParams rp1 = rp;
    rp1.eta = 0.1;
    const CavitySetup cs1{1.3, 1, CouplingMode::Incoherent, 10.0};
    const WellSpectrum w1 = well_spectrum(rp1, cs1);
    CHECK(w4.lambda_plus == doctest::Approx(w1.lambda_plus).epsilon(1e-14));
    CHECK(w4.lambda_minus == doctest::Approx(w1.lambda_minus).epsilon(1e-14));
    CHECK(w4.dark_count == 3);
}

TEST_CASE("barrier_spectrum at the reference point") {
    const BarrierSpectrum bs = barrier_spectrum(kTestPoint, kTestCavity);
    REQUIRE(bs.stable.size() == 1);
    CHECK(bs.stable[0] == doctest::Approx(1.0159728885317836).epsilon(1e-12));
    CHECK(bs.lambda_unstable == doctest::Approx(0.4921391167460843).epsilon(1e-12));
    CHECK(bs.dark_count == 0);
}

TEST_CASE("barrier_spectrum uncoupled limit") {
    const ReactionParams rp{1.0, 0.5, 0.0, 0.1, 0.0};
    const CavitySetup cs{1.7, 1, CouplingMode::Incoherent, 10.0};
    const BarrierSpectrum bs = barrier_spectrum(rp, cs);
    CHECK(bs.stable[0] == doctest::Approx(1.7).epsilon(1e-15));
    CHECK(bs.lambda_unstable == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("barrier_spectrum incoherent N=2 eigenvalue product") {
    const CavitySetup cs{1.0, 2, CouplingMode::Incoherent, 10.0};
    const BarrierSpectrum bs = barrier_spectrum(kTestPoint, cs);
    REQUIRE(bs.stable.size() == 2);
    CHECK(bs.stable[0] >= bs.stable[1]);
    const double product = bs.stable[0] * bs.stable[0] * bs.stable[1] * bs.stable[1] *
                           -(bs.lambda_unstable * bs.lambda_unstable);
    CHECK(product == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(bs.dark_count == 0);
}

TEST_CASE("exactly one unstable mode across the coupling range") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> uwc(0.05, 5.0), ug(0.0, 1.0);
    std::uniform_int_distribution<int> un(1, 12);
    std::uniform_int_distribution<int> umode(0, 1);
    for (int i = 0; i < 500; ++i) {
        const double wc = uwc(rng);
        ReactionParams rp = kTestPoint;
        rp.eta = 0.5 * ug(rng) * std::sqrt(wc);
        rp.eta_b = 0.5 * ug(rng) * std::sqrt(wc);
        const CavitySetup cs{wc, un(rng),
                             umode(rng) ? CouplingMode::Coherent : CouplingMode::Incoherent,
                             10.0};
        // barrier_spectrum throws StructuralError unless the negative
        // eigenvalue count is exactly one.
        CHECK_NOTHROW(barrier_spectrum(rp, cs));
    }
}

TEST_CASE("frequency-sum identity") {
    const double sum = frequency_sum_exact(kTestPoint, kTestCavity);
    CHECK(sum == doctest::Approx(std::sqrt(4.04)).epsilon(1e-14));

    ReactionParams rp0 = kTestPoint;
    rp0.eta = 0.0;
    CHECK(frequency_sum_exact(rp0, kTestCavity) == doctest::Approx(2.0).epsilon(1e-14));

    std::mt19937 rng(17);
    std::uniform_real_distribution<double> uw(0.2, 3.0), ue(0.0, 0.3);
    std::uniform_int_distribution<int> un(1, 8);
    for (int i = 0; i < 1000; ++i) {
        const ReactionParams rp{uw(rng), 0.5, 0.0, ue(rng), ue(rng)};
        const CavitySetup cs{uw(rng), un(rng), CouplingMode::Incoherent, 10.0};
        const WellSpectrum ws = well_spectrum(rp, cs);
        CHECK(frequency_sum_exact(rp, cs) ==
              doctest::Approx(ws.lambda_plus + ws.lambda_minus).epsilon(1e-12));
    }
}

TEST_CASE("scale covariance of the spectra") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> us(0.1, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double s = us(rng);
        const ReactionParams rp{1.0, 0.5, 0.0, 0.1, 0.07};
        const ReactionParams rps{s, 0.5 * s, 0.0, 0.1, 0.07};
        const CavitySetup cs{1.3, 1, CouplingMode::Incoherent, 10.0};
        const CavitySetup css{1.3 * s, 1, CouplingMode::Incoherent, 10.0};
        const WellSpectrum a = well_spectrum(rp, cs), b = well_spectrum(rps, css);
        CHECK(b.lambda_plus == doctest::Approx(s * a.lambda_plus).epsilon(1e-12));
        CHECK(b.lambda_minus == doctest::Approx(s * a.lambda_minus).epsilon(1e-12));
        const BarrierSpectrum ba = barrier_spectrum(rp, cs), bb = barrier_spectrum(rps, css);
        CHECK(bb.lambda_unstable ==
              doctest::Approx(s * ba.lambda_unstable).epsilon(1e-12));
    }
}

TEST_CASE("eig_symmetric rejects non-positive tolerance") {
    CHECK_THROWS_AS(eig_symmetric(sym2(1, 0, 1), 0.0), DomainError);
}
