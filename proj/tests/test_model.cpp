#include <doctest.h>

#include <cmath>
#include <random>

#include "vsc/model.hpp"

using namespace vsc;

TEST_CASE("coupling_g basic values") {
    CHECK(coupling_g(0.1, 1, 1) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(coupling_g(0.0, 1, 2) == 0.0);
    CHECK(coupling_g(0.1, 1, 4) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK_THROWS_AS(coupling_g(0.1, 0, 1), DomainError);
    CHECK_THROWS_AS(coupling_g(0.1, 1, -2), DomainError);
}

TEST_CASE("coupling_g is scale invariant in (omega, omega_c)") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.1, 5.0);
    for (int i = 0; i < 200; ++i) {
        const double eta = u(rng) / 10, w = u(rng), wc = u(rng), s = u(rng);
        CHECK(coupling_g(eta, s * w, s * wc) ==
              doctest::Approx(coupling_g(eta, w, wc)).epsilon(1e-14));
    }
}

TEST_CASE("rabi_frequency and its inverse") {
    CHECK(rabi_frequency(0.1, 1) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(rabi_frequency(0.0, 5) == 0.0);
    CHECK(rabi_frequency(0.05, 2) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(eta_from_rabi(0.2, 1) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(eta_from_rabi(0.0, 1) == 0.0);
    CHECK(eta_from_rabi(0.2, 2) == doctest::Approx(0.05).epsilon(1e-15));
    CHECK_THROWS_AS(eta_from_rabi(0.2, 0), DomainError);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.01, 3.0);
    for (int i = 0; i < 500; ++i) {
        const double eta = u(rng), wc = u(rng);
        CHECK(eta_from_rabi(rabi_frequency(eta, wc), wc) ==
              doctest::Approx(eta).epsilon(1e-15));
    }
}

TEST_CASE("collective_coupling") {
    CHECK(collective_coupling(0.2, 1) == 0.2);
    CHECK(collective_coupling(0.2, 4) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(collective_coupling(0.1, 2) ==
          doctest::Approx(0.14142135623730950488).epsilon(1e-15));
    CHECK_THROWS_AS(collective_coupling(0.2, 0), DomainError);
}

TEST_CASE("collective coupling Pythagorean recursion g_N^2 = g_{N-1}^2 + g_1^2") {
    const double g = 0.137;
    for (int n = 2; n <= 300; ++n) {
        const double gn = collective_coupling(g, n);
        const double gn1 = collective_coupling(g, n - 1);
        CHECK(gn * gn == doctest::Approx(gn1 * gn1 + g * g).epsilon(1e-14));
    }
}

TEST_CASE("make_couplings consistency") {
    const ReactionParams rp{1.0, 0.5, 0.0, 0.1, 0.07};
    const CavitySetup cs{1.7, 3, CouplingMode::Incoherent, 10.0};
    const CouplingSet c = make_couplings(rp, cs);
    CHECK(c.j_sq == doctest::Approx(c.g * cs.omega_c * cs.omega_c).epsilon(1e-15));
    // B = g_b^2 omega_c, constant in omega_c.
    CHECK(c.b_param == doctest::Approx(c.g_b * c.g_b * cs.omega_c).epsilon(1e-14));
    CHECK(c.b_param == doctest::Approx(4 * rp.eta_b * rp.eta_b * rp.omega).epsilon(1e-15));
}

TEST_CASE("parameter validation") {
    ReactionParams rp;
    rp.omega = -1;
    CHECK_THROWS_AS(rp.validate(), DomainError);
    CavitySetup cs;
    cs.n_molecules = 0;
    CHECK_THROWS_AS(cs.validate(), DomainError);
    cs.n_molecules = 1;
    cs.beta = 0;
    CHECK_THROWS_AS(cs.validate(), DomainError);
}
