#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "hopfbloch/errors.hpp"
#include "hopfbloch/hopf.hpp"
#include "hopfbloch/oracle.hpp"
#include "reference.hpp"

using namespace hopfbloch;

namespace {

const double pi = std::numbers::pi;
const double r2 = 1.0 / std::sqrt(2.0);

void check_vec(const BlochVector& v, double x, double y, double z, double tol) {
    CHECK(std::abs(v.x - x) <= tol);
    CHECK(std::abs(v.y - y) <= tol);
    CHECK(std::abs(v.z - z) <= tol);
}

}  // namespace

TEST_CASE("quaternion_pair") {
    const auto [p1, p2] = quaternion_pair(TwoQubitState{}, Assignment::A_base);
    CHECK(p1 == Quaternion::one());
    CHECK(p2 == Quaternion{});

    const auto [b1, b2] = quaternion_pair(TwoQubitState::bell("phi+"), Assignment::A_base);
    CHECK(max_abs_diff(b1, r2 * Quaternion::one()) <= 1e-16);
    CHECK(max_abs_diff(b2, r2 * Quaternion::j()) <= 1e-16);

    const auto s = random_state(3);
    const auto [a1, a2] = quaternion_pair(s, Assignment::A_base);
    CHECK(a1 == embed(s.alpha()) + embed(s.beta()) * Quaternion::j());
    CHECK(a2 == embed(s.gamma()) + embed(s.delta()) * Quaternion::j());
    const auto [q1, q2] = quaternion_pair(s, Assignment::B_base);
    CHECK(q1 == embed(s.alpha()) + embed(s.gamma()) * Quaternion::j());
    CHECK(q2 == embed(s.beta()) + embed(s.delta()) * Quaternion::j());
}

TEST_CASE("base_and_entanglement") {
    SUBCASE("|00>") {
        const auto [base, ent] = base_and_entanglement(TwoQubitState{}, Assignment::A_base);
        CHECK(base.theta == 0.0);
        CHECK(base.phi == 0.0);
        CHECK(base.x0 == 1.0);
        CHECK(ent.b == 0.0);
        CHECK(ent.t == Quaternion::k());
        CHECK(ent.chi == 0.0);
        CHECK(ent.xi == 0.0);
        CHECK(ent.c == 0.0);
        CHECK(ent.x4 == 0.0);
    }
    SUBCASE("Bell phi+") {
        const auto [base, ent] = base_and_entanglement(TwoQubitState::bell("phi+"), Assignment::A_base);
        CHECK(std::abs(base.x1) <= 1e-15);
        CHECK(std::abs(base.b - 1.0) <= 1e-15);
        CHECK(std::abs(base.x0) <= 1e-15);
        CHECK(std::abs(ent.chi - pi / 2) <= 1e-15);
        CHECK(std::abs(ent.c - 1.0) <= 1e-15);
        CHECK(std::abs(ent.x4) <= 1e-15);
        CHECK(max_abs_diff(hopf_product(TwoQubitState::bell("phi+"), Assignment::A_base), Quaternion::j()) <= 1e-15);
    }
    SUBCASE("partial state, A_base") {
        const auto [base, ent] = base_and_entanglement(fixtures::partial_state(), Assignment::A_base);
        CHECK(std::abs(base.x1) <= 1e-15);
        CHECK(std::abs(base.b + 0.866025403784438) <= 1e-14);
        CHECK(std::abs(base.x0 - 0.5) <= 1e-15);
        CHECK(std::abs(base.theta - pi / 3) <= 1e-15);
        CHECK(std::abs(base.phi + pi / 2) <= 1e-15);
        CHECK(std::abs(ent.c - 0.496731764892154) <= 1e-14);
        CHECK(std::abs(ent.x4 + 0.7094064799162224) <= 1e-14);
        CHECK(std::abs(ent.chi - 35 * fixtures::kDeg) <= 1e-14);
        CHECK(std::abs(ent.xi - pi) <= 1e-14);
        CHECK(std::abs(std::abs(ent.b) - std::sin(pi / 3)) <= 1e-15);
    }
    SUBCASE("partial state, B_base") {
        const auto [base, ent] = base_and_entanglement(fixtures::partial_state(), Assignment::B_base);
        CHECK(std::abs(base.x1 - 0.234923155196477) <= 1e-14);
        CHECK(std::abs(base.b - 0.496731764892154) <= 1e-14);
        CHECK(std::abs(base.x0 - 0.835505035831417) <= 1e-14);
        CHECK(std::abs(base.theta / fixtures::kDeg - 33.3315373481162) <= 1e-11);
        CHECK(std::abs(ent.c - 0.496731764892154) <= 1e-14);
        const auto r = bloch_vector(oracle::reduced_density(fixtures::partial_state(), Qubit::B));
        CHECK(std::abs(base.x1 - r.x) <= 1e-15);
        CHECK(std::abs(ent.x4 - r.y) <= 1e-15);
        CHECK(std::abs(base.x0 - r.z) <= 1e-15);
    }
    SUBCASE("b sign follows the k component; equatorial p keeps b positive") {
        // P = 2 (alpha delta - beta gamma) j has no k part.
        const auto psi = TwoQubitState::bell("psi-");
        const auto [base, ent] = base_and_entanglement(psi, Assignment::A_base);
        CHECK(ent.b > 0.0);
        CHECK(std::abs(ent.chi - pi / 2) <= 1e-15);
    }
}

TEST_CASE("fiber") {
    SUBCASE("Bell phi+ has the identity versor") {
        const auto ss = sphere_set(TwoQubitState::bell("phi+"), Assignment::A_base);
        CHECK(max_abs_diff(ss.fiber.q_f, Quaternion::one()) <= 1e-15);
        CHECK(ss.fiber.theta_f == 0.0);
        CHECK(ss.fiber.zeta_f == 0.0);
        CHECK(ss.fiber.phi_f == 0.0);
    }
    SUBCASE("|00>") {
        const auto ss = sphere_set(TwoQubitState{}, Assignment::A_base);
        CHECK(ss.fiber.q_f == Quaternion::one());
        check_vec(ss.fiber.bloch, 0, 0, 1, 0.0);
        check_vec({ss.base.x1, ss.base.b, ss.base.x0}, 0, 0, 1, 0.0);
    }
    SUBCASE("partial state fiber sits at the pole") {
        const auto ss = sphere_set(fixtures::partial_state(), Assignment::A_base);
        CHECK(ss.fiber.theta_f == 0.0);
    }
    SUBCASE("product states put each qubit's Bloch vector on base and fiber") {
        std::mt19937_64 rng(5);
        std::normal_distribution<double> n;
        for (int k = 0; k < 300; ++k) {
            const ComplexK u{n(rng), n(rng)}, v{n(rng), n(rng)}, x{n(rng), n(rng)}, y{n(rng), n(rng)};
            const auto s = TwoQubitState::product({u, v}, {x, y});
            const auto ra = reference::bloch(u, v), rb = reference::bloch(x, y);
            const auto a = sphere_set(s, Assignment::A_base);
            check_vec({a.base.x1, a.base.b, a.base.x0}, ra[0], ra[1], ra[2], 1e-10);
            check_vec(a.fiber.bloch, rb[0], rb[1], rb[2], 1e-9);
            const auto b = sphere_set(s, Assignment::B_base);
            check_vec({b.base.x1, b.base.b, b.base.x0}, rb[0], rb[1], rb[2], 1e-10);
            check_vec(b.fiber.bloch, ra[0], ra[1], ra[2], 1e-9);
        }
    }
}

TEST_CASE("sphere_set concurrence is assignment independent") {
    for (const char* name : {"phi+", "phi-", "psi+", "psi-"}) {
        const auto s = TwoQubitState::bell(name);
        CHECK(std::abs(sphere_set(s, Assignment::A_base).ent.c - 1.0) <= 1e-15);
        CHECK(std::abs(sphere_set(s, Assignment::B_base).ent.c - 1.0) <= 1e-15);
    }
    const auto partial = fixtures::partial_state();
    CHECK(std::abs(sphere_set(partial, Assignment::B_base).ent.c - fixtures::kPartialConcurrence) <= 1e-15);
}

TEST_CASE("reconstruct") {
    CHECK(max_amplitude_error(reconstruct(sphere_set(TwoQubitState{}, Assignment::A_base)), TwoQubitState{}) == 0.0);
    for (Assignment a : {Assignment::A_base, Assignment::B_base}) {
        const auto phi = TwoQubitState::bell("phi+");
        CHECK(max_amplitude_error(reconstruct(sphere_set(phi, a)), phi) <= 1e-15);
        const auto partial = fixtures::partial_state();
        CHECK(max_amplitude_error(reconstruct(sphere_set(partial, a)), partial) <= 1e-15);
        for (std::uint64_t seed = 0; seed < 2000; ++seed) {
            const auto s = random_state(seed);
            const auto ss = sphere_set(s, a);
            CHECK(max_amplitude_error(reconstruct(ss), s) <= 1e-10);
            CHECK(max_amplitude_error(reconstruct(make_sphere_set(a, angles_of(ss))), s) <= 1e-10);
        }
    }

    SUBCASE("inconsistent sphere sets are rejected") {
        auto ss = sphere_set(random_state(1), Assignment::A_base);
        auto bad = ss;
        bad.base.x1 += 1e-6;
        CHECK_THROWS_AS(reconstruct(bad), InvalidSphereSet);
        bad = ss;
        bad.base.theta = 4.0;
        CHECK_THROWS_AS(reconstruct(bad), InvalidSphereSet);
        bad = ss;
        bad.ent.chi = 2.0;
        CHECK_THROWS_AS(reconstruct(bad), InvalidSphereSet);
        bad = ss;
        bad.fiber.theta_f = -0.5;
        CHECK_THROWS_AS(reconstruct(bad), InvalidSphereSet);
        bad = ss;
        bad.ent.c += 1e-8;
        CHECK_THROWS_AS(reconstruct(bad), InvalidSphereSet);
        bad = ss;
        bad.base.x1 += 1e-11;
        CHECK_NOTHROW(reconstruct(bad));
    }
}

TEST_CASE("rho_from_spheres") {
    DensityMatrix half;
    half(0, 0) = half(1, 1) = 0.5;
    CHECK(max_abs_diff(rho_from_spheres(sphere_set(TwoQubitState::bell("phi+"), Assignment::A_base)), half) <= 1e-15);

    DensityMatrix north;
    north(0, 0) = 1.0;
    CHECK(max_abs_diff(rho_from_spheres(sphere_set(TwoQubitState{}, Assignment::A_base)), north) == 0.0);

    const auto rho = rho_from_spheres(sphere_set(fixtures::partial_state(), Assignment::A_base));
    CHECK(std::abs(rho(0, 0).real() - 0.75) <= 1e-15);
    CHECK(std::abs(rho(1, 1).real() - 0.25) <= 1e-15);
    CHECK(std::abs(std::abs(rho(0, 1).imag()) - 0.354703239958) <= 1e-12);

    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        const auto s = random_state(seed);
        for (Assignment a : {Assignment::A_base, Assignment::B_base})
            CHECK(max_abs_diff(rho_from_spheres(sphere_set(s, a)), oracle::reduced_density(s, base_qubit(a))) <= 1e-12);
    }
}

TEST_CASE("geometric relations on random states") {
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        const auto s = random_state(seed);
        for (Assignment a : {Assignment::A_base, Assignment::B_base}) {
            const auto ss = sphere_set(s, a);
            const auto& e = ss.ent;
            CHECK(std::abs(e.b * e.b - (e.x4 * e.x4 + e.c * e.c)) <= 1e-12);
            CHECK(std::abs(std::abs(e.b) * std::sin(e.chi) - oracle::concurrence(s)) <= 1e-10);
            CHECK(e.chi >= 0.0);
            CHECK(e.chi <= pi / 2);
            CHECK(ss.base.theta >= 0.0);
            CHECK(ss.base.theta <= pi);
            CHECK(ss.base.phi > -pi);
            CHECK(ss.base.phi <= pi);
            CHECK(std::abs(norm(e.t) - 1.0) <= 1e-12);
            CHECK(std::abs(norm(ss.fiber.q_f) - 1.0) <= 1e-12);
            CHECK(std::abs(ss.base.x0 * ss.base.x0 + ss.base.x1 * ss.base.x1 + ss.base.b * ss.base.b - 1.0) <= 1e-12);
        }
    }
}
