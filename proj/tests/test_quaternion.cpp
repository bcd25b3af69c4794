#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hopfbloch/errors.hpp"
#include "hopfbloch/quaternion.hpp"
#include "reference.hpp"

using namespace hopfbloch;

namespace {

Quaternion from(const reference::Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

void check_close(const Quaternion& a, const Quaternion& b, double tol = 1e-15) {
    CHECK(max_abs_diff(a, b) <= tol);
}

}  // namespace

TEST_CASE("basis products follow ij = k, jk = i, ki = j") {
    const Quaternion one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
    CHECK(mul(i, j) == k);
    CHECK(mul(j, k) == i);
    CHECK(mul(k, i) == j);
    CHECK(mul(i, i) == -one);
    CHECK(mul(j, j) == -one);
    CHECK(mul(k, k) == -one);
    CHECK(mul(k, j) == -i);
    CHECK(mul(j, i) == -k);

    const Quaternion q{0.3, -1.2, 2.5, 0.7};
    CHECK(mul(q, one) == q);
    CHECK(mul(one, q) == q);
}

TEST_CASE("full multiplication table agrees with the left-multiplication matrix") {
    const reference::Vec4 basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (const auto& a : basis)
        for (const auto& b : basis) CHECK(mul(from(a), from(b)) == from(reference::quat_mul(a, b)));

    std::mt19937_64 rng(11);
    for (int n = 0; n < 200; ++n) {
        const auto a = reference::random_vec4(rng);
        const auto b = reference::random_vec4(rng);
        check_close(mul(from(a), from(b)), from(reference::quat_mul(a, b)), 1e-14);
    }
}

TEST_CASE("conj") {
    CHECK(conj(Quaternion{1, 1, 0, 0}) == Quaternion{1, -1, 0, 0});
    CHECK(conj(Quaternion::j()) == -Quaternion::j());
    CHECK(conj(mul(Quaternion::i(), Quaternion::j())) == -Quaternion::k());
    CHECK(conj(mul(Quaternion::i(), Quaternion::j())) == mul(conj(Quaternion::j()), conj(Quaternion::i())));
}

TEST_CASE("exp_pure") {
    const double pi = std::numbers::pi;
    check_close(exp_pure(Quaternion::k(), pi / 2.0), Quaternion::k(), 1e-16);
    CHECK(exp_pure(Quaternion::i(), 0.0) == Quaternion::one());

    const double r = 1.0 / std::sqrt(2.0);
    const Quaternion t{0.0, r, 0.0, r};
    // cos 60 = 1/2, sin 60 / sqrt 2 = sqrt(3/8)
    check_close(exp_pure(t, pi / 3.0), Quaternion{0.5, std::sqrt(3.0 / 8.0), 0.0, std::sqrt(3.0 / 8.0)}, 1e-15);
    check_close(exp_pure(t, 0.4) * exp_pure(t, 0.7), exp_pure(t, 1.1), 1e-15);

    SUBCASE("rejects anything but a unit pure-imaginary quaternion") {
        CHECK_THROWS_AS(exp_pure(Quaternion{0.0, 1.0, 1.0, 0.0}, 0.3), NonUnitPureImaginary);
        CHECK_THROWS_AS(exp_pure(Quaternion{0.1, 0.0, 0.0, 1.0}, 0.3), NonUnitPureImaginary);
        CHECK_THROWS_AS(exp_pure(Quaternion{}, 0.3), NonUnitPureImaginary);
        CHECK_NOTHROW(exp_pure(Quaternion{0.0, 0.0, 0.0, 1.0 + 1e-13}, 0.3));
    }
}

TEST_CASE("split_complex_pair recomposes q = embed(a) + embed(b) j") {
    const auto [a1, b1] = split_complex_pair(Quaternion::one());
    CHECK(a1 == ComplexK{1, 0});
    CHECK(b1 == ComplexK{0, 0});

    const auto [aj, bj] = split_complex_pair(Quaternion::j());
    CHECK(aj == ComplexK{0, 0});
    CHECK(bj == ComplexK{1, 0});

    const auto [ai, bi] = split_complex_pair(Quaternion::i());
    CHECK(embed(ai) + embed(bi) * Quaternion::j() == Quaternion::i());

    CHECK(embed(ComplexK{2.0, -3.0}) == Quaternion{2.0, 0.0, 0.0, -3.0});
}

TEST_CASE("algebraic properties on random samples") {
    std::mt19937_64 rng(2024);
    for (int n = 0; n < 1000; ++n) {
        const Quaternion a = from(reference::random_vec4(rng));
        const Quaternion b = from(reference::random_vec4(rng));
        const Quaternion c = from(reference::random_vec4(rng));
        CHECK(max_abs_diff((a * b) * c, a * (b * c)) <= 1e-12);
        CHECK(std::abs(norm(a * b) - norm(a) * norm(b)) <= 1e-12);
        CHECK(max_abs_diff(conj(a * b), conj(b) * conj(a)) <= 1e-13);
        CHECK(max_abs_diff(a * conj(a), norm_sq(a) * Quaternion::one()) <= 1e-12);

        const auto [u, v] = split_complex_pair(a);
        CHECK(embed(u) + embed(v) * Quaternion::j() == a);
        CHECK(join_complex_pair(u, v) == a);

        const ComplexK z{b.w, b.z};
        CHECK(Quaternion::j() * embed(z) == embed(std::conj(z)) * Quaternion::j());
    }
}
