#pragma once

#include <complex>
#include <utility>

namespace hopfbloch {

/// Complex number whose imaginary unit is identified with the quaternion k.
using ComplexK = std::complex<double>;

/// Hamilton quaternion w + x i + y j + z k with ij = k, jk = i, ki = j.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion mul(const Quaternion& a, const Quaternion& b);
Quaternion conj(const Quaternion& q);

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }
Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& q);
Quaternion operator*(double s, const Quaternion& q);

double norm_sq(const Quaternion& q);
double norm(const Quaternion& q);

/// Largest absolute componentwise difference.
double max_abs_diff(const Quaternion& a, const Quaternion& b);

/// The pure-imaginary part (0, x, y, z).
Quaternion pure_part(const Quaternion& q);

/// Maps a + b k (as complex a + b i) into the quaternions.
constexpr Quaternion embed(const ComplexK& c) { return {c.real(), 0.0, 0.0, c.imag()}; }

/// e^{t angle} = cos(angle) + t sin(angle) for a unit pure-imaginary t.
/// Throws NonUnitPureImaginary if t has a real part or |t| != 1 beyond 1e-12.
Quaternion exp_pure(const Quaternion& t, double angle);

/// Splits q into complex-in-k parts (a, b) with q = embed(a) + embed(b) j.
std::pair<ComplexK, ComplexK> split_complex_pair(const Quaternion& q);

/// Inverse of split_complex_pair.
Quaternion join_complex_pair(const ComplexK& a, const ComplexK& b);

}  // namespace hopfbloch
