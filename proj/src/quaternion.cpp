#include "hopfbloch/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hopfbloch/errors.hpp"

namespace hopfbloch {

Quaternion mul(const Quaternion& a, const Quaternion& b) {
    return {
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
}

Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }

Quaternion operator*(double s, const Quaternion& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }

double norm_sq(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

double max_abs_diff(const Quaternion& a, const Quaternion& b) {
    return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

Quaternion pure_part(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

Quaternion exp_pure(const Quaternion& t, double angle) {
    constexpr double tol = 1e-12;
    if (std::abs(t.w) > tol || std::abs(norm(t) - 1.0) > tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "exp_pure needs a unit pure-imaginary quaternion, got (" << t.w << ", " << t.x << ", " << t.y
            << ", " << t.z << ")";
        throw NonUnitPureImaginary(msg.str());
    }
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c, s * t.x, s * t.y, s * t.z};
}

// embed(b) j = (b_re + b_im k) j = b_re j - b_im i
std::pair<ComplexK, ComplexK> split_complex_pair(const Quaternion& q) {
    return {ComplexK{q.w, q.z}, ComplexK{q.y, -q.x}};
}

Quaternion join_complex_pair(const ComplexK& a, const ComplexK& b) {
    return {a.real(), -b.imag(), b.real(), a.imag()};
}

}  // namespace hopfbloch
