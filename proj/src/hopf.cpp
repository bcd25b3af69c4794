#include "hopfbloch/hopf.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

#include "hopfbloch/errors.hpp"

namespace hopfbloch {

namespace {

constexpr double kPi = std::numbers::pi;

// Components this small are rounding residue of an exact zero; treating them
// as zero keeps the degenerate-case rules deterministic.
constexpr double kSnap = 1e-14;

double snap(double v) { return std::abs(v) <= kSnap ? 0.0 : v; }

ComplexK snap(const ComplexK& z) { return {snap(z.real()), snap(z.imag())}; }

// atan2 lands on -pi for a negative-zero ordinate; the angle range is (-pi, pi].
double wrap_angle(double a) {
    a = std::remainder(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

double arg0(const ComplexK& z) { return z == ComplexK{} ? 0.0 : wrap_angle(std::arg(z)); }

Quaternion t_from_angles(double chi, double xi) {
    return {0.0, std::sin(chi) * std::cos(xi), std::sin(chi) * std::sin(xi), std::cos(chi)};
}

// q_f = (cos(theta_f/2) + sin(theta_f/2) e^{k phi_f} j) e^{k zeta_f}
Quaternion fiber_versor(double theta_f, double phi_f, double zeta_f) {
    const Quaternion rot = join_complex_pair(ComplexK{std::cos(theta_f / 2.0), 0.0},
                                             std::sin(theta_f / 2.0) * std::polar(1.0, phi_f));
    return rot * embed(std::polar(1.0, zeta_f));
}

BlochVector fiber_bloch(double theta_f, double phi_f, double zeta_f) {
    const double az = phi_f - 2.0 * zeta_f;
    return {std::sin(theta_f) * std::cos(az), std::sin(theta_f) * std::sin(az), std::cos(theta_f)};
}

void require_close(double got, double want, const char* what) {
    if (!(std::abs(got - want) <= 1e-9)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "invalid sphere set: " << what << " is " << got << ", expected " << want;
        throw InvalidSphereSet(msg.str());
    }
}

void require_range(double v, double lo, double hi, const char* what) {
    constexpr double slack = 1e-9;
    if (!(v >= lo - slack && v <= hi + slack)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "invalid sphere set: " << what << " = " << v << " outside [" << lo << ", " << hi << "]";
        throw InvalidSphereSet(msg.str());
    }
}

}  // namespace

std::pair<Quaternion, Quaternion> quaternion_pair(const TwoQubitState& s, Assignment a) {
    if (a == Assignment::A_base)
        return {join_complex_pair(s.alpha(), s.beta()), join_complex_pair(s.gamma(), s.delta())};
    return {join_complex_pair(s.alpha(), s.gamma()), join_complex_pair(s.beta(), s.delta())};
}

Quaternion hopf_product(const TwoQubitState& s, Assignment a) {
    const auto [q1, q2] = quaternion_pair(s, a);
    return 2.0 * (q2 * conj(q1));
}

std::pair<BaseSphere, EntanglementSphere> base_and_entanglement(const TwoQubitState& s, Assignment a) {
    const auto [q1, q2] = quaternion_pair(s, a);
    const double n1 = norm(q1);
    const double n2 = norm(q2);
    const Quaternion P = 2.0 * (q2 * conj(q1));
    const Quaternion p{0.0, snap(P.x), snap(P.y), snap(P.z)};
    const double p_norm = norm(p);

    EntanglementSphere ent;
    if (p_norm > 0.0) {
        ent.b = p.z != 0.0 ? std::copysign(p_norm, p.z) : p_norm;
        ent.t = (1.0 / ent.b) * p;
        const double equatorial = std::hypot(p.x, p.y);
        ent.chi = std::atan2(equatorial, std::abs(p.z));
        ent.xi = equatorial > 0.0 ? wrap_angle(std::atan2(ent.t.y, ent.t.x)) : 0.0;
        ent.c = equatorial;
        ent.x2 = p.x;
        ent.x3 = p.y;
        ent.x4 = p.z;
    }

    BaseSphere base;
    base.theta = 2.0 * std::atan2(n2, n1);
    base.x0 = (n1 - n2) * (n1 + n2);
    base.x1 = P.w;
    base.b = ent.b;
    base.phi = (n1 == 0.0 || n2 == 0.0) ? 0.0 : wrap_angle(std::atan2(base.b, base.x1));
    return {base, ent};
}

FiberSphere fiber(const TwoQubitState& s, Assignment a, const BaseSphere& base, const EntanglementSphere& ent) {
    const auto [q1, q2] = quaternion_pair(s, a);
    FiberSphere f;
    f.q_f = std::cos(base.theta / 2.0) * q1 + std::sin(base.theta / 2.0) * (exp_pure(ent.t, -base.phi) * q2);

    auto [ca, cb] = split_complex_pair(f.q_f);
    ca = snap(ca);
    cb = snap(cb);
    f.theta_f = 2.0 * std::atan2(std::abs(cb), std::abs(ca));
    if (ca == ComplexK{}) {
        f.zeta_f = 0.0;
        f.phi_f = arg0(cb);
    } else if (cb == ComplexK{}) {
        f.zeta_f = arg0(ca);
        f.phi_f = f.zeta_f;
    } else {
        f.zeta_f = arg0(ca);
        f.phi_f = wrap_angle(std::arg(cb) + f.zeta_f);
    }
    f.bloch = fiber_bloch(f.theta_f, f.phi_f, f.zeta_f);
    return f;
}

SphereSet sphere_set(const TwoQubitState& s, Assignment a) {
    SphereSet ss;
    ss.assignment = a;
    std::tie(ss.base, ss.ent) = base_and_entanglement(s, a);
    ss.fiber = fiber(s, a, ss.base, ss.ent);
    return ss;
}

SphereSet make_sphere_set(Assignment a, const SphereAngles& g) {
    SphereSet ss;
    ss.assignment = a;

    ss.base.theta = g.theta;
    ss.base.phi = g.phi;
    ss.base.x1 = std::sin(g.theta) * std::cos(g.phi);
    ss.base.b = std::sin(g.theta) * std::sin(g.phi);
    ss.base.x0 = std::cos(g.theta);

    auto& e = ss.ent;
    e.chi = g.chi;
    e.xi = g.xi;
    e.b = ss.base.b;
    e.t = t_from_angles(g.chi, g.xi);
    e.x2 = e.b * e.t.x;
    e.x3 = e.b * e.t.y;
    e.x4 = e.b * e.t.z;
    e.c = std::abs(e.b) * std::sin(g.chi);

    ss.fiber.theta_f = g.theta_f;
    ss.fiber.phi_f = g.phi_f;
    ss.fiber.zeta_f = g.zeta_f;
    ss.fiber.q_f = fiber_versor(g.theta_f, g.phi_f, g.zeta_f);
    ss.fiber.bloch = fiber_bloch(g.theta_f, g.phi_f, g.zeta_f);
    return ss;
}

SphereAngles angles_of(const SphereSet& ss) {
    return {ss.base.theta, ss.base.phi,     ss.ent.chi,       ss.ent.xi,
            ss.fiber.theta_f, ss.fiber.phi_f, ss.fiber.zeta_f};
}

TwoQubitState reconstruct(const SphereSet& ss) {
    const SphereAngles g = angles_of(ss);
    require_range(g.theta, 0.0, kPi, "theta");
    require_range(g.chi, 0.0, kPi / 2.0, "chi");
    require_range(g.theta_f, 0.0, kPi, "theta_f");

    // Stored coordinates must agree with what the angles generate.
    const SphereSet expect = make_sphere_set(ss.assignment, g);
    require_close(ss.base.x1, expect.base.x1, "x1");
    require_close(ss.base.b, expect.base.b, "b");
    require_close(ss.base.x0, expect.base.x0, "x0");
    require_close(ss.ent.b, expect.base.b, "entanglement b");
    require_close(ss.ent.x2, expect.ent.x2, "x2");
    require_close(ss.ent.x3, expect.ent.x3, "x3");
    require_close(ss.ent.x4, expect.ent.x4, "x4");
    require_close(ss.ent.c, expect.ent.c, "c");
    require_close(max_abs_diff(ss.ent.t, expect.ent.t), 0.0, "t");
    require_close(max_abs_diff(ss.fiber.q_f, expect.fiber.q_f), 0.0, "q_f");
    const double s4 = ss.base.x0 * ss.base.x0 + ss.base.x1 * ss.base.x1 + ss.ent.x2 * ss.ent.x2 +
                      ss.ent.x3 * ss.ent.x3 + ss.ent.x4 * ss.ent.x4;
    require_close(s4, 1.0, "|x|^2 on S^4");

    const Quaternion& qf = expect.fiber.q_f;
    const Quaternion q1 = std::cos(g.theta / 2.0) * qf;
    const Quaternion q2 = std::sin(g.theta / 2.0) * (exp_pure(expect.ent.t, g.phi) * qf);
    const auto [u1, v1] = split_complex_pair(q1);
    const auto [u2, v2] = split_complex_pair(q2);
    if (ss.assignment == Assignment::A_base) return TwoQubitState::from_amplitudes({u1, v1, u2, v2});
    return TwoQubitState::from_amplitudes({u1, u2, v1, v2});
}

DensityMatrix rho_from_spheres(const SphereSet& ss) {
    const double x0 = ss.base.x0;
    const double x1 = ss.base.x1;
    const double x4 = ss.ent.x4;
    DensityMatrix rho;
    rho(0, 0) = 0.5 * (1.0 + x0);
    rho(1, 1) = 0.5 * (1.0 - x0);
    rho(1, 0) = ComplexK{0.5 * x1, 0.5 * x4};
    rho(0, 1) = ComplexK{0.5 * x1, -0.5 * x4};
    return rho;
}

}  // namespace hopfbloch
