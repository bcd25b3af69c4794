#pragma once

#include <utility>

#include "hopfbloch/quaternion.hpp"
#include "hopfbloch/state.hpp"

namespace hopfbloch {

/// Which qubit is mapped to the S^4 Hopf base; the other one lives on the fiber.
enum class Assignment { A_base, B_base };

constexpr Qubit base_qubit(Assignment a) { return a == Assignment::A_base ? Qubit::A : Qubit::B; }
constexpr Qubit fiber_qubit(Assignment a) { return other(base_qubit(a)); }

struct BaseSphere {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // (-pi, pi]
    double x1 = 0.0;     // sin(theta) cos(phi)
    double b = 0.0;      // sin(theta) sin(phi)
    double x0 = 1.0;     // cos(theta)
};

/// Outer unit sphere carrying t, inner sphere of radius |b| carrying b t.
struct EntanglementSphere {
    double chi = 0.0;  // [0, pi/2]
    double xi = 0.0;   // (-pi, pi]
    double b = 0.0;
    Quaternion t = Quaternion::k();
    double c = 0.0;  // concurrence, |b| sin(chi)
    double x2 = 0.0;
    double x3 = 0.0;
    double x4 = 0.0;  // b cos(chi), imaginary coherence of the base qubit
};

struct FiberSphere {
    double theta_f = 0.0;  // [0, pi]
    double phi_f = 0.0;    // (-pi, pi]
    double zeta_f = 0.0;   // (-pi, pi]
    /// Plotted point: polar theta_f, azimuth phi_f - 2 zeta_f.
    BlochVector bloch{0.0, 0.0, 1.0};
    Quaternion q_f = Quaternion::one();
};

struct SphereSet {
    Assignment assignment = Assignment::A_base;
    BaseSphere base;
    EntanglementSphere ent;
    FiberSphere fiber;
};

/// The seven free angles of a sphere set.
struct SphereAngles {
    double theta = 0.0;
    double phi = 0.0;
    double chi = 0.0;
    double xi = 0.0;
    double theta_f = 0.0;
    double phi_f = 0.0;
    double zeta_f = 0.0;
};

/// (alpha + beta j, gamma + delta j) for A_base, (alpha + gamma j, beta + delta j) for B_base.
std::pair<Quaternion, Quaternion> quaternion_pair(const TwoQubitState& s, Assignment a);

/// P = 2 q2 conj(q1) = x1 + b t. Its complex-in-k part is 2 rho10 of the base
/// qubit and its j part is 2 (alpha delta - beta gamma) j.
Quaternion hopf_product(const TwoQubitState& s, Assignment a);

/// Base and entanglement spheres (the S^4 Hopf base point).
///
/// The pure part p of P is written as b t with t in the northern hemisphere:
/// sign(b) = sign(p_k) when p_k != 0, b = +|p| when p lies in the equatorial
/// plane, and b = 0, t = k when p = 0.
std::pair<BaseSphere, EntanglementSphere> base_and_entanglement(const TwoQubitState& s, Assignment a);

/// Fiber versor q_f = cos(theta/2) q1 + sin(theta/2) e^{-t phi} q2 and its three angles.
FiberSphere fiber(const TwoQubitState& s, Assignment a, const BaseSphere& base, const EntanglementSphere& ent);

SphereSet sphere_set(const TwoQubitState& s, Assignment a);

/// Builds a fully populated sphere set from its seven angles.
SphereSet make_sphere_set(Assignment a, const SphereAngles& angles);

SphereAngles angles_of(const SphereSet& ss);

/// Inverse of sphere_set, driven by the seven angles only:
/// (q1, q2) = (cos(theta/2), sin(theta/2) e^{t phi}) q_f.
/// Throws InvalidSphereSet if the stored coordinates disagree with the angles
/// by more than 1e-9.
TwoQubitState reconstruct(const SphereSet& ss);

/// Reduced density matrix of the base qubit from (x0, x1, x4):
/// rho = 1/2 [[1 + x0, x1 - i x4], [x1 + i x4, 1 - x0]].
DensityMatrix rho_from_spheres(const SphereSet& ss);

}  // namespace hopfbloch
