#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfbloch/hopf.hpp"
#include "hopfbloch/state.hpp"

namespace hopfbloch {

using Matrix2 = std::array<std::array<ComplexK, 2>, 2>;
using Matrix4 = std::array<std::array<ComplexK, 4>, 4>;

Matrix2 matmul(const Matrix2& a, const Matrix2& b);
Matrix2 adjoint(const Matrix2& m);
Matrix4 matmul(const Matrix4& a, const Matrix4& b);
Matrix4 adjoint(const Matrix4& m);
Matrix2 identity2();
Matrix4 identity4();
double max_abs_diff(const Matrix2& a, const Matrix2& b);
double max_abs_diff(const Matrix4& a, const Matrix4& b);
/// max |U U^dagger - I|.
double unitarity_error(const Matrix4& u);

enum class Axis { x, y, z };

/// R_n(angle) = exp(-i angle (n . sigma) / 2).
Matrix2 rotation(Axis axis, double angle);

enum class GateKind { rx, ry, rz, x, y, z, h, s, sdg, t, tdg, crx, cry, crz, cx, cy, cz, u4 };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
bool is_controlled(GateKind kind);
bool takes_angle(GateKind kind);

struct Gate {
    GateKind kind = GateKind::x;
    Qubit target = Qubit::A;
    std::optional<Qubit> control;
    double angle = 0.0;  // radians; rotation kinds only
    Matrix4 matrix{};    // u4 only

    static Gate single(GateKind kind, Qubit target, double angle = 0.0);
    static Gate controlled(GateKind kind, Qubit control, Qubit target, double angle = 0.0);
    static Gate unitary(const Matrix4& m);

    /// Human-readable form, e.g. "cry A B 70".
    std::string describe() const;
};

/// 2x2 target operator of a single-qubit or controlled gate.
Matrix2 target_matrix(const Gate& g);

/// Full 4x4 operator in the |00>,|01>,|10>,|11> basis (qubit A most significant).
/// Controlled gates act with U on the control = |1> block only.
/// Throws BadWiring when control == target.
Matrix4 expand(const Gate& g);

TwoQubitState apply_unitary(const TwoQubitState& s, const Matrix4& u);
TwoQubitState apply(const TwoQubitState& s, const Gate& g);

struct Circuit {
    std::vector<Gate> gates;
    std::string initial = "00";
};

struct TrajectoryStep {
    std::size_t index = 0;
    std::string gate;  // empty for the initial step
    TwoQubitState state;
    SphereSet a_base;
    SphereSet b_base;
    double concurrence = 0.0;
    double coherence_d_a = 0.0;
    double coherence_d_b = 0.0;
};

TrajectoryStep make_step(std::size_t index, std::string gate, const TwoQubitState& s);

/// Step 0 is the initial state; step k is the state after gate k.
std::vector<TrajectoryStep> run(const Circuit& c);

/// Line-oriented circuit text. One gate per line:
///   <kind> <target> [<angle_deg>]
///   <kind> <control> <target> [<angle_deg>]
///   u4 <32 reals: row-major re im pairs>
/// Qubits are A or B, '#' starts a comment, blank lines are skipped.
Circuit parse_circuit(std::string_view text);

}  // namespace hopfbloch
