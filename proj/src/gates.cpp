#include "hopfbloch/gates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "hopfbloch/errors.hpp"

namespace hopfbloch {

namespace {

constexpr ComplexK kI{0.0, 1.0};

struct KindInfo {
    GateKind kind;
    std::string_view name;
    bool controlled;
    bool angle;
};

constexpr KindInfo kKinds[] = {
    {GateKind::rx, "rx", false, true},    {GateKind::ry, "ry", false, true},
    {GateKind::rz, "rz", false, true},    {GateKind::x, "x", false, false},
    {GateKind::y, "y", false, false},     {GateKind::z, "z", false, false},
    {GateKind::h, "h", false, false},     {GateKind::s, "s", false, false},
    {GateKind::sdg, "sdg", false, false}, {GateKind::t, "t", false, false},
    {GateKind::tdg, "tdg", false, false}, {GateKind::crx, "crx", true, true},
    {GateKind::cry, "cry", true, true},   {GateKind::crz, "crz", true, true},
    {GateKind::cx, "cx", true, false},    {GateKind::cy, "cy", true, false},
    {GateKind::cz, "cz", true, false},    {GateKind::u4, "u4", false, false},
};

const KindInfo& info(GateKind kind) {
    return *std::find_if(std::begin(kKinds), std::end(kKinds), [&](const KindInfo& k) { return k.kind == kind; });
}

Matrix2 diag(ComplexK a, ComplexK d) { return {{{a, 0.0}, {0.0, d}}}; }

Matrix2 pauli(Axis axis) {
    switch (axis) {
        case Axis::x:
            return {{{0.0, 1.0}, {1.0, 0.0}}};
        case Axis::y:
            return {{{0.0, -kI}, {kI, 0.0}}};
        case Axis::z:
            break;
    }
    return diag(1.0, -1.0);
}

int bit_of(Qubit q, int index) { return q == Qubit::A ? index >> 1 : index & 1; }

}  // namespace

Matrix2 matmul(const Matrix2& a, const Matrix2& b) {
    Matrix2 out{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int k = 0; k < 2; ++k) out[r][c] += a[r][k] * b[k][c];
    return out;
}

Matrix4 matmul(const Matrix4& a, const Matrix4& b) {
    Matrix4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            for (int k = 0; k < 4; ++k) out[r][c] += a[r][k] * b[k][c];
    return out;
}

Matrix2 adjoint(const Matrix2& m) {
    Matrix2 out{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out[r][c] = std::conj(m[c][r]);
    return out;
}

Matrix4 adjoint(const Matrix4& m) {
    Matrix4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = std::conj(m[c][r]);
    return out;
}

Matrix2 identity2() { return diag(1.0, 1.0); }

Matrix4 identity4() {
    Matrix4 out{};
    for (int i = 0; i < 4; ++i) out[i][i] = 1.0;
    return out;
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
    double err = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) err = std::max(err, std::abs(a[r][c] - b[r][c]));
    return err;
}

double max_abs_diff(const Matrix4& a, const Matrix4& b) {
    double err = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) err = std::max(err, std::abs(a[r][c] - b[r][c]));
    return err;
}

double unitarity_error(const Matrix4& u) { return max_abs_diff(matmul(u, adjoint(u)), identity4()); }

Matrix2 rotation(Axis axis, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const Matrix2 sigma = pauli(axis);
    Matrix2 out{};
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k < 2; ++k) out[r][k] = (r == k ? c : 0.0) - kI * s * sigma[r][k];
    return out;
}

std::string_view gate_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (const auto& k : kKinds)
        if (k.name == name) return k.kind;
    return std::nullopt;
}

bool is_controlled(GateKind kind) { return info(kind).controlled; }
bool takes_angle(GateKind kind) { return info(kind).angle; }

Gate Gate::single(GateKind kind, Qubit target, double angle) {
    if (is_controlled(kind) || kind == GateKind::u4)
        throw Error(std::string(gate_name(kind)) + " is not a single-qubit gate");
    Gate g;
    g.kind = kind;
    g.target = target;
    g.angle = angle;
    return g;
}

Gate Gate::controlled(GateKind kind, Qubit control, Qubit target, double angle) {
    if (!is_controlled(kind)) throw Error(std::string(gate_name(kind)) + " is not a controlled gate");
    if (control == target)
        throw BadWiring(std::string(gate_name(kind)) + ": control and target are both qubit " + label(target));
    Gate g;
    g.kind = kind;
    g.control = control;
    g.target = target;
    g.angle = angle;
    return g;
}

Gate Gate::unitary(const Matrix4& m) {
    const double err = unitarity_error(m);
    if (!(err <= 1e-12)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3g", err);
        throw Error(std::string("u4 matrix is not unitary (|UU^dagger - I| = ") + buf + ")");
    }
    Gate g;
    g.kind = GateKind::u4;
    g.matrix = m;
    return g;
}

std::string Gate::describe() const {
    std::string out(gate_name(kind));
    if (kind == GateKind::u4) return out;
    if (control) {
        out += ' ';
        out += label(*control);
    }
    out += ' ';
    out += label(target);
    if (takes_angle(kind)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.12g", angle * 180.0 / std::numbers::pi);
        out += buf;
    }
    return out;
}

Matrix2 target_matrix(const Gate& g) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::rx:
        case GateKind::crx:
            return rotation(Axis::x, g.angle);
        case GateKind::ry:
        case GateKind::cry:
            return rotation(Axis::y, g.angle);
        case GateKind::rz:
        case GateKind::crz:
            return rotation(Axis::z, g.angle);
        case GateKind::x:
        case GateKind::cx:
            return pauli(Axis::x);
        case GateKind::y:
        case GateKind::cy:
            return pauli(Axis::y);
        case GateKind::z:
        case GateKind::cz:
            return pauli(Axis::z);
        case GateKind::h:
            return {{{r, r}, {r, -r}}};
        case GateKind::s:
            return diag(1.0, kI);
        case GateKind::sdg:
            return diag(1.0, -kI);
        case GateKind::t:
            return diag(1.0, std::polar(1.0, std::numbers::pi / 4.0));
        case GateKind::tdg:
            return diag(1.0, std::polar(1.0, -std::numbers::pi / 4.0));
        case GateKind::u4:
            break;
    }
    throw Error("u4 has no single-qubit target matrix");
}

Matrix4 expand(const Gate& g) {
    if (g.kind == GateKind::u4) return g.matrix;
    const Matrix2 u = target_matrix(g);
    Matrix4 out{};
    if (!g.control) {
        const Qubit spectator = other(g.target);
        for (int row = 0; row < 4; ++row)
            for (int col = 0; col < 4; ++col)
                if (bit_of(spectator, row) == bit_of(spectator, col))
                    out[row][col] = u[bit_of(g.target, row)][bit_of(g.target, col)];
        return out;
    }
    if (*g.control == g.target)
        throw BadWiring(std::string(gate_name(g.kind)) + ": control and target are both qubit " + label(g.target));
    const Qubit c = *g.control;
    for (int row = 0; row < 4; ++row) {
        for (int col = 0; col < 4; ++col) {
            if (bit_of(c, row) != bit_of(c, col)) continue;
            if (bit_of(c, row) == 0)
                out[row][col] = row == col ? 1.0 : 0.0;
            else
                out[row][col] = u[bit_of(g.target, row)][bit_of(g.target, col)];
        }
    }
    return out;
}

TwoQubitState apply_unitary(const TwoQubitState& s, const Matrix4& u) {
    std::array<ComplexK, 4> out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r] += u[r][c] * s.amplitudes()[c];
    return TwoQubitState::from_amplitudes(out, NormPolicy::strict);
}

TwoQubitState apply(const TwoQubitState& s, const Gate& g) { return apply_unitary(s, expand(g)); }

TrajectoryStep make_step(std::size_t index, std::string gate, const TwoQubitState& s) {
    TrajectoryStep step;
    step.index = index;
    step.gate = std::move(gate);
    step.state = s;
    step.a_base = sphere_set(s, Assignment::A_base);
    step.b_base = sphere_set(s, Assignment::B_base);
    step.concurrence = concurrence_det(s);
    step.coherence_d_a = coherence_d(reduced_density(s, Qubit::A));
    step.coherence_d_b = coherence_d(reduced_density(s, Qubit::B));
    return step;
}

std::vector<TrajectoryStep> run(const Circuit& c) {
    std::vector<TrajectoryStep> steps;
    steps.reserve(c.gates.size() + 1);
    TwoQubitState s = TwoQubitState::basis(c.initial);
    steps.push_back(make_step(0, "", s));
    for (std::size_t k = 0; k < c.gates.size(); ++k) {
        s = apply(s, c.gates[k]);
        steps.push_back(make_step(k + 1, c.gates[k].describe(), s));
    }
    return steps;
}

}  // namespace hopfbloch
