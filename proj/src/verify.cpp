#include "hopfbloch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hopfbloch/gates.hpp"
#include "hopfbloch/hopf.hpp"
#include "hopfbloch/oracle.hpp"
#include "hopfbloch/state.hpp"

namespace hopfbloch {

namespace {

constexpr double kPi = std::numbers::pi;

class Tracker {
public:
    Tracker(std::string name, double threshold) : result_{std::move(name), 0, 0.0, threshold, true} {}

    void record(double err) {
        ++result_.samples;
        if (std::isnan(err)) {
            nan_ = true;
            return;
        }
        result_.max_error = std::max(result_.max_error, err);
    }

    // Counts a boolean condition: error 0 when it holds, 1 when it does not.
    void check(bool ok) { record(ok ? 0.0 : 1.0); }

    InvariantResult finish() const {
        InvariantResult r = result_;
        r.passed = !nan_ && r.max_error <= r.threshold;
        if (nan_) r.max_error = std::numeric_limits<double>::infinity();
        return r;
    }

private:
    InvariantResult result_;
    bool nan_ = false;
};

// Keeps registration order so the report layout is fixed.
class Suite {
public:
    Tracker& operator()(const std::string& name, double threshold) {
        auto it = index_.find(name);
        if (it == index_.end()) {
            it = index_.emplace(name, trackers_.size()).first;
            trackers_.emplace_back(name, threshold);
        }
        return trackers_[it->second];
    }

    std::vector<InvariantResult> results() const {
        std::vector<InvariantResult> out;
        for (const auto& t : trackers_) out.push_back(t.finish());
        return out;
    }

private:
    std::vector<Tracker> trackers_;
    std::map<std::string, std::size_t> index_;
};

Quaternion random_quaternion(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    const double w = n(rng), x = n(rng), y = n(rng), z = n(rng);
    return {w, x, y, z};
}

Matrix2 random_su2(std::mt19937_64& rng) {
    Quaternion q = random_quaternion(rng);
    q = (1.0 / norm(q)) * q;
    const ComplexK a{q.w, q.z};
    const ComplexK b{q.y, q.x};
    return {{{a, -std::conj(b)}, {b, std::conj(a)}}};
}

Matrix2 random_u2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    const ComplexK e = std::polar(1.0, phase(rng));
    Matrix2 u = random_su2(rng);
    for (auto& row : u)
        for (auto& v : row) v *= e;
    return u;
}

// u on qubit q, identity on the other one.
Matrix4 local(const Matrix2& u, Qubit q) {
    Matrix4 out{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const int rs = q == Qubit::A ? r & 1 : r >> 1;
            const int cs = q == Qubit::A ? c & 1 : c >> 1;
            const int rt = q == Qubit::A ? r >> 1 : r & 1;
            const int ct = q == Qubit::A ? c >> 1 : c & 1;
            out[r][c] = rs == cs ? u[rt][ct] : ComplexK{};
        }
    }
    return out;
}

// R_ij = 1/2 Tr(sigma_i U sigma_j U^dagger)
BlochVector rotate(const Matrix2& u, const BlochVector& v) {
    const Matrix2 sig[3] = {
        {{{0.0, 1.0}, {1.0, 0.0}}},
        {{{0.0, ComplexK{0.0, -1.0}}, {ComplexK{0.0, 1.0}, 0.0}}},
        {{{1.0, 0.0}, {0.0, -1.0}}},
    };
    const double in[3] = {v.x, v.y, v.z};
    double out[3] = {0.0, 0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const Matrix2 m = matmul(matmul(sig[i], u), matmul(sig[j], adjoint(u)));
            out[i] += 0.5 * (m[0][0] + m[1][1]).real() * in[j];
        }
    }
    return {out[0], out[1], out[2]};
}

double vec_diff(const BlochVector& a, const BlochVector& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

double angle_diff(double a, double b) { return std::abs(std::remainder(a - b, 2.0 * kPi)); }

double base_ent_diff(const SphereSet& a, const SphereSet& b) {
    return std::max({std::abs(a.base.x0 - b.base.x0), std::abs(a.base.x1 - b.base.x1),
                     std::abs(a.base.b - b.base.b), angle_diff(a.base.theta, b.base.theta),
                     angle_diff(a.base.phi, b.base.phi), angle_diff(a.ent.chi, b.ent.chi),
                     angle_diff(a.ent.xi, b.ent.xi), std::abs(a.ent.c - b.ent.c), std::abs(a.ent.x2 - b.ent.x2),
                     std::abs(a.ent.x3 - b.ent.x3), std::abs(a.ent.x4 - b.ent.x4)});
}

// Eigenvalues of a 2x2 Hermitian matrix.
std::pair<double, double> eigenvalues(const DensityMatrix& rho) {
    const double a = rho(0, 0).real();
    const double d = rho(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double r = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(rho(0, 1)));
    return {mean - r, mean + r};
}

void quaternion_invariants(Suite& suite, std::mt19937_64& rng) {
    const Quaternion a = random_quaternion(rng);
    const Quaternion b = random_quaternion(rng);
    const Quaternion c = random_quaternion(rng);
    suite("quaternion.associativity", 1e-12).record(max_abs_diff((a * b) * c, a * (b * c)));
    suite("quaternion.norm_multiplicative", 1e-12).record(std::abs(norm(a * b) - norm(a) * norm(b)));
    suite("quaternion.conj_antihomomorphism", 1e-13).record(max_abs_diff(conj(a * b), conj(b) * conj(a)));
    const auto [u, v] = split_complex_pair(a);
    suite("quaternion.split_roundtrip", 0.0).record(max_abs_diff(embed(u) + embed(v) * Quaternion::j(), a));
    const ComplexK z{b.w, b.x};
    suite("quaternion.j_commutation", 0.0)
        .record(max_abs_diff(Quaternion::j() * embed(z), embed(std::conj(z)) * Quaternion::j()));

    std::uniform_real_distribution<double> ang(-kPi, kPi);
    const Quaternion t = (1.0 / norm(pure_part(c))) * pure_part(c);
    const double s1 = ang(rng), s2 = ang(rng);
    suite("quaternion.exp_pure_homomorphism", 1e-12)
        .record(max_abs_diff(exp_pure(t, s1) * exp_pure(t, s2), exp_pure(t, s1 + s2)));
}

void state_invariants(Suite& suite, const TwoQubitState& s, std::mt19937_64& rng) {
    double n2 = 0.0;
    for (const auto& a : s.amplitudes()) n2 += std::norm(a);
    suite("state.unit_norm", 1e-12).record(std::abs(n2 - 1.0));

    const double c = oracle::concurrence(s);
    for (Qubit q : {Qubit::A, Qubit::B}) {
        const DensityMatrix rho = reduced_density(s, q);
        const DensityMatrix ref = oracle::reduced_density(s, q);
        suite("state.reduced_density_vs_oracle", 1e-14).record(max_abs_diff(rho, ref));
        suite("state.concurrence_det_vs_rho", 1e-10).record(std::abs(concurrence_det(s) - concurrence_from_rho(rho)));
        const double d = coherence_d(rho);
        suite("state.coherence_complementarity", 1e-12).record(std::abs(d * d + c * c - 1.0));
        const double r = bloch_vector(rho).norm();
        suite("state.bloch_norm", 1e-10).record(std::abs(r * r - (1.0 - c * c)));

        const auto [lo, hi] = eigenvalues(ref);
        suite("oracle.trace_one", 1e-12).record(std::abs(ref.trace() - 1.0));
        suite("oracle.positive_semidefinite", 1e-12).record(std::max({0.0, -lo, hi - 1.0}));
        suite("oracle.hermitian", 0.0).record(std::abs(ref(1, 0) - std::conj(ref(0, 1))));
    }

    std::uniform_int_distribution<int> coin(0, 1);
    const Qubit q = coin(rng) ? Qubit::A : Qubit::B;
    const TwoQubitState moved = apply_unitary(s, local(random_u2(rng), q));
    suite("state.local_unitary_invariance", 1e-10).record(std::abs(concurrence_det(moved) - c));
}

void hopf_invariants(Suite& suite, const TwoQubitState& s, std::mt19937_64& rng) {
    const double c_oracle = oracle::concurrence(s);
    for (Assignment a : {Assignment::A_base, Assignment::B_base}) {
        const SphereSet ss = sphere_set(s, a);
        const auto& base = ss.base;
        const auto& e = ss.ent;
        const auto& f = ss.fiber;

        suite("hopf.roundtrip", 1e-10).record(max_amplitude_error(reconstruct(ss), s));

        suite("hopf.s4_unit_norm", 1e-12)
            .record(std::abs(base.x0 * base.x0 + base.x1 * base.x1 + e.x2 * e.x2 + e.x3 * e.x3 + e.x4 * e.x4 - 1.0));
        suite("hopf.base_unit_norm", 1e-12)
            .record(std::abs(base.x0 * base.x0 + base.x1 * base.x1 + base.b * base.b - 1.0));
        suite("hopf.b_sq_eq_x4_sq_plus_c_sq", 1e-12).record(std::abs(e.b * e.b - e.x4 * e.x4 - e.c * e.c));
        suite("hopf.base_cartesian", 1e-12)
            .record(std::max({std::abs(base.x1 - std::sin(base.theta) * std::cos(base.phi)),
                              std::abs(base.b - std::sin(base.theta) * std::sin(base.phi)),
                              std::abs(base.x0 - std::cos(base.theta))}));
        const Quaternion t_ref{0.0, std::sin(e.chi) * std::cos(e.xi), std::sin(e.chi) * std::sin(e.xi),
                               std::cos(e.chi)};
        suite("hopf.t_parameterization", 1e-12).record(max_abs_diff(e.t, t_ref));
        suite("hopf.inner_sphere_coordinates", 1e-12)
            .record(std::max({std::abs(e.x2 - e.b * t_ref.x), std::abs(e.x3 - e.b * t_ref.y),
                              std::abs(e.x4 - e.b * t_ref.z), std::abs(e.c - std::abs(e.b) * std::sin(e.chi))}));
        suite("hopf.chi_northern_hemisphere", 0.0).record(std::max({0.0, -e.chi, e.chi - kPi / 2.0}));
        suite("hopf.angle_ranges", 0.0)
            .check(base.theta >= 0.0 && base.theta <= kPi && f.theta_f >= 0.0 && f.theta_f <= kPi &&
                   base.phi > -kPi && base.phi <= kPi && e.xi > -kPi && e.xi <= kPi && f.phi_f > -kPi &&
                   f.phi_f <= kPi && f.zeta_f > -kPi && f.zeta_f <= kPi);
        const double az = f.phi_f - 2.0 * f.zeta_f;
        suite("hopf.fiber_bloch_formula", 1e-12)
            .record(vec_diff(f.bloch, {std::sin(f.theta_f) * std::cos(az), std::sin(f.theta_f) * std::sin(az),
                                       std::cos(f.theta_f)}));
        suite("hopf.fiber_unit_versor", 1e-12).record(std::abs(norm(f.q_f) - 1.0));

        const DensityMatrix rho_ref = oracle::reduced_density(s, base_qubit(a));
        suite("hopf.concurrence_triple", 1e-10)
            .record(std::max(std::abs(std::abs(e.b) * std::sin(e.chi) - c_oracle),
                             std::abs(concurrence_from_rho(rho_ref) - c_oracle)));
        suite("hopf.rho_from_spheres_vs_oracle", 1e-12).record(max_abs_diff(rho_from_spheres(ss), rho_ref));

        // P = x1 + x4 k + (b sin chi) e^{k xi} i
        const double signed_c = e.b < 0.0 ? -e.c : e.c;
        const Quaternion rebuilt = Quaternion{base.x1, 0.0, 0.0, e.x4} +
                                   signed_c * (embed(std::polar(1.0, e.xi)) * Quaternion::i());
        suite("hopf.outer_product_structure", 1e-12).record(max_abs_diff(rebuilt, hopf_product(s, a)));

        // Fiber qubit: any SU(2) rotates only the fiber sphere.
        const Matrix2 u = random_su2(rng);
        const SphereSet moved = sphere_set(apply_unitary(s, local(u, fiber_qubit(a))), a);
        suite("hopf.fiber_equivariance.base_entanglement_fixed", 1e-12).record(base_ent_diff(ss, moved));
        suite("hopf.fiber_equivariance.bloch_rotates", 1e-9).record(vec_diff(moved.fiber.bloch, rotate(u, f.bloch)));

        // Base qubit y-rotation: entanglement fixed, (x1, x0) rotate by mu.
        std::uniform_real_distribution<double> ang(-kPi, kPi);
        const double mu = ang(rng);
        const SphereSet yr = sphere_set(apply_unitary(s, local(rotation(Axis::y, mu), base_qubit(a))), a);
        suite("hopf.base_y_equivariance.entanglement_fixed", 1e-12)
            .record(std::max({std::abs(yr.ent.b - e.b), angle_diff(yr.ent.chi, e.chi), angle_diff(yr.ent.xi, e.xi),
                              std::abs(yr.ent.c - e.c), std::abs(yr.ent.x4 - e.x4)}));
        const double x1r = base.x1 * std::cos(mu) + base.x0 * std::sin(mu);
        const double x0r = base.x0 * std::cos(mu) - base.x1 * std::sin(mu);
        suite("hopf.base_y_equivariance.base_rotates", 1e-10)
            .record(std::max(std::abs(yr.base.x1 - x1r), std::abs(yr.base.x0 - x0r)));

        // Generic (entangled) states are not flagged separable.
        suite("hopf.separability.entangled", 0.0)
            .check((e.c <= 1e-10) == (e.chi <= 1e-8 || std::abs(e.b) <= 1e-10));
    }
}

void product_state_invariants(Suite& suite, std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    auto spinor = [&] {
        const double a = n(rng), b = n(rng), c = n(rng), d = n(rng);
        const double len = std::sqrt(a * a + b * b + c * c + d * d);
        return std::array<ComplexK, 2>{ComplexK{a / len, b / len}, ComplexK{c / len, d / len}};
    };
    const auto psi_a = spinor();
    const auto psi_b = spinor();
    const TwoQubitState s = TwoQubitState::product(psi_a, psi_b);

    auto bloch_of = [](const std::array<ComplexK, 2>& v) {
        const ComplexK off = v[1] * std::conj(v[0]);
        return BlochVector{2.0 * off.real(), 2.0 * off.imag(), std::norm(v[0]) - std::norm(v[1])};
    };

    for (Assignment a : {Assignment::A_base, Assignment::B_base}) {
        const SphereSet ss = sphere_set(s, a);
        suite("hopf.separability.product", 0.0)
            .check(ss.ent.c <= 1e-10 && (ss.ent.chi <= 1e-8 || std::abs(ss.base.b) <= 1e-10));
        const auto& on_base = a == Assignment::A_base ? psi_a : psi_b;
        const auto& on_fiber = a == Assignment::A_base ? psi_b : psi_a;
        suite("hopf.product.base_is_bloch_sphere", 1e-10)
            .record(vec_diff({ss.base.x1, ss.base.b, ss.base.x0}, bloch_of(on_base)));
        suite("hopf.product.fiber_is_bloch_sphere", 1e-10).record(vec_diff(ss.fiber.bloch, bloch_of(on_fiber)));
    }
}

Gate random_gate(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind_dist(0, static_cast<int>(GateKind::u4) - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_real_distribution<double> ang(-2.0 * kPi, 2.0 * kPi);
    const auto kind = static_cast<GateKind>(kind_dist(rng));
    const Qubit target = coin(rng) ? Qubit::A : Qubit::B;
    const double angle = takes_angle(kind) ? ang(rng) : 0.0;
    if (is_controlled(kind)) return Gate::controlled(kind, other(target), target, angle);
    return Gate::single(kind, target, angle);
}

void gate_invariants(Suite& suite, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(-2.0 * kPi, 2.0 * kPi);
    const double mu = ang(rng);
    const double q = kPi / 2.0;
    suite("gates.rotation_identity_x", 1e-12)
        .record(max_abs_diff(rotation(Axis::x, mu),
                             matmul(matmul(rotation(Axis::z, -q), rotation(Axis::y, mu)), rotation(Axis::z, q))));
    suite("gates.rotation_identity_z", 1e-12)
        .record(max_abs_diff(rotation(Axis::z, mu),
                             matmul(matmul(rotation(Axis::x, q), rotation(Axis::y, mu)), rotation(Axis::x, -q))));

    Circuit circuit;
    for (int k = 0; k < 4; ++k) {
        circuit.gates.push_back(random_gate(rng));
        suite("gates.unitarity", 1e-12).record(unitarity_error(expand(circuit.gates.back())));
    }
    for (const auto& step : run(circuit)) {
        suite("gates.trajectory_concurrence_agreement", 1e-10)
            .record(std::max(std::abs(step.a_base.ent.c - step.b_base.ent.c),
                             std::abs(step.a_base.ent.c - step.concurrence)));
    }
}

// Deterministic grid over the partial-entanglement circuit.
void concurrence_sweep(Suite& suite) {
    const double deg = kPi / 180.0;
    for (GateKind first : {GateKind::rx, GateKind::ry}) {
        for (GateKind entangler : {GateKind::crx, GateKind::cry}) {
            for (int eta = 0; eta <= 180; eta += 10) {
                const TwoQubitState s1 = apply(TwoQubitState{}, Gate::single(first, Qubit::A, eta * deg));
                const BlochVector r = bloch_vector(reduced_density(s1, Qubit::A));
                suite("gates.superposition_degree", 1e-12).record(std::abs(std::hypot(r.x, r.y) - std::sin(eta * deg)));
                for (int omega = 0; omega <= 360; omega += 20) {
                    const TwoQubitState s2 = apply(s1, Gate::controlled(entangler, Qubit::A, Qubit::B, omega * deg));
                    const double want = std::sin(eta * deg) * std::sin(omega * deg / 2.0);
                    suite("gates.concurrence_sweep", 1e-9).record(std::abs(concurrence_det(s2) - want));
                }
            }
        }
    }
}

}  // namespace

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(invariants.begin(), invariants.end(), [](const InvariantResult& r) { return !r.passed; }));
}

VerificationReport run_suite(std::uint64_t seed, std::size_t samples) {
    if (samples == 0) throw std::invalid_argument("verification needs at least one sample");

    Suite suite;
    std::mt19937_64 seeds(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const std::uint64_t sample_seed = seeds();
        std::mt19937_64 rng(sample_seed ^ 0x9e3779b97f4a7c15ULL);
        const TwoQubitState s = random_state(sample_seed);
        quaternion_invariants(suite, rng);
        state_invariants(suite, s, rng);
        hopf_invariants(suite, s, rng);
        product_state_invariants(suite, rng);
        gate_invariants(suite, rng);
    }
    concurrence_sweep(suite);

    VerificationReport report;
    report.seed = seed;
    report.samples = samples;
    report.invariants = suite.results();
    return report;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
    nlohmann::ordered_json inv = nlohmann::ordered_json::array();
    for (const auto& r : report.invariants) {
        inv.push_back({{"name", r.name},
                       {"samples", r.samples},
                       {"max_error", r.max_error},
                       {"threshold", r.threshold},
                       {"passed", r.passed}});
    }
    return {{"version", "1"},
            {"seed", report.seed},
            {"samples", report.samples},
            {"passed", report.passed()},
            {"failures", report.failures()},
            {"invariants", std::move(inv)}};
}

}  // namespace hopfbloch
