#include "hopfbloch/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "hopfbloch/errors.hpp"

namespace hopfbloch {

using nlohmann::ordered_json;

namespace {

ordered_json num(double v) { return round15(v); }

ordered_json complex_pair(const ComplexK& z) { return ordered_json::array({num(z.real()), num(z.imag())}); }

ordered_json rho_json(const DensityMatrix& rho) {
    return ordered_json::array({complex_pair(rho(0, 0)), complex_pair(rho(0, 1)), complex_pair(rho(1, 0)),
                                complex_pair(rho(1, 1))});
}

ordered_json sphere_json(const SphereSet& ss) {
    const auto& b = ss.base;
    const auto& e = ss.ent;
    const auto& f = ss.fiber;
    ordered_json out;
    out["base"] = {{"theta_deg", num(degrees(b.theta))},
                   {"phi_deg", num(degrees(b.phi))},
                   {"x1", num(b.x1)},
                   {"b", num(b.b)},
                   {"x0", num(b.x0)}};
    out["entanglement"] = {{"chi_deg", num(degrees(e.chi))}, {"xi_deg", num(degrees(e.xi))}, {"c", num(e.c)},
                           {"x2", num(e.x2)},                 {"x3", num(e.x3)},             {"x4", num(e.x4)}};
    out["fiber"] = {{"theta_f_deg", num(degrees(f.theta_f))},
                    {"phi_f_deg", num(degrees(f.phi_f))},
                    {"zeta_f_deg", num(degrees(f.zeta_f))},
                    {"bloch", ordered_json::array({num(f.bloch.x), num(f.bloch.y), num(f.bloch.z)})}};
    return out;
}

const char* block_name(Assignment a) { return a == Assignment::A_base ? "A_base" : "B_base"; }

void fill_record(ordered_json& out, const TwoQubitState& s, AssignmentSelection sel) {
    ordered_json amps = ordered_json::array();
    for (const auto& a : s.amplitudes()) {
        amps.push_back(num(a.real()));
        amps.push_back(num(a.imag()));
    }
    out["amplitudes"] = std::move(amps);
    for (Assignment a : assignments(sel)) out[block_name(a)] = sphere_json(sphere_set(s, a));

    const DensityMatrix rho_a = reduced_density(s, Qubit::A);
    const DensityMatrix rho_b = reduced_density(s, Qubit::B);
    out["rho_A"] = rho_json(rho_a);
    out["rho_B"] = rho_json(rho_b);
    out["concurrence"] = num(concurrence_det(s));
    out["coherence_d_A"] = num(coherence_d(rho_a));
    out["coherence_d_B"] = num(coherence_d(rho_b));
}

}  // namespace

std::vector<Assignment> assignments(AssignmentSelection sel) {
    switch (sel) {
        case AssignmentSelection::A:
            return {Assignment::A_base};
        case AssignmentSelection::B:
            return {Assignment::B_base};
        case AssignmentSelection::both:
            break;
    }
    return {Assignment::A_base, Assignment::B_base};
}

std::string_view selection_name(AssignmentSelection sel) {
    switch (sel) {
        case AssignmentSelection::A:
            return "A";
        case AssignmentSelection::B:
            return "B";
        case AssignmentSelection::both:
            break;
    }
    return "both";
}

AssignmentSelection parse_selection(std::string_view name) {
    if (name == "A") return AssignmentSelection::A;
    if (name == "B") return AssignmentSelection::B;
    if (name == "both") return AssignmentSelection::both;
    throw Error("assignment must be A, B or both; got '" + std::string(name) + "'");
}

double round15(double v) {
    if (std::abs(v) < kOutputZero) return 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

double degrees(double radians) { return radians * 180.0 / std::numbers::pi; }

ordered_json output_record(const TwoQubitState& s, AssignmentSelection sel) {
    ordered_json out = ordered_json::object();
    fill_record(out, s, sel);
    return out;
}

ordered_json output_record(const TrajectoryStep& step, AssignmentSelection sel) {
    ordered_json out = ordered_json::object();
    out["step"] = step.index;
    out["gate"] = step.gate.empty() ? ordered_json(nullptr) : ordered_json(step.gate);
    fill_record(out, step.state, sel);
    return out;
}

ordered_json document(const ordered_json& input, ordered_json records) {
    return {{"version", kSchemaVersion}, {"input", input}, {"records", std::move(records)}};
}

ordered_json map_document(const TwoQubitState& s, ordered_json input, AssignmentSelection sel) {
    input["assignment"] = selection_name(sel);
    return document(input, ordered_json::array({output_record(s, sel)}));
}

ordered_json run_document(const Circuit& c, bool all_steps, AssignmentSelection sel) {
    const auto steps = run(c);
    ordered_json records = ordered_json::array();
    if (all_steps) {
        for (const auto& step : steps) records.push_back(output_record(step, sel));
    } else {
        records.push_back(output_record(steps.back(), sel));
    }
    ordered_json gates = ordered_json::array();
    for (const auto& g : c.gates) gates.push_back(g.describe());
    ordered_json input = {{"initial", c.initial}, {"gates", std::move(gates)}, {"assignment", selection_name(sel)}};
    return document(input, std::move(records));
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string text_table(const TwoQubitState& s, AssignmentSelection sel) {
    std::ostringstream out;
    auto row = [&](const char* name, double v) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "  %-14s %20.12f\n", name, round15(v));
        out << buf;
    };
    const char* names[] = {"alpha", "beta", "gamma", "delta"};
    out << "amplitudes\n";
    for (int i = 0; i < 4; ++i) {
        char buf[96];
        const auto& a = s.amplitudes()[i];
        std::snprintf(buf, sizeof buf, "  %-14s %20.12f %+20.12f i\n", names[i], round15(a.real()), round15(a.imag()));
        out << buf;
    }
    for (Assignment a : assignments(sel)) {
        const SphereSet ss = sphere_set(s, a);
        out << (a == Assignment::A_base ? "BASE(A)" : "BASE(B)") << "\n";
        row("theta_deg", degrees(ss.base.theta));
        row("phi_deg", degrees(ss.base.phi));
        row("x1", ss.base.x1);
        row("b", ss.base.b);
        row("x0", ss.base.x0);
        out << (a == Assignment::A_base ? "ENTANGLEMENT(A)" : "ENTANGLEMENT(B)") << "\n";
        row("chi_deg", degrees(ss.ent.chi));
        row("xi_deg", degrees(ss.ent.xi));
        row("c", ss.ent.c);
        row("x2", ss.ent.x2);
        row("x3", ss.ent.x3);
        row("x4", ss.ent.x4);
        out << (a == Assignment::A_base ? "FIBER(B)" : "FIBER(A)") << "\n";
        row("theta_f_deg", degrees(ss.fiber.theta_f));
        row("phi_f_deg", degrees(ss.fiber.phi_f));
        row("zeta_f_deg", degrees(ss.fiber.zeta_f));
        row("bloch_x", ss.fiber.bloch.x);
        row("bloch_y", ss.fiber.bloch.y);
        row("bloch_z", ss.fiber.bloch.z);
    }
    out << "summary\n";
    row("concurrence", concurrence_det(s));
    row("coherence_d_A", coherence_d(reduced_density(s, Qubit::A)));
    row("coherence_d_B", coherence_d(reduced_density(s, Qubit::B)));
    return out.str();
}

}  // namespace hopfbloch
