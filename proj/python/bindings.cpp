#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfbloch/errors.hpp"
#include "hopfbloch/gates.hpp"
#include "hopfbloch/hopf.hpp"
#include "hopfbloch/output.hpp"
#include "hopfbloch/quaternion.hpp"
#include "hopfbloch/state.hpp"
#include "hopfbloch/svg.hpp"
#include "hopfbloch/verify.hpp"

namespace py = pybind11;
using namespace hopfbloch;

namespace {

std::string quaternion_repr(const Quaternion& q) {
    return "Quaternion(" + std::to_string(q.w) + ", " + std::to_string(q.x) + ", " + std::to_string(q.y) + ", " +
           std::to_string(q.z) + ")";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-qubit pure states on base, entanglement and fiber spheres";

    auto error = py::register_exception<Error>(m, "HopfBlochError");
    py::register_exception<ParseError>(m, "CircuitParseError", error.ptr());

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<>())
        .def(py::init([](double w, double x, double y, double z) { return Quaternion{w, x, y, z}; }), py::arg("w"),
             py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("w", &Quaternion::w)
        .def_readwrite("x", &Quaternion::x)
        .def_readwrite("y", &Quaternion::y)
        .def_readwrite("z", &Quaternion::z)
        .def(py::self * py::self)
        .def(py::self + py::self)
        .def(py::self == py::self)
        .def("conj", [](const Quaternion& q) { return conj(q); })
        .def("norm", [](const Quaternion& q) { return norm(q); })
        .def("__repr__", &quaternion_repr);

    m.def("exp_pure", &exp_pure, py::arg("t"), py::arg("angle"));
    m.def("split_complex_pair", &split_complex_pair, py::arg("q"));

    py::enum_<Qubit>(m, "Qubit").value("A", Qubit::A).value("B", Qubit::B);
    py::enum_<NormPolicy>(m, "NormPolicy")
        .value("renormalize", NormPolicy::renormalize)
        .value("strict", NormPolicy::strict);

    py::class_<TwoQubitState>(m, "TwoQubitState")
        .def(py::init<>())
        .def(py::init([](ComplexK a, ComplexK b, ComplexK g, ComplexK d, NormPolicy policy) {
                 return TwoQubitState::from_amplitudes(a, b, g, d, policy);
             }),
             py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta"),
             py::arg("policy") = NormPolicy::renormalize)
        .def_static("basis", &TwoQubitState::basis, py::arg("bits"))
        .def_static("bell", &TwoQubitState::bell, py::arg("name"))
        .def_property_readonly("amplitudes", &TwoQubitState::amplitudes)
        .def("__repr__", [](const TwoQubitState& s) {
            std::string out = "TwoQubitState(";
            for (int i = 0; i < 4; ++i) {
                const auto& a = s.amplitudes()[i];
                out += (i ? ", " : "") + std::string("(") + std::to_string(a.real()) + "," +
                       std::to_string(a.imag()) + ")";
            }
            return out + ")";
        });

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def_readonly("m", &DensityMatrix::m)
        .def("purity", &DensityMatrix::purity)
        .def("trace", &DensityMatrix::trace);

    py::class_<BlochVector>(m, "BlochVector")
        .def_readonly("x", &BlochVector::x)
        .def_readonly("y", &BlochVector::y)
        .def_readonly("z", &BlochVector::z);

    m.def("reduced_density", &reduced_density, py::arg("state"), py::arg("keep"));
    m.def("concurrence_det", &concurrence_det, py::arg("state"));
    m.def("concurrence_from_rho", &concurrence_from_rho, py::arg("rho"));
    m.def("coherence_d", &coherence_d, py::arg("rho"));
    m.def("bloch_vector", &bloch_vector, py::arg("rho"));
    m.def("random_state", &random_state, py::arg("seed"));

    py::enum_<Assignment>(m, "Assignment")
        .value("A_base", Assignment::A_base)
        .value("B_base", Assignment::B_base);

    py::class_<BaseSphere>(m, "BaseSphere")
        .def_readonly("theta", &BaseSphere::theta)
        .def_readonly("phi", &BaseSphere::phi)
        .def_readonly("x1", &BaseSphere::x1)
        .def_readonly("b", &BaseSphere::b)
        .def_readonly("x0", &BaseSphere::x0);
    py::class_<EntanglementSphere>(m, "EntanglementSphere")
        .def_readonly("chi", &EntanglementSphere::chi)
        .def_readonly("xi", &EntanglementSphere::xi)
        .def_readonly("b", &EntanglementSphere::b)
        .def_readonly("t", &EntanglementSphere::t)
        .def_readonly("c", &EntanglementSphere::c)
        .def_readonly("x2", &EntanglementSphere::x2)
        .def_readonly("x3", &EntanglementSphere::x3)
        .def_readonly("x4", &EntanglementSphere::x4);
    py::class_<FiberSphere>(m, "FiberSphere")
        .def_readonly("theta_f", &FiberSphere::theta_f)
        .def_readonly("phi_f", &FiberSphere::phi_f)
        .def_readonly("zeta_f", &FiberSphere::zeta_f)
        .def_readonly("bloch", &FiberSphere::bloch)
        .def_readonly("q_f", &FiberSphere::q_f);
    py::class_<SphereSet>(m, "SphereSet")
        .def_readonly("assignment", &SphereSet::assignment)
        .def_readonly("base", &SphereSet::base)
        .def_readonly("ent", &SphereSet::ent)
        .def_readonly("fiber", &SphereSet::fiber);

    m.def("quaternion_pair", &quaternion_pair, py::arg("state"), py::arg("assignment"));
    m.def("sphere_set", &sphere_set, py::arg("state"), py::arg("assignment"));
    m.def(
        "sphere_set_from_angles",
        [](Assignment a, double theta, double phi, double chi, double xi, double theta_f, double phi_f,
           double zeta_f) { return make_sphere_set(a, {theta, phi, chi, xi, theta_f, phi_f, zeta_f}); },
        py::arg("assignment"), py::arg("theta"), py::arg("phi"), py::arg("chi"), py::arg("xi"), py::arg("theta_f"),
        py::arg("phi_f"), py::arg("zeta_f"));
    m.def("reconstruct", &reconstruct, py::arg("spheres"));
    m.def("rho_from_spheres", &rho_from_spheres, py::arg("spheres"));

    py::enum_<Axis>(m, "Axis").value("x", Axis::x).value("y", Axis::y).value("z", Axis::z);
    m.def("rotation", &rotation, py::arg("axis"), py::arg("angle"));

    py::class_<Gate>(m, "Gate")
        .def_static(
            "parse",
            [](const std::string& line) {
                const Circuit c = parse_circuit(line);
                if (c.gates.size() != 1) throw Error("expected exactly one gate");
                return c.gates.front();
            },
            py::arg("line"))
        .def("describe", &Gate::describe)
        .def("matrix", &expand)
        .def("__repr__", [](const Gate& g) { return "Gate('" + g.describe() + "')"; });
    m.def("apply", py::overload_cast<const TwoQubitState&, const Gate&>(&hopfbloch::apply), py::arg("state"), py::arg("gate"));

    py::class_<TrajectoryStep>(m, "TrajectoryStep")
        .def_readonly("index", &TrajectoryStep::index)
        .def_readonly("gate", &TrajectoryStep::gate)
        .def_readonly("state", &TrajectoryStep::state)
        .def_readonly("a_base", &TrajectoryStep::a_base)
        .def_readonly("b_base", &TrajectoryStep::b_base)
        .def_readonly("concurrence", &TrajectoryStep::concurrence)
        .def_readonly("coherence_d_a", &TrajectoryStep::coherence_d_a)
        .def_readonly("coherence_d_b", &TrajectoryStep::coherence_d_b);
    m.def(
        "trajectory", [](const std::string& text) { return run(parse_circuit(text)); }, py::arg("circuit_text"));

    m.def(
        "_map_json",
        [](const TwoQubitState& s, const std::string& sel) {
            return dump(map_document(s, nlohmann::ordered_json::object(), parse_selection(sel)));
        },
        py::arg("state"), py::arg("assignment") = "both");
    m.def(
        "_run_json",
        [](const std::string& text, bool steps, const std::string& sel) {
            return dump(run_document(parse_circuit(text), steps, parse_selection(sel)));
        },
        py::arg("text"), py::arg("steps") = true, py::arg("assignment") = "both");
    m.def(
        "_verify_json",
        [](std::uint64_t seed, std::size_t samples) {
            py::gil_scoped_release release;
            return dump(to_json(run_suite(seed, samples)));
        },
        py::arg("seed") = kDefaultSeed, py::arg("samples") = kDefaultSamples);
    m.def(
        "render_svg",
        [](const TwoQubitState& s, const std::string& sel, const std::string& title) {
            return render_svg(s, parse_selection(sel), title);
        },
        py::arg("state"), py::arg("assignment") = "both", py::arg("title") = "");

    m.attr("__version__") = "0.1.0";
}
