#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "hopfbloch/errors.hpp"
#include "hopfbloch/gates.hpp"

using namespace hopfbloch;

namespace {

template <class E>
E capture(std::string_view text) {
    try {
        parse_circuit(text);
    } catch (const E& e) {
        return e;
    }
    FAIL("no exception for: " << text);
    throw;
}

}  // namespace

TEST_CASE("parse_circuit accepts the documented forms") {
    const auto c = parse_circuit("rx A 60\ncry A B 70");
    REQUIRE(c.gates.size() == 2);
    CHECK(c.gates[0].kind == GateKind::rx);
    CHECK(c.gates[0].target == Qubit::A);
    CHECK(std::abs(c.gates[0].angle - 60 * fixtures::kDeg) <= 1e-16);
    CHECK(c.gates[1].kind == GateKind::cry);
    CHECK(c.gates[1].control == Qubit::A);
    CHECK(c.gates[1].target == Qubit::B);

    const auto one = parse_circuit("# comment\nry B 90");
    REQUIRE(one.gates.size() == 1);
    CHECK(one.gates[0].target == Qubit::B);

    CHECK(parse_circuit("").gates.empty());
    CHECK(parse_circuit("\n  \n# only comments\n").gates.empty());

    const auto mixed = parse_circuit("  h A   # trailing comment\r\n\tcx B A\nrz B +12.5e0\nrx A -90\n");
    REQUIRE(mixed.gates.size() == 4);
    CHECK(mixed.gates[1].control == Qubit::B);
    CHECK(std::abs(mixed.gates[2].angle - 12.5 * fixtures::kDeg) <= 1e-16);
    CHECK(mixed.gates[3].describe() == "rx A -90");

    std::string u4 = "u4";
    for (int r = 0; r < 4; ++r)
        for (int c2 = 0; c2 < 4; ++c2) u4 += r == c2 ? " 1 0" : " 0 0";
    const auto u = parse_circuit(u4);
    REQUIRE(u.gates.size() == 1);
    CHECK(max_abs_diff(u.gates[0].matrix, identity4()) == 0.0);
}

TEST_CASE("parse errors carry line and column") {
    const auto bad = capture<BadAngle>("rx A sixty");
    CHECK(bad.line() == 1);
    CHECK(bad.column() == 6);

    const auto unknown = capture<UnknownGate>("rx A 60\n\n  foo A");
    CHECK(unknown.line() == 3);
    CHECK(unknown.column() == 3);
    CHECK(std::string(unknown.what()).find("line 3, column 3") == 0);

    CHECK(capture<ParseError>("rx C 10").column() == 4);
    CHECK(capture<ParseError>("rx A").line() == 1);
    CHECK(capture<ParseError>("h A 10").column() == 5);
    CHECK(capture<ParseError>("cx A A").line() == 1);
    CHECK(capture<ParseError>("cry A B").line() == 1);
    CHECK(capture<ParseError>("ry B 90\ncx A").line() == 2);
    CHECK(capture<ParseError>("u4 1 0").line() == 1);
    CHECK(capture<BadAngle>("rx A inf").line() == 1);
    CHECK(capture<BadAngle>("rx A nan").line() == 1);
    CHECK(capture<BadAngle>("rx A 1e999").line() == 1);
    CHECK(capture<BadAngle>("rx A 10deg").line() == 1);

    std::string nonunitary = "u4";
    for (int k = 0; k < 16; ++k) nonunitary += " 1 0";
    CHECK(capture<ParseError>(nonunitary).line() == 1);
}
