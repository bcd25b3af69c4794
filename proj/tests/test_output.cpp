#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "hopfbloch/errors.hpp"
#include "hopfbloch/output.hpp"
#include "hopfbloch/svg.hpp"

using namespace hopfbloch;

TEST_CASE("round15") {
    CHECK(round15(-0.0) == 0.0);
    CHECK_FALSE(std::signbit(round15(-0.0)));
    CHECK(round15(0.1 + 0.2) == 0.3);
    CHECK(round15(1.0 / 3.0) == 0.333333333333333);
    CHECK(round15(-1e-300) == 0.0);
    CHECK(round15(7e-16) == 0.0);
    CHECK(round15(2e-14) == 2e-14);
    CHECK(degrees(std::numbers::pi) == 180.0);
}

TEST_CASE("selection") {
    CHECK(parse_selection("A") == AssignmentSelection::A);
    CHECK(parse_selection("both") == AssignmentSelection::both);
    CHECK_THROWS_AS(parse_selection("C"), Error);
    CHECK(assignments(AssignmentSelection::both).size() == 2);
    CHECK(assignments(AssignmentSelection::B).front() == Assignment::B_base);
    CHECK(selection_name(AssignmentSelection::A) == "A");
}

TEST_CASE("output record layout") {
    const auto rec = output_record(TwoQubitState::bell("phi+"), AssignmentSelection::both);
    std::vector<std::string> keys;
    for (const auto& [k, v] : rec.items()) keys.push_back(k);
    const std::vector<std::string> expect{"amplitudes", "A_base", "B_base",        "rho_A",
                                          "rho_B",      "concurrence", "coherence_d_A", "coherence_d_B"};
    CHECK(keys == expect);
    CHECK(rec["amplitudes"].size() == 8);
    CHECK(rec["rho_A"].size() == 4);
    CHECK(rec["concurrence"] == 1.0);

    const auto& a = rec["A_base"];
    CHECK(a["base"]["theta_deg"] == 90.0);
    CHECK(a["base"]["b"] == 1.0);
    CHECK(a["entanglement"]["chi_deg"] == 90.0);
    CHECK(a["entanglement"]["c"] == 1.0);
    CHECK(a["fiber"]["bloch"].size() == 3);

    const auto only_b = output_record(TwoQubitState{}, AssignmentSelection::B);
    CHECK_FALSE(only_b.contains("A_base"));
    CHECK(only_b["B_base"]["base"]["theta_deg"] == 0.0);
    CHECK(only_b["concurrence"] == 0.0);
}

TEST_CASE("degree fields equal the radian values") {
    const auto s = fixtures::partial_state();
    const auto rec = output_record(s, AssignmentSelection::both);
    for (Assignment a : {Assignment::A_base, Assignment::B_base}) {
        const auto ss = sphere_set(s, a);
        const auto& blk = rec[a == Assignment::A_base ? "A_base" : "B_base"];
        CHECK(std::abs(blk["base"]["theta_deg"].get<double>() - ss.base.theta * 180 / std::numbers::pi) <= 1e-12);
        CHECK(std::abs(blk["base"]["phi_deg"].get<double>() - ss.base.phi * 180 / std::numbers::pi) <= 1e-12);
        CHECK(std::abs(blk["entanglement"]["chi_deg"].get<double>() - ss.ent.chi * 180 / std::numbers::pi) <= 1e-12);
        CHECK(std::abs(blk["entanglement"]["xi_deg"].get<double>() - ss.ent.xi * 180 / std::numbers::pi) <= 1e-12);
        CHECK(std::abs(blk["fiber"]["theta_f_deg"].get<double>() - ss.fiber.theta_f * 180 / std::numbers::pi) <= 1e-12);
        CHECK(std::abs(blk["fiber"]["zeta_f_deg"].get<double>() - ss.fiber.zeta_f * 180 / std::numbers::pi) <= 1e-12);
    }
    CHECK(rec["A_base"]["base"]["theta_deg"] == 60.0);
    CHECK(rec["A_base"]["base"]["phi_deg"] == -90.0);
    CHECK(rec["A_base"]["entanglement"]["chi_deg"] == 35.0);
    CHECK(rec["A_base"]["entanglement"]["xi_deg"] == 180.0);
}

TEST_CASE("documents") {
    nlohmann::ordered_json input{{"bell", "phi+"}};
    const auto doc = map_document(TwoQubitState::bell("phi+"), input, AssignmentSelection::A);
    CHECK(doc["version"] == "1");
    CHECK(doc["input"]["bell"] == "phi+");
    CHECK(doc["input"]["assignment"] == "A");
    CHECK(doc["records"].size() == 1);
    const std::string text = dump(doc);
    CHECK(text.back() == '\n');
    CHECK(text.find("-0,") == std::string::npos);

    const auto circuit = parse_circuit("rx A 60\ncry A B 70\n");
    const auto all = run_document(circuit, true, AssignmentSelection::both);
    REQUIRE(all["records"].size() == 3);
    CHECK(all["records"][0]["step"] == 0);
    CHECK(all["records"][0]["gate"].is_null());
    CHECK(all["records"][2]["gate"] == "cry A B 70");
    CHECK(all["input"]["gates"][1] == "cry A B 70");
    const auto last = run_document(circuit, false, AssignmentSelection::both);
    REQUIRE(last["records"].size() == 1);
    CHECK(last["records"][0]["step"] == 2);
    CHECK(std::abs(last["records"][0]["concurrence"].get<double>() - 0.496731764892154) <= 1e-15);

    const std::string table = text_table(TwoQubitState::bell("phi+"), AssignmentSelection::both);
    CHECK(table.find("concurrence") != std::string::npos);
}

TEST_CASE("svg") {
    const auto phi = TwoQubitState::bell("phi+");
    const std::string a = render_svg(phi, AssignmentSelection::both, "phi+");
    CHECK(a == render_svg(phi, AssignmentSelection::both, "phi+"));
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(a.find("BASE(A)") != std::string::npos);
    CHECK(a.find("FIBER(B)") != std::string::npos);
    CHECK(a.find("ENTANGLEMENT(B)") != std::string::npos);
    CHECK(render_svg(phi, AssignmentSelection::A).find("BASE(B)") == std::string::npos);
    CHECK(render_svg(phi, AssignmentSelection::A, "<&>").find("&lt;&amp;&gt;") != std::string::npos);
}
