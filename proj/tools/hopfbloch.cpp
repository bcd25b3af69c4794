// hopfbloch: map two-qubit states onto base / entanglement / fiber spheres,
// trace circuits, render SVG figures and run the invariant suite.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hopfbloch/errors.hpp"
#include "hopfbloch/gates.hpp"
#include "hopfbloch/output.hpp"
#include "hopfbloch/svg.hpp"
#include "hopfbloch/verify.hpp"

namespace {

using namespace hopfbloch;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StateArgs {
    std::string state;
    std::string bell;
    std::string basis;
    bool strict = false;
};

void add_state_options(CLI::App* cmd, StateArgs& args) {
    cmd->add_option("--state", args.state, "eight comma-separated reals: re,im of alpha, beta, gamma, delta");
    cmd->add_option("--bell", args.bell, "Bell state")->check(CLI::IsMember({"phi+", "phi-", "psi+", "psi-"}));
    cmd->add_option("--basis", args.basis, "computational basis state")
        ->check(CLI::IsMember({"00", "01", "10", "11"}));
    cmd->add_flag("--strict", args.strict, "reject amplitudes whose norm is not 1 to 1e-9");
}

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view field(text.data() + pos, comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        if (!field.empty() && field.front() == '+') field.remove_prefix(1);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
            throw UsageError("--state: '" + std::string(field) + "' is not a number");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

// Returns the state and the JSON echo of how it was specified.
std::pair<TwoQubitState, ordered_json> resolve_state(const StateArgs& args) {
    const int given = !args.state.empty() + !args.bell.empty() + !args.basis.empty();
    if (given != 1) throw UsageError("give exactly one of --state, --bell, --basis");
    if (!args.bell.empty()) return {TwoQubitState::bell(args.bell), ordered_json{{"bell", args.bell}}};
    if (!args.basis.empty()) return {TwoQubitState::basis(args.basis), ordered_json{{"basis", args.basis}}};

    const auto v = parse_reals(args.state);
    if (v.size() != 8) throw UsageError("--state needs 8 comma-separated reals, got " + std::to_string(v.size()));
    const auto policy = args.strict ? NormPolicy::strict : NormPolicy::renormalize;
    const auto s = TwoQubitState::from_amplitudes({ComplexK{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}},
                                                  policy);
    ordered_json echo = ordered_json::array();
    for (double x : v) echo.push_back(round15(x));
    return {s, ordered_json{{"state", std::move(echo)}}};
}

Circuit load_circuit(const std::string& path, const std::string& initial) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read circuit file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    Circuit c = parse_circuit(text.str());
    c.initial = initial;
    return c;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw UsageError("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit pure states on base, entanglement and fiber spheres"};
    app.require_subcommand(1);

    StateArgs map_state;
    std::string map_assignment = "both";
    std::string map_format = "json";
    auto* map_cmd = app.add_subcommand("map", "map one state to its sphere coordinates");
    add_state_options(map_cmd, map_state);
    map_cmd->add_option("--assignment", map_assignment, "base qubit")->check(CLI::IsMember({"A", "B", "both"}));
    map_cmd->add_option("--format", map_format, "output format")->check(CLI::IsMember({"json", "text"}));

    std::string run_file;
    std::string run_assignment = "both";
    std::string run_initial = "00";
    bool run_steps = false;
    auto* run_cmd = app.add_subcommand("run", "trace a circuit gate by gate");
    run_cmd->add_option("circuit", run_file, "circuit file")->required();
    run_cmd->add_flag("--steps", run_steps, "emit a record for every step instead of only the final state");
    run_cmd->add_option("--assignment", run_assignment, "base qubit")->check(CLI::IsMember({"A", "B", "both"}));
    run_cmd->add_option("--init", run_initial, "initial basis state")->check(CLI::IsMember({"00", "01", "10", "11"}));

    StateArgs render_state;
    std::string render_circuit;
    std::string render_out;
    std::string render_assignment = "both";
    std::string render_title;
    auto* render_cmd = app.add_subcommand("render", "draw the three spheres as SVG");
    add_state_options(render_cmd, render_state);
    render_cmd->add_option("--circuit", render_circuit, "render the final state of this circuit");
    render_cmd->add_option("--out", render_out, "SVG output path")->required();
    render_cmd->add_option("--assignment", render_assignment, "base qubit")
        ->check(CLI::IsMember({"A", "B", "both"}));
    render_cmd->add_option("--title", render_title, "figure title");

    std::uint64_t verify_seed = kDefaultSeed;
    long long verify_samples = static_cast<long long>(kDefaultSamples);
    std::string verify_out;
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
    verify_cmd->add_option("--seed", verify_seed, "random seed");
    verify_cmd->add_option("--samples", verify_samples, "random states to test");
    verify_cmd->add_option("--out", verify_out, "also write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*map_cmd) {
            const auto [s, echo] = resolve_state(map_state);
            const auto sel = parse_selection(map_assignment);
            if (map_format == "text")
                std::cout << text_table(s, sel);
            else
                std::cout << dump(map_document(s, echo, sel));
            return kExitOk;
        }

        if (*run_cmd) {
            const Circuit c = load_circuit(run_file, run_initial);
            std::cout << dump(run_document(c, run_steps, parse_selection(run_assignment)));
            return kExitOk;
        }

        if (*render_cmd) {
            TwoQubitState s;
            if (!render_circuit.empty()) {
                if (!render_state.state.empty() || !render_state.bell.empty() || !render_state.basis.empty())
                    throw UsageError("give either --circuit or a state, not both");
                s = run(load_circuit(render_circuit, "00")).back().state;
            } else {
                s = resolve_state(render_state).first;
            }
            write_file(render_out, render_svg(s, parse_selection(render_assignment), render_title));
            return kExitOk;
        }

        if (*verify_cmd) {
            if (verify_samples < 1) throw UsageError("--samples must be at least 1");
            const auto report = run_suite(verify_seed, static_cast<std::size_t>(verify_samples));
            const std::string text = dump(to_json(report));
            std::cout << text;
            if (!verify_out.empty()) write_file(verify_out, text);
            for (const auto& r : report.invariants)
                if (!r.passed) std::cerr << "FAIL " << r.name << ": max error " << r.max_error << " > " << r.threshold << "\n";
            return report.passed() ? kExitOk : kExitVerifyFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "hopfbloch: " << run_file << render_circuit << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "hopfbloch: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
