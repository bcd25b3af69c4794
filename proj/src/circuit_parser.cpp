#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hopfbloch/errors.hpp"
#include "hopfbloch/gates.hpp"

namespace hopfbloch {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, std::size_t line_no, std::size_t line_len)
        : tokens_(std::move(tokens)), line_(line_no), end_column_(line_len + 1) {}

    const Token& next(const char* expected) {
        if (pos_ >= tokens_.size()) throw ParseError(std::string("expected ") + expected, line_, end_column_);
        return tokens_[pos_++];
    }

    Qubit qubit(const char* role) {
        const Token& tok = next(role);
        if (tok.text == "A") return Qubit::A;
        if (tok.text == "B") return Qubit::B;
        throw ParseError(std::string("expected qubit A or B for ") + role + ", got '" + std::string(tok.text) + "'",
                         line_, tok.column);
    }

    double real(const char* what) {
        const Token& tok = next(what);
        double v = 0.0;
        const char* first = tok.text.data();
        const char* last = first + tok.text.size();
        if (*first == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || !std::isfinite(v))
            throw BadAngle(std::string("bad ") + what + " '" + std::string(tok.text) + "'", line_, tok.column);
        return v;
    }

    void finish() const {
        if (pos_ < tokens_.size())
            throw ParseError("unexpected token '" + std::string(tokens_[pos_].text) + "'", line_, tokens_[pos_].column);
    }

    std::size_t line() const { return line_; }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t end_column_;
};

Gate parse_u4(LineParser& p, const Token& kind_tok) {
    Matrix4 m{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const double re = p.real("matrix entry");
            const double im = p.real("matrix entry");
            m[r][c] = {re, im};
        }
    }
    p.finish();
    try {
        return Gate::unitary(m);
    } catch (const Error& e) {
        throw ParseError(e.what(), p.line(), kind_tok.column);
    }
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        LineParser p(std::move(tokens), line_no, line.size());
        const Token kind_tok = p.next("gate name");
        const auto kind = gate_kind_from_name(kind_tok.text);
        if (!kind) throw UnknownGate("unknown gate '" + std::string(kind_tok.text) + "'", line_no, kind_tok.column);

        if (*kind == GateKind::u4) {
            circuit.gates.push_back(parse_u4(p, kind_tok));
            continue;
        }

        Gate g;
        if (is_controlled(*kind)) {
            const Qubit control = p.qubit("control");
            const Qubit target = p.qubit("target");
            if (control == target)
                throw ParseError("control and target must be different qubits", line_no, kind_tok.column);
            g = Gate::controlled(*kind, control, target);
        } else {
            g = Gate::single(*kind, p.qubit("target"));
        }
        if (takes_angle(*kind)) g.angle = p.real("angle") * std::numbers::pi / 180.0;
        p.finish();
        circuit.gates.push_back(g);
    }
    return circuit;
}

}  // namespace hopfbloch
