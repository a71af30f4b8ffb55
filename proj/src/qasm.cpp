// SPDX-License-Identifier: Apache-2.0
#include "qcopt/qasm.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace qcopt {

namespace {

struct Token {
    enum class Kind { Ident, Number, String, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    SourcePos pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        Token t;
        t.pos = {line_, col_};
        if (at_end()) return t;
        const char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::Ident;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                                 peek() == '_' || peek() == '.'))
                t.text += advance();
            // "qelib1.inc" style identifiers only appear inside strings; a
            // trailing '.' from number-like idents is not expected here.
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::Number;
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.'))
                t.text += advance();
            return t;
        }
        if (c == '"') {
            advance();
            t.kind = Token::Kind::String;
            while (!at_end() && peek() != '"') t.text += advance();
            if (at_end()) throw ParseError(t.pos, "unterminated string");
            advance();
            return t;
        }
        t.kind = Token::Kind::Symbol;
        t.text += advance();
        if (t.text == "-" && !at_end() && peek() == '>') {
            t.text += advance();  // "->"
        }
        return t;
    }

private:
    bool at_end() const { return i_ >= text_.size(); }
    char peek() const { return text_[i_]; }
    char advance() {
        const char c = text_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_space_and_comments() {
        while (!at_end()) {
            const char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && i_ + 1 < text_.size() && text_[i_ + 1] == '/') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
    unsigned line_ = 1;
    unsigned col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { shift(); }

    QasmProgram parse_program() {
        expect_ident("OPENQASM");
        const Token version = expect(Token::Kind::Number);
        if (version.text != "2.0")
            throw UnsupportedError(version.pos, "unsupported OPENQASM version " + version.text);
        expect_symbol(";");
        QasmProgram prog;
        while (cur_.kind != Token::Kind::End) parse_statement(prog);
        return prog;
    }

private:
    void parse_statement(QasmProgram& prog) {
        const Token head = expect(Token::Kind::Ident);
        if (head.text == "include") {
            expect(Token::Kind::String);
            expect_symbol(";");
            return;
        }
        if (head.text == "qreg" || head.text == "creg") {
            const Token name = expect(Token::Kind::Ident);
            expect_symbol("[");
            const unsigned size = expect_uint();
            expect_symbol("]");
            expect_symbol(";");
            auto& regs = head.text == "qreg" ? prog.qregs : prog.cregs;
            for (const auto& [n, _] : prog.qregs)
                if (n == name.text) throw ParseError(name.pos, "register redeclared: " + n);
            for (const auto& [n, _] : prog.cregs)
                if (n == name.text) throw ParseError(name.pos, "register redeclared: " + n);
            regs.emplace_back(name.text, size);
            return;
        }
        if (head.text == "measure") {
            QasmStatement st;
            st.kind = QasmStatement::Kind::Measure;
            st.pos = head.pos;
            st.args.push_back(parse_qubit_arg(prog));
            expect_symbol("->");
            parse_classical_arg(prog);
            expect_symbol(";");
            prog.statements.push_back(std::move(st));
            return;
        }
        if (head.text == "reset") {
            QasmStatement st;
            st.kind = QasmStatement::Kind::Reset;
            st.pos = head.pos;
            st.args.push_back(parse_qubit_arg(prog));
            expect_symbol(";");
            prog.statements.push_back(std::move(st));
            return;
        }
        if (head.text == "barrier") {
            QasmStatement st;
            st.kind = QasmStatement::Kind::Barrier;
            st.pos = head.pos;
            // Whole-register arguments are allowed here; barriers are dropped
            // during decomposition anyway.
            while (true) {
                const Token reg = expect(Token::Kind::Ident);
                if (cur_.kind == Token::Kind::Symbol && cur_.text == "[") {
                    shift();
                    expect_uint();
                    expect_symbol("]");
                }
                (void)reg;
                if (cur_.kind == Token::Kind::Symbol && cur_.text == ",") {
                    shift();
                    continue;
                }
                break;
            }
            expect_symbol(";");
            prog.statements.push_back(std::move(st));
            return;
        }
        parse_gate(prog, head);
    }

    void parse_gate(QasmProgram& prog, const Token& head) {
        static const std::map<std::string, unsigned, std::less<>> arities = {
            {"h", 1}, {"x", 1},   {"z", 1},   {"s", 1},  {"sdg", 1}, {"t", 1},
            {"tdg", 1}, {"rz", 1}, {"cx", 2}, {"ccx", 3}, {"ccz", 3},
        };
        const auto it = arities.find(head.text);
        if (it == arities.end())
            throw UnsupportedError(head.pos, "unsupported gate: " + head.text);

        QasmStatement st;
        st.kind = QasmStatement::Kind::Gate;
        st.name = head.text;
        st.pos = head.pos;
        if (head.text == "rz") {
            expect_symbol("(");
            st.params.push_back(parse_angle());
            expect_symbol(")");
        }
        st.args.push_back(parse_qubit_arg(prog));
        for (unsigned k = 1; k < it->second; ++k) {
            expect_symbol(",");
            st.args.push_back(parse_qubit_arg(prog));
        }
        expect_symbol(";");
        for (std::size_t a = 0; a < st.args.size(); ++a)
            for (std::size_t b = a + 1; b < st.args.size(); ++b)
                if (st.args[a] == st.args[b])
                    throw ParseError(head.pos, "repeated qubit argument");
        prog.statements.push_back(std::move(st));
    }

    // Accepted forms: 0 | [-]pi | [-]c*pi | [-]pi/n | [-]c*pi/n, with c an
    // integer or decimal literal. Anything else is not an exact rational
    // multiple of pi and is rejected.
    Angle parse_angle() {
        const SourcePos pos = cur_.pos;
        bool negative = false;
        if (cur_.kind == Token::Kind::Symbol && (cur_.text == "-" || cur_.text == "+")) {
            negative = cur_.text == "-";
            shift();
        }
        std::int64_t num = 1;
        std::int64_t den = 1;
        bool saw_pi = false;
        if (cur_.kind == Token::Kind::Number) {
            std::tie(num, den) = parse_rational_literal();
            if (cur_.kind == Token::Kind::Symbol && cur_.text == "*") {
                shift();
                expect_ident("pi");
                saw_pi = true;
            }
        } else if (cur_.kind == Token::Kind::Ident && cur_.text == "pi") {
            shift();
            saw_pi = true;
        } else {
            throw ParseError(cur_.pos, "expected rotation angle");
        }
        if (cur_.kind == Token::Kind::Symbol && cur_.text == "/") {
            shift();
            const Token d = expect(Token::Kind::Number);
            if (d.text.find('.') != std::string::npos)
                throw UnsupportedError(d.pos, "angle denominator must be an integer");
            den *= std::stoll(d.text);
        }
        if (!saw_pi && num != 0)
            throw UnsupportedError(pos, "rotation angle is not a rational multiple of pi");
        return Angle(negative ? -num : num, den);
    }

    std::pair<std::int64_t, std::int64_t> parse_rational_literal() {
        const Token t = expect(Token::Kind::Number);
        const auto dot = t.text.find('.');
        if (t.text.size() > 18) throw UnsupportedError(t.pos, "angle literal too long");
        if (dot == std::string::npos) return {std::stoll(t.text), 1};
        std::string digits = t.text.substr(0, dot) + t.text.substr(dot + 1);
        const std::size_t frac_digits = t.text.size() - dot - 1;
        std::int64_t den = 1;
        for (std::size_t k = 0; k < frac_digits; ++k) den *= 10;
        return {digits.empty() ? 0 : std::stoll(digits), den};
    }

    Qubit parse_qubit_arg(const QasmProgram& prog) {
        const Token reg = expect(Token::Kind::Ident);
        expect_symbol("[");
        const unsigned idx = expect_uint();
        expect_symbol("]");
        unsigned base = 0;
        for (const auto& [name, size] : prog.qregs) {
            if (name == reg.text) {
                if (idx >= size)
                    throw ParseError(reg.pos, "index out of range for register " + name);
                return base + idx;
            }
            base += size;
        }
        throw ParseError(reg.pos, "unknown quantum register: " + reg.text);
    }

    void parse_classical_arg(const QasmProgram& prog) {
        const Token reg = expect(Token::Kind::Ident);
        expect_symbol("[");
        const unsigned idx = expect_uint();
        expect_symbol("]");
        for (const auto& [name, size] : prog.cregs) {
            if (name == reg.text) {
                if (idx >= size)
                    throw ParseError(reg.pos, "index out of range for register " + name);
                return;
            }
        }
        throw ParseError(reg.pos, "unknown classical register: " + reg.text);
    }

    void shift() { cur_ = lexer_.next(); }
    Token expect(Token::Kind kind) {
        if (cur_.kind != kind) throw ParseError(cur_.pos, "unexpected token '" + cur_.text + "'");
        Token t = cur_;
        shift();
        return t;
    }
    void expect_ident(std::string_view text) {
        if (cur_.kind != Token::Kind::Ident || cur_.text != text)
            throw ParseError(cur_.pos, "expected '" + std::string(text) + "'");
        shift();
    }
    void expect_symbol(std::string_view text) {
        if (cur_.kind != Token::Kind::Symbol || cur_.text != text)
            throw ParseError(cur_.pos, "expected '" + std::string(text) + "'");
        shift();
    }
    unsigned expect_uint() {
        const Token t = expect(Token::Kind::Number);
        if (t.text.find('.') != std::string::npos)
            throw ParseError(t.pos, "expected integer");
        return static_cast<unsigned>(std::stoul(t.text));
    }

    Lexer lexer_;
    Token cur_;
};

} // namespace

unsigned QasmProgram::total_qubits() const {
    unsigned n = 0;
    for (const auto& [_, size] : qregs) n += size;
    return n;
}

bool QasmProgram::has_nonunitary() const {
    for (const auto& st : statements)
        if (st.kind == QasmStatement::Kind::Measure || st.kind == QasmStatement::Kind::Reset)
            return true;
    return false;
}

QasmProgram parse(std::string_view text) {
    return Parser(text).parse_program();
}

QasmProgram parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

GateList ccz_decomposition(Qubit a, Qubit b, Qubit c) {
    const Angle t(1, 4);
    const Angle tdg(7, 4);
    return {
        GateApp::cnot(b, c), GateApp::rz(tdg, c), GateApp::cnot(a, c),
        GateApp::rz(t, c),   GateApp::cnot(b, c), GateApp::rz(tdg, c),
        GateApp::cnot(a, c), GateApp::cnot(a, b), GateApp::rz(tdg, b),
        GateApp::cnot(a, b), GateApp::rz(t, a),   GateApp::rz(t, b),
        GateApp::rz(t, c),
    };
}

Circuit decompose(const QasmProgram& p) {
    Circuit c;
    c.dim = p.total_qubits();
    for (const auto& st : p.statements) {
        switch (st.kind) {
        case QasmStatement::Kind::Measure:
        case QasmStatement::Kind::Reset:
            throw NonUnitaryError("non-unitary statement at line " + std::to_string(st.pos.line));
        case QasmStatement::Kind::Barrier:
            continue;
        case QasmStatement::Kind::Gate:
            break;
        }
        const auto& q = st.args;
        if (st.name == "h") {
            c.gates.push_back(GateApp::h(q[0]));
        } else if (st.name == "x") {
            c.gates.push_back(GateApp::x(q[0]));
        } else if (st.name == "z") {
            c.gates.push_back(GateApp::rz(Angle(1, 1), q[0]));
        } else if (st.name == "s") {
            c.gates.push_back(GateApp::rz(Angle(1, 2), q[0]));
        } else if (st.name == "sdg") {
            c.gates.push_back(GateApp::rz(Angle(3, 2), q[0]));
        } else if (st.name == "t") {
            c.gates.push_back(GateApp::rz(Angle(1, 4), q[0]));
        } else if (st.name == "tdg") {
            c.gates.push_back(GateApp::rz(Angle(7, 4), q[0]));
        } else if (st.name == "rz") {
            c.gates.push_back(GateApp::rz(st.params[0], q[0]));
        } else if (st.name == "cx") {
            c.gates.push_back(GateApp::cnot(q[0], q[1]));
        } else if (st.name == "ccz") {
            const auto body = ccz_decomposition(q[0], q[1], q[2]);
            c.gates.insert(c.gates.end(), body.begin(), body.end());
        } else if (st.name == "ccx") {
            c.gates.push_back(GateApp::h(q[2]));
            const auto body = ccz_decomposition(q[0], q[1], q[2]);
            c.gates.insert(c.gates.end(), body.begin(), body.end());
            c.gates.push_back(GateApp::h(q[2]));
        }
    }
    return c;
}

std::string emit(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.dim << "];\n";
    for (const auto& g : c.gates) {
        switch (g.kind) {
        case GateKind::H: out << "h q[" << g.q0 << "];\n"; break;
        case GateKind::X: out << "x q[" << g.q0 << "];\n"; break;
        case GateKind::Rz:
            out << "rz(" << g.angle.to_string() << ") q[" << g.q0 << "];\n";
            break;
        case GateKind::CNOT:
            out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
            break;
        }
    }
    return out.str();
}

void emit_file(const Circuit& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << emit(c);
}

} // namespace qcopt
