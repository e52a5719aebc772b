#include "qmap/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <optional>
#include <vector>

namespace qmap {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { ident, integer, real, string, symbol, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space_and_comments();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::end, "", line_, col_});
                return out;
            }
            const int line = line_;
            const int col = col_;
            const char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    advance();
                }
                out.push_back({Tok::ident, std::string(src_.substr(start, pos_ - start)), line, col});
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                out.push_back(number(line, col));
            } else if (c == '"') {
                advance();
                std::size_t start = pos_;
                while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') advance();
                if (pos_ >= src_.size() || src_[pos_] != '"') {
                    throw ParseError("unterminated string", line, col);
                }
                std::string text(src_.substr(start, pos_ - start));
                advance();
                out.push_back({Tok::string, std::move(text), line, col});
            } else if (std::string_view("[](),;-+").find(c) != std::string_view::npos) {
                advance();
                out.push_back({Tok::symbol, std::string(1, c), line, col});
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
            }
        }
    }

  private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                return;
            }
        }
    }

    Token number(int line, int col) {
        std::size_t start = pos_;
        bool is_real = false;
        auto digits = [&] {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        };
        digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            is_real = true;
            advance();
            digits();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            is_real = true;
            advance();
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                throw ParseError("malformed exponent", line, col);
            }
            digits();
        }
        std::string text(src_.substr(start, pos_ - start));
        if (text == ".") throw ParseError("malformed number", line, col);
        return {is_real ? Tok::real : Tok::integer, std::move(text), line, col};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
  public:
    Parser(std::vector<Token> toks, std::string name) : toks_(std::move(toks)), name_(std::move(name)) {}

    Circuit run() {
        if (peek_ident("OPENQASM")) {
            next();
            const Token& v = next();
            if (v.kind != Tok::real && v.kind != Tok::integer) fail("expected version number", v);
            expect(";");
        }
        while (peek_ident("include")) {
            next();
            const Token& s = next();
            if (s.kind != Tok::string) fail("expected file name string", s);
            expect(";");
        }
        while (peek().kind != Tok::end) {
            statement();
        }
        if (!reg_name_) {
            fail("missing qreg declaration", peek());
        }
        try {
            return Circuit(n_qubits_, std::move(gates_), name_);
        } catch (const InvalidCircuit& e) {
            // positions are checked per statement; anything left is structural
            throw ParseError(e.what(), peek().line, peek().column);
        }
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (t.kind != Tok::end) ++pos_;
        return t;
    }
    bool peek_ident(std::string_view s) const { return peek().kind == Tok::ident && peek().text == s; }
    bool peek_symbol(std::string_view s) const { return peek().kind == Tok::symbol && peek().text == s; }

    [[noreturn]] void fail(const std::string& msg, const Token& at) const {
        throw ParseError(msg, at.line, at.column);
    }

    void expect(std::string_view sym) {
        const Token& t = next();
        if (t.kind != Tok::symbol || t.text != sym) {
            fail("expected '" + std::string(sym) + "'" +
                     (t.kind == Tok::end ? std::string(" before end of input") : ", got '" + t.text + "'"),
                 t);
        }
    }

    long integer() {
        const Token& t = next();
        if (t.kind != Tok::integer) fail("expected integer", t);
        long value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail("integer out of range", t);
        return value;
    }

    double real() {
        bool negative = false;
        while (peek_symbol("-") || peek_symbol("+")) {
            if (next().text == "-") negative = !negative;
        }
        const Token& t = next();
        if (t.kind != Tok::real && t.kind != Tok::integer) fail("expected number", t);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail("malformed number", t);
        return negative ? -value : value;
    }

    void statement() {
        const Token& head = next();
        if (head.kind != Tok::ident) fail("expected statement", head);
        if (head.text == "qreg") {
            if (reg_name_) fail("only one qreg is supported", head);
            const Token& id = next();
            if (id.kind != Tok::ident) fail("expected register name", id);
            expect("[");
            const Token& size_tok = peek();
            const long size = integer();
            if (size < 1 || size > (1L << 24)) fail("register size must be positive", size_tok);
            expect("]");
            expect(";");
            reg_name_ = id.text;
            n_qubits_ = static_cast<int>(size);
            return;
        }

        std::optional<GateKind> kind;
        if (head.text == "h") kind = GateKind::hadamard;
        else if (head.text == "x") kind = GateKind::single_qubit;
        else if (head.text == "cx") kind = GateKind::cnot;
        else if (head.text == "cp") kind = GateKind::controlled_phase;
        else if (head.text == "swap") kind = GateKind::swap;
        else if (head.text == "measure") kind = GateKind::measure;
        if (!kind) fail("unknown gate '" + head.text + "'", head);
        if (!reg_name_) fail("gate before qreg declaration", head);

        Gate g;
        g.kind = *kind;
        if (g.kind == GateKind::controlled_phase) {
            expect("(");
            g.angle = real();
            expect(")");
        }
        g.operands[0] = operand();
        if (g.arity() == 2) {
            expect(",");
            const Token& second = peek();
            g.operands[1] = operand();
            if (g.operands[0] == g.operands[1]) fail("duplicate operands", second);
        }
        if (g.kind == GateKind::measure) {
            seen_measure_ = true;
        } else if (seen_measure_) {
            fail("gates after measurement are not supported", head);
        }
        expect(";");
        gates_.push_back(std::move(g));
    }

    VirtualId operand() {
        const Token& id = next();
        if (id.kind != Tok::ident) fail("expected register operand", id);
        if (id.text != *reg_name_) fail("unknown register '" + id.text + "'", id);
        expect("[");
        const Token& idx_tok = peek();
        const long idx = integer();
        if (idx < 0 || idx >= n_qubits_) {
            fail("operand " + std::to_string(idx) + " out of register range [0, " +
                     std::to_string(n_qubits_) + ")",
                 idx_tok);
        }
        expect("]");
        return static_cast<VirtualId>(idx);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::string name_;
    std::optional<std::string> reg_name_;
    int n_qubits_ = 0;
    bool seen_measure_ = false;
    std::vector<Gate> gates_;
};

}  // namespace

Circuit parse_circuit(std::string_view text, std::string name) {
    return Parser(Lexer(text).run(), std::move(name)).run();
}

std::string to_qasm(const Circuit& c) {
    std::string out = "OPENQASM 2.0;\nqreg q[" + std::to_string(c.n_qubits()) + "];\n";
    char buf[64];
    for (const Gate& g : c.gates()) {
        out += gate_kind_name(g.kind);
        if (g.angle) {
            std::snprintf(buf, sizeof buf, "(%.17g)", *g.angle);
            out += buf;
        }
        out += " q[" + std::to_string(g.operands[0]) + "]";
        if (g.arity() == 2) out += ",q[" + std::to_string(g.operands[1]) + "]";
        out += ";\n";
    }
    return out;
}

}  // namespace qmap
