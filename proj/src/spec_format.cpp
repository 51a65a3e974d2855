#include "hklab/spec_format.hpp"

#include <cctype>
#include <cstdlib>

#include "hklab/errors.hpp"
#include "hklab/prime_field.hpp"

namespace hklab {

const std::vector<Polynomial>* InputSpec::find_ideal(const std::string& name) const {
    for (const auto& [ideal_name, gens] : ideals) {
        if (ideal_name == name) return &gens;
    }
    return nullptr;
}

RingSpec InputSpec::ring_spec() const {
    if (!ring) fail(errc::invalid_argument, "spec has no ring (missing char/vars)");
    return RingSpec(ring, relations);
}

bool InputSpec::operator==(const InputSpec& rhs) const {
    bool rings_equal = (!ring && !rhs.ring) || (ring && rhs.ring && *ring == *rhs.ring);
    return rings_equal && relations == rhs.relations && ideals == rhs.ideals;
}

namespace {

struct Token {
    enum Kind { ident, integer, punct, end } kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space();
        if (pos_ >= text_.size()) return {Token::end, "", line_, col_};
        int line = line_, col = col_;
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                word.push_back(text_[pos_]);
                advance();
            }
            return {Token::ident, word, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits.push_back(text_[pos_]);
                advance();
            }
            return {Token::integer, digits, line, col};
        }
        advance();
        return {Token::punct, std::string(1, c), line, col};
    }

  private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {  // comment to end of line
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

[[noreturn]] void parse_fail(errc code, const Token& tok, const std::string& msg) {
    fail(code, msg + " at line " + std::to_string(tok.line) + ", column " +
                   std::to_string(tok.col));
}

class Parser {
  public:
    explicit Parser(const std::string& text) : lexer_(text) { shift(); }

    InputSpec parse() {
        InputSpec spec;
        while (cur_.kind != Token::end) {
            if (cur_.kind != Token::ident)
                parse_fail(errc::syntax_error, cur_, "expected a statement keyword");
            std::string keyword = cur_.text;
            if (keyword == "char") {
                shift();
                parse_char(spec);
            } else if (keyword == "vars") {
                shift();
                parse_vars(spec);
            } else if (keyword == "rel") {
                shift();
                require_ring(spec);
                spec.relations.push_back(parse_poly(spec));
            } else if (keyword == "ideal") {
                shift();
                parse_ideal(spec);
            } else {
                parse_fail(errc::syntax_error, cur_, "unknown statement '" + keyword + "'");
            }
            expect_punct(";");
        }
        return spec;
    }

  private:
    void shift() { cur_ = lexer_.next(); }

    void expect_punct(const std::string& p) {
        if (cur_.kind != Token::punct || cur_.text != p)
            parse_fail(errc::syntax_error, cur_, "expected '" + p + "'");
        shift();
    }

    void parse_char(InputSpec& spec) {
        if (p_declared_) parse_fail(errc::syntax_error, cur_, "char declared twice");
        if (cur_.kind != Token::integer)
            parse_fail(errc::syntax_error, cur_, "expected an integer after 'char'");
        unsigned long value = std::strtoul(cur_.text.c_str(), nullptr, 10);
        if (value > (1u << 30) || !is_prime_u32(uint32_t(value)))
            parse_fail(errc::invalid_characteristic, cur_,
                       "characteristic " + cur_.text + " is not prime");
        p_ = uint32_t(value);
        p_declared_ = true;
        shift();
        maybe_build_ring(spec);
    }

    static bool is_keyword(const std::string& word) {
        return word == "char" || word == "vars" || word == "rel" || word == "ideal";
    }

    void parse_vars(InputSpec& spec) {
        if (!vars_.empty()) parse_fail(errc::syntax_error, cur_, "vars declared twice");
        while (cur_.kind == Token::ident && !is_keyword(cur_.text)) {
            vars_.push_back(cur_.text);
            shift();
        }
        if (vars_.empty())
            parse_fail(errc::syntax_error, cur_, "expected variable names after 'vars'");
        maybe_build_ring(spec);
    }

    void maybe_build_ring(InputSpec& spec) {
        if (p_declared_ && !vars_.empty() && !spec.ring) spec.ring = make_ring(p_, vars_);
    }

    void require_ring(const InputSpec& spec) {
        if (!spec.ring)
            parse_fail(errc::syntax_error, cur_,
                       "'char' and 'vars' must appear before polynomials");
    }

    void parse_ideal(InputSpec& spec) {
        require_ring(spec);
        if (cur_.kind != Token::ident)
            parse_fail(errc::syntax_error, cur_, "expected an ideal name");
        std::string name = cur_.text;
        if (spec.find_ideal(name))
            parse_fail(errc::syntax_error, cur_, "ideal '" + name + "' declared twice");
        shift();
        expect_punct("=");
        std::vector<Polynomial> gens;
        gens.push_back(parse_poly(spec));
        while (cur_.kind == Token::punct && cur_.text == ",") {
            shift();
            gens.push_back(parse_poly(spec));
        }
        spec.ideals.emplace_back(std::move(name), std::move(gens));
    }

    // expr := term (('+'|'-') term)*
    Polynomial parse_poly(InputSpec& spec) {
        Polynomial out = parse_term(spec);
        while (cur_.kind == Token::punct && (cur_.text == "+" || cur_.text == "-")) {
            bool minus = cur_.text == "-";
            shift();
            Polynomial rhs = parse_term(spec);
            out = minus ? out - rhs : out + rhs;
        }
        return out;
    }

    // term := factor (('*' factor) | factor)*   -- juxtaposition multiplies
    Polynomial parse_term(InputSpec& spec) {
        Polynomial out = parse_factor(spec);
        while (true) {
            if (cur_.kind == Token::punct && cur_.text == "*") {
                shift();
                out = out * parse_factor(spec);
            } else if (cur_.kind == Token::ident || cur_.kind == Token::integer ||
                       (cur_.kind == Token::punct && cur_.text == "(")) {
                out = out * parse_factor(spec);
            } else {
                break;
            }
        }
        return out;
    }

    // factor := ('-')* primary ('^' INT)?
    Polynomial parse_factor(InputSpec& spec) {
        if (cur_.kind == Token::punct && cur_.text == "-") {
            shift();
            return -parse_factor(spec);
        }
        Polynomial base = parse_primary(spec);
        if (cur_.kind == Token::punct && cur_.text == "^") {
            shift();
            if (cur_.kind != Token::integer)
                parse_fail(errc::syntax_error, cur_, "expected an integer exponent");
            uint64_t e = std::strtoull(cur_.text.c_str(), nullptr, 10);
            shift();
            base = base.pow(e);
        }
        return base;
    }

    Polynomial parse_primary(InputSpec& spec) {
        if (cur_.kind == Token::integer) {
            int64_t v = int64_t(std::strtoull(cur_.text.c_str(), nullptr, 10) %
                                uint64_t(spec.ring->p));
            shift();
            return Polynomial::constant(spec.ring, v);
        }
        if (cur_.kind == Token::ident) {
            int idx = variable_index(spec.ring, cur_.text);
            if (idx < 0)
                parse_fail(errc::unknown_variable, cur_,
                           "unknown variable '" + cur_.text + "'");
            shift();
            return Polynomial::variable(spec.ring, idx);
        }
        if (cur_.kind == Token::punct && cur_.text == "(") {
            shift();
            Polynomial inner = parse_poly(spec);
            expect_punct(")");
            return inner;
        }
        parse_fail(errc::syntax_error, cur_, "expected a polynomial primary");
    }

    Lexer lexer_;
    Token cur_{};
    uint32_t p_ = 0;
    bool p_declared_ = false;
    std::vector<std::string> vars_;
};

}  // namespace

InputSpec parse_spec(const std::string& text) { return Parser(text).parse(); }

std::string polynomial_to_spec_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const Ring& ring = f.ring();
    std::string out;
    for (size_t k = 0; k < f.terms().size(); ++k) {
        const Term& t = f.terms()[k];
        if (k) out += " + ";
        bool printed = false;
        if (t.coeff != 1 || t.mono.is_one()) {
            out += std::to_string(t.coeff);
            printed = true;
        }
        for (int i = 0; i < t.mono.nvars(); ++i) {
            uint32_t e = t.mono.exponent(i);
            if (e == 0) continue;
            if (printed) out += "*";
            out += ring->vars[size_t(i)];
            if (e > 1) out += "^" + std::to_string(e);
            printed = true;
        }
    }
    return out;
}

std::string render_spec(const InputSpec& spec) {
    std::string out;
    if (spec.ring) {
        out += "char " + std::to_string(spec.ring->p) + ";\n";
        out += "vars";
        for (const auto& v : spec.ring->vars) out += " " + v;
        out += ";\n";
        for (const auto& r : spec.relations)
            out += "rel " + polynomial_to_spec_string(r) + ";\n";
        for (const auto& [name, gens] : spec.ideals) {
            out += "ideal " + name + " =";
            for (size_t i = 0; i < gens.size(); ++i) {
                out += (i ? ", " : " ") + polynomial_to_spec_string(gens[i]);
            }
            out += ";\n";
        }
    }
    return out;
}

}  // namespace hklab
