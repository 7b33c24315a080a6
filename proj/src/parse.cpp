#include "orbicheck/parse.hpp"

#include <cctype>

namespace orbicheck {

namespace {

struct Lexer {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

struct Parser {
    Lexer lx;
    const Ring& ring;

    Polynomial parse_expr() {
        bool neg = false;
        if (lx.accept('-')) neg = true;
        else lx.accept('+');
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            if (lx.accept('+')) acc += parse_term();
            else if (lx.accept('-')) acc -= parse_term();
            else break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (lx.accept('*')) acc *= parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (lx.accept('^')) {
            uint32_t e = parse_nat("exponent");
            return base.pow(e);
        }
        return base;
    }

    Polynomial parse_atom() {
        char c = lx.peek();
        if (c == '(') {
            ++lx.pos;
            Polynomial inner = parse_expr();
            if (!lx.accept(')')) throw ParseError("expected ')'", lx.pos);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
        throw ParseError("expected a number, variable or '('", lx.pos);
    }

    Polynomial parse_number() {
        Integer num = parse_int("number");
        // '/' continues the literal only when digits follow: "3/4" is a
        // rational constant, but generic division is not part of the grammar.
        size_t save = lx.pos;
        if (lx.accept('/')) {
            if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
                Integer den = parse_int("denominator");
                if (den == 0) throw ParseError("zero denominator", save);
                return Polynomial::constant(make_rational(num, den));
            }
            throw ParseError("expected digits after '/'", lx.pos);
        }
        return Polynomial::constant(Rational(num));
    }

    Polynomial parse_variable() {
        size_t start = lx.pos;
        std::string name;
        while (lx.pos < lx.text.size() &&
               std::isalnum(static_cast<unsigned char>(lx.text[lx.pos])))
            name += lx.text[lx.pos++];
        auto idx = ring.find(name);
        if (!idx) throw UnknownVariableError(name, start);
        return Polynomial::variable(*idx);
    }

    Integer parse_int(const char* what) {
        lx.skip_ws();
        size_t start = lx.pos;
        std::string digits;
        while (lx.pos < lx.text.size() &&
               std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
            digits += lx.text[lx.pos++];
        if (digits.empty())
            throw ParseError(std::string("expected ") + what, start);
        return Integer(digits);
    }

    uint32_t parse_nat(const char* what) {
        Integer v = parse_int(what);
        if (v < 0 || v > INT32_MAX) throw OverflowError("exponent out of range");
        return uint32_t(v.get_ui());
    }
};

} // namespace

Polynomial parse_poly(std::string_view text, const Ring& ring) {
    Parser p{Lexer{text}, ring};
    Polynomial out = p.parse_expr();
    if (!p.lx.done())
        throw ParseError("unexpected trailing input", p.lx.pos);
    return out;
}

std::string print_poly(const Polynomial& p, const Ring& ring) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                out += '-';
                c = -c;
            }
        } else {
            out += c < 0 ? '-' : '+';
            if (c < 0) c = -c;
        }
        first = false;
        std::string vars;
        for (size_t i = 0; i < t.mono.width(); ++i) {
            int32_t e = t.mono.exp(VarIdx(i));
            if (e == 0) continue;
            if (i >= ring.size()) throw DomainError("monomial wider than ring");
            if (!vars.empty()) vars += '*';
            vars += ring.name(VarIdx(i));
            if (e > 1) vars += '^' + std::to_string(e);
        }
        if (vars.empty()) {
            out += to_string(c);
        } else if (c == 1) {
            out += vars;
        } else {
            out += to_string(c) + '*' + vars;
        }
    }
    return out;
}

std::vector<std::string> scan_variables(std::string_view text) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (i < text.size() &&
                   std::isalnum(static_cast<unsigned char>(text[i])))
                name += text[i++];
            bool seen = false;
            for (const auto& n : out) seen |= (n == name);
            if (!seen) out.push_back(name);
        } else {
            ++i;
        }
    }
    return out;
}

} // namespace orbicheck
