#include "arrangetop/scalar_io.hpp"

#include <cctype>
#include <sstream>

namespace arrangetop {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line;

    Lexer(const std::string& text, int line_no) : s(text), line(line_no) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, static_cast<int>(pos) + 1, msg); }

    Integer integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return Integer(s.substr(start, pos - start));
    }
};

struct Parser {
    Lexer lex;
    long conductor;

    Parser(const std::string& text, long n, int line_no) : lex(text, line_no), conductor(n) {}

    CycNumber parse() {
        CycNumber v = expr();
        if (!lex.eof()) lex.fail("trailing input");
        return v;
    }

    CycNumber expr() {
        CycNumber v = term();
        for (;;) {
            if (lex.accept('+')) {
                v += term();
            } else if (lex.accept('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    CycNumber term() {
        CycNumber v = factor();
        while (lex.accept('*')) v *= factor();
        return v;
    }

    CycNumber factor() {
        if (lex.accept('-')) return -factor();
        CycNumber base = atom();
        if (lex.accept('^')) {
            bool neg = lex.accept('-');
            Integer e = lex.integer();
            if (!e.fits_slong_p()) lex.fail("exponent too large");
            long exp = e.get_si();
            return base.pow(neg ? -exp : exp);
        }
        return base;
    }

    CycNumber atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.accept('(');
            CycNumber v = expr();
            if (!lex.accept(')')) lex.fail("expected ')'");
            return v;
        }
        if (c == 'z') {
            lex.accept('z');
            return CycNumber::zeta(conductor);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = lex.integer();
            if (lex.accept('/')) {
                Integer den = lex.integer();
                if (den == 0) lex.fail("zero denominator");
                Rational q(num, den);
                q.canonicalize();
                return CycNumber(q);
            }
            return CycNumber(Rational(num));
        }
        lex.fail("expected a number, 'z', or '('");
    }
};

std::string render_rational(const Rational& q) { return q.get_str(); }

// One monomial coefficient in z; wrapped in parentheses by the caller when
// it has more than one term in the middle of a product.
struct ScalarText {
    std::string text;
    bool needs_parens; // more than one term, or a leading minus
};

ScalarText scalar_text(const CycNumber& a) {
    if (a.is_zero()) return {"0", false};
    std::ostringstream out;
    int terms = 0;
    const auto& c = a.coeffs();
    for (size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        Rational q = c[k];
        if (terms == 0) {
            if (q < 0) {
                out << "-";
                q = -q;
            }
        } else {
            out << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        bool unit = (q == 1);
        if (k == 0) {
            out << render_rational(q);
        } else {
            if (!unit) out << render_rational(q) << "*";
            out << "z";
            if (k > 1) out << "^" << k;
        }
        ++terms;
    }
    std::string text = out.str();
    return {text, terms > 1 || text[0] == '-'};
}

} // namespace

CycNumber parse_scalar(const std::string& text, long conductor, int line_no) {
    Parser p(text, conductor, line_no);
    return p.parse();
}

std::string render_scalar(const CycNumber& a) { return scalar_text(a).text; }

std::string render_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    const auto& vars = p.variables();
    std::ostringstream out;
    int terms = 0;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        CycNumber coeff = c;
        bool constant_term = true;
        for (unsigned k : e)
            if (k > 0) constant_term = false;

        // pull a rational sign out front when the coefficient is rational
        std::string sep = " + ";
        if (coeff.is_rational() && coeff.rational_value() < 0) {
            sep = " - ";
            coeff = -coeff;
        }
        if (terms == 0) {
            if (sep == " - ") out << "-";
        } else {
            out << sep;
        }

        ScalarText st = scalar_text(coeff);
        if (constant_term) {
            out << st.text;
        } else {
            bool unit = (coeff == CycNumber(1));
            bool printed = false;
            if (!unit) {
                out << (st.needs_parens ? "(" + st.text + ")" : st.text);
                printed = true;
            }
            for (size_t i = 0; i < vars.size(); ++i) {
                if (e[i] == 0) continue;
                if (printed) out << "*";
                out << vars[i];
                if (e[i] > 1) out << "^" << e[i];
                printed = true;
            }
        }
        ++terms;
    }
    return out.str();
}

} // namespace arrangetop
