#include "chowpoly/parser.hpp"

#include <cctype>

namespace chowpoly {

namespace {

Rat rat_of(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

struct Frac {
    MultiPoly num{Rat(1)};
    MultiPoly den{Rat(1)};
};

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    char peek_raw(std::size_t ahead = 0) const {
        return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
    }

    bool try_consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    bool try_consume(const std::string& word) {
        skip_ws();
        if (s_.compare(pos_, word.size(), word) != 0) return false;
        pos_ += word.size();
        return true;
    }

    void expect(char c, const std::string& what) {
        if (!try_consume(c)) fail("expected '" + std::string(1, c) + "' in " + what);
    }

    // division sign that is not the start of the wedge operator /\ .
    bool try_divide() {
        if (peek() != '/') return false;
        if (peek_raw(1) == '\\') return false;
        ++pos_;
        return true;
    }

    bool try_wedge_op() { return try_consume("/\\"); }

    std::size_t save() const { return pos_; }
    void restore(std::size_t p) { pos_ = p; }

    [[noreturn]] void fail(const std::string& msg) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

    Int lex_int() {
        skip_ws();
        if (!at_digit()) fail("expected an integer");
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        return Int(digits);
    }

    std::string lex_ident() {
        skip_ws();
        char c = peek_raw();
        if (!(c >= 'a' && c <= 'z')) fail("expected an identifier");
        std::string name;
        while (pos_ < s_.size()) {
            c = s_[pos_];
            if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')
                name += s_[pos_++];
            else
                break;
        }
        return name;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

Frac frac_mul(const Frac& a, const Frac& b) {
    return {a.num * b.num, a.den * b.den};
}

Frac frac_div(Cursor& cur, const Frac& a, const Frac& b) {
    if (b.num.is_zero()) cur.fail("division by zero");
    return {a.num * b.den, a.den * b.num};
}

Frac frac_add(const Frac& a, const Frac& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

Frac frac_neg(const Frac& a) { return {-a.num, a.den}; }

Frac frac_pow(Cursor& cur, const Frac& a, int e) {
    if (e >= 0) return {a.num.pow(e), a.den.pow(e)};
    if (a.num.is_zero()) cur.fail("division by zero");
    return {a.den.pow(-e), a.num.pow(-e)};
}

Frac parse_expr(Cursor& cur);

Frac parse_primary(Cursor& cur) {
    if (cur.try_consume('(')) {
        Frac f = parse_expr(cur);
        cur.expect(')', "parenthesized expression");
        return f;
    }
    if (cur.at_digit()) return {MultiPoly{Rat(cur.lex_int())}, MultiPoly{Rat(1)}};
    char c = cur.peek();
    if (c >= 'a' && c <= 'z')
        return {MultiPoly::variable(cur.lex_ident()), MultiPoly{Rat(1)}};
    cur.fail("expected a number, variable, or parenthesized expression");
}

int parse_exponent(Cursor& cur) {
    bool neg = cur.try_consume('-');
    Int e = cur.lex_int();
    if (!e.fits_sint_p()) cur.fail("exponent too large");
    int v = int(e.get_si());
    return neg ? -v : v;
}

Frac parse_power(Cursor& cur) {
    Frac base = parse_primary(cur);
    if (cur.try_consume('^')) return frac_pow(cur, base, parse_exponent(cur));
    return base;
}

Frac parse_factor(Cursor& cur) {
    if (cur.try_consume('-')) return frac_neg(parse_factor(cur));
    return parse_power(cur);
}

Frac parse_term(Cursor& cur) {
    Frac f = parse_factor(cur);
    for (;;) {
        if (cur.try_consume('*')) {
            f = frac_mul(f, parse_factor(cur));
        } else if (cur.try_divide()) {
            f = frac_div(cur, f, parse_factor(cur));
        } else {
            return f;
        }
    }
}

Frac parse_expr(Cursor& cur) {
    Frac f = parse_term(cur);
    for (;;) {
        if (cur.try_consume('+')) {
            f = frac_add(f, parse_term(cur));
        } else if (cur.peek() == '-') {
            cur.try_consume('-');
            f = frac_add(f, frac_neg(parse_term(cur)));
        } else {
            return f;
        }
    }
}

FactoredRational to_factored(Cursor& cur, const Frac& f) {
    if (f.den.is_zero()) cur.fail("zero denominator");
    if (f.num.is_zero()) cur.fail("expression is zero");
    return factor_fraction(f.num, f.den);
}

// optional "c*" coefficient directly before "(" at the start of a sum term
std::optional<Rat> try_coefficient(Cursor& cur) {
    std::size_t mark = cur.save();
    if (!cur.at_digit()) return std::nullopt;
    Int num = cur.lex_int();
    Int den = 1;
    if (cur.try_divide()) {
        if (!cur.at_digit()) {
            cur.restore(mark);
            return std::nullopt;
        }
        den = cur.lex_int();
    }
    if (!cur.try_consume('*') || cur.peek() != '(') {
        cur.restore(mark);
        return std::nullopt;
    }
    return rat_of(num, den);
}

// a slot is a product of powers; sums need parentheses so that +/- stays
// free for separating wedge monomials
FactoredRational parse_slot(Cursor& cur) {
    bool neg = false;
    while (cur.peek() == '-') {
        cur.try_consume('-');
        neg = !neg;
    }
    Frac f = parse_term(cur);
    if (neg) f = frac_neg(f);
    return to_factored(cur, f);
}

WedgeElement parse_wedge_sum(Cursor& cur) {
    WedgeElement out(0);
    bool first = true;
    Rat sign(1);
    if (cur.try_consume('-')) sign = -1;
    for (;;) {
        Rat coeff = sign;
        if (auto c = try_coefficient(cur)) coeff *= *c;
        std::vector<FactoredRational> slots{parse_slot(cur)};
        while (cur.try_wedge_op()) slots.push_back(parse_slot(cur));
        if (first) {
            out = WedgeElement(int(slots.size()));
            first = false;
        } else if (int(slots.size()) != out.arity()) {
            cur.fail("wedge arity mismatch between terms");
        }
        out = out + wedge_of(slots) * coeff;
        if (cur.try_consume('+')) {
            sign = 1;
        } else if (cur.peek() == '-') {
            cur.try_consume('-');
            sign = -1;
        } else {
            return out;
        }
    }
}

Cycle parse_cycle_body(Cursor& cur) {
    cur.expect('[', "cycle");
    cur.expect('[', "cycle variable list");
    std::vector<std::string> vars;
    if (cur.peek() != ']') {
        vars.push_back(cur.lex_ident());
        while (cur.try_consume(',')) vars.push_back(cur.lex_ident());
    }
    cur.expect(']', "cycle variable list");
    cur.expect(',', "cycle");
    WedgeElement w = parse_wedge_sum(cur);
    cur.expect(']', "cycle");
    int n = w.arity(), p = int(vars.size());
    int m = n - p, j = n - 2 * p;
    if (m < 1 || j < 0) cur.fail("cycle arity does not fit p = m - j, n = 2m - j");
    try {
        return Cycle::make(std::move(vars), std::move(w), m, j);
    } catch (const std::domain_error& e) {
        cur.fail(e.what());
    }
}

PPoint parse_point(Cursor& cur) {
    if (cur.try_consume("INF")) return PPoint::inf();
    Frac f = parse_expr(cur);
    if (f.den.is_zero()) cur.fail("zero denominator");
    if (f.num.is_zero()) return PPoint::zero();
    return PPoint::of(factor_fraction(f.num, f.den));
}

LiSymbol parse_li_sum(Cursor& cur) {
    LiSymbol out(2);
    bool first = true;
    Rat sign(1);
    if (cur.try_consume('-')) sign = -1;
    for (;;) {
        // coefficient and weight: "W{", "A*W{" or "A/B*W{"
        Rat coeff = sign;
        Int a = cur.lex_int();
        int weight;
        if (cur.peek() == '{') {
            weight = int(a.get_si());
        } else {
            Int b = 1;
            if (cur.try_divide()) b = cur.lex_int();
            coeff *= rat_of(a, b);
            cur.expect('*', "Li-symbol coefficient");
            Int w = cur.lex_int();
            weight = int(w.get_si());
        }
        if (weight < 2) cur.fail("Li-symbol weight must be >= 2");
        cur.expect('{', "Li symbol");
        PPoint p = parse_point(cur);
        cur.expect('}', "Li symbol");
        if (first) {
            out = LiSymbol(weight);
            first = false;
        } else if (weight != out.weight()) {
            cur.fail("Li-symbol weight mismatch between terms");
        }
        out.add(coeff, p);
        if (cur.try_consume('+')) {
            sign = 1;
        } else if (cur.peek() == '-') {
            cur.try_consume('-');
            sign = -1;
        } else {
            return out;
        }
    }
}

void require_end(Cursor& cur) {
    if (!cur.at_end()) cur.fail("unexpected trailing input");
}

}  // namespace

FactoredRational parse_rational(const std::string& text) {
    Cursor cur(text);
    Frac f = parse_expr(cur);
    require_end(cur);
    return to_factored(cur, f);
}

WedgeElement parse_wedge(const std::string& text) {
    Cursor cur(text);
    WedgeElement w = parse_wedge_sum(cur);
    require_end(cur);
    return w;
}

Cycle parse_cycle(const std::string& text) {
    Cursor cur(text);
    Cycle c = parse_cycle_body(cur);
    require_end(cur);
    return c;
}

CycleSum parse_cycle_sum(const std::string& text) {
    Cursor cur(text);
    std::optional<CycleSum> out;
    Rat sign(1);
    if (cur.try_consume('-')) sign = -1;
    for (;;) {
        Rat coeff = sign;
        if (cur.at_digit()) {
            Int num = cur.lex_int();
            Int den = 1;
            if (cur.try_divide()) den = cur.lex_int();
            cur.expect('*', "cycle coefficient");
            coeff *= rat_of(num, den);
        }
        Cycle c = parse_cycle_body(cur);
        if (!out) out.emplace(c.weight, c.degree);
        try {
            out->add(coeff, std::move(c));
        } catch (const std::domain_error& e) {
            cur.fail(e.what());
        }
        if (cur.try_consume('+')) {
            sign = 1;
        } else if (cur.peek() == '-') {
            cur.try_consume('-');
            sign = -1;
        } else {
            require_end(cur);
            return *out;
        }
    }
}

LiSymbol parse_li(const std::string& text) {
    Cursor cur(text);
    LiSymbol s = parse_li_sum(cur);
    require_end(cur);
    return s;
}

PPoint parse_ppoint(const std::string& text) {
    Cursor cur(text);
    PPoint p = parse_point(cur);
    require_end(cur);
    return p;
}

Parsed parse_expression(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '[') return parse_cycle(text);
    if (text.find('{') != std::string::npos) return parse_li(text);
    if (text.find("/\\") != std::string::npos) return parse_wedge(text);
    return parse_rational(text);
}

}  // namespace chowpoly
