#include "mapparse.hpp"

#include <cctype>

namespace cremona {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void advance() {
        if (pos < text.size() && text[pos] == '\n') {
            ++line;
            col = 0;
        }
        ++pos;
        ++col;
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(uint8_t(text[pos]))) advance();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        advance();
        return true;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
    }
    bool eat_arrow() {
        skip_ws();
        if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
            advance();
            advance();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, line, col); }

    // identifier or empty
    std::string ident() {
        skip_ws();
        std::string s;
        while (pos < text.size() && (std::isalnum(uint8_t(text[pos])))) {
            s += text[pos];
            advance();
        }
        return s;
    }

    long integer() {
        skip_ws();
        bool neg = eat('-');
        if (!std::isdigit(uint8_t(peek()))) fail("expected an integer");
        long v = 0;
        while (pos < text.size() && std::isdigit(uint8_t(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) fail("integer literal out of range");
            advance();
        }
        return neg ? -v : v;
    }
};

struct ExprParser {
    Lexer& lx;
    VarSet vars;

    RationalFunction parse() {
        RationalFunction e = expr();
        lx.skip_ws();
        return e;
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        for (;;) {
            if (lx.eat('+')) {
                acc = acc + term();
            } else if (minus_ahead()) {
                lx.eat('-');
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    // '-' begins a new term unless it is the arrow "->"
    bool minus_ahead() {
        lx.skip_ws();
        return lx.pos < lx.text.size() && lx.text[lx.pos] == '-' &&
               !(lx.pos + 1 < lx.text.size() && lx.text[lx.pos + 1] == '>');
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        for (;;) {
            if (lx.eat('*')) {
                acc = acc * factor();
            } else if (lx.peek() == '/') {
                int l = lx.line, c = lx.col;
                lx.eat('/');
                RationalFunction d = factor();
                if (d.is_zero()) throw ParseError("zero denominator", l, c);
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction factor() {
        if (minus_ahead()) {
            lx.eat('-');
            return -factor();
        }
        if (lx.eat('+')) return factor();
        RationalFunction base = primary();
        if (lx.eat('^')) {
            int l = lx.line, c = lx.col;
            lx.skip_ws();
            if (!std::isdigit(uint8_t(lx.peek())) && lx.peek() != '-')
                throw ParseError("exponent must be an integer literal", l, c);
            long e = lx.integer();
            if (base.is_zero() && e < 0) throw ParseError("zero denominator", l, c);
            return base.pow(e);
        }
        return base;
    }

    RationalFunction primary() {
        char c = lx.peek();
        if (c == '(') {
            lx.eat('(');
            RationalFunction e = expr();
            lx.expect(')', "to close the parenthesis");
            return e;
        }
        if (std::isdigit(uint8_t(c))) {
            long v = lx.integer();
            return RationalFunction::constant(vars, GaussianRational(v));
        }
        if (std::isalpha(uint8_t(c))) {
            int l = lx.line, cc = lx.col;
            std::string name = lx.ident();
            if (name == "i") return RationalFunction::constant(vars, GaussianRational::i());
            for (int k = 0; k < var_count(vars); ++k)
                if (name == var_name(vars, k)) return RationalFunction::variable(vars, k);
            throw ParseError("unknown symbol '" + name + "'", l, cc);
        }
        lx.fail("expected a number, variable or parenthesized expression");
    }
};

std::vector<std::string> expect_lhs(Lexer& lx, char open, char sep, char close, int count) {
    lx.expect(open, "to open the coordinate list");
    std::vector<std::string> names;
    for (int k = 0; k < count; ++k) {
        if (k) lx.expect(sep, "between coordinates");
        names.push_back(lx.ident());
    }
    lx.expect(close, "to close the coordinate list");
    return names;
}

} // namespace

RationalFunction parse_expression(const std::string& text, VarSet vars) {
    Lexer lx(text);
    ExprParser p{lx, vars};
    RationalFunction e = p.parse();
    if (lx.peek() != '\0') lx.fail("unexpected trailing input");
    return e;
}

GaussianRational parse_exact_scalar(const std::string& text) {
    RationalFunction e = parse_expression(text, VarSet::X);
    if (!e.is_constant()) throw ParseError("expected a constant expression", 1, 1);
    return e.constant_value();
}

MapExpression parse_map(const std::string& text) {
    Lexer lx(text);
    MapExpression out;
    char c = lx.peek();
    if (c == '(') {
        auto names = expect_lhs(lx, '(', ',', ')', 2);
        if (names != std::vector<std::string>{"x", "y"})
            lx.fail("affine maps use the coordinates (x,y)");
        if (!lx.eat_arrow()) lx.fail("expected '->'");
        lx.expect('(', "before the image components");
        ExprParser p{lx, VarSet::XY};
        out.model = MapModel::Affine;
        out.components.push_back(p.expr());
        lx.expect(',', "between the image components");
        out.components.push_back(p.expr());
        lx.expect(')', "after the image components");
    } else if (c == '[') {
        // decide the model from the left-hand side separators
        std::size_t probe = lx.pos;
        bool biproj = false;
        for (; probe < lx.text.size() && lx.text[probe] != ']'; ++probe)
            if (lx.text[probe] == ';') biproj = true;
        if (!biproj) {
            auto names = expect_lhs(lx, '[', ':', ']', 3);
            if (names != std::vector<std::string>{"x0", "x1", "x2"})
                lx.fail("plane maps use the coordinates [x0:x1:x2]");
            if (!lx.eat_arrow()) lx.fail("expected '->'");
            lx.expect('[', "before the image components");
            ExprParser p{lx, VarSet::P2};
            out.model = MapModel::Proj2;
            for (int k = 0; k < 3; ++k) {
                if (k) lx.expect(':', "between the image components");
                out.components.push_back(p.expr());
            }
            lx.expect(']', "after the image components");
        } else {
            lx.expect('[', "to open the coordinate list");
            std::vector<std::string> names;
            names.push_back(lx.ident());
            lx.expect(':', "between coordinates");
            names.push_back(lx.ident());
            lx.expect(';', "between the factor coordinates");
            names.push_back(lx.ident());
            lx.expect(':', "between coordinates");
            names.push_back(lx.ident());
            lx.expect(']', "to close the coordinate list");
            if (names != std::vector<std::string>{"x0", "x1", "y0", "y1"})
                lx.fail("biprojective maps use the coordinates [x0:x1;y0:y1]");
            if (!lx.eat_arrow()) lx.fail("expected '->'");
            lx.expect('[', "before the image components");
            ExprParser p{lx, VarSet::BIPROJ};
            out.model = MapModel::BiProj;
            out.components.push_back(p.expr());
            lx.expect(':', "between the image components");
            out.components.push_back(p.expr());
            lx.expect(';', "between the factor components");
            out.components.push_back(p.expr());
            lx.expect(':', "between the image components");
            out.components.push_back(p.expr());
            lx.expect(']', "after the image components");
        }
    } else {
        lx.fail("a map starts with '(' or '['");
    }
    if (lx.peek() != '\0') lx.fail("unexpected trailing input");
    return out;
}

std::string MapExpression::printed() const {
    switch (model) {
        case MapModel::Affine:
            return "(x,y) -> (" + components[0].str() + ", " + components[1].str() + ")";
        case MapModel::Proj2:
            return "[x0:x1:x2] -> [" + components[0].str() + " : " + components[1].str() + " : " +
                   components[2].str() + "]";
        case MapModel::BiProj:
            return "[x0:x1;y0:y1] -> [" + components[0].str() + " : " + components[1].str() + " ; " +
                   components[2].str() + " : " + components[3].str() + "]";
    }
    return {};
}

namespace {

// Clear denominators across components and saturate.
std::vector<Poly> clear_components(const std::vector<RationalFunction>& cs) {
    Poly common = Poly::constant(cs[0].vars(), GaussianRational(1));
    for (auto& c : cs) common = common * c.den();
    std::vector<Poly> out;
    for (auto& c : cs) out.push_back(c.num() * *poly_divide_exact(common, c.den()));
    return out;
}

} // namespace

CremonaMap to_cremona_map(const MapExpression& m) {
    if (m.model == MapModel::Affine) return affine_to_cremona(m.components[0], m.components[1]);
    if (m.model != MapModel::Proj2) throw std::domain_error("not a plane map");
    auto cleared = clear_components(m.components);
    return CremonaMap::saturated(cleared[0], cleared[1], cleared[2]);
}

std::optional<JonquieresElement> to_jonquieres(const MapExpression& m) {
    if (m.model != MapModel::Affine) return std::nullopt;
    const RationalFunction& fx = m.components[0];
    const RationalFunction& fy = m.components[1];
    if (fx.num().degree_in(1) > 0 || fx.den().degree_in(1) > 0) return std::nullopt;
    if (fx.num().degree_in(0) > 1 || fx.den().degree_in(0) > 1) return std::nullopt;
    if (fy.num().degree_in(1) > 1 || fy.den().degree_in(1) > 1) return std::nullopt;

    auto coeff = [](const Poly& p, int ydeg) { // XY-poly -> poly in x
        std::vector<Term> ts;
        for (auto& t : p.terms())
            if (int(t.e[1]) == ydeg) ts.push_back({Exp{t.e[0], 0, 0, 0}, t.c});
        return Poly::from_terms(VarSet::X, std::move(ts));
    };
    auto scalar = [](const Poly& p, int xdeg) {
        for (auto& t : p.terms())
            if (int(t.e[0]) == xdeg) return t.c;
        return GaussianRational(0);
    };
    try {
        Moebius2 eta(scalar(fx.num(), 1), scalar(fx.num(), 0), scalar(fx.den(), 1),
                     scalar(fx.den(), 0));
        JonquieresElement j(eta, {coeff(fy.num(), 1), coeff(fy.num(), 0), coeff(fy.den(), 1),
                                  coeff(fy.den(), 0)});
        return j;
    } catch (const std::domain_error&) {
        return std::nullopt; // degenerate base or fiber
    }
}

P1xP1Map to_p1xp1_map(const MapExpression& m) {
    if (m.model != MapModel::BiProj) throw std::domain_error("not a biprojective map");
    auto cleared = clear_components(m.components);
    return P1xP1Map::saturated_pairs(cleared[0], cleared[1], cleared[2], cleared[3]);
}

std::complex<double> parse_complex(const std::string& text) {
    // [+-] num ['i'] ([+-] num ['i'])?   with "i" alone meaning 1i
    std::size_t p = 0;
    auto skip = [&] { while (p < text.size() && std::isspace(uint8_t(text[p]))) ++p; };
    auto part = [&](bool& img) -> double {
        skip();
        double sign = 1;
        while (p < text.size() && (text[p] == '+' || text[p] == '-')) {
            if (text[p] == '-') sign = -sign;
            ++p;
            skip();
        }
        double v;
        if (p < text.size() && (text[p] == 'i' || text[p] == 'I')) {
            ++p;
            img = true;
            return sign;
        }
        std::size_t used = 0;
        try {
            v = std::stod(text.substr(p), &used);
        } catch (...) {
            throw std::invalid_argument("bad complex literal: " + text);
        }
        p += used;
        skip();
        img = false;
        if (p < text.size() && (text[p] == 'i' || text[p] == 'I')) {
            ++p;
            img = true;
        }
        return sign * v;
    };
    double re = 0, im = 0;
    bool img = false;
    double v = part(img);
    (img ? im : re) = v;
    skip();
    if (p < text.size()) {
        double w = part(img);
        (img ? im : re) += w;
    }
    skip();
    if (p != text.size()) throw std::invalid_argument("bad complex literal: " + text);
    return {re, im};
}

} // namespace cremona
