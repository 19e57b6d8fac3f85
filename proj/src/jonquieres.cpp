#include "jonquieres.hpp"

namespace cremona {

namespace {

const Poly& one_x() {
    static const Poly p = Poly::constant(VarSet::X, GaussianRational(1));
    return p;
}

// (a x + b)^k (c x + d)^(m-k) expansion table shared by one clearing pass.
struct MobiusPowers {
    std::vector<Poly> num_pow, den_pow;
    MobiusPowers(const Moebius2& eta, long m) {
        Poly n = Poly::variable(VarSet::X, 0).scaled(eta.m[0]) + Poly::constant(VarSet::X, eta.m[1]);
        Poly d = Poly::variable(VarSet::X, 0).scaled(eta.m[2]) + Poly::constant(VarSet::X, eta.m[3]);
        num_pow.push_back(one_x());
        den_pow.push_back(one_x());
        for (long i = 1; i <= m; ++i) {
            num_pow.push_back(num_pow.back() * n);
            den_pow.push_back(den_pow.back() * d);
        }
    }
    // p((ax+b)/(cx+d)) cleared by (cx+d)^m.
    Poly cleared(const Poly& p, long m) const {
        Poly acc = Poly::zero(VarSet::X);
        for (auto& t : p.terms()) acc += (num_pow[t.e[0]] * den_pow[m - t.e[0]]).scaled(t.c);
        return acc;
    }
};

} // namespace

Moebius2::Moebius2(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d)
    : m{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if ((m[0] * m[3] - m[1] * m[2]).is_zero()) throw std::domain_error("degenerate Moebius matrix");
    for (auto& e : m) {
        if (!e.is_zero()) {
            GaussianRational inv = e.inverse();
            for (auto& f : m) f *= inv;
            break;
        }
    }
}

bool Moebius2::is_identity() const {
    return m[0].is_one() && m[1].is_zero() && m[2].is_zero() && m[3].is_one();
}

Moebius2 operator*(const Moebius2& f, const Moebius2& g) {
    return Moebius2(f.m[0] * g.m[0] + f.m[1] * g.m[2], f.m[0] * g.m[1] + f.m[1] * g.m[3],
                    f.m[2] * g.m[0] + f.m[3] * g.m[2], f.m[2] * g.m[1] + f.m[3] * g.m[3]);
}

RationalFunction Moebius2::apply(const RationalFunction& f) const {
    RationalFunction a = RationalFunction::constant(f.vars(), m[0]);
    RationalFunction b = RationalFunction::constant(f.vars(), m[1]);
    RationalFunction c = RationalFunction::constant(f.vars(), m[2]);
    RationalFunction d = RationalFunction::constant(f.vars(), m[3]);
    return (a * f + b) / (c * f + d);
}

std::optional<GaussianRational> Moebius2::apply(const GaussianRational& x) const {
    GaussianRational den = m[2] * x + m[3];
    if (den.is_zero()) return std::nullopt;
    return (m[0] * x + m[1]) / den;
}

JonquieresElement::JonquieresElement(Moebius2 eta, std::array<Poly, 4> fiber)
    : eta_(std::move(eta)), fiber_(std::move(fiber)) {
    for (auto& e : fiber_)
        if (e.vars() != VarSet::X) throw std::logic_error("fiber entries must be polynomials in x");
    normalize_fiber();
}

void JonquieresElement::normalize_fiber() {
    Poly det = fiber_[0] * fiber_[3] - fiber_[1] * fiber_[2];
    if (det.is_zero()) throw std::domain_error("degenerate fiber matrix");
    Poly g = Poly::zero(VarSet::X);
    for (auto& e : fiber_) {
        if (e.is_zero()) continue;
        g = g.is_zero() ? e : poly_gcd(g, e);
        if (g.is_constant()) break;
    }
    if (!g.is_constant())
        for (auto& e : fiber_) e = e.is_zero() ? e : *poly_divide_exact(e, g);
    for (auto& e : fiber_) {
        if (e.is_zero()) continue;
        GaussianRational inv = e.leading_term().c.inverse();
        for (auto& f : fiber_) f = f.scaled(inv);
        break;
    }
}

JonquieresElement JonquieresElement::from_rational_fiber(Moebius2 eta,
                                                         const std::array<RationalFunction, 4>& fiber) {
    Poly common = one_x();
    for (auto& e : fiber) common = common * e.den();
    std::array<Poly, 4> cleared;
    for (int i = 0; i < 4; ++i) cleared[i] = fiber[i].num() * *poly_divide_exact(common, fiber[i].den());
    return JonquieresElement(std::move(eta), std::move(cleared));
}

JonquieresElement JonquieresElement::diagonal(const GaussianRational& alpha, const GaussianRational& beta) {
    if (alpha.is_zero() || beta.is_zero()) throw std::domain_error("degenerate diagonal map");
    return JonquieresElement(Moebius2::scaling(alpha),
                             {Poly::constant(VarSet::X, beta), Poly::zero(VarSet::X),
                              Poly::zero(VarSet::X), one_x()});
}

JonquieresElement JonquieresElement::translation(const GaussianRational& a, const GaussianRational& b) {
    return JonquieresElement(Moebius2::translation(a),
                             {one_x(), Poly::constant(VarSet::X, b), Poly::zero(VarSet::X), one_x()});
}

bool JonquieresElement::is_identity() const {
    return eta_.is_identity() && fiber_[0] == one_x() && fiber_[1].is_zero() && fiber_[2].is_zero() &&
           fiber_[3] == one_x();
}

long JonquieresElement::fiber_x_degree() const {
    long d = 0;
    for (auto& e : fiber_) d = std::max(d, e.total_degree());
    return d;
}

JonquieresElement JonquieresElement::inverse() const {
    Moebius2 eta_inv = eta_.inverse();
    // adj(M) evaluated at eta^{-1}(x)
    std::array<Poly, 4> adj = {fiber_[3], -fiber_[1], -fiber_[2], fiber_[0]};
    long m = 0;
    for (auto& e : adj) m = std::max(m, e.total_degree());
    MobiusPowers pows(eta_inv, m);
    std::array<Poly, 4> entries;
    for (int i = 0; i < 4; ++i) entries[i] = pows.cleared(adj[i], m);
    return JonquieresElement(eta_inv, std::move(entries));
}

std::optional<std::pair<GaussianRational, GaussianRational>>
JonquieresElement::apply(const GaussianRational& x, const GaussianRational& y) const {
    auto xi = eta_.apply(x);
    if (!xi) return std::nullopt;
    std::vector<GaussianRational> at{x};
    GaussianRational num = fiber_[0].eval(at) * y + fiber_[1].eval(at);
    GaussianRational den = fiber_[2].eval(at) * y + fiber_[3].eval(at);
    if (den.is_zero()) return std::nullopt;
    return std::make_pair(*xi, num / den);
}

std::string JonquieresElement::str() const {
    auto rf = [](const Poly& n, const char* mul) {
        if (n.is_zero()) return std::string();
        std::string s = n.term_count() > 1 ? "(" + n.str() + ")" : n.str();
        return s + mul;
    };
    std::string base = "(" + eta_.m[0].str() + "*x+" + eta_.m[1].str() + ")/(" + eta_.m[2].str() + "*x+" +
                       eta_.m[3].str() + ")";
    std::string num = rf(fiber_[0], "*y");
    if (!fiber_[1].is_zero()) num += (num.empty() ? "" : " + ") + fiber_[1].str();
    std::string den = rf(fiber_[2], "*y");
    if (!fiber_[3].is_zero()) den += (den.empty() ? "" : " + ") + fiber_[3].str();
    return "(x,y) -> (" + base + ", (" + num + ")/(" + den + "))";
}

JonquieresElement jonquieres_compose(const JonquieresElement& f, const JonquieresElement& g) {
    Moebius2 eta = f.eta() * g.eta();
    long m = 0;
    for (auto& e : f.fiber()) m = std::max(m, e.total_degree());
    MobiusPowers pows(g.eta(), m);
    std::array<Poly, 4> fe;
    for (int i = 0; i < 4; ++i) fe[i] = pows.cleared(f.fiber()[i], m);
    // matrix product fe * g.fiber
    const std::array<Poly, 4>& ge = g.fiber();
    std::array<Poly, 4> prod = {fe[0] * ge[0] + fe[1] * ge[2], fe[0] * ge[1] + fe[1] * ge[3],
                                fe[2] * ge[0] + fe[3] * ge[2], fe[2] * ge[1] + fe[3] * ge[3]};
    return JonquieresElement(std::move(eta), std::move(prod));
}

P1xP1Map::P1xP1Map(Poly f0, Poly f1, Poly g0, Poly g1) : comp_{std::move(f0), std::move(f1), std::move(g0), std::move(g1)} {
    for (int pair = 0; pair < 2; ++pair) {
        const Poly& a = comp_[2 * pair];
        const Poly& b = comp_[2 * pair + 1];
        if (a.vars() != VarSet::BIPROJ || b.vars() != VarSet::BIPROJ)
            throw std::logic_error("components must live in x0,x1,y0,y1");
        if (a.is_zero() && b.is_zero()) throw std::domain_error("zero coordinate pair");
        auto da = a.bidegree(), db = b.bidegree();
        if (!da || !db) throw std::domain_error("component is not bihomogeneous");
        if (!a.is_zero() && !b.is_zero() && *da != *db)
            throw std::domain_error("coordinate pair has mixed bidegrees");
        if (!a.is_zero() && !b.is_zero() && !poly_gcd(a, b).is_constant())
            throw std::domain_error("coordinate pair is not saturated");
    }
}

P1xP1Map P1xP1Map::saturated_pairs(Poly f0, Poly f1, Poly g0, Poly g1) {
    auto reduce = [](Poly& a, Poly& b) {
        if (a.is_zero() || b.is_zero()) return;
        Poly g = poly_gcd(a, b);
        if (!g.is_constant()) {
            a = *poly_divide_exact(a, g);
            b = *poly_divide_exact(b, g);
        }
    };
    reduce(f0, f1);
    reduce(g0, g1);
    return P1xP1Map(std::move(f0), std::move(f1), std::move(g0), std::move(g1));
}

P1xP1Map P1xP1Map::identity() {
    return P1xP1Map(Poly::variable(VarSet::BIPROJ, 0), Poly::variable(VarSet::BIPROJ, 1),
                    Poly::variable(VarSet::BIPROJ, 2), Poly::variable(VarSet::BIPROJ, 3));
}

long P1xP1Map::degree() const {
    auto [ax, ay] = first_bidegree();
    auto [bx, by] = second_bidegree();
    return ax + ay + bx + by;
}

bool operator==(const P1xP1Map& a, const P1xP1Map& b) {
    auto pair_eq = [](const Poly& a0, const Poly& a1, const Poly& b0, const Poly& b1) {
        const Poly& ra = a0.is_zero() ? a1 : a0;
        const Poly& rb = b0.is_zero() ? b1 : b0;
        if (a0.is_zero() != b0.is_zero()) return false;
        GaussianRational s = rb.leading_term().c / ra.leading_term().c;
        return a0.scaled(s) == b0 && a1.scaled(s) == b1;
    };
    return pair_eq(a.comp_[0], a.comp_[1], b.comp_[0], b.comp_[1]) &&
           pair_eq(a.comp_[2], a.comp_[3], b.comp_[2], b.comp_[3]);
}

std::string P1xP1Map::str() const {
    return "[" + comp_[0].str() + " : " + comp_[1].str() + " ; " + comp_[2].str() + " : " + comp_[3].str() +
           "]";
}

P1xP1Map compose(const P1xP1Map& f, const P1xP1Map& g) {
    std::vector<Poly> args(g.components().begin(), g.components().end());
    std::array<Poly, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = substitute_poly(f.components()[i], args);
    return P1xP1Map::saturated_pairs(std::move(c[0]), std::move(c[1]), std::move(c[2]), std::move(c[3]));
}

namespace {

// x^k -> x0^k x1^(m-k)
Poly homogenize_x(const Poly& p, long m) {
    std::vector<Term> ts;
    ts.reserve(p.term_count());
    for (auto& t : p.terms()) {
        if (t.e[0] > m) throw std::logic_error("degree too small to homogenize");
        ts.push_back({Exp{t.e[0], uint32_t(m - t.e[0]), 0, 0}, t.c});
    }
    return Poly::from_terms(VarSet::BIPROJ, std::move(ts));
}

Poly dehomogenize_x(const Poly& p, int y_keep) {
    // x0 -> x, x1 -> 1; picks terms whose y-exponents match (y0^y_keep y1^(1-y_keep)).
    std::vector<Term> ts;
    for (auto& t : p.terms()) {
        if (t.e[2] != (y_keep ? 1 : 0) || t.e[3] != (y_keep ? 0 : 1)) continue;
        ts.push_back({Exp{t.e[0], 0, 0, 0}, t.c});
    }
    return Poly::from_terms(VarSet::X, std::move(ts));
}

} // namespace

P1xP1Map to_p1xp1(const JonquieresElement& j) {
    const auto& e = j.eta().m;
    Poly x0 = Poly::variable(VarSet::BIPROJ, 0), x1 = Poly::variable(VarSet::BIPROJ, 1);
    Poly y0 = Poly::variable(VarSet::BIPROJ, 2), y1 = Poly::variable(VarSet::BIPROJ, 3);
    Poly f0 = x0.scaled(e[0]) + x1.scaled(e[1]);
    Poly f1 = x0.scaled(e[2]) + x1.scaled(e[3]);
    long m = j.fiber_x_degree();
    Poly g0 = homogenize_x(j.fiber()[0], m) * y0 + homogenize_x(j.fiber()[1], m) * y1;
    Poly g1 = homogenize_x(j.fiber()[2], m) * y0 + homogenize_x(j.fiber()[3], m) * y1;
    return P1xP1Map::saturated_pairs(std::move(f0), std::move(f1), std::move(g0), std::move(g1));
}

std::variant<JonquieresElement, NotFiberPreserving> detect_jonquieres(const P1xP1Map& m) {
    const auto& c = m.components();
    if (c[0].degree_in(2) > 0 || c[0].degree_in(3) > 0 || c[1].degree_in(2) > 0 || c[1].degree_in(3) > 0)
        return NotFiberPreserving{"first coordinate pair depends on the fiber variables"};
    auto bd = m.first_bidegree();
    if (bd.first != 1) return NotFiberPreserving{"base action has degree != 1"};
    auto extract = [&](const Poly& p, int var) {
        for (auto& t : p.terms())
            if (t.e[var] == 1) return t.c;
        return GaussianRational(0);
    };
    Moebius2 eta(extract(c[0], 0), extract(c[0], 1), extract(c[1], 0), extract(c[1], 1));

    auto second = m.second_bidegree();
    if (second.second != 1) return NotFiberPreserving{"fiber action is not projective-linear in y"};
    std::array<Poly, 4> fiber = {dehomogenize_x(c[2], 1), dehomogenize_x(c[2], 0),
                                 dehomogenize_x(c[3], 1), dehomogenize_x(c[3], 0)};
    try {
        return JonquieresElement(std::move(eta), std::move(fiber));
    } catch (const std::domain_error&) {
        return NotFiberPreserving{"degenerate fiber matrix"};
    }
}

CremonaMap to_cremona(const JonquieresElement& j) {
    RationalFunction x = RationalFunction::variable(VarSet::XY, 0);
    RationalFunction y = RationalFunction::variable(VarSet::XY, 1);
    RationalFunction fx = j.eta().apply(x);

    auto lift = [](const Poly& p) { // polynomial in x viewed in (x, y)
        std::vector<Term> ts;
        for (auto& t : p.terms()) ts.push_back({Exp{t.e[0], 0, 0, 0}, t.c});
        return Poly::from_terms(VarSet::XY, std::move(ts));
    };
    RationalFunction A = RationalFunction::from_poly(lift(j.fiber()[0]));
    RationalFunction B = RationalFunction::from_poly(lift(j.fiber()[1]));
    RationalFunction C = RationalFunction::from_poly(lift(j.fiber()[2]));
    RationalFunction D = RationalFunction::from_poly(lift(j.fiber()[3]));
    RationalFunction fy = (A * y + B) / (C * y + D);
    return affine_to_cremona(fx, fy);
}

} // namespace cremona
