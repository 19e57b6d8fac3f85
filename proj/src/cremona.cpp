#include "cremona.hpp"

namespace cremona {

ProjectivePoint ProjectivePoint::canonical() const {
    for (auto& x : c) {
        if (!x.is_zero()) {
            GaussianRational inv = x.inverse();
            return {std::array<GaussianRational, 3>{c[0] * inv, c[1] * inv, c[2] * inv}};
        }
    }
    throw std::domain_error("zero projective vector");
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    ProjectivePoint ca = a.canonical(), cb = b.canonical();
    return ca.c[0] == cb.c[0] && ca.c[1] == cb.c[1] && ca.c[2] == cb.c[2];
}

CremonaMap::CremonaMap(Poly c0, Poly c1, Poly c2) : comp_{std::move(c0), std::move(c1), std::move(c2)} {
    long deg = -1;
    for (auto& c : comp_) {
        if (c.vars() != VarSet::P2) throw std::logic_error("map components must live in x0,x1,x2");
        if (!c.is_homogeneous()) throw std::domain_error("map component is not homogeneous");
        if (c.is_zero()) continue;
        if (deg < 0)
            deg = c.total_degree();
        else if (c.total_degree() != deg)
            throw std::domain_error("map components have different degrees");
    }
    if (deg < 0) throw std::domain_error("all map components are zero");
    Poly g = comp_[0];
    for (int i = 1; i < 3; ++i) g = g.is_zero() ? comp_[i] : (comp_[i].is_zero() ? g : poly_gcd(g, comp_[i]));
    if (!g.is_constant()) throw std::domain_error("map components are not saturated");
}

CremonaMap CremonaMap::saturated(Poly c0, Poly c1, Poly c2) {
    std::array<Poly, 3> comp{std::move(c0), std::move(c1), std::move(c2)};
    Poly g = Poly::zero(VarSet::P2);
    for (auto& c : comp) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : poly_gcd(g, c);
    }
    if (g.is_zero()) throw std::domain_error("all map components are zero");
    if (!g.is_constant())
        for (auto& c : comp) c = c.is_zero() ? c : *poly_divide_exact(c, g);
    return CremonaMap(comp[0], comp[1], comp[2]);
}

CremonaMap CremonaMap::identity() {
    return CremonaMap(Poly::variable(VarSet::P2, 0), Poly::variable(VarSet::P2, 1),
                      Poly::variable(VarSet::P2, 2));
}

CremonaMap CremonaMap::standard_involution() {
    Poly x0 = Poly::variable(VarSet::P2, 0), x1 = Poly::variable(VarSet::P2, 1),
         x2 = Poly::variable(VarSet::P2, 2);
    return CremonaMap(x1 * x2, x0 * x2, x0 * x1);
}

bool CremonaMap::is_scalar_identity() const {
    if (degree() != 1) return false;
    GaussianRational lambda;
    for (int i = 0; i < 3; ++i) {
        if (!comp_[i].is_monomial()) return false;
        const Term& t = comp_[i].leading_term();
        Exp want{0, 0, 0, 0};
        want[i] = 1;
        if (t.e != want) return false;
        if (i == 0)
            lambda = t.c;
        else if (t.c != lambda)
            return false;
    }
    return true;
}

bool operator==(const CremonaMap& a, const CremonaMap& b) {
    // Projective equality: components proportional by one scalar.
    int ia = -1, ib = -1;
    for (int i = 0; i < 3; ++i) {
        if (!a.comp_[i].is_zero() && ia < 0) ia = i;
        if (!b.comp_[i].is_zero() && ib < 0) ib = i;
    }
    if (ia != ib) return false;
    GaussianRational la = a.comp_[ia].leading_term().c, lb = b.comp_[ib].leading_term().c;
    GaussianRational s = lb / la;
    for (int i = 0; i < 3; ++i)
        if (a.comp_[i].scaled(s) != b.comp_[i]) return false;
    return true;
}

std::string CremonaMap::str() const {
    return "[" + comp_[0].str() + " : " + comp_[1].str() + " : " + comp_[2].str() + "]";
}

CremonaMap compose(const CremonaMap& f, const CremonaMap& g) {
    std::vector<Poly> args(g.components().begin(), g.components().end());
    std::array<Poly, 3> comp;
    bool all_zero = true;
    for (int i = 0; i < 3; ++i) {
        comp[i] = substitute_poly(f.components()[i], args);
        all_zero = all_zero && comp[i].is_zero();
    }
    if (all_zero) throw std::logic_error("composition vanished identically: invalid birational input");
    return CremonaMap::saturated(std::move(comp[0]), std::move(comp[1]), std::move(comp[2]));
}

std::optional<ProjectivePoint> evaluate(const CremonaMap& f, const ProjectivePoint& p) {
    if (p.c[0].is_zero() && p.c[1].is_zero() && p.c[2].is_zero())
        throw std::domain_error("zero projective vector");
    std::vector<GaussianRational> pt(p.c.begin(), p.c.end());
    ProjectivePoint img;
    bool all_zero = true;
    for (int i = 0; i < 3; ++i) {
        img.c[i] = f.components()[i].eval(pt);
        all_zero = all_zero && img.c[i].is_zero();
    }
    if (all_zero) return std::nullopt;
    return img;
}

bool check_inverse(const CremonaMap& f, const CremonaMap& g) {
    return compose(f, g).is_scalar_identity() && compose(g, f).is_scalar_identity();
}

Poly homogenize_xy(const Poly& p, long deg) {
    if (p.vars() != VarSet::XY) throw std::logic_error("homogenize_xy expects x,y");
    std::vector<Term> ts;
    ts.reserve(p.term_count());
    for (auto& t : p.terms()) {
        long rest = deg - t.e[0] - t.e[1];
        if (rest < 0) throw std::logic_error("degree too small to homogenize");
        ts.push_back({Exp{uint32_t(rest), t.e[0], t.e[1], 0}, t.c});
    }
    return Poly::from_terms(VarSet::P2, std::move(ts));
}

CremonaMap affine_to_cremona(const RationalFunction& fx, const RationalFunction& fy) {
    if (fx.vars() != VarSet::XY || fy.vars() != VarSet::XY)
        throw std::logic_error("affine components must live in x,y");
    // [dx dy : nx dy : ny dx], then homogenize at the max total degree.
    Poly c0 = fx.den() * fy.den();
    Poly c1 = fx.num() * fy.den();
    Poly c2 = fy.num() * fx.den();
    long deg = std::max({c0.total_degree(), c1.total_degree(), c2.total_degree()});
    return CremonaMap::saturated(homogenize_xy(c0, deg), homogenize_xy(c1, deg), homogenize_xy(c2, deg));
}

} // namespace cremona
