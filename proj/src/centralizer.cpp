#include "centralizer.hpp"

namespace cremona {

bool commutes(const JonquieresElement& f, const JonquieresElement& g) {
    return jonquieres_compose(f, g) == jonquieres_compose(g, f);
}

NormalFormElliptic NormalFormElliptic::diagonal(const GaussianRational& alpha,
                                                const GaussianRational& beta) {
    if (alpha.is_zero() || beta.is_zero()) throw std::domain_error("diagonal scalars must be nonzero");
    if (beta.root_of_unity_order() != 0)
        throw std::domain_error("beta is a root of unity: relation lattice is not generated by (k,0)");
    NormalFormElliptic f;
    f.kind_ = EllipticKind::Diagonal;
    f.alpha_ = alpha;
    f.beta_ = beta;
    f.k_ = alpha.root_of_unity_order();
    return f;
}

NormalFormElliptic NormalFormElliptic::translation(const GaussianRational& alpha) {
    if (alpha.is_zero()) throw std::domain_error("alpha must be nonzero");
    NormalFormElliptic f;
    f.kind_ = EllipticKind::Translation;
    f.alpha_ = alpha;
    f.beta_ = GaussianRational(1);
    f.k_ = alpha.root_of_unity_order();
    return f;
}

JonquieresElement NormalFormElliptic::element() const {
    if (kind_ == EllipticKind::Diagonal) return JonquieresElement::diagonal(alpha_, beta_);
    Poly one = Poly::constant(VarSet::X, GaussianRational(1));
    return JonquieresElement(Moebius2::scaling(alpha_), {one, one, Poly::zero(VarSet::X), one});
}

namespace {

// p(zeta x) for a scalar zeta
Poly scale_argument(const Poly& p, const GaussianRational& zeta) {
    std::vector<Term> ts;
    for (auto& t : p.terms()) ts.push_back({t.e, t.c * zeta.pow(t.e[0])});
    return Poly::from_terms(VarSet::X, std::move(ts));
}

bool mobius_conjugation_fixed(const Moebius2& eta, const GaussianRational& alpha) {
    // eta(alpha x) = alpha eta(x) as elements of PGL(2)
    Moebius2 scale = Moebius2::scaling(alpha);
    return eta * scale == scale * eta;
}

// R = n/d invariant under x -> zeta x, checked by cross-multiplication.
bool rational_in_x_power(const Poly& n, const Poly& d, const GaussianRational& zeta) {
    return scale_argument(n, zeta) * d == n * scale_argument(d, zeta);
}

GaussianRational primitive_root(int k) {
    switch (k) {
        case 1: return GaussianRational(1);
        case 2: return GaussianRational(-1);
        case 4: return GaussianRational::i();
    }
    throw std::logic_error("no such root of unity in Q(i)");
}

} // namespace

CentralizerVerdict centralizer_membership(const NormalFormElliptic& f, const JonquieresElement& g) {
    bool member = commutes(f.element(), g);

    const int k = f.relation_order();
    bool shape;
    std::string form, why;
    if (f.kind() == EllipticKind::Diagonal) {
        form = k == 0 ? "(c x, d y) with constants c, d"
                      : "(eta(x), y R(x^" + std::to_string(k) + ")) with eta(ax) = a eta(x)";
        const auto& m = g.fiber();
        if (!g.fiber()[1].is_zero() || !g.fiber()[2].is_zero()) {
            shape = false;
            why = "fiber action is not multiplication by a rational function";
        } else if (!mobius_conjugation_fixed(g.eta(), f.alpha())) {
            shape = false;
            why = "base action does not commute with multiplication by alpha";
        } else if (k == 0) {
            shape = m[0].is_constant() && m[3].is_constant();
            why = shape ? "diagonal with constant multiplier" : "R must be constant";
        } else {
            shape = rational_in_x_power(m[0], m[3], primitive_root(k));
            why = shape ? "R is a function of x^" + std::to_string(k)
                        : "R is not a function of x^" + std::to_string(k);
        }
    } else {
        form = k == 0 ? "(b x, y + c) with constants b, c"
                      : "(eta(x), y + R(x)) with eta(ax) = a eta(x) and R(ax) = R(x)";
        const auto& m = g.fiber();
        if (!g.fiber()[2].is_zero() || m[0] != m[3]) {
            shape = false;
            why = "fiber action is not a translation";
        } else if (!mobius_conjugation_fixed(g.eta(), f.alpha())) {
            shape = false;
            why = "base action does not commute with multiplication by alpha";
        } else if (k == 0) {
            bool diag_base = g.eta().m[1].is_zero() && g.eta().m[2].is_zero();
            shape = diag_base && m[1].is_constant();
            why = shape ? "scaling base with constant translation" : "R must be constant and eta linear";
        } else {
            shape = rational_in_x_power(m[1], m[0], primitive_root(k));
            why = shape ? "R invariant under x -> alpha x" : "R not invariant under x -> alpha x";
        }
    }

    if (shape != member)
        throw std::logic_error("centralizer shape prediction disagrees with exact commutation: "
                               "internal invariant violation");
    return {member ? Membership::Member : Membership::NotMember, form, why};
}

} // namespace cremona
