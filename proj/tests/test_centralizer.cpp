#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "centralizer.hpp"

using namespace cremona;

namespace {

struct Rng {
    uint64_t s = 11;
    uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
    long pick(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
};

JonquieresElement diag(long a, long b) {
    return JonquieresElement::diagonal(GaussianRational(a), GaussianRational(b));
}

// (x, y R(x)) for a polynomial R
JonquieresElement mult_by(const Poly& r) {
    return JonquieresElement(Moebius2::identity(),
                             {r, Poly::zero(VarSet::X), Poly::zero(VarSet::X),
                              Poly::constant(VarSet::X, GaussianRational(1))});
}

Poly rnd_nonconstant(Rng& rng) {
    for (;;) {
        Poly p = Poly::zero(VarSet::X);
        int d = int(rng.pick(1, 3));
        for (int k = 0; k <= d; ++k)
            p += Poly::monomial(VarSet::X, Exp{uint32_t(k), 0, 0, 0}, GaussianRational(rng.pick(-3, 3)));
        if (p.total_degree() >= 1) return p;
    }
}

} // namespace

TEST_CASE("commutation basics") {
    CHECK(commutes(diag(2, 3), diag(5, 7)));

    // (2x,3y) vs (x, x y): the two orders differ by the factor 3 vs 2
    JonquieresElement g = mult_by(Poly::variable(VarSet::X, 0));
    CHECK_FALSE(commutes(diag(2, 3), g));

    JonquieresElement f(Moebius2::scaling(GaussianRational(2)),
                        {Poly::constant(VarSet::X, GaussianRational(1)),
                         Poly::constant(VarSet::X, GaussianRational(1)), Poly::zero(VarSet::X),
                         Poly::constant(VarSet::X, GaussianRational(1))}); // (2x, y+1)
    JonquieresElement h(Moebius2::identity(),
                        {Poly::constant(VarSet::X, GaussianRational(1)),
                         Poly::constant(VarSet::X, GaussianRational(5)), Poly::zero(VarSet::X),
                         Poly::constant(VarSet::X, GaussianRational(1))}); // (x, y+5)
    CHECK(commutes(f, h));
}

TEST_CASE("commutes is symmetric and conjugation equivariant") {
    Rng rng;
    std::vector<JonquieresElement> pool = {diag(2, 3), diag(5, 7), mult_by(rnd_nonconstant(rng)),
                                           JonquieresElement::translation(GaussianRational(1),
                                                                          GaussianRational(2))};
    JonquieresElement h(Moebius2(GaussianRational(1), GaussianRational(1), GaussianRational(0),
                                 GaussianRational(1)),
                        {Poly::variable(VarSet::X, 0), Poly::constant(VarSet::X, GaussianRational(1)),
                         Poly::zero(VarSet::X), Poly::constant(VarSet::X, GaussianRational(1))});
    JonquieresElement hinv = h.inverse();
    for (auto& f : pool)
        for (auto& g : pool) {
            bool direct = commutes(f, g);
            CHECK(direct == commutes(g, f));
            JonquieresElement fc = jonquieres_compose(jonquieres_compose(h, f), hinv);
            JonquieresElement gc = jonquieres_compose(jonquieres_compose(h, g), hinv);
            CHECK(direct == commutes(fc, gc));
        }
}

TEST_CASE("normal form construction") {
    NormalFormElliptic f = NormalFormElliptic::diagonal(GaussianRational(2), GaussianRational(3));
    CHECK(f.relation_order() == 0);
    NormalFormElliptic g = NormalFormElliptic::diagonal(GaussianRational::i(), GaussianRational(3));
    CHECK(g.relation_order() == 4);
    CHECK_THROWS_AS(NormalFormElliptic::diagonal(GaussianRational(2), GaussianRational::i()),
                    std::domain_error);
}

TEST_CASE("membership for a diagonal map with independent multipliers") {
    NormalFormElliptic f = NormalFormElliptic::diagonal(GaussianRational(2), GaussianRational(3));

    auto v1 = centralizer_membership(f, diag(5, 7));
    CHECK(v1.decision == Membership::Member);

    // (x, (x^2+1) y)
    Poly r = Poly::variable(VarSet::X, 0) * Poly::variable(VarSet::X, 0) +
             Poly::constant(VarSet::X, GaussianRational(1));
    auto v2 = centralizer_membership(f, mult_by(r));
    CHECK(v2.decision == Membership::NotMember);
}

TEST_CASE("membership for a fourth root of unity allows R(x^4)") {
    NormalFormElliptic f = NormalFormElliptic::diagonal(GaussianRational::i(), GaussianRational(3));
    Poly x4 = Poly::variable(VarSet::X, 0).pow(4);
    auto v = centralizer_membership(f, mult_by(x4));
    CHECK(v.decision == Membership::Member);
    Poly x2 = Poly::variable(VarSet::X, 0).pow(2);
    CHECK(centralizer_membership(f, mult_by(x2)).decision == Membership::NotMember);
}

TEST_CASE("randomized dichotomy: nonconstant R never centralizes a generic diagonal") {
    NormalFormElliptic f = NormalFormElliptic::diagonal(GaussianRational(2), GaussianRational(3));
    Rng rng;
    for (int k = 0; k < 100; ++k) {
        auto v = centralizer_membership(f, mult_by(rnd_nonconstant(rng)));
        CHECK(v.decision == Membership::NotMember);
    }
    for (int k = 0; k < 50; ++k) {
        long a = rng.pick(1, 9), b = rng.pick(1, 9);
        auto v = centralizer_membership(f, diag(a, b));
        CHECK(v.decision == Membership::Member);
    }
}

TEST_CASE("translation form: members are (b x, y + c)") {
    NormalFormElliptic f = NormalFormElliptic::translation(GaussianRational(2));
    // candidates: scalings with y-translations, and a few that must fail
    auto trans = [](long b, long c) {
        Poly one = Poly::constant(VarSet::X, GaussianRational(1));
        return JonquieresElement(Moebius2::scaling(GaussianRational(b)),
                                 {one, Poly::constant(VarSet::X, GaussianRational(c)),
                                  Poly::zero(VarSet::X), one});
    };
    CHECK(centralizer_membership(f, trans(5, 3)).decision == Membership::Member);
    CHECK(centralizer_membership(f, trans(1, 0)).decision == Membership::Member);

    Poly one = Poly::constant(VarSet::X, GaussianRational(1));
    Poly x = Poly::variable(VarSet::X, 0);
    JonquieresElement bad1(Moebius2::translation(GaussianRational(1)), {one, Poly::zero(VarSet::X),
                                                                        Poly::zero(VarSet::X), one});
    CHECK(centralizer_membership(f, bad1).decision == Membership::NotMember);
    JonquieresElement bad2(Moebius2::scaling(GaussianRational(3)),
                           {one, x, Poly::zero(VarSet::X), one}); // y + x is not invariant
    CHECK(centralizer_membership(f, bad2).decision == Membership::NotMember);
    CHECK(centralizer_membership(f, diag(3, 5)).decision == Membership::NotMember);
}
