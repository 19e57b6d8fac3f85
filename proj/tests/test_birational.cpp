#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jonquieres.hpp"

using namespace cremona;

namespace {

struct Rng {
    uint64_t s = 42;
    uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
    long pick(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
};

GaussianRational rnd_scalar(Rng& rng, bool nonzero = false) {
    for (;;) {
        GaussianRational c(rng.pick(-3, 3));
        if (rng.pick(0, 3) == 0) c += GaussianRational::i() * GaussianRational(rng.pick(-2, 2));
        if (!nonzero || !c.is_zero()) return c;
    }
}

Poly rnd_poly_x(Rng& rng, int max_deg) {
    Poly p = Poly::zero(VarSet::X);
    int d = int(rng.pick(0, max_deg));
    for (int k = 0; k <= d; ++k)
        p += Poly::monomial(VarSet::X, Exp{uint32_t(k), 0, 0, 0}, rnd_scalar(rng));
    if (p.is_zero()) p = Poly::constant(VarSet::X, GaussianRational(1));
    return p;
}

JonquieresElement rnd_jonquieres(Rng& rng, int max_deg = 2) {
    Moebius2 eta = [&] {
        for (;;) {
            try {
                return Moebius2(rnd_scalar(rng), rnd_scalar(rng), rnd_scalar(rng), rnd_scalar(rng));
            } catch (const std::domain_error&) {
            }
        }
    }();
    for (;;) {
        try {
            std::array<Poly, 4> fiber{rnd_poly_x(rng, max_deg), rnd_poly_x(rng, max_deg),
                                      rnd_poly_x(rng, max_deg), rnd_poly_x(rng, max_deg)};
            if (rng.pick(0, 1)) fiber[2] = Poly::zero(VarSet::X); // often keep it affine in y
            return JonquieresElement(eta, fiber);
        } catch (const std::domain_error&) {
        }
    }
}

ProjectivePoint pt(long a, long b, long c) {
    return {std::array<GaussianRational, 3>{GaussianRational(a), GaussianRational(b), GaussianRational(c)}};
}

// (x, y) -> (2x, x y)
JonquieresElement twist_2x_xy() {
    return JonquieresElement(Moebius2::scaling(GaussianRational(2)),
                             {Poly::variable(VarSet::X, 0), Poly::zero(VarSet::X), Poly::zero(VarSet::X),
                              Poly::constant(VarSet::X, GaussianRational(1))});
}

} // namespace

TEST_CASE("standard involution squares to the identity") {
    CremonaMap sigma = CremonaMap::standard_involution();
    CHECK(sigma.degree() == 2);
    CremonaMap sq = compose(sigma, sigma);
    CHECK(sq.is_scalar_identity());
    CHECK(sq.degree() == 1);
}

TEST_CASE("composition with a linear map keeps degree 2") {
    CremonaMap sigma = CremonaMap::standard_involution();
    CremonaMap swap01(Poly::variable(VarSet::P2, 1), Poly::variable(VarSet::P2, 0),
                      Poly::variable(VarSet::P2, 2));
    CremonaMap c = compose(sigma, swap01);
    CHECK(c.degree() == 2);
    Poly x0 = Poly::variable(VarSet::P2, 0), x1 = Poly::variable(VarSet::P2, 1),
         x2 = Poly::variable(VarSet::P2, 2);
    CHECK(c == CremonaMap(x0 * x2, x1 * x2, x0 * x1));
}

TEST_CASE("identity laws for random Jonquieres elements in the plane model") {
    Rng rng;
    for (int k = 0; k < 20; ++k) {
        CremonaMap f = to_cremona(rnd_jonquieres(rng));
        CHECK(compose(f, CremonaMap::identity()) == f);
        CHECK(compose(CremonaMap::identity(), f) == f);
    }
}

TEST_CASE("unsaturated triples are rejected at construction") {
    Poly x0 = Poly::variable(VarSet::P2, 0), x1 = Poly::variable(VarSet::P2, 1),
         x2 = Poly::variable(VarSet::P2, 2);
    CHECK_THROWS_AS(CremonaMap(x0 * x0, x0 * x1, x0 * x2), std::domain_error);
    CHECK(CremonaMap::saturated(x0 * x0, x0 * x1, x0 * x2).is_scalar_identity());
    CHECK_THROWS_AS(CremonaMap(x0 * x0, x1, x2), std::domain_error); // mixed degrees
}

TEST_CASE("evaluation and indeterminacy") {
    CremonaMap sigma = CremonaMap::standard_involution();
    auto fixed = evaluate(sigma, pt(1, 1, 1));
    REQUIRE(fixed.has_value());
    CHECK(*fixed == pt(1, 1, 1));
    CHECK_FALSE(evaluate(sigma, pt(1, 0, 0)).has_value());
    CHECK_THROWS_AS(evaluate(sigma, pt(0, 0, 0)), std::domain_error);
}

TEST_CASE("evaluate commutes with composition away from indeterminacy") {
    Rng rng;
    int checked = 0;
    while (checked < 30) {
        CremonaMap f = to_cremona(rnd_jonquieres(rng, 1));
        CremonaMap g = to_cremona(rnd_jonquieres(rng, 1));
        ProjectivePoint p = pt(rng.pick(-4, 4), rng.pick(-4, 4), 1);
        auto q = evaluate(g, p);
        if (!q) continue;
        auto r = evaluate(f, *q);
        if (!r) continue;
        auto direct = evaluate(compose(f, g), p);
        REQUIRE(direct.has_value());
        CHECK(*direct == *r);
        ++checked;
    }
}

TEST_CASE("check_inverse") {
    CremonaMap sigma = CremonaMap::standard_involution();
    CremonaMap swap01(Poly::variable(VarSet::P2, 1), Poly::variable(VarSet::P2, 0),
                      Poly::variable(VarSet::P2, 2));
    CHECK(check_inverse(sigma, sigma));
    CHECK_FALSE(check_inverse(sigma, swap01));
    CHECK(check_inverse(CremonaMap::identity(), CremonaMap::identity()));
    CHECK(check_inverse(sigma, swap01) == check_inverse(swap01, sigma));
}

TEST_CASE("jonquieres composition: translations add") {
    JonquieresElement t = JonquieresElement::translation(GaussianRational(0), GaussianRational(1));
    JonquieresElement t2 = jonquieres_compose(t, t);
    CHECK(t2 == JonquieresElement::translation(GaussianRational(0), GaussianRational(2)));
}

TEST_CASE("jonquieres composition: twist squares as computed by hand") {
    JonquieresElement f = twist_2x_xy();
    JonquieresElement f2 = jonquieres_compose(f, f);
    // (4x, 2x^2 y); the fiber matrix is normalized so only the x^2 survives
    CHECK(f2.eta() == Moebius2::scaling(GaussianRational(4)));
    Poly x = Poly::variable(VarSet::X, 0);
    CHECK(f2.fiber()[0] == x * x);
    CHECK(f2.fiber()[1].is_zero());
    CHECK(f2.fiber()[2].is_zero());
    auto img = f2.apply(GaussianRational(1), GaussianRational(1));
    REQUIRE(img.has_value());
    CHECK(img->first == GaussianRational(4));
    CHECK(img->second == GaussianRational(2));
}

TEST_CASE("jonquieres inverse composes to the identity") {
    // f = (2x, (y+x)/(y-x))
    Poly x = Poly::variable(VarSet::X, 0);
    Poly one = Poly::constant(VarSet::X, GaussianRational(1));
    JonquieresElement f(Moebius2::scaling(GaussianRational(2)), {one, x, one, -x});
    JonquieresElement g = f.inverse();
    CHECK(jonquieres_compose(f, g).is_identity());
    CHECK(jonquieres_compose(g, f).is_identity());

    Rng rng;
    for (int k = 0; k < 15; ++k) {
        JonquieresElement h = rnd_jonquieres(rng);
        CHECK(jonquieres_compose(h, h.inverse()).is_identity());
    }
}

TEST_CASE("detect_jonquieres recovers normal forms") {
    // (x, y) -> (2x, x^2 y)
    Poly x = Poly::variable(VarSet::X, 0);
    JonquieresElement j(Moebius2::scaling(GaussianRational(2)),
                        {x * x, Poly::zero(VarSet::X), Poly::zero(VarSet::X),
                         Poly::constant(VarSet::X, GaussianRational(1))});
    auto det = detect_jonquieres(to_p1xp1(j));
    REQUIRE(std::holds_alternative<JonquieresElement>(det));
    CHECK(std::get<JonquieresElement>(det) == j);

    // coordinate swap exchanges the rulings
    P1xP1Map swap_xy(Poly::variable(VarSet::BIPROJ, 2), Poly::variable(VarSet::BIPROJ, 3),
                     Poly::variable(VarSet::BIPROJ, 0), Poly::variable(VarSet::BIPROJ, 1));
    CHECK(std::holds_alternative<NotFiberPreserving>(detect_jonquieres(swap_xy)));

    // (x, y) -> (x+1, y+x): unipotent fiber with B(x) = x
    JonquieresElement u(Moebius2::translation(GaussianRational(1)),
                        {Poly::constant(VarSet::X, GaussianRational(1)), x, Poly::zero(VarSet::X),
                         Poly::constant(VarSet::X, GaussianRational(1))});
    auto det2 = detect_jonquieres(to_p1xp1(u));
    REQUIRE(std::holds_alternative<JonquieresElement>(det2));
    CHECK(std::get<JonquieresElement>(det2) == u);
}

TEST_CASE("jonquieres closure under composition") {
    Rng rng;
    for (int k = 0; k < 25; ++k) {
        JonquieresElement f = rnd_jonquieres(rng);
        JonquieresElement g = rnd_jonquieres(rng);
        JonquieresElement h = jonquieres_compose(f, g);
        auto det = detect_jonquieres(to_p1xp1(h));
        REQUIRE(std::holds_alternative<JonquieresElement>(det));
        CHECK(std::get<JonquieresElement>(det) == h);
    }
}

TEST_CASE("degree submultiplicativity in the plane model") {
    Rng rng;
    for (int k = 0; k < 200; ++k) {
        JonquieresElement f = rnd_jonquieres(rng, 2);
        JonquieresElement g = rnd_jonquieres(rng, 2);
        CremonaMap cf = to_cremona(f), cg = to_cremona(g);
        CremonaMap fg = compose(cf, cg);
        CHECK(fg.degree() <= cf.degree() * cg.degree());
    }
}

TEST_CASE("saturation is idempotent") {
    Rng rng;
    for (int k = 0; k < 20; ++k) {
        CremonaMap f = to_cremona(rnd_jonquieres(rng));
        const auto& c = f.components();
        CremonaMap again = CremonaMap::saturated(c[0], c[1], c[2]);
        CHECK(again == f);
    }
}
