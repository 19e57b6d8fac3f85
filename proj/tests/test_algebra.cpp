#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "poly.hpp"
#include "ratfunc.hpp"

using namespace cremona;

namespace {

// Deterministic generator for property checks.
struct Rng {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
    long pick(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
};

Poly random_poly(Rng& rng, VarSet vs, int max_deg, int max_terms, bool complex_coeffs = true) {
    std::vector<Term> ts;
    int n = int(rng.pick(1, max_terms));
    for (int t = 0; t < n; ++t) {
        Exp e{0, 0, 0, 0};
        int budget = max_deg;
        for (int i = 0; i < var_count(vs); ++i) {
            int d = int(rng.pick(0, budget));
            e[i] = uint32_t(d);
            budget -= d;
        }
        GaussianRational c(rng.pick(-3, 3));
        if (complex_coeffs && rng.pick(0, 2) == 0)
            c += GaussianRational::i() * GaussianRational(rng.pick(-2, 2));
        if (!c.is_zero()) ts.push_back({e, c});
    }
    Poly p = Poly::from_terms(vs, std::move(ts));
    if (p.is_zero()) return Poly::constant(vs, GaussianRational(1));
    return p;
}

Poly X(VarSet vs = VarSet::XY) { return Poly::variable(vs, 0); }
Poly Y(VarSet vs = VarSet::XY) { return Poly::variable(vs, 1); }
Poly C(long n, VarSet vs = VarSet::XY) { return Poly::constant(vs, GaussianRational(n)); }

} // namespace

TEST_CASE("scalar arithmetic is exact") {
    GaussianRational a(1, 3), b(2, 5);
    CHECK(a + b == GaussianRational(11, 15));
    GaussianRational z = GaussianRational(1, 2) + GaussianRational::i() * GaussianRational(3, 4);
    CHECK((z * z.conj()) == GaussianRational(13, 16));
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK(GaussianRational::i().pow(4) == GaussianRational(1));
    CHECK(GaussianRational::i().root_of_unity_order() == 4);
    CHECK(GaussianRational(-1).root_of_unity_order() == 2);
    CHECK(GaussianRational(2).root_of_unity_order() == 0);
}

TEST_CASE("scalar string form") {
    CHECK(GaussianRational(2).str() == "2");
    CHECK(GaussianRational(-1, 3).str() == "-1/3");
    CHECK(GaussianRational::i().str() == "i");
    CHECK((GaussianRational(1, 2) - GaussianRational::i() * GaussianRational(3, 4)).str() == "1/2-3/4*i");
}

TEST_CASE("polynomial canonical form and printing") {
    Poly p = X() * X() - Y() * Y();
    CHECK(p.str() == "x^2 - y^2");
    Poly q = C(2) * X() * X() * Y() - Poly::constant(VarSet::XY, GaussianRational(1, 3)) * Y() * Y() * Y();
    CHECK(q.str() == "2*x^2*y - 1/3*y^3");
    CHECK(Poly::zero(VarSet::XY).str() == "0");
    Poly c = (C(1) + Poly::constant(VarSet::XY, GaussianRational::i() * GaussianRational(2))) * X();
    CHECK(c.str() == "(1+2*i)*x");
}

TEST_CASE("gcd: hand-factored pairs") {
    // (x-y)(x+y) and (x+y)^2
    Poly a = X() * X() - Y() * Y();
    Poly b = X() * X() + C(2) * X() * Y() + Y() * Y();
    CHECK(poly_gcd(a, b) == X() + Y());

    CHECK(poly_gcd(a, C(1)) == C(1));

    Poly m1 = Poly::variable(VarSet::P2, 0) * Poly::variable(VarSet::P2, 1);
    Poly m2 = Poly::variable(VarSet::P2, 0) * Poly::variable(VarSet::P2, 2);
    CHECK(poly_gcd(m1, m2) == Poly::variable(VarSet::P2, 0));

    CHECK_THROWS_WITH_AS(poly_gcd(Poly::zero(VarSet::XY), Poly::zero(VarSet::XY)), "gcd of zero pair",
                         std::domain_error);
}

TEST_CASE("gcd divides both inputs exactly") {
    Rng rng;
    for (int k = 0; k < 60; ++k) {
        Poly p = random_poly(rng, VarSet::XY, 3, 3);
        Poly q = random_poly(rng, VarSet::XY, 3, 3);
        Poly g = poly_gcd(p, q);
        CHECK(poly_divide_exact(p, g).has_value());
        CHECK(poly_divide_exact(q, g).has_value());
    }
}

TEST_CASE("gcd: common factor pulls out (associate property)") {
    Rng rng;
    for (int k = 0; k < 40; ++k) {
        Poly p = random_poly(rng, VarSet::XY, 2, 3);
        Poly q = random_poly(rng, VarSet::XY, 2, 3);
        Poly r = random_poly(rng, VarSet::XY, 2, 2);
        Poly lhs = poly_gcd(p * r, q * r);
        Poly rhs = (poly_gcd(p, q) * r).monic();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rational function normalization") {
    // (x^2 y, x y) reduces to x
    RationalFunction f(X() * X() * Y(), X() * Y());
    CHECK(f.num() == X());
    CHECK(f.den() == C(1));

    RationalFunction g(X() + C(1), C(1));
    CHECK(g.num() == X() + C(1));

    RationalFunction h(-X(), C(-1));
    CHECK(h.num() == X());
    CHECK(h.den() == C(1));

    CHECK_THROWS_WITH_AS(RationalFunction(X(), Poly::zero(VarSet::XY)), "zero denominator",
                         std::domain_error);
}

TEST_CASE("rational function normalization is scale invariant and idempotent") {
    Rng rng;
    for (int k = 0; k < 40; ++k) {
        Poly n = random_poly(rng, VarSet::XY, 3, 3);
        Poly d = random_poly(rng, VarSet::XY, 3, 3);
        Poly a = random_poly(rng, VarSet::XY, 2, 2);
        RationalFunction f(n, d);
        RationalFunction g(a * n, a * d);
        CHECK(f == g);
        RationalFunction again(f.num(), f.den());
        CHECK(again == f);
    }
}

TEST_CASE("substitute: stated examples") {
    // p = x^2 + y at (1/x, y) -> (1 + x^2 y)/x^2
    Poly p = X() * X() + Y();
    RationalFunction inv_x(C(1), X());
    RationalFunction y = RationalFunction::variable(VarSet::XY, 1);
    RationalFunction r = substitute(p, {inv_x, y});
    CHECK(r.num() == X() * X() * Y() + C(1));
    CHECK(r.den() == X() * X());

    Rng rng;
    for (int k = 0; k < 10; ++k) {
        RationalFunction f(random_poly(rng, VarSet::X, 3, 2), random_poly(rng, VarSet::X, 3, 2));
        CHECK(substitute(Poly::variable(VarSet::X, 0), {f}) == f);
    }

    Poly xy = X() * Y();
    RationalFunction xp1 = RationalFunction::from_poly(X() + C(1));
    RationalFunction xm1 = RationalFunction::from_poly(X() - C(1));
    CHECK(substitute(xy, {xp1, xm1}) == RationalFunction::from_poly(X() * X() - C(1)));

    CHECK_THROWS_AS(substitute(xy, {xp1}), std::logic_error);
}

TEST_CASE("substitute respects ring structure") {
    Rng rng;
    for (int k = 0; k < 25; ++k) {
        Poly p = random_poly(rng, VarSet::XY, 4, 3);
        Poly q = random_poly(rng, VarSet::XY, 4, 3);
        std::vector<RationalFunction> args = {
            RationalFunction(random_poly(rng, VarSet::XY, 2, 2), random_poly(rng, VarSet::XY, 1, 2)),
            RationalFunction(random_poly(rng, VarSet::XY, 2, 2), random_poly(rng, VarSet::XY, 1, 2))};
        CHECK(substitute(p + q, args) == substitute(p, args) + substitute(q, args));
        CHECK(substitute(p * q, args) == substitute(p, args) * substitute(q, args));
    }
}

TEST_CASE("substitute on x with rational args reduces to composition") {
    // p = x over VarSet::X, arg = any rational function: identity law
    Poly px = Poly::variable(VarSet::X, 0);
    RationalFunction f(Poly::variable(VarSet::X, 0) + Poly::constant(VarSet::X, GaussianRational(2)),
                       Poly::variable(VarSet::X, 0));
    CHECK(substitute(px, {f}) == f);
}

TEST_CASE("term budget aborts oversized products") {
    Poly dense = Poly::zero(VarSet::XY);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
            dense += Poly::monomial(VarSet::XY, Exp{uint32_t(i), uint32_t(j), 0, 0},
                                    GaussianRational(1 + ((i + j) % 3)));
    TermBudgetGuard guard(200);
    CHECK_THROWS_AS(dense * dense, TermBudgetExceeded);
}

TEST_CASE("derivative and evaluation") {
    Poly p = X() * X() * Y() + C(3) * Y();
    CHECK(p.derivative(0) == C(2) * X() * Y());
    CHECK(p.derivative(1) == X() * X() + C(3));
    GaussianRational v = p.eval({GaussianRational(2), GaussianRational(1, 2)});
    CHECK(v == GaussianRational(7, 2));
}
