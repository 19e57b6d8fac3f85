#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric.hpp"

#include <cmath>

using namespace cremona;

namespace {

struct Rng {
    uint64_t s = 7;
    uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
    long pick(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
};

// Random GL(2,Z) matrix as a short product of elementary and swap matrices.
Mat2z random_gl2z(Rng& rng) {
    Mat2z m{1, 0, 0, 1};
    int steps = int(rng.pick(1, 5));
    for (int i = 0; i < steps; ++i) {
        long k = rng.pick(-3, 3);
        switch (rng.pick(0, 2)) {
            case 0: m = mat2z_mul(m, Mat2z{1, k, 0, 1}); break;
            case 1: m = mat2z_mul(m, Mat2z{1, 0, k, 1}); break;
            default: m = mat2z_mul(m, Mat2z{0, 1, 1, 0}); break;
        }
    }
    return m;
}

long long fib(int n) {
    long long a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        long long t = a + b;
        a = b;
        b = t;
    }
    return a; // fib(0)=0, fib(1)=1, ...
}

GaussianRational rnd_nonzero(Rng& rng) {
    for (;;) {
        GaussianRational c(rng.pick(-3, 3), rng.pick(1, 3));
        if (rng.pick(0, 2) == 0) c += GaussianRational::i() * GaussianRational(rng.pick(-2, 2));
        if (!c.is_zero()) return c;
    }
}

} // namespace

TEST_CASE("semidirect composition law") {
    MonomialMap f(GaussianRational(2), GaussianRational(3), Mat2z{1, 1, 0, 1});
    MonomialMap id = MonomialMap::identity();
    CHECK(monomial_compose(f, id) == f);
    CHECK(monomial_compose(id, f) == f);

    MonomialMap g(GaussianRational(1), GaussianRational(1), Mat2z{2, 1, 1, 1});
    MonomialMap g2 = monomial_compose(g, g);
    CHECK(g2.A == Mat2z{5, 3, 3, 2});

    Rng rng;
    for (int k = 0; k < 30; ++k) {
        MonomialMap h(rnd_nonzero(rng), rnd_nonzero(rng), random_gl2z(rng));
        MonomialMap inv = h.inverse();
        CHECK(monomial_compose(h, inv) == MonomialMap::identity());
        CHECK(monomial_compose(inv, h) == MonomialMap::identity());
    }
}

TEST_CASE("monomial dynamical types from the matrix") {
    MonomialMap hyp(GaussianRational(1), GaussianRational(1), Mat2z{2, 1, 1, 1});
    GrowthClass c = monomial_type(hyp);
    CHECK(c.type == GrowthType::Exponential);
    CHECK(c.lambda_estimate == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));

    MonomialMap uni(GaussianRational(1), GaussianRational(1), Mat2z{1, 1, 0, 1});
    CHECK(monomial_type(uni).type == GrowthType::Linear);

    MonomialMap rot(GaussianRational(1), GaussianRational(1), Mat2z{0, -1, 1, 0});
    CHECK(monomial_type(rot).type == GrowthType::Bounded);

    MonomialMap swp(GaussianRational(1), GaussianRational(1), Mat2z{0, 1, 1, 0});
    CHECK(monomial_type(swp).type == GrowthType::Bounded);

    MonomialMap neg_id(GaussianRational(1), GaussianRational(1), Mat2z{-1, 0, 0, -1});
    CHECK(monomial_type(neg_id).type == GrowthType::Bounded);
}

TEST_CASE("monomial type agrees with the generic degree machinery") {
    std::vector<Mat2z> library = {
        {2, 1, 1, 1},  {3, 2, 1, 1},   {5, 2, 2, 1},  {1, 1, 1, 2},   {3, 1, 2, 1},
        {2, 3, 1, 2},  {1, 2, 1, 3},   {4, 1, 3, 1},  {1, 1, 0, 1},   {1, -1, 0, 1},
        {1, 0, 2, 1},  {-1, 1, 0, -1}, {1, 3, 0, 1},  {-1, 0, 2, -1}, {0, -1, 1, 0},
        {0, 1, 1, 0},  {1, 0, 0, -1},  {0, 1, -1, 0}, {1, -1, 1, 0},  {-1, 0, 0, -1},
    };
    REQUIRE(library.size() == 20);
    for (auto& A : library) {
        MonomialMap m(GaussianRational(1), GaussianRational(1), A);
        GrowthClass from_matrix = monomial_type(m);
        GrowthClass from_degrees = classify_growth(degree_sequence(to_p1xp1(m), 12));
        CHECK(from_matrix.type == from_degrees.type);
    }
}

TEST_CASE("lambda estimate converges to the spectral radius by N = 15") {
    MonomialMap m(GaussianRational(1), GaussianRational(1), Mat2z{2, 1, 1, 1});
    double lam = dynamical_degree(degree_sequence(to_p1xp1(m), 15)).lambda;
    CHECK(lam == doctest::Approx(monomial_type(m).lambda_estimate).epsilon(1e-3));
}

TEST_CASE("valuation orbits") {
    auto orb = valuation_orbit(Mat2z{2, 1, 1, 1}, Vec2z{1, 0}, 3);
    REQUIRE(orb.size() == 3);
    CHECK(orb[0] == Vec2z{2, 1});
    CHECK(orb[1] == Vec2z{5, 3});
    CHECK(orb[2] == Vec2z{13, 8});

    auto cst = valuation_orbit(Mat2z{1, 0, 0, 1}, Vec2z{-2, 5}, 4);
    for (auto& v : cst) CHECK(v == Vec2z{-2, 5});

    // max-norm of A^n (1,0) dominates fib(2n): the powers are Fibonacci
    auto fibs = valuation_orbit(Mat2z{2, 1, 1, 1}, Vec2z{1, 0}, 20);
    for (int n = 1; n <= 20; ++n) {
        long long mx = std::max(std::llabs(fibs[n - 1][0]), std::llabs(fibs[n - 1][1]));
        CHECK(mx >= fib(2 * n));
    }
}

TEST_CASE("valuation orbit norms bounded iff the matrix has finite order") {
    std::vector<Mat2z> finite = {{0, -1, 1, 0}, {0, 1, 1, 0}, {-1, 0, 0, -1}, {1, -1, 1, 0}};
    std::vector<Mat2z> infinite = {{2, 1, 1, 1}, {1, 1, 0, 1}, {3, 1, 2, 1}, {-1, 1, 0, -1}};
    auto norm_sup = [](const Mat2z& A) {
        long long mx = 0;
        for (Vec2z v : {Vec2z{1, 0}, Vec2z{0, 1}})
            for (auto& w : valuation_orbit(A, v, 24)) mx = std::max({mx, std::llabs(w[0]), std::llabs(w[1])});
        return mx;
    };
    for (auto& A : finite) CHECK(norm_sup(A) <= 2);
    for (auto& A : infinite) CHECK(norm_sup(A) > 8);
}

TEST_CASE("log-form pullback scalar equals the determinant, symbolically verified") {
    MonomialMap hyp(GaussianRational(1), GaussianRational(1), Mat2z{2, 1, 1, 1});
    CHECK(logform_pullback_scalar(hyp) == 1);
    MonomialMap swp(GaussianRational(1), GaussianRational(1), Mat2z{0, 1, 1, 0});
    CHECK(logform_pullback_scalar(swp) == -1);

    Rng rng;
    for (int k = 0; k < 50; ++k) {
        MonomialMap m(rnd_nonzero(rng), rnd_nonzero(rng), random_gl2z(rng));
        long det = logform_pullback_scalar(m);
        CHECK((det == 1 || det == -1));
        CHECK(det == mat2z_det(m.A));
    }
}

TEST_CASE("log-form pullback scalar is multiplicative") {
    Rng rng;
    for (int k = 0; k < 25; ++k) {
        MonomialMap f(rnd_nonzero(rng), rnd_nonzero(rng), random_gl2z(rng));
        MonomialMap g(rnd_nonzero(rng), rnd_nonzero(rng), random_gl2z(rng));
        CHECK(logform_pullback_scalar(monomial_compose(f, g)) ==
              logform_pullback_scalar(f) * logform_pullback_scalar(g));
    }
}
