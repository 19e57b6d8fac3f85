#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kleinian.hpp"

#include <cmath>

using namespace cremona;

namespace {

const double kPi = 3.14159265358979323846;

KleinianGroup fuchsian_pair() {
    // both preserve the upper half-plane (real entries, positive determinant)
    return KleinianGroup::from_generators(
        {MoebiusElement(2, 0, 0, 1), MoebiusElement(3, 1, 1, 3)}, {"a", "b"});
}

std::vector<SchottkyPair> four_circles() {
    return {{{cplx(3, 0), 1.0}, {cplx(-3, 0), 1.0}}, {{cplx(0, 3), 1.0}, {cplx(0, -3), 1.0}}};
}

bool in_disk(const SpherePoint& p, cplx center, double radius, double slack = 1e-9) {
    return !p.inf && std::abs(p.z - center) < radius + slack;
}

} // namespace

TEST_CASE("trace classification") {
    CHECK(classify_moebius(MoebiusElement(1, 1, 0, 1)).type == MoebiusType::Parabolic);
    CHECK(classify_moebius(MoebiusElement(2, 0, 0, 0.5)).type == MoebiusType::Loxodromic);
    cplx r = std::polar(1.0, kPi / 4);
    CHECK(classify_moebius(MoebiusElement(r, 0, 0, std::conj(r))).type == MoebiusType::Elliptic);
    CHECK(classify_moebius(MoebiusElement(-1, 0, 0, -1)).type == MoebiusType::Identity);
}

TEST_CASE("classification is conjugation invariant") {
    Lcg rng(2024);
    auto rnd = [&] { return cplx(rng.next_unit() * 4 - 2, rng.next_unit() * 4 - 2); };
    std::vector<MoebiusElement> samples = {
        MoebiusElement(1, 1, 0, 1),
        MoebiusElement(2, 0, 0, 0.5),
        MoebiusElement(std::polar(1.0, 0.7), 0, 0, std::polar(1.0, -0.7)),
        MoebiusElement(3, 1, 1, 3),
    };
    int done = 0;
    while (done < 100) {
        cplx a = rnd(), b = rnd(), c = rnd(), d = rnd();
        if (std::abs(a * d - b * c) < 0.1) continue;
        MoebiusElement h(a, b, c, d);
        for (auto& m : samples)
            CHECK(classify_moebius(h * m * h.inverse()).type == classify_moebius(m).type);
        ++done;
    }
}

TEST_CASE("orbit of the doubling map") {
    KleinianGroup g = KleinianGroup::cyclic(MoebiusElement::scaling(2.0));
    OrbitResult orb = orbit(g, SpherePoint::at(1.0), 3);
    REQUIRE(orb.points.size() == 7);
    std::vector<double> want = {0.125, 0.25, 0.5, 1, 2, 4, 8};
    for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(orb.points[i].z.real() == doctest::Approx(want[i]).epsilon(1e-12));
        CHECK(orb.points[i].z.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("orbit of the trivial group is the seed") {
    KleinianGroup g = KleinianGroup::cyclic(MoebiusElement::identity());
    OrbitResult orb = orbit(g, SpherePoint::at(cplx(0.3, 0.4)), 4);
    CHECK(orb.points.size() == 1);
}

TEST_CASE("orbit of the parabolic lattice covers small lattice points") {
    KleinianGroup g = KleinianGroup::from_generators(
        {MoebiusElement::translation(1.0), MoebiusElement::translation(cplx(0, 1))});
    OrbitResult orb = orbit(g, SpherePoint::at(0.0), 2);
    CHECK(orb.points.size() == 13); // all m+ni with |m|+|n| <= 2
    for (auto& p : orb.points) CHECK(std::abs(p.z) <= 2.0 + 1e-12);
}

TEST_CASE("orbit budget truncates with a flag") {
    KleinianGroup g = fuchsian_pair();
    OrbitResult orb = orbit(g, SpherePoint::at(cplx(0, 1)), 8, 100);
    CHECK(orb.truncated);
    CHECK(orb.points.size() <= 101);
}

TEST_CASE("limit set of the doubling map is the fixed pair") {
    KleinianGroup g = KleinianGroup::cyclic(MoebiusElement::scaling(2.0));
    LimitCloud cloud = limit_set_approx(g, 500, 1);
    REQUIRE(cloud.points.size() == 2);
    CHECK(cloud.points[0].z == cplx(0, 0));
    CHECK(cloud.points[1].inf);
    CHECK(cloud.diagnostic.empty());
}

TEST_CASE("limit set of an elliptic rotation group is empty with a diagnostic") {
    KleinianGroup g = KleinianGroup::cyclic(MoebiusElement(std::polar(1.0, 0.7), 0, 0, 1));
    LimitCloud cloud = limit_set_approx(g, 200, 1);
    CHECK(cloud.points.empty());
    CHECK_FALSE(cloud.diagnostic.empty());
}

TEST_CASE("Schottky cloud stays inside the four disks") {
    KleinianGroup g = schottky_build(four_circles());
    LimitCloud cloud = limit_set_approx(g, 2000, 1);
    CHECK(cloud.points.size() > 100);
    for (auto& p : cloud.points) {
        bool inside = in_disk(p, cplx(3, 0), 1) || in_disk(p, cplx(-3, 0), 1) ||
                      in_disk(p, cplx(0, 3), 1) || in_disk(p, cplx(0, -3), 1);
        CHECK(inside);
    }
}

TEST_CASE("limit cloud is quasi-invariant under the generators") {
    for (auto g : {schottky_build(four_circles()), fuchsian_pair()}) {
        LimitCloud cloud = limit_set_approx(g, 4000, 1);
        REQUIRE(!cloud.points.empty());
        for (auto& gen : g.generators) {
            std::vector<SpherePoint> moved;
            for (auto& p : cloud.points) moved.push_back(gen.apply(p));
            CHECK(hausdorff_one_sided(moved, cloud.points) < 1e-2);
        }
    }
}

TEST_CASE("Fuchsian cloud lies on the real line") {
    LimitCloud cloud = limit_set_approx(fuchsian_pair(), 3000, 7);
    REQUIRE(!cloud.points.empty());
    for (auto& p : cloud.points)
        if (!p.inf) CHECK(std::abs(p.z.imag()) < 1e-6);
}

TEST_CASE("discreteness proxy") {
    CHECK(discreteness_proxy(KleinianGroup::cyclic(MoebiusElement::scaling(2.0)), 1e-6, 6));
    KleinianGroup lattice = KleinianGroup::from_generators(
        {MoebiusElement::translation(1.0), MoebiusElement::translation(cplx(0, 1))});
    CHECK(discreteness_proxy(lattice, 1e-6, 8));

    KleinianGroup irr =
        KleinianGroup::cyclic(MoebiusElement(std::polar(1.0, std::sqrt(2.0)), 0, 0, 1));
    CHECK_FALSE(discreteness_proxy(irr, 1e-2, 40));
    // monotone: failing at L implies failing at larger L
    CHECK_FALSE(discreteness_proxy(irr, 1e-2, 44));
    CHECK_THROWS_AS(discreteness_proxy(irr, 1e-2, 1), std::invalid_argument);
}

TEST_CASE("Schottky construction basics") {
    // single pair: a cyclic loxodromic group
    KleinianGroup cyc = schottky_build({{{cplx(3, 0), 1.0}, {cplx(-3, 0), 1.0}}});
    REQUIRE(cyc.rank() == 1);
    CHECK(classify_moebius(cyc.generators[0]).type == MoebiusType::Loxodromic);
    CHECK(discreteness_proxy(cyc, 1e-6, 8));

    // the generator maps the exterior of the source onto the interior of the target
    MoebiusElement s = cyc.generators[0];
    Lcg rng(5);
    for (int k = 0; k < 50; ++k) {
        cplx z(rng.next_unit() * 20 - 10, rng.next_unit() * 20 - 10);
        if (std::abs(z - cplx(3, 0)) <= 1.0) continue;
        CHECK(in_disk(s.apply(SpherePoint::at(z)), cplx(-3, 0), 1.0));
    }
    // circle boundary maps to circle boundary
    for (int k = 0; k < 12; ++k) {
        cplx z = cplx(3, 0) + std::polar(1.0, 2 * kPi * k / 12);
        SpherePoint w = s.apply(SpherePoint::at(z));
        CHECK(std::abs(std::abs(w.z - cplx(-3, 0)) - 1.0) < 1e-9);
    }

    CHECK_THROWS_AS(schottky_build({{{cplx(1, 0), 1.0}, {cplx(3, 0), 1.0}}}), std::domain_error);

    KleinianGroup rank2 = schottky_build(four_circles());
    CHECK(rank2.rank() == 2);
    CHECK(discreteness_proxy(rank2, 1e-6, 8));
}

TEST_CASE("ping-pong: orbit points land in the disk paired with the leading letter") {
    KleinianGroup g = schottky_build(four_circles());
    std::vector<Circle> sources = {{cplx(3, 0), 1}, {cplx(0, 3), 1}};
    std::vector<Circle> targets = {{cplx(-3, 0), 1}, {cplx(0, -3), 1}};
    SpherePoint seed = SpherePoint::at(0.0);
    for_each_reduced_word(
        g.rank(), 5,
        [&](const Word& w, const MoebiusElement& m) {
            SpherePoint img = m.apply(seed);
            int head = w.front();
            Circle expect = head < int(g.rank()) ? targets[head] : sources[head - int(g.rank())];
            CHECK(in_disk(img, expect.center, expect.radius));
            return true;
        },
        g);
}
