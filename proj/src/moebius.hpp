// Numeric PGL(2,C): 2x2 complex matrices modulo scalars, the spherical
// metric, and the trace classification.
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace cremona {

using cplx = std::complex<double>;

// Point on the Riemann sphere; infinity is an ordinary value.
struct SpherePoint {
    cplx z{};
    bool inf = false;

    static SpherePoint infinity() { return {cplx{}, true}; }
    static SpherePoint at(cplx z) { return {z, false}; }
};

// Chordal distance on the sphere (diameter 2).
double chordal(const SpherePoint& a, const SpherePoint& b);

// Stereographic coordinates (X, Y, Z) with |(X,Y,Z)| = 1; infinity is the
// north pole (0, 0, 1).
std::array<double, 3> sphere_coords(const SpherePoint& p);

enum class MoebiusType { Identity, Elliptic, Parabolic, Loxodromic };
const char* moebius_type_name(MoebiusType t);

struct MoebiusClass {
    MoebiusType type;
    bool near_boundary = false; // parabolic only within classification tolerance
};

// Entries are kept scaled to unit max-norm with the true determinant
// carried alongside; products propagate the determinant multiplicatively,
// which stays accurate for long words where ad - bc cancels numerically.
class MoebiusElement {
public:
    MoebiusElement() : a_(1), b_(0), c_(0), d_(1), det_(1) {}
    MoebiusElement(cplx a, cplx b, cplx c, cplx d);

    static MoebiusElement identity() { return {}; }
    static MoebiusElement scaling(cplx s) { return {s, 0.0, 0.0, 1.0}; }
    static MoebiusElement translation(cplx t) { return {1.0, t, 0.0, 1.0}; }

    cplx a() const { return a_; }
    cplx b() const { return b_; }
    cplx c() const { return c_; }
    cplx d() const { return d_; }
    cplx det() const { return det_; }
    cplx trace() const { return a_ + d_; }

    // Entries scaled to determinant 1.
    std::array<cplx, 4> normalized() const;

    MoebiusElement inverse() const;
    friend MoebiusElement operator*(const MoebiusElement& f, const MoebiusElement& g);

    SpherePoint apply(const SpherePoint& p) const;

    // max-norm distance of the det-1 normalization to the nearer of
    // +-identity
    double dist_to_pm_identity() const;

    // Attracting fixed point of a loxodromic element, the unique fixed
    // point of a parabolic one; nullopt for elliptic / identity.
    std::optional<SpherePoint> attracting_fixed_point(double eps = 1e-9) const;

    std::string str() const;

private:
    struct raw_tag {};
    MoebiusElement(raw_tag, cplx a, cplx b, cplx c, cplx d, cplx det);
    void rescale();

    cplx a_, b_, c_, d_;
    cplx det_;
};

MoebiusClass classify_moebius(const MoebiusElement& m, double eps = 1e-9);

// Reproducible linear congruential generator, fixed across platforms:
//   state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)
// doubles take the top 53 bits.
class Lcg {
public:
    explicit Lcg(uint64_t seed) : state_(seed) {}
    uint64_t next_u64() {
        state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
        return state_;
    }
    double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }
    uint32_t next_below(uint32_t n) { return uint32_t((next_u64() >> 32) % n); }

private:
    uint64_t state_;
};

} // namespace cremona
