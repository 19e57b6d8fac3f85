// Birational self-maps of the projective plane: homogeneous coordinate
// triples with exact composition, saturation, evaluation and inverse
// verification.
#pragma once

#include "ratfunc.hpp"

#include <array>
#include <optional>

namespace cremona {

struct ProjectivePoint {
    std::array<GaussianRational, 3> c;

    // Scale so the first nonzero coordinate is 1.
    ProjectivePoint canonical() const;
    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);
};

class CremonaMap {
public:
    // Components must be homogeneous of one common degree, not all zero and
    // saturated (no common factor); violations are rejected.
    CremonaMap(Poly c0, Poly c1, Poly c2);

    // Divides out the common factor first, then constructs.
    static CremonaMap saturated(Poly c0, Poly c1, Poly c2);
    static CremonaMap identity();
    // The standard quadratic involution [x1 x2 : x0 x2 : x0 x1].
    static CremonaMap standard_involution();

    const std::array<Poly, 3>& components() const { return comp_; }
    long degree() const { return comp_[0].total_degree(); }
    bool is_scalar_identity() const;

    friend bool operator==(const CremonaMap& a, const CremonaMap& b);

    std::string str() const;

private:
    explicit CremonaMap(std::array<Poly, 3> comp) : comp_(std::move(comp)) {}
    std::array<Poly, 3> comp_;
};

// Saturated composition f o g.
CremonaMap compose(const CremonaMap& f, const CremonaMap& g);

// Image of p, or nullopt when p is a point of indeterminacy.
std::optional<ProjectivePoint> evaluate(const CremonaMap& f, const ProjectivePoint& p);

// True iff both compositions saturate to a scalar multiple of the identity.
bool check_inverse(const CremonaMap& f, const CremonaMap& g);

// x^i y^j -> x0^(deg-i-j) x1^i x2^j; deg must dominate the total degree.
Poly homogenize_xy(const Poly& p, long deg);

// Chart (x, y) -> [1 : x : y]: clear denominators and saturate.
CremonaMap affine_to_cremona(const RationalFunction& fx, const RationalFunction& fy);

} // namespace cremona
