// Monomial maps (x, y) -> (alpha x^a y^b, beta x^c y^d) with integer
// matrix of determinant +-1: semidirect composition, dynamical type from
// the matrix, valuation orbits and the logarithmic 2-form pullback check.
#pragma once

#include "dynamics.hpp"

#include <array>

namespace cremona {

using Mat2z = std::array<long, 4>;  // a b c d, row major
using Vec2z = std::array<long long, 2>;

long mat2z_det(const Mat2z& A);
Mat2z mat2z_mul(const Mat2z& A, const Mat2z& B);

struct MonomialMap {
    GaussianRational alpha, beta;
    Mat2z A;

    // Requires nonzero scalars and det(A) = +-1.
    MonomialMap(GaussianRational alpha, GaussianRational beta, Mat2z A);

    static MonomialMap identity() {
        return {GaussianRational(1), GaussianRational(1), Mat2z{1, 0, 0, 1}};
    }

    MonomialMap inverse() const;
    friend bool operator==(const MonomialMap& f, const MonomialMap& g) {
        return f.alpha == g.alpha && f.beta == g.beta && f.A == g.A;
    }
};

// Semidirect product law: matrix parts multiply, the scalars of g are
// raised to the exponents of f and multiplied onto the scalars of f.
MonomialMap monomial_compose(const MonomialMap& f, const MonomialMap& g);

// Loxodromic with the spectral radius when the matrix is hyperbolic,
// Jonquieres twist for +-unipotent non-identity, elliptic for finite order.
GrowthClass monomial_type(const MonomialMap& f);

// [A v, A^2 v, ..., A^n v]
std::vector<Vec2z> valuation_orbit(const Mat2z& A, const Vec2z& v, int n);

// det(A), verified against the exact Jacobian pullback of dx^dy/(xy).
long logform_pullback_scalar(const MonomialMap& f);

// Clears negative exponents into the bihomogeneous model.
P1xP1Map to_p1xp1(const MonomialMap& f);

} // namespace cremona
