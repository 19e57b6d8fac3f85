#include "toric.hpp"

#include <cmath>
#include <cstdlib>

namespace cremona {

long mat2z_det(const Mat2z& A) { return A[0] * A[3] - A[1] * A[2]; }

Mat2z mat2z_mul(const Mat2z& A, const Mat2z& B) {
    return {A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3], A[2] * B[0] + A[3] * B[2],
            A[2] * B[1] + A[3] * B[3]};
}

MonomialMap::MonomialMap(GaussianRational a, GaussianRational b, Mat2z mat)
    : alpha(std::move(a)), beta(std::move(b)), A(mat) {
    if (alpha.is_zero() || beta.is_zero()) throw std::domain_error("monomial scalars must be nonzero");
    long d = mat2z_det(A);
    if (d != 1 && d != -1) throw std::domain_error("matrix must lie in GL(2,Z)");
}

MonomialMap MonomialMap::inverse() const {
    long d = mat2z_det(A);
    Mat2z inv = {d * A[3], -d * A[1], -d * A[2], d * A[0]};
    GaussianRational ia = (alpha.pow(inv[0]) * beta.pow(inv[1])).inverse();
    GaussianRational ib = (alpha.pow(inv[2]) * beta.pow(inv[3])).inverse();
    return {std::move(ia), std::move(ib), inv};
}

MonomialMap monomial_compose(const MonomialMap& f, const MonomialMap& g) {
    GaussianRational a = f.alpha * g.alpha.pow(f.A[0]) * g.beta.pow(f.A[1]);
    GaussianRational b = f.beta * g.alpha.pow(f.A[2]) * g.beta.pow(f.A[3]);
    return {std::move(a), std::move(b), mat2z_mul(f.A, g.A)};
}

GrowthClass monomial_type(const MonomialMap& f) {
    long tr = f.A[0] + f.A[3];
    long det = mat2z_det(f.A);
    long disc = tr * tr - 4 * det;
    if (det == 1) {
        if (std::labs(tr) <= 1) return {GrowthType::Bounded, 1.0}; // order 3, 4 or 6
        if (std::labs(tr) == 2) {
            bool is_pm_id = (f.A[1] == 0 && f.A[2] == 0 && f.A[0] == f.A[3]);
            return is_pm_id ? GrowthClass{GrowthType::Bounded, 1.0}
                            : GrowthClass{GrowthType::Linear, 1.0};
        }
        return {GrowthType::Exponential, (std::labs(tr) + std::sqrt(double(disc))) / 2.0};
    }
    // det == -1: eigenvalues are real with product -1
    if (tr == 0) return {GrowthType::Bounded, 1.0}; // involution
    return {GrowthType::Exponential, (std::labs(tr) + std::sqrt(double(disc))) / 2.0};
}

std::vector<Vec2z> valuation_orbit(const Mat2z& A, const Vec2z& v, int n) {
    if (n < 1) throw std::invalid_argument("orbit length must be >= 1");
    std::vector<Vec2z> out;
    Vec2z cur = v;
    for (int k = 0; k < n; ++k) {
        long long x = A[0] * cur[0] + A[1] * cur[1];
        long long y = A[2] * cur[0] + A[3] * cur[1];
        if (std::llabs(x) > (1ll << 60) || std::llabs(y) > (1ll << 60))
            throw std::overflow_error("valuation orbit entry overflow");
        cur = {x, y};
        out.push_back(cur);
    }
    return out;
}

namespace {

RationalFunction monomial_rf(const GaussianRational& coef, long ex, long ey) {
    RationalFunction x = RationalFunction::variable(VarSet::XY, 0);
    RationalFunction y = RationalFunction::variable(VarSet::XY, 1);
    return RationalFunction::constant(VarSet::XY, coef) * x.pow(ex) * y.pow(ey);
}

RationalFunction rf_derivative(const RationalFunction& f, int var) {
    Poly n = f.num().derivative(var) * f.den() - f.num() * f.den().derivative(var);
    return RationalFunction(std::move(n), f.den() * f.den());
}

} // namespace

long logform_pullback_scalar(const MonomialMap& f) {
    long det = mat2z_det(f.A);

    // Pullback of dx dy / (x y): jacobian(P, Q) * x * y / (P * Q) must be
    // the constant det(A).
    RationalFunction P = monomial_rf(f.alpha, f.A[0], f.A[1]);
    RationalFunction Q = monomial_rf(f.beta, f.A[2], f.A[3]);
    RationalFunction jac = rf_derivative(P, 0) * rf_derivative(Q, 1) -
                           rf_derivative(P, 1) * rf_derivative(Q, 0);
    RationalFunction x = RationalFunction::variable(VarSet::XY, 0);
    RationalFunction y = RationalFunction::variable(VarSet::XY, 1);
    RationalFunction scalar = jac * x * y / (P * Q);
    if (!scalar.is_constant() || scalar.constant_value() != GaussianRational(det))
        throw std::logic_error("log-form pullback mismatch: internal invariant violation");
    return det;
}

P1xP1Map to_p1xp1(const MonomialMap& f) {
    auto pair_of = [](const GaussianRational& coef, long ex, long ey) {
        auto pos = [](long v) { return uint32_t(v > 0 ? v : 0); };
        auto neg = [](long v) { return uint32_t(v < 0 ? -v : 0); };
        Poly p0 = Poly::monomial(VarSet::BIPROJ, Exp{pos(ex), neg(ex), pos(ey), neg(ey)}, coef);
        Poly p1 = Poly::monomial(VarSet::BIPROJ, Exp{neg(ex), pos(ex), neg(ey), pos(ey)},
                                 GaussianRational(1));
        return std::make_pair(p0, p1);
    };
    auto [f0, f1] = pair_of(f.alpha, f.A[0], f.A[1]);
    auto [g0, g1] = pair_of(f.beta, f.A[2], f.A[3]);
    return P1xP1Map(std::move(f0), std::move(f1), std::move(g0), std::move(g1));
}

} // namespace cremona
