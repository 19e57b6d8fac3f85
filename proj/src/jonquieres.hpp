// Fiber-preserving birational maps of P1 x P1 in normal form: a Moebius
// action on the base and a PGL(2) action over the function field of the
// base. Also the bihomogeneous four-component model and the conversions
// between the two.
#pragma once

#include "cremona.hpp"

#include <array>
#include <optional>
#include <variant>

namespace cremona {

// 2x2 matrix over Q(i) taken modulo scalars; stored with the first nonzero
// entry scaled to 1.
struct Moebius2 {
    std::array<GaussianRational, 4> m; // a b c d acting as x -> (ax+b)/(cx+d)

    Moebius2() : m{GaussianRational(1), {}, {}, GaussianRational(1)} {}
    Moebius2(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d);

    static Moebius2 identity() { return Moebius2(); }
    static Moebius2 scaling(const GaussianRational& a) {
        return Moebius2(a, GaussianRational(0), GaussianRational(0), GaussianRational(1));
    }
    static Moebius2 translation(const GaussianRational& b) {
        return Moebius2(GaussianRational(1), b, GaussianRational(0), GaussianRational(1));
    }

    GaussianRational det() const { return m[0] * m[3] - m[1] * m[2]; }
    Moebius2 inverse() const { return Moebius2(m[3], -m[1], -m[2], m[0]); }
    bool is_identity() const;

    friend Moebius2 operator*(const Moebius2& f, const Moebius2& g);
    friend bool operator==(const Moebius2& f, const Moebius2& g) { return f.m == g.m; }

    // (a f + b)/(c f + d) for a rational function f of x.
    RationalFunction apply(const RationalFunction& f) const;
    std::optional<GaussianRational> apply(const GaussianRational& x) const;
};

class JonquieresElement {
public:
    JonquieresElement() = default;

    // Fiber entries are jointly reduced to coprime polynomial entries with
    // the first nonzero entry monic; a degenerate fiber matrix is rejected.
    JonquieresElement(Moebius2 eta, std::array<Poly, 4> fiber);

    static JonquieresElement from_rational_fiber(Moebius2 eta, const std::array<RationalFunction, 4>& fiber);

    static JonquieresElement identity() { return {}; }
    // (alpha x, beta y)
    static JonquieresElement diagonal(const GaussianRational& alpha, const GaussianRational& beta);
    // (x + a, y + b)
    static JonquieresElement translation(const GaussianRational& a, const GaussianRational& b);

    const Moebius2& eta() const { return eta_; }
    const std::array<Poly, 4>& fiber() const { return fiber_; }

    bool is_identity() const;
    // Largest x-degree among the fiber matrix entries.
    long fiber_x_degree() const;

    JonquieresElement inverse() const;

    friend bool operator==(const JonquieresElement& f, const JonquieresElement& g) {
        return f.eta_ == g.eta_ && f.fiber_ == g.fiber_;
    }
    friend bool operator!=(const JonquieresElement& f, const JonquieresElement& g) { return !(f == g); }

    // Exact image of an affine point; nullopt when the image leaves the
    // chart or the point is indeterminate.
    std::optional<std::pair<GaussianRational, GaussianRational>>
    apply(const GaussianRational& x, const GaussianRational& y) const;

    std::string str() const;

private:
    void normalize_fiber();

    Moebius2 eta_;
    std::array<Poly, 4> fiber_{Poly::constant(VarSet::X, GaussianRational(1)), Poly::zero(VarSet::X),
                               Poly::zero(VarSet::X), Poly::constant(VarSet::X, GaussianRational(1))};
};

JonquieresElement jonquieres_compose(const JonquieresElement& f, const JonquieresElement& g);

class P1xP1Map {
public:
    // (F0, F1) and (G0, G1) must each be bihomogeneous of a shared bidegree
    // and saturated.
    P1xP1Map(Poly f0, Poly f1, Poly g0, Poly g1);

    static P1xP1Map saturated_pairs(Poly f0, Poly f1, Poly g0, Poly g1);
    static P1xP1Map identity();

    const std::array<Poly, 4>& components() const { return comp_; }
    std::pair<long, long> first_bidegree() const { return *comp_[0].bidegree(); }
    std::pair<long, long> second_bidegree() const { return *comp_[2].bidegree(); }

    // Degree convention for growth classification: total bidegree of both
    // coordinate pairs.
    long degree() const;

    friend bool operator==(const P1xP1Map& a, const P1xP1Map& b);

    std::string str() const;

private:
    std::array<Poly, 4> comp_;
};

P1xP1Map compose(const P1xP1Map& f, const P1xP1Map& g);

P1xP1Map to_p1xp1(const JonquieresElement& j);

struct NotFiberPreserving {
    std::string reason;
};

// Extracts the normal form when the first coordinate pair only involves
// the base variables (and the map is of Jonquieres shape).
std::variant<JonquieresElement, NotFiberPreserving> detect_jonquieres(const P1xP1Map& m);

// Chart embedding (x, y) -> [1 : x : y].
CremonaMap to_cremona(const JonquieresElement& j);

} // namespace cremona
