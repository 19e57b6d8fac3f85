// Rational functions as reduced fractions of polynomials. The denominator
// is kept monic, so equal functions have identical representations.
#pragma once

#include "poly.hpp"

namespace cremona {

class RationalFunction {
public:
    explicit RationalFunction(VarSet vs = VarSet::X)
        : num_(Poly::zero(vs)), den_(Poly::constant(vs, GaussianRational(1))) {}

    // Reduces and canonicalizes; throws on zero denominator.
    RationalFunction(Poly num, Poly den);

    static RationalFunction from_poly(Poly p) {
        VarSet vs = p.vars();
        return RationalFunction(std::move(p), Poly::constant(vs, GaussianRational(1)));
    }
    static RationalFunction constant(VarSet vs, const GaussianRational& c) {
        return from_poly(Poly::constant(vs, c));
    }
    static RationalFunction variable(VarSet vs, int i) { return from_poly(Poly::variable(vs, i)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    VarSet vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    GaussianRational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RationalFunction operator-() const;
    RationalFunction inverse() const;
    RationalFunction pow(long e) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const;

private:
    Poly num_, den_;
};

// Exact evaluation of p with each variable replaced by the corresponding
// rational function.
RationalFunction substitute(const Poly& p, const std::vector<RationalFunction>& args);

RationalFunction substitute(const RationalFunction& f, const std::vector<RationalFunction>& args);

} // namespace cremona
