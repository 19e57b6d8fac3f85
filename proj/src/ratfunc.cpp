#include "ratfunc.hpp"

namespace cremona {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars()) throw std::logic_error("mixed variable spaces");
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(den_.vars(), GaussianRational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *poly_divide_exact(num_, g);
        den_ = *poly_divide_exact(den_, g);
    }
    GaussianRational lead = den_.leading_term().c;
    if (!lead.is_one()) {
        GaussianRational inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction acc = RationalFunction::constant(vars(), GaussianRational(1));
    RationalFunction base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
    std::string d = den_.term_count() > 1 ? "(" + den_.str() + ")" : den_.str();
    return n + "/" + d;
}

RationalFunction substitute(const Poly& p, const std::vector<RationalFunction>& args) {
    if (int(args.size()) != p.nvars()) throw std::logic_error("substitution arity mismatch");
    VarSet target = args.empty() ? p.vars() : args[0].vars();
    for (auto& a : args)
        if (a.vars() != target) throw std::logic_error("mixed variable spaces");

    // Common denominator prod d_i^(deg_i p) keeps every summand polynomial.
    std::vector<long> maxdeg(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) maxdeg[i] = std::max(0l, p.degree_in(int(i)));

    std::vector<std::vector<Poly>> npow(args.size()), dpow(args.size());
    auto cached = [&](std::vector<Poly>& cache, const Poly& base, long k) -> const Poly& {
        if (cache.empty()) cache.push_back(Poly::constant(base.vars(), GaussianRational(1)));
        while (long(cache.size()) <= k) cache.push_back(cache.back() * base);
        return cache[k];
    };

    Poly num = Poly::zero(target);
    for (auto& t : p.terms()) {
        Poly m = Poly::constant(target, t.c);
        for (std::size_t i = 0; i < args.size(); ++i) {
            m = m * cached(npow[i], args[i].num(), t.e[i]);
            m = m * cached(dpow[i], args[i].den(), maxdeg[i] - t.e[i]);
        }
        num += m;
    }
    Poly den = Poly::constant(target, GaussianRational(1));
    for (std::size_t i = 0; i < args.size(); ++i) den = den * cached(dpow[i], args[i].den(), maxdeg[i]);
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction substitute(const RationalFunction& f, const std::vector<RationalFunction>& args) {
    RationalFunction n = substitute(f.num(), args);
    RationalFunction d = substitute(f.den(), args);
    return n / d;
}

} // namespace cremona
