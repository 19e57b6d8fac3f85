// Exact scalars: Gaussian rationals a + b*i with arbitrary-precision
// rational parts. The coefficient field for all exact computation.
#pragma once

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace cremona {

class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
    GaussianRational(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_rational_integer() const { return im_ == 0 && re_.get_den() == 1; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational conj() const { return {re_, -im_}; }

    // |z|^2, a nonnegative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        if (!(o.im_ == 0)) im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        if (!(o.im_ == 0)) im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Root-of-unity order in Q(i): 1, 2 or 4; 0 when not a root of unity.
    int root_of_unity_order() const;

    GaussianRational pow(long e) const;

    // "3", "-1/2", "2/3*i", "1+i", "1/2-3/4*i"; reparsable by the expression parser.
    std::string str() const;

    // Total order used for deterministic tie-breaking; not an algebraic order.
    static int cmp(const GaussianRational& a, const GaussianRational& b);

    double re_double() const { return re_.get_d(); }
    double im_double() const { return im_.get_d(); }

private:
    mpq_class re_, im_;
};

} // namespace cremona
