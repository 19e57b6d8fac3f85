#include "scalar.hpp"

#include <stdexcept>

namespace cremona {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (im_ == 0 && o.im_ == 0) { // the common, purely real case
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

int GaussianRational::root_of_unity_order() const {
    if (im_ == 0) {
        if (re_ == 1) return 1;
        if (re_ == -1) return 2;
        return 0;
    }
    if (re_ == 0 && (im_ == 1 || im_ == -1)) return 4;
    return 0;
}

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

namespace {

std::string rat_str(const mpq_class& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

// Imaginary part as "c/d*i", with unit coefficients collapsed to "i"/"-i".
std::string imag_str(const mpq_class& q) {
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return rat_str(q) + "*i";
}

} // namespace

std::string GaussianRational::str() const {
    if (im_ == 0) return rat_str(re_);
    if (re_ == 0) return imag_str(im_);
    std::string s = rat_str(re_);
    if (im_ > 0)
        s += "+" + imag_str(im_);
    else
        s += "-" + imag_str(-im_);
    return s;
}

int GaussianRational::cmp(const GaussianRational& a, const GaussianRational& b) {
    int c = ::cmp(a.re_, b.re_);
    if (c != 0) return c;
    return ::cmp(a.im_, b.im_);
}

} // namespace cremona
