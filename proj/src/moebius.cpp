#include "moebius.hpp"

#include <cmath>
#include <stdexcept>

namespace cremona {

double chordal(const SpherePoint& a, const SpherePoint& b) {
    if (a.inf && b.inf) return 0.0;
    if (a.inf || b.inf) {
        const cplx& z = a.inf ? b.z : a.z;
        return 2.0 / std::sqrt(1.0 + std::norm(z));
    }
    return 2.0 * std::abs(a.z - b.z) / std::sqrt((1.0 + std::norm(a.z)) * (1.0 + std::norm(b.z)));
}

std::array<double, 3> sphere_coords(const SpherePoint& p) {
    if (p.inf) return {0.0, 0.0, 1.0};
    double n = std::norm(p.z);
    return {2.0 * p.z.real() / (1.0 + n), 2.0 * p.z.imag() / (1.0 + n), (n - 1.0) / (n + 1.0)};
}

const char* moebius_type_name(MoebiusType t) {
    switch (t) {
        case MoebiusType::Identity: return "Identity";
        case MoebiusType::Elliptic: return "Elliptic";
        case MoebiusType::Parabolic: return "Parabolic";
        case MoebiusType::Loxodromic: return "Loxodromic";
    }
    return "?";
}

MoebiusElement::MoebiusElement(cplx a, cplx b, cplx c, cplx d) : a_(a), b_(b), c_(c), d_(d) {
    det_ = a_ * d_ - b_ * c_;
    double mx = std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
    if (std::abs(det_) < 1e-14 * mx * mx) throw std::domain_error("singular Moebius matrix");
    rescale();
}

MoebiusElement::MoebiusElement(raw_tag, cplx a, cplx b, cplx c, cplx d, cplx det)
    : a_(a), b_(b), c_(c), d_(d), det_(det) {
    rescale();
}

// Long words scale the tracked determinant far below the entry size; that
// is expected, only a vanishing or non-finite matrix is an error here.
void MoebiusElement::rescale() {
    double mx = std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
    if (!(mx > 0.0) || !std::isfinite(mx)) throw std::domain_error("singular Moebius matrix");
    if (std::abs(det_) == 0.0) throw std::domain_error("singular Moebius matrix");
    double s = 1.0 / mx;
    a_ *= s;
    b_ *= s;
    c_ *= s;
    d_ *= s;
    det_ *= s * s;
}

std::array<cplx, 4> MoebiusElement::normalized() const {
    cplx s = 1.0 / std::sqrt(det_);
    return {a_ * s, b_ * s, c_ * s, d_ * s};
}

MoebiusElement MoebiusElement::inverse() const {
    return MoebiusElement(raw_tag{}, d_, -b_, -c_, a_, det_);
}

MoebiusElement operator*(const MoebiusElement& f, const MoebiusElement& g) {
    return MoebiusElement(MoebiusElement::raw_tag{}, f.a_ * g.a_ + f.b_ * g.c_,
                          f.a_ * g.b_ + f.b_ * g.d_, f.c_ * g.a_ + f.d_ * g.c_,
                          f.c_ * g.b_ + f.d_ * g.d_, f.det_ * g.det_);
}

SpherePoint MoebiusElement::apply(const SpherePoint& p) const {
    cplx num, den;
    if (p.inf || std::abs(p.z) > 1e100) {
        // fold through 1/z for stability near infinity
        cplx w = p.inf ? cplx(0.0) : 1.0 / p.z;
        num = a_ + b_ * w;
        den = c_ + d_ * w;
    } else {
        num = a_ * p.z + b_;
        den = c_ * p.z + d_;
    }
    if (std::abs(den) == 0.0) return SpherePoint::infinity();
    cplx q = num / den;
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) return SpherePoint::infinity();
    return SpherePoint::at(q);
}

double MoebiusElement::dist_to_pm_identity() const {
    auto n = normalized();
    auto maxnorm = [&](double sign) {
        double m = std::abs(n[0] - sign);
        m = std::max(m, std::abs(n[1]));
        m = std::max(m, std::abs(n[2]));
        m = std::max(m, std::abs(n[3] - sign));
        return m;
    };
    return std::min(maxnorm(1.0), maxnorm(-1.0));
}

MoebiusClass classify_moebius(const MoebiusElement& m, double eps) {
    if (m.dist_to_pm_identity() <= eps) return {MoebiusType::Identity, false};
    cplx tr2 = m.trace() * m.trace() / m.det();
    if (std::abs(tr2 - 4.0) <= eps) {
        bool exactly = std::abs(tr2 - 4.0) == 0.0;
        return {MoebiusType::Parabolic, !exactly};
    }
    if (std::abs(tr2.imag()) <= eps && tr2.real() >= 0.0 && tr2.real() < 4.0)
        return {MoebiusType::Elliptic, false};
    return {MoebiusType::Loxodromic, false};
}

std::optional<SpherePoint> MoebiusElement::attracting_fixed_point(double eps) const {
    MoebiusClass cls = classify_moebius(*this, eps);
    if (cls.type == MoebiusType::Identity || cls.type == MoebiusType::Elliptic) return std::nullopt;
    if (std::abs(c_) <= 1e-14) {
        // fixed points: infinity and b/(d-a)
        if (cls.type == MoebiusType::Parabolic || std::abs(a_ - d_) <= 1e-14)
            return SpherePoint::infinity();
        return std::abs(a_) > std::abs(d_) ? SpherePoint::infinity() : SpherePoint::at(b_ / (d_ - a_));
    }
    if (cls.type == MoebiusType::Parabolic) return SpherePoint::at((a_ - d_) / (2.0 * c_));
    cplx s = std::sqrt(trace() * trace() - 4.0 * det_);
    cplx z1 = (a_ - d_ + s) / (2.0 * c_);
    cplx z2 = (a_ - d_ - s) / (2.0 * c_);
    // the attracting fixed point is where |derivative| = |det|/|cz+d|^2 < 1
    return std::abs(c_ * z1 + d_) > std::abs(c_ * z2 + d_) ? SpherePoint::at(z1) : SpherePoint::at(z2);
}

std::string MoebiusElement::str() const {
    auto n = normalized();
    auto c = [](cplx z) {
        return "(" + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") + std::to_string(z.imag()) +
               "i)";
    };
    return "[" + c(n[0]) + " " + c(n[1]) + "; " + c(n[2]) + " " + c(n[3]) + "]";
}

} // namespace cremona
