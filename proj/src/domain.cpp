#include "domain.hpp"

#include <cmath>
#include <stdexcept>

namespace cremona {

namespace {

const double kPi = 3.14159265358979323846;

// Cayley map taking the unit disk onto the upper half plane.
SpherePoint disk_to_halfplane(const SpherePoint& w) {
    if (w.inf) return SpherePoint::at(cplx(0, -1));
    cplx den = 1.0 - w.z;
    if (std::abs(den) < 1e-300) return SpherePoint::infinity();
    return SpherePoint::at(cplx(0, 1) * (1.0 + w.z) / den);
}

} // namespace

bool region_contains(Region r, const SpherePoint& p, double tol) {
    switch (r) {
        case Region::C: return !p.inf;
        case Region::CStar: return !p.inf && p.z != cplx(0.0);
        case Region::UnitDisk: return !p.inf && std::abs(p.z) < 1.0 + tol;
        case Region::UpperHalfPlane: return !p.inf && p.z.imag() > -tol;
        case Region::P1: return true;
    }
    return false;
}

SpherePoint region_sample(Region r, Lcg& rng) {
    switch (r) {
        case Region::C: // uniform in a bounded chart
            return SpherePoint::at(cplx(4 * rng.next_unit() - 2, 4 * rng.next_unit() - 2));
        case Region::CStar: { // exponential-radial: both ends of the cylinder
            double lr = 6 * rng.next_unit() - 3;
            double th = 2 * kPi * rng.next_unit();
            return SpherePoint::at(std::polar(std::exp(lr), th));
        }
        case Region::UnitDisk: { // hyperbolic-area uniform up to radius 3
            double cr = 1 + rng.next_unit() * (std::cosh(3.0) - 1);
            double rho = std::acosh(cr);
            double er = std::tanh(rho / 2);
            double th = 2 * kPi * rng.next_unit();
            return SpherePoint::at(std::polar(er, th));
        }
        case Region::UpperHalfPlane: {
            SpherePoint w = region_sample(Region::UnitDisk, rng);
            return disk_to_halfplane(w);
        }
        case Region::P1: { // chordal-uniform
            double zc = 2 * rng.next_unit() - 1;
            double th = 2 * kPi * rng.next_unit();
            if (zc > 1 - 1e-12) zc = 1 - 1e-12;
            double r = std::sqrt((1 + zc) / (1 - zc));
            return SpherePoint::at(std::polar(r, th));
        }
    }
    return SpherePoint::at(0.0);
}

DomainDescriptor DomainDescriptor::product(DomainKind kind) {
    DomainDescriptor d;
    d.kind = kind;
    switch (kind) {
        case DomainKind::AffinePlane: d.first = Region::C; d.second = Region::C; break;
        case DomainKind::CStarCross: d.first = Region::C; d.second = Region::CStar; break;
        case DomainKind::TorusCover: d.first = Region::CStar; d.second = Region::CStar; break;
        case DomainKind::PuncturedPlane: d.first = Region::C; d.second = Region::C; break;
        case DomainKind::HalfPlaneCross: d.first = Region::UpperHalfPlane; d.second = Region::C; break;
        default: throw std::logic_error("kind needs explicit region parameters");
    }
    return d;
}

DomainDescriptor DomainDescriptor::disk_cross(DomainKind kind, Region base) {
    DomainDescriptor d;
    d.kind = kind;
    d.first = base;
    switch (kind) {
        case DomainKind::DiskCross: d.second = Region::C; break;
        case DomainKind::DiskCrossStar: d.second = Region::CStar; break;
        case DomainKind::DiskCrossP1: d.second = Region::P1; break;
        case DomainKind::ProductOfComponents: d.second = base; break;
        default: throw std::logic_error("not a disk-like kind");
    }
    return d;
}

DomainDescriptor DomainDescriptor::fiber_complement(int n) {
    DomainDescriptor d;
    d.kind = DomainKind::ZariskiFiberComplement;
    d.first = Region::C;
    d.second = Region::CStar;
    d.hirzebruch_index = n;
    return d;
}

bool DomainDescriptor::contains(const GalleryPoint& p) const {
    switch (kind) {
        case DomainKind::PuncturedPlane:
            return !p.x.inf && !p.y.inf && !(p.x.z == cplx(0.0) && p.y.z == cplx(0.0));
        case DomainKind::ZariskiFiberComplement:
            // The chart covers the fibers over finite base points; the fiber
            // over infinity lives in the blown-up model and is not
            // representable as a coordinate pair here.
            return !p.x.inf && region_contains(Region::CStar, p.y);
        default:
            return region_contains(first, p.x) && region_contains(second, p.y);
    }
}

std::vector<GalleryPoint> DomainDescriptor::sample(int count, uint64_t seed) const {
    Lcg rng(seed);
    std::vector<GalleryPoint> out;
    out.reserve(count);
    while (int(out.size()) < count) {
        GalleryPoint p{region_sample(first, rng), region_sample(second, rng)};
        if (kind == DomainKind::PuncturedPlane &&
            std::max(std::abs(p.x.z), std::abs(p.y.z)) < 0.05)
            continue; // stay clearly away from the puncture
        if (!contains(p)) continue;
        out.push_back(p);
    }
    return out;
}

std::string DomainDescriptor::str() const {
    auto rname = [](Region r) {
        switch (r) {
            case Region::C: return "C";
            case Region::CStar: return "C*";
            case Region::UnitDisk: return "D";
            case Region::UpperHalfPlane: return "H";
            case Region::P1: return "P1";
        }
        return "?";
    };
    switch (kind) {
        case DomainKind::PuncturedPlane: return "C^2 minus the origin";
        case DomainKind::ZariskiFiberComplement:
            return "Hirzebruch H_" + std::to_string(hirzebruch_index) +
                   " minus the two sections (C* fibers)";
        default: return std::string(rname(first)) + " x " + rname(second);
    }
}

} // namespace cremona
