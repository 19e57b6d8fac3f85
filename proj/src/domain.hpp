// Invariant open sets for the gallery cases: membership predicates and
// seeded samplers over products of standard regions.
#pragma once

#include "moebius.hpp"

#include <string>
#include <vector>

namespace cremona {

enum class Region { C, CStar, UnitDisk, UpperHalfPlane, P1 };

enum class DomainKind {
    AffinePlane,           // C x C
    CStarCross,            // C x C*
    TorusCover,            // C* x C*
    PuncturedPlane,        // C^2 minus the origin
    HalfPlaneCross,        // H x C
    DiskCross,             // disk-like x C
    DiskCrossStar,         // disk-like x C*
    DiskCrossP1,           // disk-like x P1
    ProductOfComponents,   // disk-like x disk-like
    ZariskiFiberComplement // Hirzebruch chart: fibers punctured at the two sections
};

struct GalleryPoint {
    SpherePoint x, y;
};

class DomainDescriptor {
public:
    DomainKind kind;
    Region first = Region::C;  // base factor for the disk-like kinds
    Region second = Region::C; // fiber factor where the kind leaves a choice
    int hirzebruch_index = 0;  // ZariskiFiberComplement only

    static DomainDescriptor product(DomainKind kind);
    static DomainDescriptor disk_cross(DomainKind kind, Region base);
    static DomainDescriptor fiber_complement(int n);

    bool contains(const GalleryPoint& p) const;
    // `count` membership-satisfying points, reproducible for a given seed.
    std::vector<GalleryPoint> sample(int count, uint64_t seed) const;
    std::string str() const;
};

bool region_contains(Region r, const SpherePoint& p, double tol = 1e-9);
SpherePoint region_sample(Region r, Lcg& rng);

} // namespace cremona
