// Finitely generated groups of Moebius transformations: word enumeration,
// orbits, limit-set sampling, the discreteness proxy and the Schottky
// constructor.
#pragma once

#include "moebius.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cremona {

struct KleinianGroup {
    std::vector<MoebiusElement> generators;
    std::vector<std::string> labels;
    int default_word_length = 8;

    static KleinianGroup cyclic(const MoebiusElement& g, std::string label = "g");
    static KleinianGroup from_generators(std::vector<MoebiusElement> gens,
                                         std::vector<std::string> labels = {});
    std::size_t rank() const { return generators.size(); }
};

// A word over the generators; letter k in [0, 2r) means generator k for
// k < r and the inverse of generator k - r otherwise.
using Word = std::vector<int>;

std::string word_name(const KleinianGroup& g, const Word& w);
MoebiusElement word_element(const KleinianGroup& g, const Word& w);

// Calls fn on every nonempty reduced word of length <= max_len.
void for_each_reduced_word(std::size_t rank, int max_len,
                           const std::function<bool(const Word&, const MoebiusElement&)>&,
                           const KleinianGroup& g);

struct OrbitResult {
    std::vector<SpherePoint> points; // sorted, deduplicated
    bool truncated = false;
};

// Images of the seed under all reduced words of length <= max_word_length
// (identity included), deduplicated within dedup_eps.
OrbitResult orbit(const KleinianGroup& g, const SpherePoint& seed, int max_word_length,
                  std::size_t point_budget = 2000000, double dedup_eps = 1e-12);

struct LimitCloud {
    std::vector<SpherePoint> points; // sorted, deduplicated
    std::string diagnostic;          // nonempty when no loxodromic words were found
};

// Attracting fixed points of `budget` random reduced words (length 12..19,
// drawn from the fixed LCG); bit-reproducible for a given rng_seed.
LimitCloud limit_set_approx(const KleinianGroup& g, int budget, uint64_t rng_seed);

// True iff no reduced word of length <= max_len other than relations of
// the group comes epsilon-close to +-identity in max-norm. Words that are
// numerically exact relations (within 1e-12) represent the trivial element
// and are skipped.
bool discreteness_proxy(const KleinianGroup& g, double epsilon, int max_len);

struct Circle {
    cplx center;
    double radius;
};

struct SchottkyPair {
    Circle source, target;
};

// Generators mapping the exterior of each source circle onto the interior
// of its partner. The 2k closed disks must be pairwise disjoint.
KleinianGroup schottky_build(const std::vector<SchottkyPair>& pairs);

// One-sided Hausdorff distance sup_a inf_b chordal(a, b).
double hausdorff_one_sided(const std::vector<SpherePoint>& from, const std::vector<SpherePoint>& to);

} // namespace cremona
