#include "kleinian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace cremona {

KleinianGroup KleinianGroup::cyclic(const MoebiusElement& g, std::string label) {
    return {{g}, {std::move(label)}, 8};
}

KleinianGroup KleinianGroup::from_generators(std::vector<MoebiusElement> gens,
                                             std::vector<std::string> labels) {
    if (labels.empty())
        for (std::size_t i = 0; i < gens.size(); ++i) labels.push_back("g" + std::to_string(i + 1));
    if (labels.size() != gens.size()) throw std::invalid_argument("label/generator count mismatch");
    return {std::move(gens), std::move(labels), 8};
}

std::string word_name(const KleinianGroup& g, const Word& w) {
    std::string s;
    std::size_t r = g.rank();
    for (int k : w) {
        if (!s.empty()) s += ".";
        s += k < int(r) ? g.labels[k] : g.labels[k - r] + "^-1";
    }
    return s.empty() ? "id" : s;
}

MoebiusElement word_element(const KleinianGroup& g, const Word& w) {
    MoebiusElement m;
    std::size_t r = g.rank();
    for (int k : w) m = m * (k < int(r) ? g.generators[k] : g.generators[k - r].inverse());
    return m;
}

void for_each_reduced_word(std::size_t rank, int max_len,
                           const std::function<bool(const Word&, const MoebiusElement&)>& fn,
                           const KleinianGroup& g) {
    std::vector<MoebiusElement> letters;
    for (auto& m : g.generators) letters.push_back(m);
    for (auto& m : g.generators) letters.push_back(m.inverse());
    Word w;
    std::vector<MoebiusElement> stack{MoebiusElement::identity()};
    std::function<bool()> rec = [&]() -> bool {
        if (int(w.size()) >= max_len) return true;
        for (int k = 0; k < int(2 * rank); ++k) {
            if (!w.empty()) {
                int prev = w.back();
                if ((prev < int(rank) && k == prev + int(rank)) ||
                    (prev >= int(rank) && k == prev - int(rank)))
                    continue; // immediate cancellation
            }
            w.push_back(k);
            stack.push_back(stack.back() * letters[k]);
            if (!fn(w, stack.back())) return false;
            if (!rec()) return false;
            stack.pop_back();
            w.pop_back();
        }
        return true;
    };
    rec();
}

namespace {

bool sphere_less(const SpherePoint& a, const SpherePoint& b) {
    if (a.inf != b.inf) return b.inf;
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
}

std::vector<SpherePoint> sort_dedup(std::vector<SpherePoint> pts, double eps) {
    std::sort(pts.begin(), pts.end(), sphere_less);
    std::vector<SpherePoint> out;
    for (auto& p : pts) {
        bool dup = false;
        for (std::size_t k = out.size(); k-- > 0;) {
            if (!p.inf && !out[k].inf && p.z.real() - out[k].z.real() > eps * 2) break;
            if (chordal(p, out[k]) <= eps) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(p);
    }
    return out;
}

} // namespace

OrbitResult orbit(const KleinianGroup& g, const SpherePoint& seed, int max_word_length,
                  std::size_t point_budget, double dedup_eps) {
    if (max_word_length < 1) throw std::invalid_argument("word length must be >= 1");
    OrbitResult res;
    std::vector<SpherePoint> pts{seed};
    for_each_reduced_word(
        g.rank(), max_word_length,
        [&](const Word&, const MoebiusElement& m) {
            pts.push_back(m.apply(seed));
            if (pts.size() > point_budget) {
                res.truncated = true;
                return false;
            }
            return true;
        },
        g);
    res.points = sort_dedup(std::move(pts), dedup_eps);
    return res;
}

LimitCloud limit_set_approx(const KleinianGroup& g, int budget, uint64_t rng_seed) {
    LimitCloud cloud;
    Lcg rng(rng_seed);
    std::size_t r = g.rank();
    std::vector<MoebiusElement> letters;
    for (auto& m : g.generators) letters.push_back(m);
    for (auto& m : g.generators) letters.push_back(m.inverse());

    std::vector<SpherePoint> pts;
    int found = 0;
    for (int trial = 0; trial < budget; ++trial) {
        int len = 12 + int(rng.next_below(8));
        MoebiusElement m;
        int prev = -1;
        for (int i = 0; i < len; ++i) {
            int k;
            do {
                k = int(rng.next_below(uint32_t(2 * r)));
            } while (prev >= 0 && ((prev < int(r) && k == prev + int(r)) ||
                                   (prev >= int(r) && k == prev - int(r))));
            m = m * letters[k];
            prev = k;
        }
        auto fix = m.attracting_fixed_point();
        if (fix) {
            pts.push_back(*fix);
            ++found;
        }
    }
    cloud.points = sort_dedup(std::move(pts), 1e-12);
    if (found == 0) cloud.diagnostic = "no loxodromic or parabolic words found";
    return cloud;
}

bool discreteness_proxy(const KleinianGroup& g, double epsilon, int max_len) {
    if (max_len < 2) throw std::invalid_argument("proxy needs word length >= 2");
    bool ok = true;
    for_each_reduced_word(
        g.rank(), max_len,
        [&](const Word&, const MoebiusElement& m) {
            double d = m.dist_to_pm_identity();
            if (d > 1e-12 && d <= epsilon) {
                ok = false;
                return false;
            }
            return true;
        },
        g);
    return ok;
}

KleinianGroup schottky_build(const std::vector<SchottkyPair>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("no circle pairs");
    std::vector<Circle> circles;
    for (auto& p : pairs) {
        if (p.source.radius <= 0 || p.target.radius <= 0)
            throw std::domain_error("circle radius must be positive");
        circles.push_back(p.source);
        circles.push_back(p.target);
    }
    for (std::size_t i = 0; i < circles.size(); ++i)
        for (std::size_t j = i + 1; j < circles.size(); ++j) {
            double gap = std::abs(circles[i].center - circles[j].center) -
                         (circles[i].radius + circles[j].radius);
            if (gap <= 0)
                throw std::domain_error("Schottky disks " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are not disjoint");
        }

    std::vector<MoebiusElement> gens;
    std::vector<std::string> labels;
    int idx = 1;
    for (auto& p : pairs) {
        // z -> c2 + r1 r2 / (z - c1): source circle onto target circle,
        // exterior onto interior
        cplx c1 = p.source.center, c2 = p.target.center;
        double rr = p.source.radius * p.target.radius;
        gens.emplace_back(c2, rr - c1 * c2, 1.0, -c1);
        labels.push_back("s" + std::to_string(idx++));
    }
    return KleinianGroup::from_generators(std::move(gens), std::move(labels));
}

double hausdorff_one_sided(const std::vector<SpherePoint>& from, const std::vector<SpherePoint>& to) {
    if (to.empty()) return 2.0;
    double worst = 0.0;
    for (auto& a : from) {
        double best = 2.0;
        for (auto& b : to) {
            double d = chordal(a, b);
            if (d < best) best = d;
            if (best < worst) break; // cannot worsen the supremum
        }
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace cremona
