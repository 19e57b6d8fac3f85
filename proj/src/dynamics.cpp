#include "dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace cremona {

const char* growth_label(GrowthType t) {
    switch (t) {
        case GrowthType::Bounded: return "Elliptic";
        case GrowthType::Linear: return "JonquieresTwist";
        case GrowthType::Quadratic: return "HalphenTwist";
        case GrowthType::Exponential: return "Loxodromic";
        case GrowthType::Unknown: return "Unknown";
    }
    return "Unknown";
}

namespace {

template <class Map, class Deg, class Comp>
DegreeSequence iterate_degrees(const Map& f, int n, DegreeModel model, Deg deg, Comp comp) {
    if (n < 1) throw std::invalid_argument("iteration count must be >= 1");
    DegreeSequence out;
    out.model = model;
    Map acc = f;
    out.degrees.push_back(deg(acc));
    for (int k = 2; k <= n; ++k) {
        try {
            acc = comp(f, acc);
        } catch (const TermBudgetExceeded&) {
            out.truncated = true;
            break;
        }
        out.degrees.push_back(deg(acc));
    }
    return out;
}

} // namespace

DegreeSequence degree_sequence(const CremonaMap& f, int n) {
    return iterate_degrees(
        f, n, DegreeModel::P2, [](const CremonaMap& m) { return long(m.degree()); },
        [](const CremonaMap& a, const CremonaMap& b) { return compose(a, b); });
}

DegreeSequence degree_sequence(const P1xP1Map& f, int n) {
    return iterate_degrees(
        f, n, DegreeModel::P1xP1, [](const P1xP1Map& m) { return long(m.degree()); },
        [](const P1xP1Map& a, const P1xP1Map& b) { return compose(a, b); });
}

DegreeSequence degree_sequence(const JonquieresElement& f, int n, DegreeModel model) {
    auto deg = [model](const JonquieresElement& j) {
        return long(model == DegreeModel::P2 ? to_cremona(j).degree() : to_p1xp1(j).degree());
    };
    return iterate_degrees(f, n, model, deg, [](const JonquieresElement& a, const JonquieresElement& b) {
        return jonquieres_compose(a, b);
    });
}

std::vector<long> jonquieres_fiber_degrees(const JonquieresElement& f, int n) {
    std::vector<long> out;
    JonquieresElement acc = f;
    out.push_back(acc.fiber_x_degree());
    for (int k = 2; k <= n; ++k) {
        acc = jonquieres_compose(f, acc);
        out.push_back(acc.fiber_x_degree());
    }
    return out;
}

namespace {

// Last max(4, len/2) entries.
template <class T>
std::vector<T> tail_window(const std::vector<T>& v) {
    std::size_t w = std::max<std::size_t>(4, v.size() / 2);
    w = std::min(w, v.size());
    return {v.end() - w, v.end()};
}

bool constant_positive(const std::vector<long>& v, bool require_positive) {
    if (v.empty()) return false;
    for (auto x : v)
        if (x != v[0]) return false;
    return !require_positive || v[0] > 0;
}

std::vector<long> differences(const std::vector<long>& v) {
    std::vector<long> d;
    for (std::size_t i = 1; i < v.size(); ++i) d.push_back(v[i] - v[i - 1]);
    return d;
}

} // namespace

GrowthClass classify_growth(const DegreeSequence& seq) {
    const auto& d = seq.degrees;
    if (d.size() < 8) return {GrowthType::Unknown, 1.0};

    auto tail = tail_window(d);
    if (constant_positive(tail, false)) return {GrowthType::Bounded, 1.0};
    // Finite-order and other bounded elements can have periodic, nonconstant
    // degree sequences; no growth in the tail half still means bounded.
    long head_max = *std::max_element(d.begin(), d.end() - long(tail.size()));
    long tail_max = *std::max_element(tail.begin(), tail.end());
    if (tail_max <= head_max) return {GrowthType::Bounded, 1.0};

    auto d1 = differences(d);
    if (constant_positive(tail_window(d1), true)) return {GrowthType::Linear, 1.0};
    auto d2 = differences(d1);
    if (constant_positive(tail_window(d2), true)) return {GrowthType::Quadratic, 1.0};

    if (d.size() >= 4) {
        double rmin = 1e300, rmax = 0;
        for (std::size_t i = d.size() - 4; i + 1 < d.size(); ++i) {
            double r = double(d[i + 1]) / double(d[i]);
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
        }
        double r = double(d.back()) / double(d[d.size() - 2]);
        if (rmax - rmin < 1e-2 && r > 1.05) return {GrowthType::Exponential, r};
    }
    return {GrowthType::Unknown, 1.0};
}

DynamicalDegree dynamical_degree(const DegreeSequence& seq) {
    const auto& d = seq.degrees;
    if (d.size() < 4) throw std::invalid_argument("dynamical degree needs at least 4 degrees");
    DynamicalDegree out;
    out.root_estimate = std::pow(double(d.back()), 1.0 / double(d.size()));
    double ratio = double(d.back()) / double(d[d.size() - 2]);
    GrowthClass cls = classify_growth(seq);
    if (cls.type == GrowthType::Exponential ||
        (d.size() < 8 && ratio > 1.05)) { // short sequences: trust the ratio
        out.lambda = ratio;
        out.translation_length = std::log(ratio);
    } else {
        out.lambda = 1.0;
        out.translation_length = 0.0;
    }
    return out;
}

} // namespace cremona
