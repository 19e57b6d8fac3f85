// Degree growth under iteration: exact degree sequences, the four-type
// classification, and dynamical degree / translation length estimates.
#pragma once

#include "jonquieres.hpp"

#include <vector>

namespace cremona {

enum class DegreeModel { P2, P1xP1 };

struct DegreeSequence {
    std::vector<long> degrees; // entry n-1 holds deg(f^n)
    DegreeModel model = DegreeModel::P2;
    bool truncated = false;    // resource budget stopped the iteration early
};

enum class GrowthType { Bounded, Linear, Quadratic, Exponential, Unknown };

// Bounded -> elliptic, Linear -> Jonquieres twist, Quadratic -> Halphen
// twist, Exponential -> loxodromic.
const char* growth_label(GrowthType t);

struct GrowthClass {
    GrowthType type = GrowthType::Unknown;
    double lambda_estimate = 1.0; // > 1 exactly when type is Exponential
};

struct DynamicalDegree {
    double lambda = 1.0;
    double root_estimate = 1.0; // (deg f^N)^(1/N) cross-check
    double translation_length = 0.0;
};

DegreeSequence degree_sequence(const CremonaMap& f, int n);
DegreeSequence degree_sequence(const P1xP1Map& f, int n);
DegreeSequence degree_sequence(const JonquieresElement& f, int n,
                               DegreeModel model = DegreeModel::P1xP1);

// Max x-degree of the fiber matrix of f^1..f^n.
std::vector<long> jonquieres_fiber_degrees(const JonquieresElement& f, int n);

// Decision procedure on the tail of the sequence; sequences shorter than 8
// entries come back Unknown.
GrowthClass classify_growth(const DegreeSequence& seq);

// Ratio estimate deg(f^N)/deg(f^(N-1)) with the N-th root as cross-check;
// requires at least 4 entries.
DynamicalDegree dynamical_degree(const DegreeSequence& seq);

} // namespace cremona
