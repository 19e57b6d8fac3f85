// Executable constructions for the rational-surface cases of the
// classification table (rows 7-12 and 15-20), plus the proxy verification
// harness for the group-action axioms: regularity, invariance, freeness,
// discontinuity and lattice rank.
#pragma once

#include "centralizer.hpp"
#include "domain.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>

namespace cremona {

// (x, y) -> (ax x + bx, ay y + by); the numeric carrier for generators
// whose coefficients are not Gaussian rational (the Inoue case).
struct AffineDiagMap {
    cplx ax = 1, bx = 0, ay = 1, by = 0;

    AffineDiagMap inverse() const { return {1.0 / ax, -bx / ax, 1.0 / ay, -by / ay}; }
    friend AffineDiagMap operator*(const AffineDiagMap& f, const AffineDiagMap& g) {
        return {f.ax * g.ax, f.ax * g.bx + f.bx, f.ay * g.ay, f.ay * g.by + f.by};
    }
    double dist_to_identity() const {
        return std::max({std::abs(ax - 1.0), std::abs(bx), std::abs(ay - 1.0), std::abs(by)});
    }
};

struct GalleryGenerator {
    std::string label;
    std::optional<JonquieresElement> exact;
    std::optional<AffineDiagMap> numeric;
};

enum class LatticeKind { None, TransTrans, TransMult, MultMult };

struct GalleryCase {
    int row_id = 0;
    std::string expected_group;
    std::string expected_quotient;
    std::vector<GalleryGenerator> generators;
    DomainDescriptor domain;
    LatticeKind lattice = LatticeKind::None;
    std::map<std::string, std::string> params; // named scalars, printed exactly
    std::vector<std::string> build_notes;      // caveats recorded at construction
    std::array<std::array<long, 3>, 3> inoue_matrix{}; // row 12 only
};

// Builds the case for one table row with the given named parameters
// (exact scalars as expression strings); omitted parameters take the
// documented defaults. Violated constraints are rejected by name.
GalleryCase build_case(int row_id, const nlohmann::json& params = nlohmann::json::object());

struct RegistryEntry {
    int row_id;
    std::string status; // "constructible" or the reason it is not
    std::string summary;
    nlohmann::json params_schema;
    nlohmann::json defaults;
};

const std::vector<RegistryEntry>& gallery_registry();

struct VerifyConfig {
    int sample_count = 200;
    int word_length = 6;
    double epsilon = 1e-6;
    uint64_t rng_seed = 1;
    double near_threshold = 1e-2; // compact-set displacement for the statistic
};

struct CheckResult {
    bool pass = true;
    std::vector<std::string> witnesses;
};

enum class LatticeRankResult { Pass, Fail, NotApplicable };

struct VerificationReport {
    CheckResult regularity;
    CheckResult invariance;
    CheckResult freeness;
    CheckResult discontinuity;
    std::vector<long> near_counts;     // per word length, identity coset excluded
    std::vector<long> identity_counts; // words representing the identity
    LatticeRankResult lattice_rank = LatticeRankResult::NotApplicable;
    double lattice_det = 0.0;
    std::vector<std::string> notes;

    bool all_pass() const {
        return regularity.pass && invariance.pass && freeness.pass && discontinuity.pass &&
               lattice_rank != LatticeRankResult::Fail;
    }
    nlohmann::json to_json() const;
};

VerificationReport verify_case(const GalleryCase& c, const VerifyConfig& cfg = {});

// Largest coefficient defect of the defining relations g0 gi g0^-1 =
// prod_j gj^(M_ij) of the Inoue case.
double inoue_relation_defect(const GalleryCase& c);

nlohmann::json case_to_json(const GalleryCase& c);

} // namespace cremona
