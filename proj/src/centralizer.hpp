// Normal forms for elliptic elements of the plane Cremona group and
// centralizer membership, decided by exact commutation and cross-checked
// against the predicted normal-form shape.
#pragma once

#include "jonquieres.hpp"

namespace cremona {

bool commutes(const JonquieresElement& f, const JonquieresElement& g);

enum class EllipticKind {
    Diagonal,    // (alpha x, beta y)
    Translation, // (alpha x, y + 1)
};

class NormalFormElliptic {
public:
    // The multiplicative-relation order k of alpha is computed exactly:
    // the only roots of unity in Q(i) are +-1 and +-i. A beta that is a
    // root of unity breaks the normal form and is rejected; remaining
    // multiplicative independence is declared by construction.
    static NormalFormElliptic diagonal(const GaussianRational& alpha, const GaussianRational& beta);
    static NormalFormElliptic translation(const GaussianRational& alpha);

    EllipticKind kind() const { return kind_; }
    const GaussianRational& alpha() const { return alpha_; }
    const GaussianRational& beta() const { return beta_; }
    int relation_order() const { return k_; } // 0 when alpha is not a root of unity

    JonquieresElement element() const;

private:
    NormalFormElliptic() = default;
    EllipticKind kind_ = EllipticKind::Diagonal;
    GaussianRational alpha_, beta_;
    int k_ = 0;
};

enum class Membership { Member, NotMember };

struct CentralizerVerdict {
    Membership decision;        // ground truth: exact commutation
    std::string predicted_form; // shape allowed by the normal form
    std::string witness;        // which shape condition matched or failed
};

// Decides by exact commutation; the normal-form shape prediction must
// agree, otherwise the mismatch is raised as an internal invariant
// violation.
CentralizerVerdict centralizer_membership(const NormalFormElliptic& f, const JonquieresElement& g);

} // namespace cremona
