#include "gallery.hpp"

#include "mapparse.hpp"
#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace cremona {

namespace {

GaussianRational param_scalar(const nlohmann::json& params, const char* key, const char* dflt) {
    if (params.contains(key)) return parse_exact_scalar(params[key].get<std::string>());
    return parse_exact_scalar(dflt);
}

long param_int(const nlohmann::json& params, const char* key, long dflt) {
    if (params.contains(key)) return params[key].get<long>();
    return dflt;
}

Poly param_poly_x(const nlohmann::json& params, const char* key, const char* dflt) {
    std::string text = params.contains(key) ? params[key].get<std::string>() : dflt;
    RationalFunction r = parse_expression(text, VarSet::X);
    if (!r.is_polynomial())
        throw std::domain_error(std::string(key) + " must be a polynomial in x");
    return r.num().scaled(r.den().constant_value().inverse());
}

GalleryGenerator exact_gen(std::string label, JonquieresElement j) {
    return {std::move(label), std::move(j), std::nullopt};
}

JonquieresElement translation_gen(const GaussianRational& a, const GaussianRational& b) {
    return JonquieresElement::translation(a, b);
}

// (x + a, b y)
JonquieresElement trans_mult_gen(const GaussianRational& a, const GaussianRational& b) {
    Poly one = Poly::constant(VarSet::X, GaussianRational(1));
    return JonquieresElement(Moebius2::translation(a),
                             {Poly::constant(VarSet::X, b), Poly::zero(VarSet::X),
                              Poly::zero(VarSet::X), one});
}

// (x + a, y + c x)
JonquieresElement shear_gen(const GaussianRational& a, const GaussianRational& c) {
    Poly one = Poly::constant(VarSet::X, GaussianRational(1));
    return JonquieresElement(Moebius2::translation(a),
                             {one, Poly::variable(VarSet::X, 0).scaled(c), Poly::zero(VarSet::X), one});
}

// (q x, R(x) y)
JonquieresElement base_mult_fiber(const GaussianRational& q, const Poly& r) {
    Poly one = Poly::constant(VarSet::X, GaussianRational(1));
    return JonquieresElement(Moebius2::scaling(q), {r, Poly::zero(VarSet::X), Poly::zero(VarSet::X), one});
}

// (q x, y + R(x))
JonquieresElement base_mult_fiber_translation(const GaussianRational& q, const Poly& r) {
    Poly one = Poly::constant(VarSet::X, GaussianRational(1));
    return JonquieresElement(Moebius2::scaling(q), {one, r, Poly::zero(VarSet::X), one});
}

bool norm_less(const GaussianRational& a, const GaussianRational& b) { // |a| < |b|
    return a.norm() < b.norm();
}

// m + n*w = v with integers m, n; exact over Q(i).
bool in_unit_lattice(const GaussianRational& v, const GaussianRational& w) {
    // solve the real 2x2 system with rational entries
    mpq_class det = w.im(); // matrix [[1, re w],[0, im w]]
    if (det == 0) return false;
    mpq_class n = v.im() / w.im();
    mpq_class m = v.re() - n * w.re();
    return n.get_den() == 1 && m.get_den() == 1;
}

// Exactly locatable zeros of R (monomials and linear polynomials); nullopt
// when the degree is too high to decide here.
std::optional<std::vector<GaussianRational>> exact_zeros(const Poly& r) {
    if (r.is_constant()) return std::vector<GaussianRational>{};
    if (r.is_monomial()) return std::vector<GaussianRational>{GaussianRational(0)};
    if (r.total_degree() == 1) {
        GaussianRational lead, cst;
        for (auto& t : r.terms()) (t.e[0] == 1 ? lead : cst) = t.c;
        return std::vector<GaussianRational>{-cst / lead};
    }
    return std::nullopt;
}

bool region_contains_exact(Region reg, const GaussianRational& z) {
    switch (reg) {
        case Region::UnitDisk: return z.norm() < 1;
        case Region::UpperHalfPlane: return z.im() > 0;
        case Region::CStar: return !z.is_zero();
        case Region::C: return true;
        case Region::P1: return true;
    }
    return true;
}

void check_fiber_factor_regular(const Poly& r, Region base, std::vector<std::string>& notes) {
    auto zeros = exact_zeros(r);
    if (!zeros) {
        notes.push_back("zero locus of R checked at sample points only (degree > 1)");
        return;
    }
    for (auto& z : *zeros)
        if (region_contains_exact(base, z))
            throw std::domain_error("violates: R has no zeros or poles in D1");
}

std::array<std::array<long, 3>, 3> inoue_companion() {
    // companion matrix of t^3 - t - 1
    return {{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}};
}

struct InoueData {
    double alpha;
    cplx beta;
    std::array<double, 3> a;
    std::array<cplx, 3> b;
};

InoueData inoue_data() {
    // real root of t^3 - t - 1 by Newton, complex pair by factoring
    double al = 1.3;
    for (int k = 0; k < 60; ++k) al = al - (al * al * al - al - 1) / (3 * al * al - 1);
    cplx be(-al / 2, std::sqrt(3 * al * al - 4) / 2);
    // eigenvector of the companion matrix for eigenvalue t: (1, t^2, t)
    return {al, be, {1.0, al * al, al}, {cplx(1.0), be * be, be}};
}

} // namespace

GalleryCase build_case(int row_id, const nlohmann::json& params) {
    GalleryCase c;
    c.row_id = row_id;
    switch (row_id) {
        case 7: {
            c.expected_group = "Z^4";
            c.expected_quotient = "complex torus";
            c.domain = DomainDescriptor::product(DomainKind::AffinePlane);
            c.lattice = LatticeKind::TransTrans;
            static const char* da[] = {"1", "i", "0", "0"};
            static const char* db[] = {"0", "0", "1", "i"};
            for (int k = 0; k < 4; ++k) {
                GaussianRational a = param_scalar(params, ("a" + std::to_string(k + 1)).c_str(), da[k]);
                GaussianRational b = param_scalar(params, ("b" + std::to_string(k + 1)).c_str(), db[k]);
                c.params["a" + std::to_string(k + 1)] = a.str();
                c.params["b" + std::to_string(k + 1)] = b.str();
                c.generators.push_back(exact_gen("t" + std::to_string(k + 1), translation_gen(a, b)));
            }
            break;
        }
        case 8: {
            c.expected_group = "Z^3";
            c.expected_quotient = "complex torus";
            c.domain = DomainDescriptor::product(DomainKind::CStarCross);
            c.lattice = LatticeKind::TransMult;
            static const char* da[] = {"1", "i", "0"};
            static const char* db[] = {"1", "1", "2"};
            for (int k = 0; k < 3; ++k) {
                GaussianRational a = param_scalar(params, ("a" + std::to_string(k + 1)).c_str(), da[k]);
                GaussianRational b = param_scalar(params, ("b" + std::to_string(k + 1)).c_str(), db[k]);
                if (b.is_zero()) throw std::domain_error("multiplier b must be nonzero");
                c.params["a" + std::to_string(k + 1)] = a.str();
                c.params["b" + std::to_string(k + 1)] = b.str();
                c.generators.push_back(exact_gen("g" + std::to_string(k + 1), trans_mult_gen(a, b)));
            }
            break;
        }
        case 9: {
            c.expected_group = "Z^2";
            c.expected_quotient = "complex torus";
            c.domain = DomainDescriptor::product(DomainKind::TorusCover);
            c.lattice = LatticeKind::MultMult;
            static const char* da[] = {"2", "1"};
            static const char* db[] = {"1", "2"};
            for (int k = 0; k < 2; ++k) {
                GaussianRational a = param_scalar(params, ("a" + std::to_string(k + 1)).c_str(), da[k]);
                GaussianRational b = param_scalar(params, ("b" + std::to_string(k + 1)).c_str(), db[k]);
                c.params["a" + std::to_string(k + 1)] = a.str();
                c.params["b" + std::to_string(k + 1)] = b.str();
                c.generators.push_back(
                    exact_gen("g" + std::to_string(k + 1),
                              JonquieresElement::diagonal(a, b)));
            }
            break;
        }
        case 10: {
            c.expected_group = "central extension of Z^2 by Z^2";
            c.expected_quotient = "primary Kodaira surface";
            c.domain = DomainDescriptor::product(DomainKind::AffinePlane);
            GaussianRational a = param_scalar(params, "a", "2*i");
            GaussianRational b = param_scalar(params, "b", "i");
            GaussianRational cc = param_scalar(params, "c", "1");
            GaussianRational d = params.contains("d")
                                     ? parse_exact_scalar(params["d"].get<std::string>())
                                     : cc * b - GaussianRational(1);
            if (a.im() == 0) throw std::domain_error("a must not be real (Z + Z a is a lattice)");
            if (b.im() == 0) throw std::domain_error("b must not be real (Z + Z b is a lattice)");
            if (!in_unit_lattice(cc * b - d, a))
                throw std::domain_error("c b - d must lie in the vertical lattice Z + Z a");
            c.params = {{"a", a.str()}, {"b", b.str()}, {"c", cc.str()}, {"d", d.str()}};
            c.generators.push_back(
                exact_gen("v1", translation_gen(GaussianRational(0), GaussianRational(1))));
            c.generators.push_back(exact_gen("s1", shear_gen(GaussianRational(1), cc)));
            c.generators.push_back(exact_gen("v2", translation_gen(GaussianRational(0), a)));
            c.generators.push_back(exact_gen("s2", shear_gen(b, d)));
            break;
        }
        case 11: {
            c.expected_group = "Z";
            c.expected_quotient = "Hopf surface";
            c.domain = DomainDescriptor::product(DomainKind::PuncturedPlane);
            GaussianRational al = param_scalar(params, "alpha", "1/2");
            GaussianRational be = param_scalar(params, "beta", "1/2");
            if (al.is_zero() || be.is_zero() || !(al.norm() < 1) || !(be.norm() < 1))
                throw std::domain_error(
                    "violates: spectral radius of the linear part must be < 1 (contraction)");
            c.params = {{"alpha", al.str()}, {"beta", be.str()}};
            c.generators.push_back(exact_gen("g", JonquieresElement::diagonal(al, be)));
            break;
        }
        case 12: {
            c.expected_group = "Z^3 x| Z (Inoue S0)";
            c.expected_quotient = "Inoue surface";
            c.domain = DomainDescriptor::product(DomainKind::HalfPlaneCross);
            c.inoue_matrix = inoue_companion();
            InoueData data = inoue_data();
            c.params = {{"alpha", format_double(data.alpha)},
                        {"beta", format_double(data.beta.real()) + "+" +
                                     format_double(data.beta.imag()) + "*i"}};
            c.generators.push_back({"g0", std::nullopt, AffineDiagMap{data.alpha, 0, data.beta, 0}});
            for (int k = 0; k < 3; ++k)
                c.generators.push_back({"g" + std::to_string(k + 1), std::nullopt,
                                        AffineDiagMap{1, data.a[k], 1, data.b[k]}});
            break;
        }
        case 15: {
            c.expected_group = "Z";
            c.expected_quotient = "Hopf surface";
            long n = param_int(params, "n", 1);
            if (n < 0) throw std::domain_error("n must be >= 0");
            c.domain = DomainDescriptor::fiber_complement(int(n));
            GaussianRational a = param_scalar(params, "a", "3");
            GaussianRational b = param_scalar(params, "b", "1/2");
            if (b.is_zero() || !(b.norm() < 1))
                throw std::domain_error("violates: 0 < |b| < 1");
            mpq_class an = 1;
            for (long k = 0; k < n; ++k) an *= a.norm();
            if (!(b.norm() < an)) throw std::domain_error("violates: |b| < |a|^n");
            c.params = {{"n", std::to_string(n)}, {"a", a.str()}, {"b", b.str()}};
            c.generators.push_back(exact_gen("f", JonquieresElement::diagonal(a, b)));
            break;
        }
        case 16: {
            c.expected_group = "Z";
            c.expected_quotient = "Hopf surface";
            long n = param_int(params, "n", 1);
            if (n < 0) throw std::domain_error("n must be >= 0");
            c.domain = DomainDescriptor::fiber_complement(int(n));
            GaussianRational b = param_scalar(params, "b", "1/2");
            GaussianRational cc = param_scalar(params, "c", "1");
            if (b.is_zero() || !(b.norm() < 1))
                throw std::domain_error("violates: 0 < |b| < 1");
            if (cc.is_zero()) throw std::domain_error("violates: c must be nonzero");
            c.params = {{"n", std::to_string(n)}, {"b", b.str()}, {"c", cc.str()}};
            c.generators.push_back(exact_gen("g", trans_mult_gen(cc, b)));
            break;
        }
        case 17: {
            c.expected_group = "G1 x G2 (cyclic loxodromic factors)";
            c.expected_quotient = "product of Riemann surfaces";
            c.domain = DomainDescriptor::disk_cross(DomainKind::ProductOfComponents, Region::UnitDisk);
            auto matrix_param = [&](const char* key, std::array<const char*, 4> dflt) {
                std::array<GaussianRational, 4> m;
                for (int k = 0; k < 4; ++k) {
                    std::string name = std::string(key) + std::to_string(k);
                    m[k] = params.contains(name) ? parse_exact_scalar(params[name].get<std::string>())
                                                 : parse_exact_scalar(dflt[k]);
                }
                // SU(1,1) shape [[a, b], [conj b, conj a]] preserves the disk
                if (m[3] != m[0].conj() || m[2] != m[1].conj())
                    throw std::domain_error("violates: generator must preserve the unit disk "
                                            "(entries of the form [[a,b],[conj b, conj a]])");
                if ((m[0].norm() - m[1].norm()) <= 0)
                    throw std::domain_error("violates: |a|^2 - |b|^2 > 0 for a disk isometry");
                return m;
            };
            auto g1 = matrix_param("g1_", {"3", "1", "1", "3"});
            auto g2 = matrix_param("g2_", {"3", "-i", "i", "3"});
            for (int k = 0; k < 4; ++k) {
                c.params["g1_" + std::to_string(k)] = g1[k].str();
                c.params["g2_" + std::to_string(k)] = g2[k].str();
            }
            Poly one = Poly::constant(VarSet::X, GaussianRational(1));
            c.generators.push_back(exact_gen(
                "gx", JonquieresElement(Moebius2(g1[0], g1[1], g1[2], g1[3]),
                                        {one, Poly::zero(VarSet::X), Poly::zero(VarSet::X), one})));
            c.generators.push_back(exact_gen(
                "gy", JonquieresElement(Moebius2::identity(),
                                        {Poly::constant(VarSet::X, g2[0]),
                                         Poly::constant(VarSet::X, g2[1]),
                                         Poly::constant(VarSet::X, g2[2]),
                                         Poly::constant(VarSet::X, g2[3])})));
            break;
        }
        case 18: {
            c.expected_group = "central extension of G1 by Z";
            c.expected_quotient = "principal elliptic bundle over D1/G1";
            c.domain = DomainDescriptor::disk_cross(DomainKind::DiskCrossStar, Region::UpperHalfPlane);
            GaussianRational q = param_scalar(params, "q", "4");
            GaussianRational a = param_scalar(params, "a", "2");
            Poly r = param_poly_x(params, "R", "x");
            if (q.im() != 0 || !(q.re() > 0) || q.re() == 1)
                throw std::domain_error("q must be real, positive and != 1 to act on the half-plane");
            if (a.is_zero()) throw std::domain_error("central multiplier a must be nonzero");
            if (r.is_zero()) throw std::domain_error("R must be a nonzero rational function");
            check_fiber_factor_regular(r, Region::UpperHalfPlane, c.build_notes);
            c.params = {{"q", q.str()}, {"a", a.str()}, {"R", r.str()}};
            c.generators.push_back(
                exact_gen("z", base_mult_fiber(GaussianRational(1), Poly::constant(VarSet::X, a))));
            c.generators.push_back(exact_gen("g", base_mult_fiber(q, r)));
            break;
        }
        case 19: {
            c.expected_group = "central extension of G1 by Z^2";
            c.expected_quotient = "principal elliptic bundle over D1/G1";
            c.domain = DomainDescriptor::disk_cross(DomainKind::DiskCross, Region::UpperHalfPlane);
            GaussianRational q = param_scalar(params, "q", "4");
            GaussianRational b1 = param_scalar(params, "b1", "1");
            GaussianRational b2 = param_scalar(params, "b2", "i");
            Poly r = param_poly_x(params, "R", "x");
            if (q.im() != 0 || !(q.re() > 0) || q.re() == 1)
                throw std::domain_error("q must be real, positive and != 1 to act on the half-plane");
            GaussianRational cross = b1.conj() * b2;
            if (cross.im() == 0) throw std::domain_error("Z b1 + Z b2 must be a lattice in C");
            c.params = {{"q", q.str()}, {"b1", b1.str()}, {"b2", b2.str()}, {"R", r.str()}};
            c.generators.push_back(exact_gen("z1", translation_gen(GaussianRational(0), b1)));
            c.generators.push_back(exact_gen("z2", translation_gen(GaussianRational(0), b2)));
            c.generators.push_back(exact_gen("g", base_mult_fiber_translation(q, r)));
            break;
        }
        case 20: {
            c.expected_group = "G1 (cyclic)";
            c.expected_quotient = "geometrically ruled surface over an elliptic curve";
            c.domain = DomainDescriptor::disk_cross(DomainKind::DiskCrossP1, Region::CStar);
            GaussianRational b = param_scalar(params, "b", "2");
            GaussianRational cc = param_scalar(params, "c", "1");
            long k = param_int(params, "k", 1);
            if (b.is_zero() || b.norm() == 1)
                throw std::domain_error("violates: |b| != 1 for a loxodromic base action");
            if (cc.is_zero()) throw std::domain_error("c must be nonzero");
            if (k == 0) throw std::domain_error("k must be a nonzero integer");
            c.params = {{"b", b.str()}, {"c", cc.str()}, {"k", std::to_string(k)}};
            Poly xk = Poly::monomial(VarSet::X, Exp{uint32_t(k > 0 ? k : -k), 0, 0, 0}, cc);
            Poly one = Poly::constant(VarSet::X, GaussianRational(1));
            JonquieresElement g = k > 0
                                      ? JonquieresElement(Moebius2::scaling(b),
                                                          {xk, Poly::zero(VarSet::X),
                                                           Poly::zero(VarSet::X), one})
                                      : JonquieresElement(Moebius2::scaling(b),
                                                          {one, Poly::zero(VarSet::X),
                                                           Poly::zero(VarSet::X), xk});
            c.generators.push_back(exact_gen("g", g));
            break;
        }
        default:
            throw std::domain_error("row " + std::to_string(row_id) +
                                    " has no constructor (see the registry for its status)");
    }
    return c;
}

const std::vector<RegistryEntry>& gallery_registry() {
    static const std::vector<RegistryEntry> registry = [] {
        std::vector<RegistryEntry> r;
        auto documented = [&](int row, const char* why, const char* summary) {
            r.push_back({row, std::string("documented, not constructible: ") + why, summary,
                         nlohmann::json::object(), nlohmann::json::object()});
        };
        auto constructible = [&](int row, const char* summary, nlohmann::json schema) {
            nlohmann::json defaults = nlohmann::json::object();
            GalleryCase c = build_case(row);
            for (auto& [k, v] : c.params) defaults[k] = v;
            r.push_back({row, "constructible", summary, std::move(schema), std::move(defaults)});
        };
        documented(1, "non-rational surface (needs a product with a general curve)",
                   "B x P1 with a Kleinian group acting on the second factor");
        documented(2, "non-rational surface (ruled over a general curve)",
                   "principal elliptic bundle from an extension of line bundles");
        documented(3, "blow-up data left free by the construction",
                   "elliptic fibration over a curve with multiple fibers");
        documented(4, "non-rational surface (elliptic base)", "suspension over an elliptic curve");
        documented(5, "non-rational surface (elliptic base)",
                   "indecomposable ruled surface over an elliptic curve");
        documented(6, "non-rational surface (elliptic base)",
                   "decomposable ruled surface over an elliptic curve");
        constructible(7, "translations of C^2 in P^2 with a complex torus quotient",
                      {{"a1..a4", "exact scalar"}, {"b1..b4", "exact scalar"}});
        constructible(8, "Z^3 of (x+a, by) on C x C*",
                      {{"a1..a3", "exact scalar"}, {"b1..b3", "nonzero exact scalar"}});
        constructible(9, "Z^2 of (ax, by) on C* x C*",
                      {{"a1..a2", "nonzero exact scalar"}, {"b1..b2", "nonzero exact scalar"}});
        constructible(10, "affine Kodaira group on C^2",
                      {{"a", "non-real"}, {"b", "non-real"}, {"c", "exact scalar"},
                       {"d", "derived: c b - d in Z + Z a"}});
        constructible(11, "cyclic contraction on C^2 minus the origin",
                      {{"alpha", "|alpha| < 1"}, {"beta", "|beta| < 1"}});
        constructible(12, "Inoue S0 group from the companion matrix of t^3 - t - 1",
                      nlohmann::json::object());
        documented(13, "cocompact lattice in PU(1,2) not written down explicitly",
                   "ball quotient");
        documented(14, "irreducible bidisk lattice not written down explicitly",
                   "bidisk quotient");
        constructible(15, "cyclic (ax, by) on the Hirzebruch C*-bundle",
                      {{"n", "integer >= 0"}, {"a", "exact scalar"}, {"b", "0 < |b| < 1, |b| < |a|^n"}});
        constructible(16, "cyclic (x+c, by) on the Hirzebruch C*-bundle",
                      {{"n", "integer >= 0"}, {"b", "0 < |b| < 1"}, {"c", "nonzero"}});
        constructible(17, "product of two disk-preserving cyclic groups on D x D",
                      {{"g1_0..g1_3", "SU(1,1) entries"}, {"g2_0..g2_3", "SU(1,1) entries"}});
        constructible(18, "central extension acting on H x C* by (q x, R(x) y)",
                      {{"q", "real > 0, != 1"}, {"a", "nonzero"}, {"R", "polynomial in x"}});
        constructible(19, "central extension acting on H x C by (q x, y + R(x))",
                      {{"q", "real > 0, != 1"}, {"b1", ""}, {"b2", "lattice with b1"},
                       {"R", "polynomial in x"}});
        constructible(20, "cyclic (b x, c x^k y) on C* x P1",
                      {{"b", "|b| != 1"}, {"c", "nonzero"}, {"k", "nonzero integer"}});
        return r;
    }();
    return registry;
}

// ---------------------------------------------------------------------------
// verification

namespace {

// One group element along the enumeration: exact where possible.
struct Element {
    std::optional<JonquieresElement> exact;
    std::optional<AffineDiagMap> numeric;

    bool is_identity() const {
        if (exact) return exact->is_identity();
        return numeric->dist_to_identity() < 1e-12;
    }
};

Element elem_of(const GalleryGenerator& g, bool inverse) {
    if (g.exact) return {inverse ? g.exact->inverse() : *g.exact, std::nullopt};
    return {std::nullopt, inverse ? g.numeric->inverse() : *g.numeric};
}

Element compose(const Element& f, const Element& g) {
    if (f.exact && g.exact) return {jonquieres_compose(*f.exact, *g.exact), std::nullopt};
    if (f.numeric && g.numeric) return {std::nullopt, *f.numeric * *g.numeric};
    throw std::logic_error("mixed exact/numeric generator families");
}

struct EvalOutcome {
    GalleryPoint image;
    bool indeterminate = false;
};

// Numeric evaluator compiled from one group element.
struct CompiledMap {
    bool diag_affine = false;
    cplx ax, bx, ay, by;
    cplx ba, bb, bc, bd;          // base Moebius
    std::vector<cplx> A, B, C, D; // fiber entries as coefficient arrays

    static std::vector<cplx> coeffs(const Poly& p, long upto) {
        std::vector<cplx> out(std::size_t(upto + 1), cplx(0));
        for (auto& t : p.terms()) out[t.e[0]] = cplx(t.c.re_double(), t.c.im_double());
        return out;
    }

    static CompiledMap from(const Element& e) {
        CompiledMap m;
        if (e.numeric) {
            m.diag_affine = true;
            m.ax = e.numeric->ax;
            m.bx = e.numeric->bx;
            m.ay = e.numeric->ay;
            m.by = e.numeric->by;
            return m;
        }
        const JonquieresElement& j = *e.exact;
        m.ba = cplx(j.eta().m[0].re_double(), j.eta().m[0].im_double());
        m.bb = cplx(j.eta().m[1].re_double(), j.eta().m[1].im_double());
        m.bc = cplx(j.eta().m[2].re_double(), j.eta().m[2].im_double());
        m.bd = cplx(j.eta().m[3].re_double(), j.eta().m[3].im_double());
        long deg = j.fiber_x_degree();
        m.A = coeffs(j.fiber()[0], deg);
        m.B = coeffs(j.fiber()[1], deg);
        m.C = coeffs(j.fiber()[2], deg);
        m.D = coeffs(j.fiber()[3], deg);
        return m;
    }

    static cplx horner(const std::vector<cplx>& c, cplx x) {
        cplx acc = 0;
        for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
        return acc;
    }
    // leading coefficients give the fiber matrix over x = infinity
    static cplx lead(const std::vector<cplx>& c) { return c.empty() ? cplx(0) : c.back(); }

    EvalOutcome apply(const GalleryPoint& p) const {
        if (diag_affine) {
            EvalOutcome out;
            out.image.x = p.x.inf ? SpherePoint::infinity() : SpherePoint::at(ax * p.x.z + bx);
            out.image.y = p.y.inf ? SpherePoint::infinity() : SpherePoint::at(ay * p.y.z + by);
            return out;
        }
        EvalOutcome out;
        // base
        cplx num, den;
        if (p.x.inf) {
            num = ba;
            den = bc;
        } else {
            num = ba * p.x.z + bb;
            den = bc * p.x.z + bd;
        }
        double bscale = std::max(std::abs(num), std::abs(den));
        if (bscale == 0.0) {
            out.indeterminate = true; // cannot happen for a true Moebius base
            return out;
        }
        out.image.x = std::abs(den) <= 1e-14 * bscale ? SpherePoint::infinity()
                                                      : SpherePoint::at(num / den);
        // fiber matrix at the base point
        cplx ea, eb, ec, ed;
        if (p.x.inf) {
            ea = lead(A), eb = lead(B), ec = lead(C), ed = lead(D);
        } else {
            ea = horner(A, p.x.z), eb = horner(B, p.x.z), ec = horner(C, p.x.z), ed = horner(D, p.x.z);
        }
        double fscale = std::max({std::abs(ea), std::abs(eb), std::abs(ec), std::abs(ed)});
        if (fscale == 0.0 || !std::isfinite(fscale)) {
            out.indeterminate = true;
            return out;
        }
        cplx fnum, fden;
        if (p.y.inf) {
            fnum = ea;
            fden = ec;
        } else {
            fnum = ea * p.y.z + eb;
            fden = ec * p.y.z + ed;
        }
        double yscale = fscale * std::max(1.0, p.y.inf ? 1.0 : std::abs(p.y.z));
        if (std::abs(fnum) <= 1e-12 * yscale && std::abs(fden) <= 1e-12 * yscale) {
            out.indeterminate = true;
            return out;
        }
        out.image.y = std::abs(fden) <= 1e-300 ? SpherePoint::infinity() : SpherePoint::at(fnum / fden);
        if (!out.image.y.inf &&
            (!std::isfinite(out.image.y.z.real()) || !std::isfinite(out.image.y.z.imag())))
            out.image.y = SpherePoint::infinity();
        return out;
    }
};

double point_dist(const GalleryPoint& a, const GalleryPoint& b) {
    return std::max(chordal(a.x, b.x), chordal(a.y, b.y));
}

std::string point_str(const GalleryPoint& p) {
    auto s = [](const SpherePoint& q) {
        if (q.inf) return std::string("inf");
        return format_double(q.z.real()) + (q.z.imag() < 0 ? "" : "+") + format_double(q.z.imag()) +
               "i";
    };
    return "(" + s(p.x) + ", " + s(p.y) + ")";
}

void add_witness(CheckResult& check, std::size_t cap, const std::string& w) {
    check.pass = false;
    if (check.witnesses.size() < cap) check.witnesses.push_back(w);
}

} // namespace

VerificationReport verify_case(const GalleryCase& c, const VerifyConfig& cfg) {
    VerificationReport rep;
    rep.notes = c.build_notes;
    const std::vector<GalleryPoint> samples = c.domain.sample(cfg.sample_count, cfg.rng_seed);
    const int kL = cfg.word_length;
    const std::size_t compact_size = std::min<std::size_t>(40, samples.size());

    rep.near_counts.assign(kL + 1, 0);
    rep.identity_counts.assign(kL + 1, 0);

    // letters: generators then inverses
    std::size_t r = c.generators.size();
    std::vector<Element> letters;
    for (auto& g : c.generators) letters.push_back(elem_of(g, false));
    for (auto& g : c.generators) letters.push_back(elem_of(g, true));

    std::vector<std::string> letter_names;
    for (auto& g : c.generators) letter_names.push_back(g.label);
    for (auto& g : c.generators) letter_names.push_back(g.label + "^-1");

    std::vector<int> word;
    std::vector<Element> stack{
        c.generators[0].exact
            ? Element{JonquieresElement::identity(), std::nullopt}
            : Element{std::nullopt, AffineDiagMap{}}};

    auto word_name = [&] {
        std::string s;
        for (int k : word) {
            if (!s.empty()) s += ".";
            s += letter_names[k];
        }
        return s;
    };

    std::function<void()> visit = [&] {
        const Element& cur = stack.back();
        bool trivial = cur.is_identity();
        if (trivial) {
            rep.identity_counts[word.size()]++;
        } else {
            CompiledMap m = CompiledMap::from(cur);
            bool near_compact = false;
            for (std::size_t si = 0; si < samples.size(); ++si) {
                const GalleryPoint& p = samples[si];
                EvalOutcome out = m.apply(p);
                if (out.indeterminate) {
                    add_witness(rep.regularity, 8,
                                "word " + word_name() + " is indeterminate at " + point_str(p));
                    continue;
                }
                if (!c.domain.contains(out.image)) {
                    if (out.image.x.inf || out.image.y.inf)
                        add_witness(rep.regularity, 8, "word " + word_name() + " sends " +
                                                           point_str(p) + " out of the chart (pole)");
                    else
                        add_witness(rep.invariance, 8, "word " + word_name() + " sends " +
                                                           point_str(p) + " to " +
                                                           point_str(out.image) + " outside U");
                    continue;
                }
                double disp = point_dist(out.image, p);
                if (disp < cfg.epsilon)
                    add_witness(rep.freeness, 8, "word " + word_name() + " moves " + point_str(p) +
                                                     " by only " + format_double(disp));
                if (si < compact_size && !near_compact) {
                    double best = 4.0;
                    for (std::size_t qi = 0; qi < compact_size; ++qi)
                        best = std::min(best, point_dist(out.image, samples[qi]));
                    if (best < cfg.near_threshold) near_compact = true;
                }
            }
            if (near_compact) rep.near_counts[word.size()]++;
        }
        if (int(word.size()) >= kL) return;
        for (int k = 0; k < int(2 * r); ++k) {
            if (!word.empty()) {
                int prev = word.back();
                if ((prev < int(r) && k == prev + int(r)) || (prev >= int(r) && k == prev - int(r)))
                    continue;
            }
            word.push_back(k);
            stack.push_back(compose(stack.back(), letters[k]));
            visit();
            stack.pop_back();
            word.pop_back();
        }
    };
    // enumerate reduced words of length 1..L
    for (int k = 0; k < int(2 * r); ++k) {
        word.push_back(k);
        stack.push_back(compose(stack.back(), letters[k]));
        visit();
        stack.pop_back();
        word.pop_back();
    }

    // Discontinuity verdict: words carrying the compact sample near itself
    // must be no more frequent than spellings of the identity; a count that
    // outgrows the identity coset signals accumulation.
    long near_total = 0, identity_total = 0;
    for (long n : rep.near_counts) near_total += n;
    for (long n : rep.identity_counts) identity_total += n;
    if (near_total > identity_total) {
        rep.discontinuity.pass = false;
        rep.discontinuity.witnesses.push_back(
            std::to_string(near_total) + " non-identity words displace the compact sample by less than " +
            format_double(cfg.near_threshold) + ", exceeding the " + std::to_string(identity_total) +
            " identity-coset words");
    }

    // lattice rank
    if (c.lattice == LatticeKind::None) {
        rep.lattice_rank = LatticeRankResult::NotApplicable;
    } else {
        std::array<std::array<double, 4>, 4> m{};
        std::size_t row = 0;
        auto log_of = [](const GaussianRational& v) {
            cplx z(v.re_double(), v.im_double());
            return cplx(std::log(std::abs(z)), std::arg(z));
        };
        for (auto& g : c.generators) {
            if (row >= 4) break;
            const JonquieresElement& j = *g.exact;
            GaussianRational a, b;
            if (c.lattice == LatticeKind::TransTrans || c.lattice == LatticeKind::TransMult)
                a = j.eta().m[1]; // translation part
            else
                a = j.eta().m[0] / j.eta().m[3]; // multiplier
            if (c.lattice == LatticeKind::TransTrans)
                b = j.fiber()[1].is_zero() ? GaussianRational(0)
                                           : j.fiber()[1].constant_value() / j.fiber()[0].constant_value();
            else
                b = j.fiber()[0].constant_value() / j.fiber()[3].constant_value();
            cplx ac(a.re_double(), a.im_double());
            cplx bc_;
            if (c.lattice == LatticeKind::TransTrans)
                bc_ = cplx(b.re_double(), b.im_double());
            else
                bc_ = log_of(b);
            if (c.lattice == LatticeKind::MultMult) ac = log_of(a);
            m[row++] = {ac.real(), ac.imag(), bc_.real(), bc_.imag()};
        }
        const double two_pi = 2 * 3.14159265358979323846;
        if (c.lattice == LatticeKind::TransMult) m[row++] = {0, 0, 0, two_pi};
        if (c.lattice == LatticeKind::MultMult) {
            m[row++] = {0, two_pi, 0, 0};
            m[row++] = {0, 0, 0, two_pi};
        }
        if (row != 4) {
            rep.lattice_rank = LatticeRankResult::Fail;
            rep.notes.push_back("lattice rank needs exactly four period vectors");
        } else {
            // 4x4 determinant by elimination
            double det = 1.0;
            auto mm = m;
            for (int i = 0; i < 4; ++i) {
                int piv = i;
                for (int k = i + 1; k < 4; ++k)
                    if (std::abs(mm[k][i]) > std::abs(mm[piv][i])) piv = k;
                if (piv != i) {
                    std::swap(mm[piv], mm[i]);
                    det = -det;
                }
                if (std::abs(mm[i][i]) < 1e-12) {
                    det = 0;
                    break;
                }
                det *= mm[i][i];
                for (int k = i + 1; k < 4; ++k) {
                    double f = mm[k][i] / mm[i][i];
                    for (int jv = i; jv < 4; ++jv) mm[k][jv] -= f * mm[i][jv];
                }
            }
            rep.lattice_det = det;
            rep.lattice_rank =
                std::abs(det) > 1e-9 ? LatticeRankResult::Pass : LatticeRankResult::Fail;
            if (rep.lattice_rank == LatticeRankResult::Fail)
                rep.notes.push_back("period matrix is singular: generators do not span a lattice");
        }
    }

    for (auto* chk : {&rep.regularity, &rep.invariance, &rep.freeness, &rep.discontinuity})
        std::sort(chk->witnesses.begin(), chk->witnesses.end());
    return rep;
}

double inoue_relation_defect(const GalleryCase& c) {
    if (c.row_id != 12) throw std::domain_error("relation defect is defined for the Inoue case");
    const auto& M = c.inoue_matrix;
    AffineDiagMap g0 = *c.generators[0].numeric;
    std::array<AffineDiagMap, 3> g{*c.generators[1].numeric, *c.generators[2].numeric,
                                   *c.generators[3].numeric};
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
        AffineDiagMap lhs = g0 * g[i] * g0.inverse();
        AffineDiagMap rhs;
        for (int j = 0; j < 3; ++j) {
            long e = M[i][j];
            AffineDiagMap pw;
            AffineDiagMap base = e >= 0 ? g[j] : g[j].inverse();
            for (long k = 0; k < std::labs(e); ++k) pw = pw * base;
            rhs = rhs * pw;
        }
        worst = std::max({worst, std::abs(lhs.ax - rhs.ax), std::abs(lhs.bx - rhs.bx),
                          std::abs(lhs.ay - rhs.ay), std::abs(lhs.by - rhs.by)});
    }
    return worst;
}

nlohmann::json VerificationReport::to_json() const {
    auto check = [](const CheckResult& c) {
        return nlohmann::json{{"pass", c.pass}, {"witnesses", c.witnesses}};
    };
    nlohmann::json j{{"schema", "1"},
                     {"regularity", check(regularity)},
                     {"invariance", check(invariance)},
                     {"freeness", check(freeness)},
                     {"discontinuity", check(discontinuity)},
                     {"near_counts", near_counts},
                     {"identity_counts", identity_counts},
                     {"notes", notes},
                     {"all_pass", all_pass()}};
    switch (lattice_rank) {
        case LatticeRankResult::Pass:
            j["lattice_rank"] = "pass";
            j["lattice_det"] = lattice_det;
            break;
        case LatticeRankResult::Fail:
            j["lattice_rank"] = "fail";
            j["lattice_det"] = lattice_det;
            break;
        case LatticeRankResult::NotApplicable: j["lattice_rank"] = "not-applicable"; break;
    }
    return j;
}

nlohmann::json case_to_json(const GalleryCase& c) {
    nlohmann::json gens = nlohmann::json::array();
    for (auto& g : c.generators) {
        nlohmann::json jg{{"label", g.label}};
        if (g.exact) jg["map"] = g.exact->str();
        if (g.numeric) {
            jg["map"] = "(x,y) -> (" + format_double(g.numeric->ax.real()) + "+" +
                        format_double(g.numeric->ax.imag()) + "i * x + ..., numeric affine)";
            jg["numeric"] = {format_double(g.numeric->ax.real()), format_double(g.numeric->ax.imag()),
                             format_double(g.numeric->bx.real()), format_double(g.numeric->bx.imag()),
                             format_double(g.numeric->ay.real()), format_double(g.numeric->ay.imag()),
                             format_double(g.numeric->by.real()), format_double(g.numeric->by.imag())};
        }
        gens.push_back(jg);
    }
    return nlohmann::json{{"schema", "1"},
                          {"row", c.row_id},
                          {"expected_group", c.expected_group},
                          {"expected_quotient", c.expected_quotient},
                          {"domain", c.domain.str()},
                          {"params", c.params},
                          {"generators", gens}};
}

} // namespace cremona
