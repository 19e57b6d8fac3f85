#include "poly.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <unordered_map>

namespace cremona {

namespace {

constexpr std::size_t kDefaultTermBudget = 200000;
std::atomic<std::size_t> g_term_budget{kDefaultTermBudget};

const char* kNamesX[] = {"x"};
const char* kNamesXY[] = {"x", "y"};
const char* kNamesP2[] = {"x0", "x1", "x2"};
const char* kNamesBi[] = {"x0", "x1", "y0", "y1"};

using PackedExp = unsigned __int128;

inline PackedExp pack(const Exp& e) {
    return (PackedExp(e[0]) << 96) | (PackedExp(e[1]) << 64) | (PackedExp(e[2]) << 32) | PackedExp(e[3]);
}

inline Exp unpack(PackedExp k) {
    return Exp{uint32_t(k >> 96), uint32_t(k >> 64), uint32_t(k >> 32), uint32_t(k)};
}

struct PackedHash {
    std::size_t operator()(PackedExp k) const {
        uint64_t x = uint64_t(k) ^ (uint64_t(k >> 64) * 0x9e3779b97f4a7c15ull);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        return std::size_t(x);
    }
};

// Decreasing lex: larger packed key first.
inline bool exp_after(const Exp& a, const Exp& b) { return pack(a) > pack(b); }

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp r;
    for (int i = 0; i < 4; ++i) {
        uint64_t s = uint64_t(a[i]) + uint64_t(b[i]);
        if (s > 0xffffffffull) throw std::overflow_error("polynomial exponent overflow");
        r[i] = uint32_t(s);
    }
    return r;
}

} // namespace

int var_count(VarSet vs) {
    switch (vs) {
        case VarSet::X: return 1;
        case VarSet::XY: return 2;
        case VarSet::P2: return 3;
        case VarSet::BIPROJ: return 4;
    }
    return 0;
}

const char* var_name(VarSet vs, int i) {
    switch (vs) {
        case VarSet::X: return kNamesX[i];
        case VarSet::XY: return kNamesXY[i];
        case VarSet::P2: return kNamesP2[i];
        case VarSet::BIPROJ: return kNamesBi[i];
    }
    return "?";
}

std::size_t term_budget() { return g_term_budget.load(); }
void set_term_budget(std::size_t n) { g_term_budget.store(n ? n : 1); }

Poly Poly::constant(VarSet vs, const GaussianRational& c) {
    Poly p(vs);
    if (!c.is_zero()) p.terms_.push_back({Exp{0, 0, 0, 0}, c});
    return p;
}

Poly Poly::variable(VarSet vs, int i) {
    if (i < 0 || i >= var_count(vs)) throw std::out_of_range("variable index");
    Exp e{0, 0, 0, 0};
    e[i] = 1;
    return monomial(vs, e, GaussianRational(1));
}

Poly Poly::monomial(VarSet vs, const Exp& e, const GaussianRational& c) {
    Poly p(vs);
    if (!c.is_zero()) p.terms_.push_back({e, c});
    return p;
}

Poly Poly::from_terms(VarSet vs, std::vector<Term> terms) {
    Poly p(vs);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return exp_after(a.e, b.e); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().e == t.e)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.c.is_zero(); });
    if (out.size() > term_budget()) throw TermBudgetExceeded{};
    terms_ = std::move(out);
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exp{0, 0, 0, 0});
}

GaussianRational Poly::constant_value() const {
    if (is_zero()) return GaussianRational(0);
    if (!is_constant()) throw std::logic_error("constant_value on nonconstant polynomial");
    return terms_[0].c;
}

const Term& Poly::leading_term() const {
    if (is_zero()) throw std::logic_error("leading term of zero polynomial");
    return terms_[0];
}

long Poly::total_degree() const {
    long d = -1;
    for (auto& t : terms_) {
        long s = long(t.e[0]) + t.e[1] + t.e[2] + t.e[3];
        d = std::max(d, s);
    }
    return d;
}

long Poly::degree_in(int var) const {
    long d = -1;
    for (auto& t : terms_) d = std::max(d, long(t.e[var]));
    return d;
}

long Poly::min_degree_in(int var) const {
    if (is_zero()) return -1;
    long d = 0x100000000l;
    for (auto& t : terms_) d = std::min(d, long(t.e[var]));
    return d;
}

bool Poly::is_homogeneous() const {
    if (is_zero()) return true;
    long d = long(terms_[0].e[0]) + terms_[0].e[1] + terms_[0].e[2] + terms_[0].e[3];
    for (auto& t : terms_)
        if (long(t.e[0]) + t.e[1] + t.e[2] + t.e[3] != d) return false;
    return true;
}

std::optional<std::pair<long, long>> Poly::bidegree() const {
    if (vars_ != VarSet::BIPROJ) return std::nullopt;
    if (is_zero()) return std::make_pair(0l, 0l);
    long dx = long(terms_[0].e[0]) + terms_[0].e[1];
    long dy = long(terms_[0].e[2]) + terms_[0].e[3];
    for (auto& t : terms_)
        if (long(t.e[0]) + t.e[1] != dx || long(t.e[2]) + t.e[3] != dy) return std::nullopt;
    return std::make_pair(dx, dy);
}

Poly Poly::operator-() const {
    Poly r(vars_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.e, -t.c});
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (vars_ != o.vars_) throw std::logic_error("mixed variable spaces");
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        PackedExp ka = pack(terms_[i].e), kb = pack(o.terms_[j].e);
        if (ka > kb) {
            out.push_back(std::move(terms_[i++]));
        } else if (kb > ka) {
            out.push_back(o.terms_[j++]);
        } else {
            GaussianRational c = terms_[i].c + o.terms_[j].c;
            if (!c.is_zero()) out.push_back({terms_[i].e, std::move(c)});
            ++i, ++j;
        }
    }
    while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
    while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
    if (out.size() > term_budget()) throw TermBudgetExceeded{};
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

namespace {

bool integer_real_coeffs(const Poly& p) {
    for (auto& t : p.terms())
        if (!t.c.is_rational_integer()) return false;
    return true;
}

// Accumulation over plain integers with fused multiply-add; this is the
// hot path for high iterates, whose coefficients stay rational integers.
std::vector<Term> multiply_integer(const Poly& a, const Poly& b, std::size_t budget) {
    std::unordered_map<PackedExp, mpz_class, PackedHash> acc;
    acc.reserve(4 * std::max(a.term_count(), b.term_count()));
    for (auto& ta : a.terms()) {
        const mpz_class& na = ta.c.re().get_num();
        for (auto& tb : b.terms()) {
            PackedExp k = pack(exp_add(ta.e, tb.e));
            auto [it, fresh] = acc.try_emplace(k);
            if (fresh) {
                mpz_mul(it->second.get_mpz_t(), na.get_mpz_t(), tb.c.re().get_num().get_mpz_t());
                if (acc.size() > budget) throw TermBudgetExceeded{};
            } else {
                mpz_addmul(it->second.get_mpz_t(), na.get_mpz_t(), tb.c.re().get_num().get_mpz_t());
            }
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [k, z] : acc)
        if (z != 0) out.push_back({unpack(k), GaussianRational(mpq_class(std::move(z)), mpq_class(0))});
    return out;
}

// Kronecker substitution: map the free exponents onto one axis, multiply
// the packed integers with GMP's FFT, and read the slots back. Signs are
// handled by splitting each factor into positive and negative parts.
struct KroneckerPlan {
    int free_vars[2];
    int nfree;
    long radix;   // slot count along the first free axis
    long slots;   // total slot count of the product
    long dtot;    // product total degree (to rebuild dependent exponents)
    long dx, dy;  // product bidegrees for the bihomogeneous case
    int slot_bits;
};

std::optional<KroneckerPlan> plan_kronecker(const Poly& a, const Poly& b) {
    KroneckerPlan plan{};
    switch (a.vars()) {
        case VarSet::X:
            plan.nfree = 1;
            plan.free_vars[0] = 0;
            break;
        case VarSet::XY:
            plan.nfree = 2;
            plan.free_vars[0] = 0;
            plan.free_vars[1] = 1;
            break;
        case VarSet::P2:
            if (!a.is_homogeneous() || !b.is_homogeneous()) return std::nullopt;
            plan.nfree = 2;
            plan.free_vars[0] = 1;
            plan.free_vars[1] = 2;
            plan.dtot = a.total_degree() + b.total_degree();
            break;
        case VarSet::BIPROJ: {
            auto ba = a.bidegree(), bb = b.bidegree();
            if (!ba || !bb) return std::nullopt;
            plan.nfree = 2;
            plan.free_vars[0] = 0;
            plan.free_vars[1] = 2;
            plan.dx = ba->first + bb->first;
            plan.dy = ba->second + bb->second;
            break;
        }
    }
    plan.radix = a.degree_in(plan.free_vars[0]) + b.degree_in(plan.free_vars[0]) + 1;
    long r2 = plan.nfree == 2 ? a.degree_in(plan.free_vars[1]) + b.degree_in(plan.free_vars[1]) + 1 : 1;
    plan.slots = plan.radix * r2;

    auto max_bits = [](const Poly& p) {
        std::size_t m = 1;
        for (auto& t : p.terms())
            m = std::max(m, mpz_sizeinbase(t.c.re().get_num().get_mpz_t(), 2));
        return long(m);
    };
    long bits = max_bits(a) + max_bits(b) +
                long(std::ceil(std::log2(double(std::min(a.term_count(), b.term_count())) + 1))) + 2;
    plan.slot_bits = int((bits + 63) / 64) * 64;
    if (double(plan.slots) * plan.slot_bits > 1.2e9) return std::nullopt; // keep buffers sane
    return plan;
}

long kronecker_slot(const KroneckerPlan& plan, const Exp& e) {
    long s = e[plan.free_vars[0]];
    if (plan.nfree == 2) s += long(e[plan.free_vars[1]]) * plan.radix;
    return s;
}

void kronecker_pack(const Poly& p, const KroneckerPlan& plan, mpz_class& pos, mpz_class& neg) {
    const int limbs_per_slot = plan.slot_bits / 64;
    long max_slot = 0;
    for (auto& t : p.terms()) max_slot = std::max(max_slot, kronecker_slot(plan, t.e));
    std::vector<mp_limb_t> bp((max_slot + 1) * limbs_per_slot + 1, 0);
    std::vector<mp_limb_t> bn(bp.size(), 0);
    bool any_neg = false;
    for (auto& t : p.terms()) {
        const mpz_class& z = t.c.re().get_num();
        bool is_neg = sgn(z) < 0;
        any_neg = any_neg || is_neg;
        std::vector<mp_limb_t>& buf = is_neg ? bn : bp;
        std::size_t off = std::size_t(kronecker_slot(plan, t.e)) * limbs_per_slot;
        std::size_t count = mpz_size(z.get_mpz_t());
        for (std::size_t i = 0; i < count; ++i) buf[off + i] = mpz_getlimbn(z.get_mpz_t(), mp_size_t(i));
    }
    mpz_import(pos.get_mpz_t(), bp.size(), -1, sizeof(mp_limb_t), 0, 0, bp.data());
    if (any_neg)
        mpz_import(neg.get_mpz_t(), bn.size(), -1, sizeof(mp_limb_t), 0, 0, bn.data());
    else
        neg = 0;
}

std::vector<Term> multiply_kronecker(const Poly& a, const Poly& b, std::size_t budget,
                                     const KroneckerPlan& plan) {
    mpz_class ap, an, bp, bn;
    kronecker_pack(a, plan, ap, an);
    const bool square = &a == &b;
    if (square) {
        bp = ap;
        bn = an;
    } else {
        kronecker_pack(b, plan, bp, bn);
    }
    mpz_class pp = ap * bp;
    mpz_class nn = an != 0 && bn != 0 ? mpz_class(an * bn) : mpz_class(0);
    mpz_class pn = an != 0 || bn != 0 ? (square ? mpz_class(2 * ap * an) : mpz_class(ap * bn + an * bp))
                                      : mpz_class(0);

    const int limbs_per_slot = plan.slot_bits / 64;
    auto slot_value = [&](const mpz_class& big, long slot) {
        mpz_class v;
        std::size_t lo = std::size_t(slot) * limbs_per_slot;
        std::size_t total = mpz_size(big.get_mpz_t());
        if (lo >= total) return v;
        std::size_t n = std::min<std::size_t>(limbs_per_slot, total - lo);
        std::vector<mp_limb_t> tmp(n);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = mpz_getlimbn(big.get_mpz_t(), mp_size_t(lo + i));
        mpz_import(v.get_mpz_t(), tmp.size(), -1, sizeof(mp_limb_t), 0, 0, tmp.data());
        return v;
    };

    std::vector<Term> out;
    for (long slot = 0; slot < plan.slots; ++slot) {
        mpz_class c = slot_value(pp, slot) + slot_value(nn, slot) - slot_value(pn, slot);
        if (c == 0) continue;
        if (out.size() >= budget) throw TermBudgetExceeded{};
        long e1 = slot % plan.radix;
        long e2 = plan.nfree == 2 ? slot / plan.radix : 0;
        Exp e{0, 0, 0, 0};
        e[plan.free_vars[0]] = uint32_t(e1);
        if (plan.nfree == 2) e[plan.free_vars[1]] = uint32_t(e2);
        if (a.vars() == VarSet::P2) {
            long e0 = plan.dtot - e1 - e2;
            if (e0 < 0) continue; // outside the simplex: cannot carry a term
            e[0] = uint32_t(e0);
        } else if (a.vars() == VarSet::BIPROJ) {
            long x1 = plan.dx - e1, y1 = plan.dy - e2;
            if (x1 < 0 || y1 < 0) continue;
            e[1] = uint32_t(x1);
            e[3] = uint32_t(y1);
        }
        out.push_back({e, GaussianRational(mpq_class(std::move(c)), mpq_class(0))});
    }
    return out;
}

std::vector<Term> multiply_general(const Poly& a, const Poly& b, std::size_t budget) {
    std::unordered_map<PackedExp, GaussianRational, PackedHash> acc;
    acc.reserve(4 * std::max(a.term_count(), b.term_count()));
    for (auto& ta : a.terms()) {
        for (auto& tb : b.terms()) {
            PackedExp k = pack(exp_add(ta.e, tb.e));
            auto [it, fresh] = acc.try_emplace(k);
            if (fresh) {
                it->second = ta.c * tb.c;
                if (acc.size() > budget) throw TermBudgetExceeded{};
            } else {
                it->second += ta.c * tb.c;
            }
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (!c.is_zero()) out.push_back({unpack(k), std::move(c)});
    return out;
}

} // namespace

Poly operator*(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars()) throw std::logic_error("mixed variable spaces");
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.vars());
    if (a.is_monomial()) return b.mul_monomial(a.terms()[0].e, a.terms()[0].c);
    if (b.is_monomial()) return a.mul_monomial(b.terms()[0].e, b.terms()[0].c);

    const std::size_t budget = term_budget();
    std::size_t work = a.term_count() * b.term_count();
    std::vector<Term> out;
    if (work > 4096 && integer_real_coeffs(a) && integer_real_coeffs(b)) {
        std::optional<KroneckerPlan> plan;
        if (work > 20000000) plan = plan_kronecker(a, b);
        out = plan ? multiply_kronecker(a, b, budget, *plan) : multiply_integer(a, b, budget);
    } else {
        out = multiply_general(a, b, budget);
    }
    std::sort(out.begin(), out.end(), [](const Term& s, const Term& t) { return exp_after(s.e, t.e); });
    Poly r(a.vars());
    r.terms_ = std::move(out);
    return r;
}

Poly Poly::scaled(const GaussianRational& c) const {
    if (c.is_zero()) return Poly(vars_);
    Poly r(vars_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.e, t.c * c});
    return r;
}

Poly Poly::mul_monomial(const Exp& e, const GaussianRational& c) const {
    if (c.is_zero()) return Poly(vars_);
    Poly r(vars_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({exp_add(t.e, e), t.c * c});
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(vars_, GaussianRational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

Poly Poly::derivative(int var) const {
    Poly r(vars_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) {
        if (t.e[var] == 0) continue;
        Exp e = t.e;
        long k = e[var]--;
        r.terms_.push_back({e, t.c * GaussianRational(k)});
    }
    r.normalize();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(terms_[0].c.inverse());
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
}

int Poly::cmp(const Poly& a, const Poly& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        PackedExp ka = pack(a.terms_[i].e), kb = pack(b.terms_[i].e);
        if (ka != kb) return ka > kb ? 1 : -1;
        int c = GaussianRational::cmp(a.terms_[i].c, b.terms_[i].c);
        if (c != 0) return c;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() > b.terms_.size() ? 1 : -1;
    return 0;
}

GaussianRational Poly::eval(const std::vector<GaussianRational>& point) const {
    if (int(point.size()) != nvars()) throw std::logic_error("evaluation arity mismatch");
    GaussianRational sum(0);
    for (auto& t : terms_) {
        GaussianRational m = t.c;
        for (int i = 0; i < nvars(); ++i)
            if (t.e[i]) m *= point[i].pow(t.e[i]);
        sum += m;
    }
    return sum;
}

std::complex<double> Poly::eval(const std::vector<std::complex<double>>& point) const {
    if (int(point.size()) != nvars()) throw std::logic_error("evaluation arity mismatch");
    std::complex<double> sum = 0.0;
    for (auto& t : terms_) {
        std::complex<double> m(t.c.re_double(), t.c.im_double());
        for (int i = 0; i < nvars(); ++i)
            for (int k = 0; k < t.e[i]; ++k) m *= point[i];
        sum += m;
    }
    return sum;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& t : terms_) {
        GaussianRational c = t.c;
        bool neg = (c.im() == 0 && c.re() < 0) || (c.re() == 0 && c.im() < 0);
        if (first) {
            if (neg) {
                out += "-";
                c = -c;
            }
            first = false;
        } else {
            out += neg ? " - " : " + ";
            if (neg) c = -c;
        }
        std::string mono;
        for (int i = 0; i < nvars(); ++i) {
            if (t.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(vars_, i);
            if (t.e[i] > 1) mono += "^" + std::to_string(t.e[i]);
        }
        bool complex_coeff = c.re() != 0 && c.im() != 0;
        if (mono.empty()) {
            out += complex_coeff ? "(" + c.str() + ")" : c.str();
        } else if (c.is_one()) {
            out += mono;
        } else if (complex_coeff) {
            out += "(" + c.str() + ")*" + mono;
        } else {
            out += c.str() + "*" + mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// gcd machinery

namespace {

Poly gcd_impl(const Poly& a, const Poly& b);

Poly monomial_gcd_with(const Poly& m, const Poly& p) {
    Exp e{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        e[i] = uint32_t(std::min(long(m.terms()[0].e[i]), std::max(0l, p.min_degree_in(i))));
    return Poly::monomial(m.vars(), e, GaussianRational(1));
}

// Coefficients of p viewed as a polynomial in `var`, indexed by exponent.
std::map<int, Poly> coeffs_in(const Poly& p, int var) {
    std::map<int, Poly> out;
    std::map<int, std::vector<Term>> buckets;
    for (auto& t : p.terms()) {
        Exp e = t.e;
        int k = e[var];
        e[var] = 0;
        buckets[k].push_back({e, t.c});
    }
    for (auto& [k, ts] : buckets) out.emplace(k, Poly::from_terms(p.vars(), std::move(ts)));
    return out;
}

Poly recompose(VarSet vs, int var, const std::map<int, Poly>& cs) {
    std::vector<Term> terms;
    for (auto& [k, c] : cs)
        for (auto& t : c.terms()) {
            Exp e = t.e;
            e[var] = uint32_t(k);
            terms.push_back({e, t.c});
        }
    return Poly::from_terms(vs, std::move(terms));
}

// Main variable for the remainder sequence: the used variable of smallest
// joint degree keeps the sequences short.
int choose_main_var(const Poly& a, const Poly& b) {
    int best = -1;
    long best_score = 0;
    for (int i = 0; i < var_count(a.vars()); ++i) {
        long da = std::max(0l, a.degree_in(i)), db = std::max(0l, b.degree_in(i));
        if (da == 0 && db == 0) continue;
        long score = std::max(da, db);
        if (best < 0 || score < best_score) {
            best = i;
            best_score = score;
        }
    }
    return best;
}

int used_var_count(const Poly& a, const Poly& b) {
    int n = 0;
    for (int i = 0; i < var_count(a.vars()); ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) ++n;
    return n;
}

// Specialization of p along the line x_i = dir_i t + off_i. When the
// t-degree equals the total degree, every nonconstant factor of p keeps
// positive degree, so a constant specialized gcd certifies a constant gcd.
Poly specialize_line(const Poly& p, const long* dir, const long* off) {
    std::vector<Poly> args;
    Poly t = Poly::variable(VarSet::X, 0);
    for (int i = 0; i < p.nvars(); ++i)
        args.push_back(t.scaled(GaussianRational(dir[i])) +
                       Poly::constant(VarSet::X, GaussianRational(off[i])));
    return substitute_poly(p, args);
}

Poly univariate_gcd(Poly a, Poly b, int var);

bool constant_gcd_certificate(const Poly& a, const Poly& b) {
    static const long kDirs[3][4] = {{2, 3, 5, 7}, {3, -2, 7, 4}, {5, 7, 11, 13}};
    static const long kOffs[3][4] = {{1, -1, 2, 0}, {0, 1, 1, -1}, {2, 0, -3, 1}};
    for (int line = 0; line < 3; ++line) {
        Poly sa = specialize_line(a, kDirs[line], kOffs[line]);
        Poly sb = specialize_line(b, kDirs[line], kOffs[line]);
        if (sa.total_degree() != a.total_degree() || sb.total_degree() != b.total_degree()) continue;
        return univariate_gcd(sa, sb, 0).is_constant();
    }
    return false;
}

bool univariate_in(const Poly& p, int var) {
    for (int i = 0; i < var_count(p.vars()); ++i)
        if (i != var && p.degree_in(i) > 0) return false;
    return true;
}

// Field Euclid for polynomials in a single variable.
Poly univariate_gcd(Poly a, Poly b, int var) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    while (!b.is_zero()) {
        // a mod b
        auto ca = coeffs_in(a, var);
        auto cb = coeffs_in(b, var);
        int db = cb.rbegin()->first;
        Poly lb = cb.rbegin()->second;
        while (!ca.empty() && ca.rbegin()->first >= db) {
            int da = ca.rbegin()->first;
            GaussianRational q = ca.rbegin()->second.constant_value() / lb.constant_value();
            for (auto& [k, c] : cb) {
                Poly sub = c.scaled(q);
                auto it = ca.find(k + da - db);
                if (it == ca.end()) {
                    if (!sub.is_zero()) ca.emplace(k + da - db, -sub);
                } else {
                    it->second -= sub;
                    if (it->second.is_zero()) ca.erase(it);
                }
            }
        }
        a = b;
        b = recompose(a.vars(), var, ca);
    }
    return a.monic();
}

Poly content_in(const Poly& p, int var) {
    auto cs = coeffs_in(p, var);
    Poly g = Poly::zero(p.vars());
    for (auto& [k, c] : cs) {
        g = g.is_zero() ? c.monic() : gcd_impl(g, c);
        if (g.is_constant()) return Poly::constant(p.vars(), GaussianRational(1));
    }
    return g;
}

// Pseudo-remainder of a by b as polynomials in `var`.
Poly pseudo_rem(const Poly& a, const Poly& b, int var) {
    auto ca = coeffs_in(a, var);
    auto cb = coeffs_in(b, var);
    int db = cb.rbegin()->first;
    Poly lb = cb.rbegin()->second;
    while (!ca.empty() && ca.rbegin()->first >= db) {
        int da = ca.rbegin()->first;
        Poly la = ca.rbegin()->second;
        // lb * a - la * x^(da-db) * b, restricted to degree < da
        std::map<int, Poly> next;
        for (auto& [k, c] : ca) {
            if (k == da) continue;
            next[k] = c * lb;
        }
        for (auto& [k, c] : cb) {
            if (k == db) continue;
            auto it = next.find(k + da - db);
            Poly sub = c * la;
            if (it == next.end())
                next.emplace(k + da - db, -sub);
            else {
                it->second -= sub;
                if (it->second.is_zero()) next.erase(it);
            }
        }
        std::erase_if(next, [](auto& kv) { return kv.second.is_zero(); });
        ca = std::move(next);
    }
    return recompose(a.vars(), var, ca);
}

Poly gcd_impl(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_monomial()) return monomial_gcd_with(a, b);
    if (b.is_monomial()) return monomial_gcd_with(b, a);
    if (a == b) return a.monic();

    // Pull out the common monomial content first; compositions of maps
    // mostly saturate by pure monomials.
    {
        Exp common{0, 0, 0, 0};
        bool any = false;
        for (int i = 0; i < var_count(a.vars()); ++i) {
            long m = std::min(a.min_degree_in(i), b.min_degree_in(i));
            if (m > 0) {
                common[i] = uint32_t(m);
                any = true;
            }
        }
        if (any) {
            Poly mono = Poly::monomial(a.vars(), common, GaussianRational(1));
            Poly ra = *poly_divide_exact(a, mono);
            Poly rb = *poly_divide_exact(b, mono);
            return gcd_impl(ra, rb).mul_monomial(common, GaussianRational(1));
        }
    }

    int v = choose_main_var(a, b);
    if (v < 0) return Poly::constant(a.vars(), GaussianRational(1));
    if (univariate_in(a, v) && univariate_in(b, v)) return univariate_gcd(a, b, v);

    if (used_var_count(a, b) > 1 && constant_gcd_certificate(a, b))
        return Poly::constant(a.vars(), GaussianRational(1));

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly pa = *poly_divide_exact(a, ca);
    Poly pb = *poly_divide_exact(b, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

    while (!pb.is_zero()) {
        Poly r = pseudo_rem(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = r;
        } else if (r.degree_in(v) == 0) {
            pa = Poly::constant(a.vars(), GaussianRational(1));
            break;
        } else {
            pb = *poly_divide_exact(r, content_in(r, v));
        }
    }
    Poly g = gcd_impl(ca, cb) * (pa.degree_in(v) > 0 ? *poly_divide_exact(pa, content_in(pa, v))
                                                     : Poly::constant(a.vars(), GaussianRational(1)));
    return g.monic();
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars()) throw std::logic_error("mixed variable spaces");
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of zero pair");
    return gcd_impl(a, b);
}

std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars()) throw std::logic_error("mixed variable spaces");
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (b.is_constant()) return a.scaled(b.constant_value().inverse());
    if (b.is_monomial()) {
        const Term& lb = b.leading_term();
        GaussianRational inv = lb.c.inverse();
        std::vector<Term> quot;
        quot.reserve(a.term_count());
        for (auto& t : a.terms()) {
            Exp q;
            for (int i = 0; i < 4; ++i) {
                if (t.e[i] < lb.e[i]) return std::nullopt;
                q[i] = t.e[i] - lb.e[i];
            }
            quot.push_back({q, t.c * inv});
        }
        return Poly::from_terms(a.vars(), std::move(quot));
    }
    Poly rem = a;
    std::vector<Term> quot;
    const Term& lb = b.leading_term();
    while (!rem.is_zero()) {
        const Term& lr = rem.leading_term();
        Exp q;
        for (int i = 0; i < 4; ++i) {
            if (lr.e[i] < lb.e[i]) return std::nullopt;
            q[i] = uint32_t(lr.e[i] - lb.e[i]);
        }
        GaussianRational qc = lr.c / lb.c;
        quot.push_back({q, qc});
        rem -= b.mul_monomial(q, qc);
    }
    return Poly::from_terms(a.vars(), std::move(quot));
}

Poly substitute_poly(const Poly& p, const std::vector<Poly>& args) {
    if (int(args.size()) != p.nvars()) throw std::logic_error("substitution arity mismatch");
    VarSet target = args.empty() ? p.vars() : args[0].vars();
    for (auto& a : args)
        if (a.vars() != target) throw std::logic_error("mixed variable spaces");

    // cache of args[i]^k
    std::vector<std::vector<Poly>> powers(args.size());
    auto power = [&](std::size_t i, unsigned k) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(target, GaussianRational(1)));
        while (cache.size() <= k) cache.push_back(cache.back() * args[i]);
        return cache[k];
    };

    Poly sum = Poly::zero(target);
    for (auto& t : p.terms()) {
        Poly m = Poly::constant(target, t.c);
        for (std::size_t i = 0; i < args.size(); ++i)
            if (t.e[i]) m = m * power(i, t.e[i]);
        sum += m;
    }
    return sum;
}

} // namespace cremona
