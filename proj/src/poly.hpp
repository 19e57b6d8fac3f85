// Sparse multivariate polynomials over the Gaussian rationals, with the
// four fixed variable spaces used by the map models. Terms are kept in
// decreasing lexicographic order (x0 > x1 > x2, resp. x > y), which fixes
// canonical forms for serialization and comparison.
#pragma once

#include "scalar.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

enum class VarSet : uint8_t { X, XY, P2, BIPROJ };

int var_count(VarSet vs);
const char* var_name(VarSet vs, int i);

using Exp = std::array<uint32_t, 4>;

struct Term {
    Exp e;
    GaussianRational c;
};

// Resource guard: polynomial operations refuse to grow past the active
// term budget and throw TermBudgetExceeded instead.
struct TermBudgetExceeded : std::runtime_error {
    TermBudgetExceeded() : std::runtime_error("polynomial term budget exceeded") {}
};

std::size_t term_budget();
void set_term_budget(std::size_t n);

class TermBudgetGuard {
public:
    explicit TermBudgetGuard(std::size_t n) : old_(term_budget()) { set_term_budget(n); }
    ~TermBudgetGuard() { set_term_budget(old_); }
    TermBudgetGuard(const TermBudgetGuard&) = delete;
    TermBudgetGuard& operator=(const TermBudgetGuard&) = delete;

private:
    std::size_t old_;
};

class Poly {
public:
    explicit Poly(VarSet vs = VarSet::XY) : vars_(vs) {}

    static Poly zero(VarSet vs) { return Poly(vs); }
    static Poly constant(VarSet vs, const GaussianRational& c);
    static Poly variable(VarSet vs, int i);
    static Poly monomial(VarSet vs, const Exp& e, const GaussianRational& c);

    // Terms must be distinct; zero coefficients are dropped, order is restored.
    static Poly from_terms(VarSet vs, std::vector<Term> terms);

    VarSet vars() const { return vars_; }
    int nvars() const { return var_count(vars_); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    GaussianRational constant_value() const;
    const Term& leading_term() const;

    long total_degree() const;    // -1 for the zero polynomial
    long degree_in(int var) const; // -1 for the zero polynomial
    long min_degree_in(int var) const;
    bool depends_on(int var) const { return degree_in(var) > 0; }
    bool is_homogeneous() const;
    // (x-degree, y-degree) shared by all terms of a bihomogeneous polynomial.
    std::optional<std::pair<long, long>> bidegree() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const GaussianRational& c) const;
    Poly mul_monomial(const Exp& e, const GaussianRational& c) const;
    Poly pow(unsigned e) const;
    Poly derivative(int var) const;

    // Leading coefficient scaled to 1.
    Poly monic() const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    static int cmp(const Poly& a, const Poly& b);

    GaussianRational eval(const std::vector<GaussianRational>& point) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

    std::string str() const;

private:
    void normalize();

    VarSet vars_;
    std::vector<Term> terms_; // decreasing lex, no zero coefficients
};

// Greatest common divisor, monic-normalized; errors on the zero pair.
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);

// Polynomial substitution: replace variable i of p by args[i]. All args
// share one variable space, which becomes the space of the result.
Poly substitute_poly(const Poly& p, const std::vector<Poly>& args);

} // namespace cremona
