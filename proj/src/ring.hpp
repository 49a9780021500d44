#pragma once

#include "linalg.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace grhom {

/* Monomials of the standard-graded ring k[x_0..x_n], deg(x_i) = 1.
 * Exponents are 16-bit; total degrees beyond 10^4 are rejected. */
struct Monomial {
    std::vector<uint16_t> e;
    int deg = 0;

    static Monomial one(int nvars) { return Monomial{std::vector<uint16_t>(nvars, 0), 0}; }
    static Monomial var(int nvars, int i, int exp = 1);
    int nvars() const { return static_cast<int>(e.size()); }
    bool is_one() const { return deg == 0; }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_div(const Monomial& b, const Monomial& a); // b / a, assumes a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/* graded reverse lexicographic order; greater = larger in the term order */
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

struct PTerm {
    Monomial m;
    uint32_t c; // nonzero, reduced mod p
};

/* Sparse polynomial: terms sorted descending in grevlex, no zero coefficients,
 * no duplicate monomials.  Field arithmetic is supplied by the caller. */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<PTerm> terms) : t_(std::move(terms)) {}

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(int nvars, uint32_t c);
    static Polynomial term(Monomial m, uint32_t c);

    bool is_zero() const { return t_.empty(); }
    const std::vector<PTerm>& terms() const { return t_; }
    const PTerm& leading() const { return t_.front(); }
    size_t size() const { return t_.size(); }

    /* total degree of the leading term; nullopt for 0 */
    std::optional<int> degree() const;
    bool is_homogeneous() const;
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }

    bool operator==(const Polynomial& o) const;

private:
    std::vector<PTerm> t_;
};

Polynomial poly_add(const PrimeField& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const PrimeField& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const PrimeField& F, const Polynomial& a);
Polynomial poly_scale(const PrimeField& F, const Polynomial& a, uint32_t c);
/* a * (c * m) */
Polynomial poly_mul_term(const PrimeField& F, const Polynomial& a, const Monomial& m, uint32_t c);
Polynomial poly_mul(const PrimeField& F, const Polynomial& a, const Polynomial& b);

class RingData;
using Ring = std::shared_ptr<const RingData>;

struct QuotientInfo {
    std::vector<Polynomial> ideal_gens;
    /* reduced, monic Groebner basis of the ideal over S (grevlex) */
    std::vector<Polynomial> gb;
};

/* S = k[x_0..x_n] or a quotient R = S/I.  Shared immutable descriptor. */
class RingData : public std::enable_shared_from_this<RingData> {
public:
    const PrimeField& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    bool is_quotient() const { return static_cast<bool>(quot_); }
    const QuotientInfo& quotient() const { return *quot_; }
    /* the underlying polynomial ring S (this, when not a quotient) */
    Ring poly_ring() const { return base_ ? base_ : shared_from_this(); }

    friend Ring make_polynomial_ring(uint32_t p, std::vector<std::string> vars);
    friend Ring make_quotient_ring(const Ring& s, std::vector<Polynomial> ideal_gens);

private:
    RingData(PrimeField f, std::vector<std::string> v) : field_(f), vars_(std::move(v)) {}
    PrimeField field_;
    std::vector<std::string> vars_;
    std::shared_ptr<const QuotientInfo> quot_;
    Ring base_;
};

Ring make_polynomial_ring(uint32_t p, std::vector<std::string> vars);
Ring make_quotient_ring(const Ring& s, std::vector<Polynomial> ideal_gens);

bool same_ring(const Ring& a, const Ring& b);

/* normal form of the coefficient polynomial modulo the quotient ideal */
Polynomial ring_normal_form(const Ring& r, const Polynomial& f);

/* Parses `3*x0^2*x1 + x2^3 - 2` style syntax; variables by ring name. */
Polynomial parse_polynomial(const Ring& r, const std::string& text);

std::string polynomial_to_string(const Ring& r, const Polynomial& f);
std::string monomial_to_string(const Ring& r, const Monomial& m);

/* all monomials of the given total degree, deterministic order */
std::vector<Monomial> monomials_of_degree(int nvars, int deg);

} // namespace grhom
