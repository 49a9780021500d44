#pragma once

#include "ring.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace grhom {

/* Graded free module ⊕ Ring(-twists[i]).  A generator with twist d has
 * internal degree d. */
struct FreeModule {
    Ring ring;
    std::vector<int> twists;

    int rank() const { return static_cast<int>(twists.size()); }
    int twist(int i) const { return twists[i]; }
};

/* tagged module monomial: monomial m in component comp */
struct ModTerm {
    int comp;
    Monomial m;
    bool operator==(const ModTerm& o) const { return comp == o.comp && m == o.m; }
};

/* module element: one polynomial per component of the ambient free module */
using VecPoly = std::vector<Polynomial>;

VecPoly velem_zero(int rank);
bool velem_is_zero(const VecPoly& v);
VecPoly velem_add(const PrimeField& F, const VecPoly& a, const VecPoly& b);
VecPoly velem_sub(const PrimeField& F, const VecPoly& a, const VecPoly& b);
VecPoly velem_scale(const PrimeField& F, const VecPoly& a, uint32_t c);
VecPoly velem_mul_term(const PrimeField& F, const VecPoly& a, const Monomial& m, uint32_t c);
VecPoly velem_mul_poly(const PrimeField& F, const VecPoly& a, const Polynomial& f);

/* homogeneous degree of v in M (deg + twist per term); throws on
 * inhomogeneous input; nullopt for zero */
std::optional<int> velem_degree(const FreeModule& M, const VecPoly& v);

/* entrywise normal form modulo the quotient ideal of the ring */
VecPoly velem_ring_nf(const Ring& r, const VecPoly& v);

/* Order on module monomials.  Degree-compatible position-over-term for
 * top-level submodules; Schreyer orders induced by a previous Groebner basis
 * for syzygy steps.  "greater" means larger in the term order. */
class ModuleOrder {
public:
    static std::shared_ptr<const ModuleOrder> degree_pot(std::vector<int> twists);
    static std::shared_ptr<const ModuleOrder> schreyer(std::vector<ModTerm> lt_images,
                                                       std::vector<int> twists,
                                                       std::shared_ptr<const ModuleOrder> base);

    std::strong_ordering cmp(int c1, const Monomial& m1, int c2, const Monomial& m2) const;
    const std::vector<int>& twists() const { return twists_; }

private:
    bool schreyer_ = false;
    std::vector<int> twists_;
    std::vector<ModTerm> lt_;
    std::shared_ptr<const ModuleOrder> base_;
};

struct ModLead {
    int comp;
    Monomial m;
    uint32_t c;
};

std::optional<ModLead> velem_lead(const VecPoly& v, const ModuleOrder& ord);

struct GBElem {
    VecPoly f; // monic leading coefficient
    int ltc = 0;
    Monomial ltm;
    int degree = 0; // internal degree of f
    VecPoly rep;    // representation over the augmented generators (if tracked)
};

/* Groebner basis of a submodule of a graded free module.  When the ring is a
 * quotient S/I the generator list is augmented internally with I-multiples of
 * the ambient basis, so normal forms are simultaneously reduced modulo I. */
class GroebnerBasis {
public:
    static GroebnerBasis compute(const FreeModule& ambient, std::vector<VecPoly> gens,
                                 std::shared_ptr<const ModuleOrder> order, bool track);
    /* wrap a list that is already a Groebner basis for the given order
     * (Schreyer syzygies of a previous level) */
    static GroebnerBasis wrap(const FreeModule& ambient, std::vector<VecPoly> elems,
                              std::shared_ptr<const ModuleOrder> order);

    const FreeModule& ambient() const { return ambient_; }
    const std::vector<GBElem>& elems() const { return elems_; }
    size_t size() const { return elems_.size(); }
    int n_user() const { return n_user_; }
    int n_aug() const { return n_aug_; }
    const std::vector<VecPoly>& aug_gens() const { return aug_; }
    const std::vector<int>& aug_degrees() const { return aug_degrees_; }
    std::shared_ptr<const ModuleOrder> order() const { return order_; }
    bool tracked() const { return tracked_; }

    /* full normal form; optional cofactors (length = size()) with
     * f = sum cof[s]*elems[s].f + result */
    VecPoly normal_form(VecPoly f, std::vector<Polynomial>* cofactors = nullptr) const;

    bool is_member(const VecPoly& f) const { return velem_is_zero(normal_form(f)); }

private:
    FreeModule ambient_;
    std::vector<GBElem> elems_;
    std::vector<VecPoly> aug_;
    std::vector<int> aug_degrees_;
    int n_user_ = 0;
    int n_aug_ = 0;
    bool tracked_ = false;
    std::shared_ptr<const ModuleOrder> order_;
};

struct SchreyerSyzygies {
    std::vector<VecPoly> syz;  // elements of the free module on gb.elems()
    FreeModule frame;          // that free module (twists = element degrees)
    std::shared_ptr<const ModuleOrder> order; // induced Schreyer order
};

/* Syzygies of a Groebner basis via S-pair reduction cofactors; the result is
 * a Groebner basis for the induced Schreyer order. */
SchreyerSyzygies schreyer_syzygies(const GroebnerBasis& gb);

/* Generators of { a : sum a_i primary_i  =  0  modulo (extra + I*ambient) },
 * i.e. the kernel of the primary columns into coker(extra) over the ring. */
std::vector<VecPoly> kernel_columns(const FreeModule& ambient,
                                    const std::vector<VecPoly>& primary,
                                    const std::vector<VecPoly>& extra);

/* Batch membership: rhs = sum c_i targets_i modulo (extra + I*ambient). */
class MembershipSolver {
public:
    MembershipSolver(const FreeModule& ambient, std::vector<VecPoly> targets,
                     std::vector<VecPoly> extra);
    std::optional<std::vector<Polynomial>> solve(const VecPoly& rhs) const;
    const FreeModule& ambient() const { return gb_.ambient(); }

private:
    GroebnerBasis gb_;
    int n_targets_;
};

/* standard monomials of degree d: module monomials not divisible by any
 * leading term of gb (gb should present relations + quotient columns) */
std::vector<ModTerm> standard_monomials(const GroebnerBasis& gb, int degree);

} // namespace grhom
