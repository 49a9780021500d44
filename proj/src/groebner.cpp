#include "groebner.hpp"

#include <algorithm>
#include <map>

namespace grhom {

VecPoly velem_zero(int rank) { return VecPoly(static_cast<size_t>(rank)); }

bool velem_is_zero(const VecPoly& v)
{
    for (const auto& f : v)
        if (!f.is_zero())
            return false;
    return true;
}

VecPoly velem_add(const PrimeField& F, const VecPoly& a, const VecPoly& b)
{
    VecPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = poly_add(F, a[i], b[i]);
    return r;
}

VecPoly velem_sub(const PrimeField& F, const VecPoly& a, const VecPoly& b)
{
    VecPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = poly_sub(F, a[i], b[i]);
    return r;
}

VecPoly velem_scale(const PrimeField& F, const VecPoly& a, uint32_t c)
{
    VecPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = poly_scale(F, a[i], c);
    return r;
}

VecPoly velem_mul_term(const PrimeField& F, const VecPoly& a, const Monomial& m, uint32_t c)
{
    VecPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = poly_mul_term(F, a[i], m, c);
    return r;
}

VecPoly velem_mul_poly(const PrimeField& F, const VecPoly& a, const Polynomial& f)
{
    VecPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = poly_mul(F, a[i], f);
    return r;
}

std::optional<int> velem_degree(const FreeModule& M, const VecPoly& v)
{
    std::optional<int> deg;
    for (size_t c = 0; c < v.size(); ++c) {
        if (v[c].is_zero())
            continue;
        if (!v[c].is_homogeneous())
            throw MathError("inhomogeneous module element");
        int d = *v[c].degree() + M.twist(static_cast<int>(c));
        if (deg && *deg != d)
            throw MathError("inhomogeneous module element");
        deg = d;
    }
    return deg;
}

VecPoly velem_ring_nf(const Ring& r, const VecPoly& v)
{
    if (!r->is_quotient())
        return v;
    VecPoly out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = ring_normal_form(r, v[i]);
    return out;
}

std::shared_ptr<const ModuleOrder> ModuleOrder::degree_pot(std::vector<int> twists)
{
    auto o = std::make_shared<ModuleOrder>(ModuleOrder{});
    o->schreyer_ = false;
    o->twists_ = std::move(twists);
    return o;
}

std::shared_ptr<const ModuleOrder> ModuleOrder::schreyer(std::vector<ModTerm> lt_images,
                                                         std::vector<int> twists,
                                                         std::shared_ptr<const ModuleOrder> base)
{
    auto o = std::make_shared<ModuleOrder>(ModuleOrder{});
    o->schreyer_ = true;
    o->twists_ = std::move(twists);
    o->lt_ = std::move(lt_images);
    o->base_ = std::move(base);
    return o;
}

std::strong_ordering ModuleOrder::cmp(int c1, const Monomial& m1, int c2,
                                      const Monomial& m2) const
{
    if (!schreyer_) {
        int d1 = m1.deg + twists_[c1];
        int d2 = m2.deg + twists_[c2];
        if (d1 != d2)
            return d1 <=> d2;
        if (c1 != c2) // position over term: lower component wins
            return c1 < c2 ? std::strong_ordering::greater : std::strong_ordering::less;
        return grevlex_compare(m1, m2);
    }
    auto down = base_->cmp(lt_[c1].comp, mono_mul(m1, lt_[c1].m), lt_[c2].comp,
                           mono_mul(m2, lt_[c2].m));
    if (down != std::strong_ordering::equal)
        return down;
    if (c1 != c2)
        return c1 < c2 ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::optional<ModLead> velem_lead(const VecPoly& v, const ModuleOrder& ord)
{
    std::optional<ModLead> best;
    for (size_t c = 0; c < v.size(); ++c) {
        if (v[c].is_zero())
            continue;
        const PTerm& t = v[c].leading();
        if (!best ||
            ord.cmp(static_cast<int>(c), t.m, best->comp, best->m) ==
                std::strong_ordering::greater)
            best = ModLead{static_cast<int>(c), t.m, t.c};
    }
    return best;
}

namespace {

/* remove the single term (comp, m) from v (it must be present) */
void strip_term(const PrimeField& F, VecPoly& v, int comp, const Monomial& m, uint32_t c)
{
    v[comp] = poly_sub(F, v[comp], Polynomial::term(m, c));
}

struct Reducer {
    const FreeModule& M;
    const std::vector<GBElem>& basis;
    const ModuleOrder& ord;

    /* Full normal form.  cof (if given) has one polynomial per basis element.
     * rep (if given) is updated as rep -= cof.rep contributions. */
    VecPoly reduce(VecPoly v, std::vector<Polynomial>* cof, VecPoly* rep) const
    {
        const PrimeField& F = M.ring->field();
        VecPoly out = velem_zero(M.rank());
        while (true) {
            auto lead = velem_lead(v, ord);
            if (!lead)
                break;
            int red = -1;
            for (size_t s = 0; s < basis.size(); ++s) {
                if (basis[s].ltc == lead->comp && mono_divides(basis[s].ltm, lead->m)) {
                    red = static_cast<int>(s);
                    break;
                }
            }
            if (red >= 0) {
                Monomial q = mono_div(lead->m, basis[red].ltm);
                v = velem_sub(F, v, velem_mul_term(F, basis[red].f, q, lead->c));
                if (cof)
                    (*cof)[red] =
                        poly_add(F, (*cof)[red], Polynomial::term(q, lead->c));
                if (rep && !basis[red].rep.empty())
                    *rep = velem_sub(F, *rep,
                                     velem_mul_term(F, basis[red].rep, q, lead->c));
            } else {
                out[lead->comp] =
                    poly_add(F, out[lead->comp], Polynomial::term(lead->m, lead->c));
                strip_term(F, v, lead->comp, lead->m, lead->c);
            }
        }
        return out;
    }
};

struct SPair {
    int i, j;
    Monomial lcm;
    int deg; // internal degree of the S-pair
};

bool pair_less(const SPair& a, const SPair& b)
{
    if (a.deg != b.deg)
        return a.deg < b.deg;
    if (a.j != b.j)
        return a.j < b.j;
    return a.i < b.i;
}

/* the product criterion is only valid when both elements live in a single
 * component (the ideal case) */
bool product_criterion_ok(const VecPoly& a, const VecPoly& b, int ltc)
{
    for (size_t c = 0; c < a.size(); ++c)
        if (static_cast<int>(c) != ltc && (!a[c].is_zero() || !b[c].is_zero()))
            return false;
    return true;
}

} // namespace

GroebnerBasis GroebnerBasis::compute(const FreeModule& ambient, std::vector<VecPoly> gens,
                                     std::shared_ptr<const ModuleOrder> order, bool track)
{
    const Ring& R = ambient.ring;
    const PrimeField& F = R->field();

    GroebnerBasis out;
    out.ambient_ = ambient;
    out.order_ = order;
    out.tracked_ = track;
    out.n_user_ = static_cast<int>(gens.size());

    // augmented generator list: user generators, then I * e_c for quotients
    std::vector<VecPoly> aug = std::move(gens);
    if (R->is_quotient()) {
        for (int c = 0; c < ambient.rank(); ++c)
            for (const auto& g : R->quotient().gb) {
                VecPoly v = velem_zero(ambient.rank());
                v[c] = g;
                aug.push_back(std::move(v));
            }
    }
    out.n_aug_ = static_cast<int>(aug.size());
    out.aug_ = aug;
    out.aug_degrees_.resize(aug.size(), 0);
    for (size_t i = 0; i < aug.size(); ++i) {
        auto d = velem_degree(ambient, aug[i]); // validates homogeneity
        out.aug_degrees_[i] = d ? *d : 0;
    }

    std::vector<GBElem>& basis = out.elems_;
    std::vector<SPair> pairs;

    auto lcm_of = [&](int i, int j) {
        return mono_lcm(basis[i].ltm, basis[j].ltm);
    };

    // Gebauer-Moeller update when element t is appended
    auto gm_update = [&](int t) {
        struct Cand {
            int i;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cand;
        for (int i = 0; i < t; ++i) {
            if (basis[i].ltc != basis[t].ltc)
                continue;
            bool cop = mono_coprime(basis[i].ltm, basis[t].ltm) &&
                       product_criterion_ok(basis[i].f, basis[t].f, basis[t].ltc);
            cand.push_back(Cand{i, lcm_of(i, t), cop});
        }
        // prune old pairs via the new leading term
        std::vector<SPair> kept;
        for (auto& pr : pairs) {
            bool drop = basis[t].ltc == basis[pr.i].ltc &&
                        mono_divides(basis[t].ltm, pr.lcm) &&
                        !(mono_lcm(basis[pr.i].ltm, basis[t].ltm) == pr.lcm) &&
                        !(mono_lcm(basis[pr.j].ltm, basis[t].ltm) == pr.lcm);
            if (!drop)
                kept.push_back(pr);
        }
        pairs.swap(kept);
        // M criterion among the candidates: keep divisibility-minimal lcms,
        // one per equal-lcm class, preferring a coprime representative
        std::stable_sort(cand.begin(), cand.end(), [](const Cand& a, const Cand& b) {
            if (a.lcm.deg != b.lcm.deg)
                return a.lcm.deg < b.lcm.deg;
            return a.coprime > b.coprime;
        });
        std::vector<Cand> sel;
        for (auto& c : cand) {
            bool covered = false;
            for (auto& s : sel)
                if (mono_divides(s.lcm, c.lcm)) {
                    covered = true;
                    break;
                }
            if (!covered)
                sel.push_back(c);
        }
        for (auto& c : sel) {
            if (c.coprime)
                continue; // product criterion
            int dg = c.lcm.deg + ambient.twist(basis[t].ltc);
            pairs.push_back(SPair{c.i, t, c.lcm, dg});
        }
    };

    Reducer red{ambient, basis, *order};

    auto append_elem = [&](VecPoly v, VecPoly rep) {
        auto lead = velem_lead(v, *order);
        uint32_t ic = F.inv(lead->c);
        v = velem_scale(F, v, ic);
        if (track)
            rep = velem_scale(F, rep, ic);
        GBElem e;
        e.ltc = lead->comp;
        e.ltm = lead->m;
        e.degree = *velem_degree(ambient, v);
        e.f = std::move(v);
        e.rep = std::move(rep);
        basis.push_back(std::move(e));
        gm_update(static_cast<int>(basis.size()) - 1);
    };

    for (size_t i = 0; i < aug.size(); ++i) {
        if (velem_is_zero(aug[i]))
            continue;
        VecPoly rep;
        if (track) {
            rep = velem_zero(out.n_aug_);
            rep[i] = Polynomial::constant(R->nvars(), 1);
        }
        std::vector<Polynomial> cof(basis.size());
        VecPoly v = red.reduce(aug[i], track ? &cof : nullptr, track ? &rep : nullptr);
        if (!velem_is_zero(v))
            append_elem(std::move(v), std::move(rep));
    }

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        SPair pr = *it;
        pairs.erase(it);
        const GBElem& gi = basis[pr.i];
        const GBElem& gj = basis[pr.j];
        Monomial ui = mono_div(pr.lcm, gi.ltm);
        Monomial uj = mono_div(pr.lcm, gj.ltm);
        VecPoly sp = velem_sub(F, velem_mul_term(F, gi.f, ui, 1),
                               velem_mul_term(F, gj.f, uj, 1));
        VecPoly rep;
        if (track)
            rep = velem_sub(F, velem_mul_term(F, gi.rep, ui, 1),
                            velem_mul_term(F, gj.rep, uj, 1));
        VecPoly v = red.reduce(std::move(sp), nullptr, track ? &rep : nullptr);
        if (!velem_is_zero(v))
            append_elem(std::move(v), std::move(rep));
    }

    // reduced basis: drop redundant leading terms, then tail-reduce
    std::vector<char> keep(basis.size(), 1);
    for (size_t s = 0; s < basis.size(); ++s) {
        for (size_t t = 0; t < basis.size(); ++t) {
            if (s == t || !keep[t])
                continue;
            if (basis[t].ltc == basis[s].ltc && mono_divides(basis[t].ltm, basis[s].ltm)) {
                if (basis[t].ltm == basis[s].ltm && t > s)
                    continue; // equal leads: keep the earlier one
                keep[s] = 0;
                break;
            }
        }
    }
    std::vector<GBElem> reduced;
    for (size_t s = 0; s < basis.size(); ++s)
        if (keep[s])
            reduced.push_back(std::move(basis[s]));
    basis.swap(reduced);

    for (size_t s = 0; s < basis.size(); ++s) {
        // reduce the tail of basis[s] against the whole basis
        VecPoly tail = basis[s].f;
        strip_term(F, tail, basis[s].ltc, basis[s].ltm, 1);
        std::vector<Polynomial> cof(basis.size());
        VecPoly rtail = red.reduce(std::move(tail), &cof, nullptr);
        VecPoly nf = rtail;
        nf[basis[s].ltc] =
            poly_add(F, nf[basis[s].ltc], Polynomial::term(basis[s].ltm, 1));
        if (track) {
            VecPoly rep = basis[s].rep;
            for (size_t t = 0; t < basis.size(); ++t)
                if (!cof[t].is_zero())
                    rep = velem_sub(F, rep, velem_mul_poly(F, basis[t].rep, cof[t]));
            basis[s].rep = std::move(rep);
        }
        basis[s].f = std::move(nf);
    }

    return out;
}

GroebnerBasis GroebnerBasis::wrap(const FreeModule& ambient, std::vector<VecPoly> elems,
                                  std::shared_ptr<const ModuleOrder> order)
{
    const PrimeField& F = ambient.ring->field();
    GroebnerBasis out;
    out.ambient_ = ambient;
    out.order_ = order;
    out.tracked_ = false;
    out.n_user_ = static_cast<int>(elems.size());
    out.n_aug_ = out.n_user_;
    out.aug_ = elems;
    for (auto& v : elems) {
        auto lead = velem_lead(v, *order);
        if (!lead)
            continue;
        GBElem e;
        e.ltc = lead->comp;
        e.ltm = lead->m;
        uint32_t ic = F.inv(lead->c);
        e.f = velem_scale(F, v, ic);
        e.degree = *velem_degree(ambient, e.f);
        out.elems_.push_back(std::move(e));
        out.aug_degrees_.push_back(out.elems_.back().degree);
    }
    return out;
}

VecPoly GroebnerBasis::normal_form(VecPoly f, std::vector<Polynomial>* cofactors) const
{
    if (cofactors)
        cofactors->assign(elems_.size(), Polynomial::zero());
    Reducer red{ambient_, elems_, *order_};
    return red.reduce(std::move(f), cofactors, nullptr);
}

SchreyerSyzygies schreyer_syzygies(const GroebnerBasis& gb)
{
    const FreeModule& M = gb.ambient();
    const PrimeField& F = M.ring->field();
    const auto& basis = gb.elems();
    const int k = static_cast<int>(basis.size());

    SchreyerSyzygies out;
    std::vector<int> twists(k);
    std::vector<ModTerm> lts(k);
    for (int s = 0; s < k; ++s) {
        twists[s] = basis[s].degree;
        lts[s] = ModTerm{basis[s].ltc, basis[s].ltm};
    }
    out.frame = FreeModule{M.ring, twists};
    out.order = ModuleOrder::schreyer(lts, twists, gb.order());

    Reducer red{M, basis, *gb.order()};

    // pair list pruned so that leading terms (lcm/lt_i)*e_i still generate
    // the initial module of the syzygies: mediator index must exceed i
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (basis[i].ltc != basis[j].ltc)
                continue;
            Monomial lcm = mono_lcm(basis[i].ltm, basis[j].ltm);
            bool pruned = false;
            for (int t = i + 1; t < k && !pruned; ++t) {
                if (t == j || basis[t].ltc != basis[i].ltc)
                    continue;
                if (!mono_divides(basis[t].ltm, lcm))
                    continue;
                Monomial l_it = mono_lcm(basis[i].ltm, basis[t].ltm);
                if (!(l_it == lcm) || t < j)
                    pruned = true;
            }
            if (pruned)
                continue;
            Monomial ui = mono_div(lcm, basis[i].ltm);
            Monomial uj = mono_div(lcm, basis[j].ltm);
            VecPoly syz = velem_zero(k);
            if (mono_coprime(basis[i].ltm, basis[j].ltm) &&
                product_criterion_ok(basis[i].f, basis[j].f, basis[i].ltc)) {
                // Koszul syzygy, no reduction needed
                int c = basis[i].ltc;
                syz[i] = basis[j].f[c];
                syz[j] = poly_neg(F, basis[i].f[c]);
            } else {
                VecPoly sp = velem_sub(F, velem_mul_term(F, basis[i].f, ui, 1),
                                       velem_mul_term(F, basis[j].f, uj, 1));
                std::vector<Polynomial> cof(basis.size());
                VecPoly r = red.reduce(std::move(sp), &cof, nullptr);
                if (!velem_is_zero(r))
                    throw MathError("schreyer_syzygies: input is not a Groebner basis");
                syz[i] = Polynomial::term(ui, 1);
                syz[j] = poly_sub(F, syz[j], Polynomial::term(uj, 1));
                for (int t = 0; t < k; ++t)
                    if (!cof[t].is_zero())
                        syz[t] = poly_sub(F, syz[t], cof[t]);
            }
            if (!velem_is_zero(syz))
                out.syz.push_back(std::move(syz));
        }
    }
    return out;
}

namespace {

/* expand a gb-frame element into augmented-generator coordinates */
VecPoly to_aug_coords(const PrimeField& F, const GroebnerBasis& gb, const VecPoly& v)
{
    VecPoly out = velem_zero(gb.n_aug());
    for (size_t s = 0; s < gb.size(); ++s) {
        if (v[s].is_zero())
            continue;
        out = velem_add(F, out, velem_mul_poly(F, gb.elems()[s].rep, v[s]));
    }
    return out;
}

} // namespace

std::vector<VecPoly> kernel_columns(const FreeModule& ambient,
                                    const std::vector<VecPoly>& primary,
                                    const std::vector<VecPoly>& extra)
{
    const Ring& R = ambient.ring;
    const PrimeField& F = R->field();
    const int np = static_cast<int>(primary.size());
    if (np == 0)
        return {};

    std::vector<VecPoly> gens = primary;
    gens.insert(gens.end(), extra.begin(), extra.end());
    auto order = ModuleOrder::degree_pot(ambient.twists);
    GroebnerBasis gb = GroebnerBasis::compute(ambient, std::move(gens), order, true);

    std::vector<VecPoly> syz_aug;

    // Schreyer syzygies of the basis, pushed down to augmented coordinates
    SchreyerSyzygies sch = schreyer_syzygies(gb);
    for (const auto& s : sch.syz) {
        VecPoly v = to_aug_coords(F, gb, s);
        if (!velem_is_zero(v))
            syz_aug.push_back(std::move(v));
    }

    // columns of (identity - division*representation)
    for (int i = 0; i < gb.n_aug(); ++i) {
        std::vector<Polynomial> cof;
        VecPoly r = gb.normal_form(gb.aug_gens()[i], &cof);
        if (!velem_is_zero(r))
            throw MathError("kernel_columns: generator does not reduce to zero");
        VecPoly col = velem_zero(gb.n_aug());
        col[i] = Polynomial::constant(R->nvars(), 1);
        for (size_t s = 0; s < gb.size(); ++s)
            if (!cof[s].is_zero())
                col = velem_sub(F, col, velem_mul_poly(F, gb.elems()[s].rep, cof[s]));
        if (!velem_is_zero(col))
            syz_aug.push_back(std::move(col));
    }

    // project onto the primary block and normalize modulo the quotient
    std::vector<VecPoly> out;
    for (auto& v : syz_aug) {
        VecPoly pr(v.begin(), v.begin() + np);
        pr = velem_ring_nf(R, pr);
        if (!velem_is_zero(pr))
            out.push_back(std::move(pr));
    }
    // drop exact duplicates to keep presentations small
    std::vector<VecPoly> dedup;
    for (auto& v : out) {
        bool seen = false;
        for (auto& w : dedup)
            if (w == v) {
                seen = true;
                break;
            }
        if (!seen)
            dedup.push_back(std::move(v));
    }
    return dedup;
}

namespace {
std::vector<VecPoly> concat_gens(std::vector<VecPoly> a, const std::vector<VecPoly>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}
} // namespace

MembershipSolver::MembershipSolver(const FreeModule& ambient, std::vector<VecPoly> targets,
                                   std::vector<VecPoly> extra)
    : gb_(GroebnerBasis::compute(ambient, concat_gens(targets, extra),
                                 ModuleOrder::degree_pot(ambient.twists), true)),
      n_targets_(static_cast<int>(targets.size()))
{
}

std::optional<std::vector<Polynomial>> MembershipSolver::solve(const VecPoly& rhs) const
{
    const Ring& R = gb_.ambient().ring;
    const PrimeField& F = R->field();
    std::vector<Polynomial> cof;
    VecPoly r = gb_.normal_form(rhs, &cof);
    if (!velem_is_zero(r))
        return std::nullopt;
    VecPoly coords = velem_zero(gb_.n_aug());
    for (size_t s = 0; s < gb_.size(); ++s)
        if (!cof[s].is_zero())
            coords = velem_add(F, coords, velem_mul_poly(F, gb_.elems()[s].rep, cof[s]));
    std::vector<Polynomial> out(coords.begin(), coords.begin() + n_targets_);
    for (auto& f : out)
        f = ring_normal_form(R, f);
    return out;
}

std::vector<ModTerm> standard_monomials(const GroebnerBasis& gb, int degree)
{
    const FreeModule& M = gb.ambient();
    const int nv = M.ring->nvars();
    std::vector<std::vector<const Monomial*>> lts(M.rank());
    for (const auto& e : gb.elems())
        lts[e.ltc].push_back(&e.ltm);

    std::vector<ModTerm> out;
    for (int c = 0; c < M.rank(); ++c) {
        int md = degree - M.twist(c);
        if (md < 0)
            continue;
        for (auto& m : monomials_of_degree(nv, md)) {
            bool reducible = false;
            for (const Monomial* l : lts[c])
                if (mono_divides(*l, m)) {
                    reducible = true;
                    break;
                }
            if (!reducible)
                out.push_back(ModTerm{c, m});
        }
    }
    return out;
}

Ring make_quotient_ring(const Ring& s, std::vector<Polynomial> ideal_gens)
{
    if (s->is_quotient())
        throw MathError("make_quotient_ring: base must be a polynomial ring");
    for (const auto& g : ideal_gens)
        if (!g.is_homogeneous())
            throw MathError("quotient ideal generators must be homogeneous");

    FreeModule rank1{s, {0}};
    std::vector<VecPoly> gens;
    for (const auto& g : ideal_gens)
        if (!g.is_zero())
            gens.push_back(VecPoly{g});
    GroebnerBasis gb = GroebnerBasis::compute(rank1, std::move(gens),
                                              ModuleOrder::degree_pot({0}), false);

    auto qi = std::make_shared<QuotientInfo>();
    qi->ideal_gens = std::move(ideal_gens);
    for (const auto& e : gb.elems())
        qi->gb.push_back(e.f[0]);

    auto rd = std::shared_ptr<RingData>(new RingData(*s));
    rd->quot_ = qi;
    rd->base_ = s;
    return rd;
}

} // namespace grhom
