#include "module.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace grhom {

ModuleMapData make_map(FreeModule source, FreeModule target, std::vector<VecPoly> cols)
{
    if (!same_ring(source.ring, target.ring))
        throw MathError("make_map: ring mismatch");
    if (static_cast<int>(cols.size()) != source.rank())
        throw MathError("make_map: column count != source rank");
    for (int j = 0; j < source.rank(); ++j) {
        auto d = velem_degree(target, cols[j]); // validates homogeneity
        if (d && *d != source.twist(j))
            throw MathError("make_map: column " + std::to_string(j) +
                            " has degree " + std::to_string(*d) + ", expected " +
                            std::to_string(source.twist(j)));
    }
    return ModuleMapData{std::move(source), std::move(target), std::move(cols)};
}

VecPoly apply_cols(const PrimeField& F, const std::vector<VecPoly>& cols, int target_rank,
                   const VecPoly& v)
{
    VecPoly out = velem_zero(target_rank);
    for (size_t c = 0; c < v.size(); ++c) {
        if (v[c].is_zero())
            continue;
        out = velem_add(F, out, velem_mul_poly(F, cols[c], v[c]));
    }
    return out;
}

std::vector<VecPoly> compose_cols(const PrimeField& F, const std::vector<VecPoly>& outer,
                                  int outer_target_rank, const std::vector<VecPoly>& inner)
{
    std::vector<VecPoly> out;
    out.reserve(inner.size());
    for (const auto& col : inner)
        out.push_back(apply_cols(F, outer, outer_target_rank, col));
    return out;
}

/* ------------------------------------------------------------------ */

struct PresentedModule::Impl {
    FreeModule gens;
    std::vector<VecPoly> rels;

    // lazy caches (single-threaded use)
    std::optional<GroebnerBasis> gb;
    std::optional<bool> zero;
    std::map<int, std::vector<ModTerm>> piece_bases;
    std::map<int, std::map<std::pair<int, std::vector<uint16_t>>, int>> piece_idx;
    std::map<int, ResolutionData> resolutions; // key: cap (-1 = complete)
    std::optional<PresentedModule> restricted;
    std::optional<BettiStats> stats;
    std::optional<int> krull;
    std::map<int, TruncationData> truncations;
};

PresentedModule PresentedModule::free_module(FreeModule f)
{
    return make(std::move(f), {});
}

PresentedModule PresentedModule::make(FreeModule gens, std::vector<VecPoly> relations)
{
    PresentedModule m;
    m.impl_ = std::make_shared<Impl>();
    m.impl_->gens = std::move(gens);
    for (auto& r : relations) {
        if (static_cast<int>(r.size()) != m.impl_->gens.rank())
            throw MathError("presentation relation has wrong rank");
        VecPoly v = velem_ring_nf(m.impl_->gens.ring, r);
        velem_degree(m.impl_->gens, v); // homogeneity check
        if (!velem_is_zero(v))
            m.impl_->rels.push_back(std::move(v));
    }
    return m;
}

const Ring& PresentedModule::ring() const { return impl_->gens.ring; }
const FreeModule& PresentedModule::gens() const { return impl_->gens; }
const std::vector<VecPoly>& PresentedModule::relations() const { return impl_->rels; }

const GroebnerBasis& PresentedModule::gb() const
{
    if (!impl_->gb)
        impl_->gb = GroebnerBasis::compute(impl_->gens, impl_->rels,
                                           ModuleOrder::degree_pot(impl_->gens.twists),
                                           false);
    return *impl_->gb;
}

bool PresentedModule::is_zero() const
{
    if (!impl_->zero) {
        bool z = true;
        const int nv = ring()->nvars();
        for (int c = 0; c < rank() && z; ++c) {
            VecPoly e = velem_zero(rank());
            e[c] = Polynomial::constant(nv, 1);
            z = velem_is_zero(gb().normal_form(std::move(e)));
        }
        impl_->zero = z;
    }
    return *impl_->zero;
}

const std::vector<ModTerm>& PresentedModule::piece_basis(int d) const
{
    auto it = impl_->piece_bases.find(d);
    if (it == impl_->piece_bases.end()) {
        auto basis = standard_monomials(gb(), d);
        auto& idx = impl_->piece_idx[d];
        for (size_t k = 0; k < basis.size(); ++k)
            idx[{basis[k].comp, basis[k].m.e}] = static_cast<int>(k);
        it = impl_->piece_bases.emplace(d, std::move(basis)).first;
    }
    return it->second;
}

int PresentedModule::piece_dim(int d) const
{
    return static_cast<int>(piece_basis(d).size());
}

int PresentedModule::piece_index(int d, const ModTerm& t) const
{
    piece_basis(d);
    const auto& idx = impl_->piece_idx[d];
    auto it = idx.find({t.comp, t.m.e});
    return it == idx.end() ? -1 : it->second;
}

PresentedModule direct_sum_twisted(const Ring& ring,
                                   const std::vector<std::pair<PresentedModule, int>>& parts)
{
    FreeModule frame{ring, {}};
    std::vector<VecPoly> rels;
    std::vector<int> offsets;
    int off = 0;
    for (const auto& [part, shift] : parts) {
        offsets.push_back(off);
        for (int t : part.gens().twists)
            frame.twists.push_back(t - shift);
        off += part.rank();
    }
    for (size_t p = 0; p < parts.size(); ++p) {
        for (const auto& r : parts[p].first.relations()) {
            VecPoly v = velem_zero(off);
            for (size_t c = 0; c < r.size(); ++c)
                v[offsets[p] + c] = r[c];
            rels.push_back(std::move(v));
        }
    }
    PresentedModule sum = PresentedModule::make(frame, std::move(rels));

    // seed the Groebner basis blockwise from the parts
    std::vector<VecPoly> elems;
    for (size_t p = 0; p < parts.size(); ++p) {
        for (const auto& e : parts[p].first.gb().elems()) {
            VecPoly v = velem_zero(off);
            for (size_t c = 0; c < e.f.size(); ++c)
                v[offsets[p] + c] = e.f[c];
            elems.push_back(std::move(v));
        }
    }
    sum.impl().gb = GroebnerBasis::wrap(sum.gens(), std::move(elems),
                                        ModuleOrder::degree_pot(sum.gens().twists));
    return sum;
}

PresentedModule twist_module(const PresentedModule& m, int j)
{
    if (j == 0)
        return m;
    return direct_sum_twisted(m.ring(), {{m, j}});
}

/* ------------------------------------------------------------------ */
/* pruning of constant differential entries                            */

namespace {

struct PivotOps {
    PrunableComplex& px;
    const PrimeField& F;
    const Ring& ring;

    Polynomial nf(const Polynomial& f) const { return ring_normal_form(ring, f); }

    bool try_pivot(int j, int col0, int row0)
    {
        auto& d = px.diffs[j];
        const Polynomial& pivot = d[col0][row0];
        uint32_t c = pivot.leading().c;
        uint32_t ic = F.inv(c);

        std::vector<Polynomial> qrow(d.size()); // row row0 entries per column
        for (size_t jj = 0; jj < d.size(); ++jj)
            qrow[jj] = d[jj][row0];
        const int rank_j1 = px.frames[j + 1].rank();
        std::vector<Polynomial> bcol(rank_j1); // pivot column entries
        for (int i = 0; i < rank_j1; ++i)
            bcol[i] = d[col0][i];

        // transformed coordinate at col0 for an element v of frame j
        auto coord_after_T = [&](const VecPoly& v) {
            Polynomial acc = v[col0];
            for (size_t jj = 0; jj < d.size(); ++jj) {
                if (static_cast<int>(jj) == col0 || qrow[jj].is_zero() || v[jj].is_zero())
                    continue;
                acc = poly_add(F, acc, poly_mul(F, poly_scale(F, qrow[jj], ic), v[jj]));
            }
            return nf(acc);
        };

        // feasibility: relations must not involve the deleted generators
        if (auto it = px.relations.find(j); it != px.relations.end())
            for (const auto& r : it->second)
                if (!coord_after_T(r).is_zero())
                    return false;
        if (auto it = px.relations.find(j + 1); it != px.relations.end())
            for (const auto& r : it->second)
                if (!nf(r[row0]).is_zero())
                    return false;
        if (auto it = px.diffs.find(j - 1); it != px.diffs.end())
            for (const auto& e : it->second)
                if (!coord_after_T(e).is_zero())
                    throw MathError("prune: incoming differential does not clear");

        // commit: column operations clearing row row0
        for (size_t jj = 0; jj < d.size(); ++jj) {
            if (static_cast<int>(jj) == col0 || qrow[jj].is_zero())
                continue;
            Polynomial q = poly_scale(F, qrow[jj], ic);
            d[jj] = velem_sub(F, d[jj], velem_mul_poly(F, d[col0], q));
            for (auto& f : d[jj])
                f = nf(f);
            if (auto it = px.attached.find(j); it != px.attached.end()) {
                auto& att = it->second;
                att[jj] = velem_sub(F, att[jj], velem_mul_poly(F, att[col0], q));
                for (auto& f : att[jj])
                    f = nf(f);
            }
        }
        // row operations on relations of frame j+1
        if (auto it = px.relations.find(j + 1); it != px.relations.end())
            for (auto& r : it->second) {
                if (r[row0].is_zero())
                    continue;
                for (int i = 0; i < rank_j1; ++i) {
                    if (i == row0 || bcol[i].is_zero())
                        continue;
                    r[i] = nf(poly_sub(F, r[i],
                                       poly_mul(F, poly_scale(F, bcol[i], ic), r[row0])));
                }
            }

        // deletions
        auto erase_coord = [](std::vector<VecPoly>& cols, int k) {
            for (auto& v : cols)
                v.erase(v.begin() + k);
        };
        d.erase(d.begin() + col0);
        erase_coord(d, row0);
        if (auto it = px.diffs.find(j - 1); it != px.diffs.end())
            erase_coord(it->second, col0);
        if (auto it = px.diffs.find(j + 1); it != px.diffs.end())
            it->second.erase(it->second.begin() + row0);
        if (auto it = px.relations.find(j); it != px.relations.end())
            erase_coord(it->second, col0);
        if (auto it = px.relations.find(j + 1); it != px.relations.end())
            erase_coord(it->second, row0);
        if (auto it = px.attached.find(j); it != px.attached.end())
            it->second.erase(it->second.begin() + col0);
        if (auto it = px.attached.find(j + 1); it != px.attached.end())
            it->second.erase(it->second.begin() + row0);
        auto& tj = px.frames[j].twists;
        tj.erase(tj.begin() + col0);
        auto& tj1 = px.frames[j + 1].twists;
        tj1.erase(tj1.begin() + row0);
        return true;
    }
};

} // namespace

void prune_constant_entries(PrunableComplex& px)
{
    const PrimeField& F = px.ring->field();
    PivotOps ops{px, F, px.ring};
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [j, d] : px.diffs) {
            if (px.frames.find(j) == px.frames.end() ||
                px.frames.find(j + 1) == px.frames.end())
                continue;
            for (size_t col = 0; col < d.size() && !changed; ++col) {
                for (size_t row = 0; row < d[col].size() && !changed; ++row) {
                    const Polynomial& e = d[col][row];
                    if (e.is_zero() || !e.is_constant())
                        continue;
                    if (ops.try_pivot(j, static_cast<int>(col), static_cast<int>(row)))
                        changed = true;
                }
            }
            if (changed)
                break;
        }
    }
    // drop empty boundary frames
    for (auto it = px.frames.begin(); it != px.frames.end();) {
        if (it->second.rank() == 0) {
            px.diffs.erase(it->first);
            px.diffs.erase(it->first - 1);
            px.relations.erase(it->first);
            px.attached.erase(it->first);
            px.attached_frames.erase(it->first);
            it = px.frames.erase(it);
        } else {
            ++it;
        }
    }
}

/* ------------------------------------------------------------------ */
/* minimal free resolutions                                            */

namespace {

constexpr int kChainSafetyCap = 64;

/* sort generators by leading data; keeps Schreyer chains short */
template <typename GetLead>
std::vector<int> sorted_perm(int n, GetLead lead)
{
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        auto [ca, ma] = lead(a);
        auto [cb, mb] = lead(b);
        if (ca != cb)
            return ca < cb;
        return grevlex_compare(ma, mb) == std::strong_ordering::greater;
    });
    return perm;
}

ResolutionData compute_resolution(const PresentedModule& m, int cap)
{
    const Ring& R = m.ring();
    const PrimeField& F = R->field();

    PrunableComplex px;
    px.ring = R;
    px.frames[0] = m.gens();
    bool complete = true;

    if (m.has_relations() && cap != 0) {
        if (!R->is_quotient()) {
            // Schreyer chain: syzygies of a Groebner basis are a Groebner
            // basis for the induced order, so each level is one sweep
            const GroebnerBasis& gb0 = m.gb();
            std::vector<VecPoly> lvl;
            for (const auto& e : gb0.elems())
                lvl.push_back(e.f);
            auto perm = sorted_perm(static_cast<int>(lvl.size()), [&](int i) {
                return std::pair<int, Monomial>(gb0.elems()[i].ltc, gb0.elems()[i].ltm);
            });
            std::vector<VecPoly> sorted;
            for (int i : perm)
                sorted.push_back(lvl[i]);
            GroebnerBasis cur = GroebnerBasis::wrap(m.gens(), sorted, gb0.order());

            int level = 1;
            while (true) {
                std::vector<int> tw;
                std::vector<VecPoly> cols;
                for (const auto& e : cur.elems()) {
                    tw.push_back(e.degree);
                    cols.push_back(e.f);
                }
                px.frames[-level] = FreeModule{R, tw};
                px.diffs[-level] = cols;
                if (cap >= 0 && level >= cap) {
                    complete = false;
                    break;
                }
                SchreyerSyzygies syz = schreyer_syzygies(cur);
                if (syz.syz.empty())
                    break;
                auto p2 = sorted_perm(static_cast<int>(syz.syz.size()), [&](int i) {
                    auto l = velem_lead(syz.syz[i], *syz.order);
                    return std::pair<int, Monomial>(l->comp, l->m);
                });
                std::vector<VecPoly> nxt;
                for (int i : p2)
                    nxt.push_back(syz.syz[i]);
                cur = GroebnerBasis::wrap(syz.frame, std::move(nxt), syz.order);
                ++level;
                if (level > kChainSafetyCap)
                    throw MathError("resolution chain exceeded safety cap");
            }
        } else {
            // quotient ring: level-by-level kernels (resolutions are
            // generally infinite; the cap bounds the length)
            std::vector<VecPoly> cols = m.relations();
            int level = 1;
            while (!cols.empty()) {
                const FreeModule& prev = px.frames[-level + 1];
                std::vector<int> tw;
                for (const auto& v : cols) {
                    auto dg = velem_degree(prev, v);
                    tw.push_back(dg ? *dg : 0);
                }
                px.frames[-level] = FreeModule{R, tw};
                px.diffs[-level] = cols;
                if (cap >= 0 && level >= cap) {
                    complete = false;
                    break;
                }
                cols = kernel_columns(px.frames[-level + 1], cols, {});
                // kernel_columns returns coefficients over its primary list,
                // i.e. elements of the new frame at -level
                ++level;
                if (level > kChainSafetyCap)
                    throw MathError("resolution chain exceeded safety cap");
            }
        }
    } else if (m.has_relations() && cap == 0) {
        complete = false;
    }

    // augmentation to the module's generator frame, minimized alongside
    std::vector<VecPoly> aug;
    const int nv = R->nvars();
    for (int c = 0; c < m.rank(); ++c) {
        VecPoly e = velem_zero(m.rank());
        e[c] = Polynomial::constant(nv, 1);
        aug.push_back(std::move(e));
    }
    px.attached[0] = std::move(aug);
    px.attached_frames[0] = m.gens();

    prune_constant_entries(px);

    ResolutionData out;
    out.frames = std::move(px.frames);
    out.diffs = std::move(px.diffs);
    out.aug = px.attached.count(0) ? px.attached[0] : std::vector<VecPoly>{};
    out.complete = complete;
    out.len = 0;
    for (auto& [j, f] : out.frames)
        if (f.rank() > 0)
            out.len = std::max(out.len, -j);
    return out;
}

} // namespace

const ResolutionData& min_resolution(const PresentedModule& m, int cap)
{
    auto& cache = m.impl().resolutions;
    if (!m.ring()->is_quotient())
        cap = -1; // finite over the polynomial ring: always resolve fully
    else if (cap < 0)
        throw MathError("min_resolution: quotient rings need a length cap");
    int key = cap;
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    // a complete or deeper cached resolution answers shallower requests
    for (auto& [k, res] : cache) {
        if (k == -1 && res.complete) {
            if (cap >= 0 && res.len <= cap)
                return res;
        }
        if (cap >= 0 && (k == -1 || k >= cap)) {
            ResolutionData cut;
            cut.aug = res.aug;
            cut.complete = res.complete && res.len <= cap;
            for (auto& [j, f] : res.frames)
                if (-j <= cap)
                    cut.frames[j] = f;
            for (auto& [j, d] : res.diffs)
                if (-j <= cap)
                    cut.diffs[j] = d;
            cut.len = 0;
            for (auto& [j, f] : cut.frames)
                if (f.rank() > 0)
                    cut.len = std::max(cut.len, -j);
            return cache.emplace(key, std::move(cut)).first->second;
        }
    }
    return cache.emplace(key, compute_resolution(m, cap)).first->second;
}

BettiTable betti_table(const PresentedModule& m, int cap)
{
    const ResolutionData& res = min_resolution(m, cap);
    BettiTable b;
    b.over_quotient = m.ring()->is_quotient();
    for (auto& [j, f] : res.frames)
        for (int tw : f.twists)
            b.entries[{-j, tw}] += 1;
    return b;
}

std::string betti_grid_string(const BettiTable& b)
{
    if (b.entries.empty())
        return "(zero module)\n";
    int imin = 0, imax = 0;
    int smin = 0, smax = 0; // slope j - i
    bool first = true;
    for (auto& [ij, cnt] : b.entries) {
        int i = ij.first, s = ij.second - ij.first;
        if (first) {
            imin = imax = i;
            smin = smax = s;
            first = false;
        }
        imin = std::min(imin, i);
        imax = std::max(imax, i);
        smin = std::min(smin, s);
        smax = std::max(smax, s);
    }
    std::ostringstream os;
    os << "      ";
    for (int s = smin; s <= smax; ++s)
        os << " j-i=" << s << "\t";
    os << "\n";
    for (int i = imin; i <= imax; ++i) {
        os << "i=" << i << ":  ";
        for (int s = smin; s <= smax; ++s) {
            auto it = b.entries.find({i, i + s});
            os << "  " << (it == b.entries.end() ? 0 : it->second) << "\t";
        }
        os << "\n";
    }
    return os.str();
}

PresentedModule restrict_scalars(const PresentedModule& m)
{
    if (!m.ring()->is_quotient())
        return m;
    auto& cached = m.impl().restricted;
    if (cached)
        return *cached;
    const Ring S = m.ring()->poly_ring();
    FreeModule frame{S, m.gens().twists};
    std::vector<VecPoly> rels = m.relations();
    for (int c = 0; c < m.rank(); ++c)
        for (const auto& g : m.ring()->quotient().ideal_gens) {
            VecPoly v = velem_zero(m.rank());
            v[c] = g;
            rels.push_back(std::move(v));
        }
    cached = PresentedModule::make(frame, std::move(rels));
    return *cached;
}

const BettiStats& betti_stats_S(const PresentedModule& m)
{
    auto& cached = m.impl().stats;
    if (cached)
        return *cached;
    PresentedModule ms = restrict_scalars(m);
    const ResolutionData& res = min_resolution(ms, -1);
    BettiStats st;
    for (auto& [j, f] : res.frames) {
        if (f.rank() == 0)
            continue;
        int i = -j;
        st.pd = std::max(st.pd, i);
        for (int tw : f.twists) {
            auto ia = st.abar.find(i);
            if (ia == st.abar.end() || tw > ia->second)
                st.abar[i] = tw;
            auto iu = st.aunder.find(i);
            if (iu == st.aunder.end() || tw < iu->second)
                st.aunder[i] = tw;
        }
    }
    cached = std::move(st);
    return *cached;
}

bool LaurentPoly::is_zero() const
{
    for (auto& [e, v] : c)
        if (v != 0)
            return false;
    return true;
}

long long LaurentPoly::eval1() const
{
    long long s = 0;
    for (auto& [e, v] : c)
        s += v;
    return s;
}

LaurentPoly hilbert_numerator(const Ring& ring, const std::map<int, FreeModule>& frames)
{
    (void)ring;
    LaurentPoly q;
    for (auto& [j, f] : frames) {
        long long sign = (j % 2 == 0) ? 1 : -1;
        for (int tw : f.twists)
            q.c[tw] += sign;
    }
    for (auto it = q.c.begin(); it != q.c.end();)
        it = it->second == 0 ? q.c.erase(it) : std::next(it);
    return q;
}

long long hilbert_series_coeff(const LaurentPoly& q, int nvars, int d)
{
    long long s = 0;
    for (auto& [e, v] : q.c) {
        long long k = d - e;
        if (k < 0)
            continue;
        s += v * binomial_ll(k + nvars - 1, nvars - 1);
    }
    return s;
}

int krull_dimension(const PresentedModule& m)
{
    auto& cached = m.impl().krull;
    if (cached)
        return *cached;
    PresentedModule ms = restrict_scalars(m);
    const ResolutionData& res = min_resolution(ms, -1);
    LaurentPoly q = hilbert_numerator(ms.ring(), res.frames);
    int dim;
    if (q.is_zero()) {
        dim = kDimMinusInf;
    } else {
        int mult = 0;
        while (q.eval1() == 0) {
            // divide by (1 - t): p_k = q_k + p_{k-1}
            LaurentPoly p;
            int lo = q.c.begin()->first;
            int hi = q.c.rbegin()->first;
            long long carry = 0;
            for (int e = lo; e <= hi; ++e) {
                long long qe = q.c.count(e) ? q.c[e] : 0;
                long long pe = qe + carry;
                if (pe != 0)
                    p.c[e] = pe;
                carry = pe;
            }
            q = std::move(p);
            ++mult;
            if (q.is_zero())
                break;
        }
        dim = ms.ring()->nvars() - mult;
    }
    cached = dim;
    return dim;
}

/* ------------------------------------------------------------------ */
/* truncation and kernels                                              */

const TruncationData& truncate_module(const PresentedModule& m, int r)
{
    auto& cache = m.impl().truncations;
    auto it = cache.find(r);
    if (it != cache.end())
        return it->second;

    const Ring& R = m.ring();
    const int nv = R->nvars();
    TruncationData td;

    int gmin = 0, gmax = 0;
    if (m.rank() > 0) {
        gmin = *std::min_element(m.gens().twists.begin(), m.gens().twists.end());
        gmax = *std::max_element(m.gens().twists.begin(), m.gens().twists.end());
    }
    if (m.rank() == 0 || r <= gmin) {
        // nothing below r: the truncation is the module itself
        td.mod = m;
        for (int c = 0; c < m.rank(); ++c) {
            VecPoly e = velem_zero(m.rank());
            e[c] = Polynomial::constant(nv, 1);
            td.incl.push_back(std::move(e));
        }
        return cache.emplace(r, std::move(td)).first->second;
    }

    std::vector<int> tw;
    std::vector<VecPoly> cols;
    for (int d = r; d <= std::max(r, gmax); ++d) {
        for (const auto& t : m.piece_basis(d)) {
            VecPoly v = velem_zero(m.rank());
            v[t.comp] = Polynomial::term(t.m, 1);
            cols.push_back(std::move(v));
            tw.push_back(d);
        }
    }
    FreeModule frame{R, tw};
    std::vector<VecPoly> rels = kernel_columns(m.gens(), cols, m.relations());
    td.mod = PresentedModule::make(frame, std::move(rels));
    td.incl = std::move(cols);
    return cache.emplace(r, std::move(td)).first->second;
}

SubmoduleData kernel_of_presented_map(const PresentedModule& src,
                                      const std::vector<VecPoly>& cols,
                                      const PresentedModule& tgt)
{
    SubmoduleData out;
    std::vector<VecPoly> kv = kernel_columns(tgt.gens(), cols, tgt.relations());
    // kv are coefficient vectors over cols, i.e. elements of src.gens frame
    std::vector<int> tw;
    std::vector<VecPoly> gens_in_frame;
    for (auto& v : kv) {
        auto d = velem_degree(src.gens(), v);
        if (!d)
            continue;
        tw.push_back(*d);
        gens_in_frame.push_back(v);
    }
    FreeModule frame{src.ring(), tw};
    std::vector<VecPoly> rels = kernel_columns(src.gens(), gens_in_frame, src.relations());
    out.mod = PresentedModule::make(frame, std::move(rels));
    out.gens_in_frame = std::move(gens_in_frame);
    return out;
}

PresentedModule kernel_module(const ModuleMapData& f)
{
    return kernel_of_presented_map(PresentedModule::free_module(f.source), f.cols,
                                   PresentedModule::free_module(f.target))
        .mod;
}

PresentedModule image_module(const ModuleMapData& f)
{
    std::vector<int> tw;
    std::vector<VecPoly> cols;
    for (size_t j = 0; j < f.cols.size(); ++j) {
        if (velem_is_zero(f.cols[j]))
            continue;
        tw.push_back(f.source.twist(static_cast<int>(j)));
        cols.push_back(f.cols[j]);
    }
    FreeModule frame{f.source.ring, tw};
    std::vector<VecPoly> rels = kernel_columns(f.target, cols, {});
    return PresentedModule::make(frame, std::move(rels));
}

PresentedModule cokernel_module(const ModuleMapData& f)
{
    return PresentedModule::make(f.target, f.cols);
}

long long binomial_ll(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace grhom
