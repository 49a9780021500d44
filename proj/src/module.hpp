#pragma once

#include "groebner.hpp"

#include <climits>
#include <map>
#include <memory>

namespace grhom {

constexpr int kDimMinusInf = INT_MIN; // dimension of the zero module
constexpr int kPlusInf = INT_MAX;
constexpr int kMinusInf = INT_MIN;

/* homogeneous map of graded free modules; cols[j] = image of source generator
 * j, written in the target frame */
struct ModuleMapData {
    FreeModule source, target;
    std::vector<VecPoly> cols;
};

/* validates the entrywise degree condition and ring agreement */
ModuleMapData make_map(FreeModule source, FreeModule target, std::vector<VecPoly> cols);

VecPoly apply_cols(const PrimeField& F, const std::vector<VecPoly>& cols, int target_rank,
                   const VecPoly& v);
std::vector<VecPoly> compose_cols(const PrimeField& F, const std::vector<VecPoly>& outer,
                                  int outer_target_rank, const std::vector<VecPoly>& inner);

/* Finitely presented graded module M = coker(relations -> gens).  Immutable
 * value with a shared lazily filled cache (Groebner basis, graded pieces,
 * resolutions, scalar restriction).  Single-threaded use. */
class PresentedModule {
public:
    PresentedModule() = default;

    static PresentedModule free_module(FreeModule f);
    static PresentedModule make(FreeModule gens, std::vector<VecPoly> relations);

    bool valid() const { return static_cast<bool>(impl_); }
    const Ring& ring() const;
    const FreeModule& gens() const;
    int rank() const { return gens().rank(); }
    const std::vector<VecPoly>& relations() const;
    bool has_relations() const { return !relations().empty(); }

    const GroebnerBasis& gb() const; // GB of relations (+ quotient columns)
    bool is_zero() const;
    int piece_dim(int d) const;
    const std::vector<ModTerm>& piece_basis(int d) const;
    /* index lookup into piece_basis(d); -1 if absent */
    int piece_index(int d, const ModTerm& t) const;

    /* distinct identity for memo keys */
    const void* key() const { return impl_.get(); }

    struct Impl;
    Impl& impl() const { return *impl_; }

private:
    std::shared_ptr<Impl> impl_;
};

/* twisted direct sum ⊕ parts[i].first(-shift_i); reuses the parts' Groebner
 * bases blockwise instead of recomputing */
PresentedModule direct_sum_twisted(const Ring& ring,
                                   const std::vector<std::pair<PresentedModule, int>>& parts);

PresentedModule twist_module(const PresentedModule& m, int j);

/* ---- free complexes used for resolutions and pruning ---- */

struct PrunableComplex {
    Ring ring;
    std::map<int, FreeModule> frames;
    std::map<int, std::vector<VecPoly>> relations; // usually empty: free complex
    std::map<int, std::vector<VecPoly>> diffs;     // j -> columns into frame j+1
    /* extra maps out of each frame (augmentations); pruned alongside */
    std::map<int, std::vector<VecPoly>> attached;
    std::map<int, FreeModule> attached_frames;
};

/* Gaussian pruning of constant differential entries.  Pivots whose removal
 * would disturb a relation column are skipped, so presented terms are safe. */
void prune_constant_entries(PrunableComplex& px);

/* ---- resolutions ---- */

struct ResolutionData {
    /* minimal free complex, terms at degrees -len..0, quasi-isomorphic to the
     * module placed in degree 0 */
    std::map<int, FreeModule> frames;
    std::map<int, std::vector<VecPoly>> diffs;
    std::vector<VecPoly> aug; // columns: frame(0) generators -> M.gens frame
    bool complete = true;     // false when truncated by the length cap
    int len = 0;
};

/* Minimal free resolution; cap < 0 means fully resolve (polynomial ring
 * only).  Results are memoized per module; a deeper cached resolution serves
 * shallower requests. */
const ResolutionData& min_resolution(const PresentedModule& m, int cap);

struct BettiTable {
    std::map<std::pair<int, int>, int> entries; // (i, j) -> beta_{i,j}
    bool over_quotient = false;
};

BettiTable betti_table(const PresentedModule& m, int cap);
std::string betti_grid_string(const BettiTable& b);

struct BettiStats {
    int pd = kMinusInf;           // -inf for the zero module
    std::map<int, int> abar;      // max twist per homological index
    std::map<int, int> aunder;    // min twist per homological index
    int abar_at(int i) const
    {
        auto it = abar.find(i);
        return it == abar.end() ? kMinusInf : it->second;
    }
};

/* statistics of the minimal resolution over S (restricting scalars first) */
const BettiStats& betti_stats_S(const PresentedModule& m);

PresentedModule restrict_scalars(const PresentedModule& m);

int krull_dimension(const PresentedModule& m);

struct LaurentPoly {
    std::map<int, long long> c;
    bool is_zero() const;
    long long eval1() const;
};

/* numerator Q(t) with H(t) = Q(t)/(1-t)^{nvars} read off a free complex */
LaurentPoly hilbert_numerator(const Ring& ring, const std::map<int, FreeModule>& frames);
/* coefficient of t^d in Q(t)/(1-t)^nvars */
long long hilbert_series_coeff(const LaurentPoly& q, int nvars, int d);

/* ---- truncation and kernels ---- */

struct TruncationData {
    PresentedModule mod;
    std::vector<VecPoly> incl; // T generators -> M.gens frame
};

/* M_{>= r}: submodule of elements of degree >= r, presented on the graded
 * piece bases of degrees [r, max(r, top generator degree)] */
const TruncationData& truncate_module(const PresentedModule& m, int r);

struct SubmoduleData {
    std::vector<VecPoly> gens_in_frame;
    PresentedModule mod;
};

/* kernel of the map src -> tgt given by cols (written on generator frames) */
SubmoduleData kernel_of_presented_map(const PresentedModule& src,
                                      const std::vector<VecPoly>& cols,
                                      const PresentedModule& tgt);

PresentedModule kernel_module(const ModuleMapData& f);
PresentedModule image_module(const ModuleMapData& f);
PresentedModule cokernel_module(const ModuleMapData& f);

long long binomial_ll(long long n, long long k);

} // namespace grhom
