#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "qcchar/rep.hpp"

namespace qcchar {

inline std::string family_key(const SubspaceFamily& fam) {
    std::string k;
    for (const Subspace& s : fam) k += s.key() + "/";
    return k;
}

inline SubspaceFamily zero_family(const Representation& M) {
    SubspaceFamily f;
    for (int v = 0; v < M.quiver()->n(); ++v) f.emplace_back(M.field(), M.dim(v));
    return f;
}

inline SubspaceFamily full_family(const Representation& M) {
    SubspaceFamily f;
    for (int v = 0; v < M.quiver()->n(); ++v)
        f.push_back(Subspace::full(M.field(), M.dim(v)));
    return f;
}

inline DimVector family_dims(const SubspaceFamily& fam) {
    DimVector d;
    for (const Subspace& s : fam) d.push_back(s.dim());
    return d;
}

namespace detail {

inline void submodule_search(const Representation& M, const DimVector& g, int v,
                             SubspaceFamily& partial, long long& budget,
                             std::vector<SubspaceFamily>& out) {
    const Quiver& Q = *M.quiver();
    if (v == Q.n()) {
        out.push_back(partial);
        return;
    }
    for (const Subspace& s : enumerate_subspaces(M.dim(v), g[v], M.field())) {
        partial.push_back(s);
        // prune: check arrows with both endpoints already assigned
        bool ok = true;
        for (size_t ai = 0; ai < Q.arrows().size() && ok; ++ai) {
            const Arrow& a = Q.arrows()[ai];
            if (a.source > v || a.target > v) continue;
            const Subspace& src = partial[a.source];
            for (int i = 0; i < src.dim() && ok; ++i) {
                FVector x(src.ambient_dim());
                for (int j = 0; j < src.ambient_dim(); ++j) x[j] = src.basis()(i, j);
                if (!partial[a.target].contains(M.mat(static_cast<int>(ai)).apply(x))) ok = false;
            }
        }
        if (ok) {
            if (--budget < 0) throw cap_error("submodule enumeration exceeds cap");
            submodule_search(M, g, v + 1, partial, budget, out);
        }
        partial.pop_back();
    }
}

} // namespace detail

/// All submodules of M with the given dimension vector, in a deterministic
/// order (vertexwise product of the canonical subspace enumerations).
inline std::vector<SubspaceFamily> submodules_of_dim(const Representation& M, const DimVector& g,
                                                     const EnumerationLimits& lim = {}) {
    for (int v = 0; v < M.quiver()->n(); ++v)
        if (g[v] < 0 || g[v] > M.dim(v))
            throw schema_error("submodules_of_dim: dimension vector out of range");
    std::vector<SubspaceFamily> out;
    SubspaceFamily partial;
    long long budget = lim.cap;
    detail::submodule_search(M, g, 0, partial, budget, out);
    return out;
}

inline long long grassmannian_count(const Representation& M, const DimVector& g,
                                    const EnumerationLimits& lim = {}) {
    return static_cast<long long>(submodules_of_dim(M, g, lim).size());
}

/// All submodules of any dimension vector, grouped in enumeration order of g
/// (colex on dimension vectors).
inline std::vector<DimVector> all_subdim_vectors(const Representation& M) {
    std::vector<DimVector> all;
    DimVector g(M.quiver()->n(), 0);
    while (true) {
        all.push_back(g);
        int v = 0;
        while (v < M.quiver()->n() && g[v] == M.dim(v)) g[v++] = 0;
        if (v == M.quiver()->n()) break;
        ++g[v];
    }
    std::sort(all.begin(), all.end());
    return all;
}

// ---------------------------------------------------------------------------
// Image / preimage of subspace families along the canonical maps of a ses
// ---------------------------------------------------------------------------

/// Image of U under the vertexwise map f (as canonical subspaces).
inline SubspaceFamily family_image(const Morphism& f, const SubspaceFamily& U) {
    SubspaceFamily out;
    for (size_t v = 0; v < f.comps.size(); ++v) {
        const FMatrix& fv = f.comps[v];
        FMatrix rows(fv.field(), U[v].dim(), fv.rows());
        for (int i = 0; i < U[v].dim(); ++i) {
            FVector x(U[v].ambient_dim());
            for (int j = 0; j < U[v].ambient_dim(); ++j) x[j] = U[v].basis()(i, j);
            FVector y = fv.apply(x);
            for (int j = 0; j < fv.rows(); ++j) rows(i, j) = y[j];
        }
        out.push_back(Subspace::span(rows));
    }
    return out;
}

/// Preimage f^{-1}(W) per vertex: kernel of (quotient by W) compose f.
inline SubspaceFamily family_preimage(const Morphism& f, const SubspaceFamily& W) {
    SubspaceFamily out;
    for (size_t v = 0; v < f.comps.size(); ++v) {
        const FMatrix& fv = f.comps[v];
        // x in preimage iff f(x) reduces to zero modulo W
        FMatrix sys(fv.field(), fv.rows(), fv.cols());
        // rows of sys: the W-residue of each image coordinate; build by
        // reducing the columns of f through W and keeping residues.
        // Work columnwise: residue(f * e_c).
        std::vector<FVector> res_cols;
        for (int c = 0; c < fv.cols(); ++c) {
            FVector e(fv.cols(), 0);
            e[c] = 1;
            res_cols.push_back(W[v].reduce(fv.apply(e)));
        }
        for (int r = 0; r < fv.rows(); ++r)
            for (int c = 0; c < fv.cols(); ++c) sys(r, c) = res_cols[c][r];
        out.push_back(Subspace::span(sys.kernel_basis()));
    }
    return out;
}

/// Gr^eps_{M0,N0}(FL): submodules L0 of mt(eps) with i^{-1}(L0) = N0 and
/// p(L0) = M0. Nonempty fibers have cardinality p^{dim Hom(M0, N/N0)}.
struct RefinedFiberQuery {
    ExtClass eps;
    SubspaceFamily M0; // submodule of qt(eps)
    SubspaceFamily N0; // submodule of st(eps)
};

inline std::vector<SubspaceFamily> refined_fiber(const RefinedFiberQuery& q,
                                                 const EnumerationLimits& lim = {}) {
    MiddleTerm mt = middle_term(q.eps);
    DimVector g(mt.E.quiver()->n());
    for (int v = 0; v < mt.E.quiver()->n(); ++v) g[v] = q.M0[v].dim() + q.N0[v].dim();
    std::vector<SubspaceFamily> out;
    for (SubspaceFamily& L0 : submodules_of_dim(mt.E, g, lim)) {
        if (family_key(family_preimage(mt.incl, L0)) != family_key(q.N0)) continue;
        if (family_key(family_image(mt.proj, L0)) != family_key(q.M0)) continue;
        out.push_back(std::move(L0));
    }
    return out;
}

/// dim Hom(M0, N/N0), the fiber-law exponent l(M,N,M0,N0).
inline int fiber_law_exponent(const Representation& M, const SubspaceFamily& M0,
                              const Representation& N, const SubspaceFamily& N0) {
    Representation sub = sub_quotient(M, M0).sub;
    Representation quot = sub_quotient(N, N0).quot;
    return hom_dim(sub, quot);
}

// ---------------------------------------------------------------------------
// Chains of monomorphisms (flags) of a given type
// ---------------------------------------------------------------------------

/// Flag type (i, a): vertex sequence i_1..i_m and 0/1 flags a_1..a_m.
struct FlagType {
    std::vector<int> i; // 0-based vertices
    std::vector<int> a;

    int length() const { return static_cast<int>(i.size()); }
    void validate(int n) const {
        if (i.size() != a.size()) throw schema_error("flag type: length mismatch");
        for (int v : i)
            if (v < 0 || v >= n) throw schema_error("flag type: vertex out of range");
        for (int b : a)
            if (b != 0 && b != 1) throw schema_error("flag type: a entries must be 0/1");
    }
    bool operator==(const FlagType& o) const { return i == o.i && a == o.a; }
    std::string key() const {
        std::string k;
        for (size_t j = 0; j < i.size(); ++j)
            k += std::to_string(i[j]) + (a[j] ? "+" : "-");
        return k;
    }
};

/// A chain 0 = L_m <= ... <= L_0 of submodules of a fixed ambient module,
/// tagged with its type. modules[j] is L_j (so modules.front() = L_0).
struct Chain {
    FlagType type;
    std::vector<SubspaceFamily> modules;

    std::string key() const {
        std::string k = type.key() + "#";
        for (const SubspaceFamily& f : modules) k += family_key(f) + "!";
        return k;
    }
    bool operator==(const Chain& o) const { return key() == o.key(); }
    bool operator<(const Chain& o) const { return key() < o.key(); }
};

/// Length-0 chain on L (only the full module, for m = 0 types).
inline Chain trivial_chain(const Representation& L) {
    Chain c;
    c.modules.push_back(full_family(L));
    return c;
}

namespace detail {

/// Submodules of prescribed dims contained in W (a submodule family of M),
/// enumerated through W-coordinates.
inline std::vector<SubspaceFamily> submodules_inside(const Representation& M,
                                                     const SubspaceFamily& W, const DimVector& g,
                                                     long long& budget) {
    const Quiver& Q = *M.quiver();
    PrimeField f = M.field();
    // candidate subspaces per vertex, in canonical order
    std::vector<std::vector<Subspace>> cand(Q.n());
    for (int v = 0; v < Q.n(); ++v) {
        if (g[v] > W[v].dim()) return {};
        for (const Subspace& inner : enumerate_subspaces(W[v].dim(), g[v], f)) {
            // rows of inner expressed in ambient coordinates
            FMatrix rows(f, inner.dim(), W[v].ambient_dim());
            for (int r = 0; r < inner.dim(); ++r)
                for (int c = 0; c < W[v].dim(); ++c) {
                    uint32_t coef = inner.basis()(r, c);
                    if (!coef) continue;
                    for (int j = 0; j < W[v].ambient_dim(); ++j)
                        rows(r, j) = f.add(rows(r, j), f.mul(coef, W[v].basis()(c, j)));
                }
            cand[v].push_back(Subspace::span(rows));
        }
    }
    std::vector<SubspaceFamily> out;
    SubspaceFamily partial;
    std::function<void(int)> rec = [&](int v) {
        if (v == Q.n()) {
            out.push_back(partial);
            return;
        }
        for (const Subspace& s : cand[v]) {
            partial.push_back(s);
            bool ok = true;
            for (size_t ai = 0; ai < Q.arrows().size() && ok; ++ai) {
                const Arrow& a = Q.arrows()[ai];
                if (a.source > v || a.target > v) continue;
                const Subspace& src = partial[a.source];
                for (int i = 0; i < src.dim() && ok; ++i) {
                    FVector x(src.ambient_dim());
                    for (int j = 0; j < src.ambient_dim(); ++j) x[j] = src.basis()(i, j);
                    if (!partial[a.target].contains(M.mat(static_cast<int>(ai)).apply(x)))
                        ok = false;
                }
            }
            if (ok) {
                if (--budget < 0) throw cap_error("chain enumeration exceeds cap");
                rec(v + 1);
            }
            partial.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace detail

/// All chains 0 = L_m <= ... <= L_0 = L with Coker(iota_j) = S_{i_j} when
/// a_j = 1 and 0 when a_j = 0, deterministic order.
inline std::vector<Chain> chains_of_type(const Representation& L, const FlagType& t,
                                         const EnumerationLimits& lim = {}) {
    t.validate(L.quiver()->n());
    int m = t.length();
    // required dims: dim L_j = dim L - sum_{j' <= j} a_{j'} e_{i_{j'}}
    std::vector<DimVector> want(m + 1, L.dims());
    for (int j = 1; j <= m; ++j) {
        want[j] = want[j - 1];
        if (t.a[j - 1]) {
            if (--want[j][t.i[j - 1]] < 0) return {};
        }
    }
    for (int v = 0; v < L.quiver()->n(); ++v)
        if (want[m][v] != 0) return {}; // L_m must be zero

    long long budget = lim.cap;
    std::vector<Chain> out;
    Chain cur;
    cur.type = t;
    cur.modules.push_back(full_family(L));
    std::function<void(int)> rec = [&](int j) {
        if (j > m) {
            out.push_back(cur);
            return;
        }
        for (SubspaceFamily& next :
             detail::submodules_inside(L, cur.modules.back(), want[j], budget)) {
            cur.modules.push_back(std::move(next));
            rec(j + 1);
            cur.modules.pop_back();
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of flags of the given type; the plain character value.
inline long long delta_eval(const Representation& L, const FlagType& t,
                            const EnumerationLimits& lim = {}) {
    return static_cast<long long>(chains_of_type(L, t, lim).size());
}

/// Chains on M and N induced from a chain on mt(eps) by image/preimage along
/// the canonical projection/inclusion; types split a = a' + a''.
inline std::pair<Chain, Chain> chain_image(const MiddleTerm& mt, const Chain& cL) {
    Chain cM, cN;
    cM.type.i = cL.type.i;
    cN.type.i = cL.type.i;
    for (const SubspaceFamily& Lj : cL.modules) {
        cM.modules.push_back(family_image(mt.proj, Lj));
        cN.modules.push_back(family_preimage(mt.incl, Lj));
    }
    for (size_t j = 1; j < cL.modules.size(); ++j) {
        DimVector dM0 = family_dims(cM.modules[j - 1]), dM1 = family_dims(cM.modules[j]);
        DimVector dN0 = family_dims(cN.modules[j - 1]), dN1 = family_dims(cN.modules[j]);
        int dropM = 0, dropN = 0;
        for (size_t v = 0; v < dM0.size(); ++v) dropM += dM0[v] - dM1[v];
        for (size_t v = 0; v < dN0.size(); ++v) dropN += dN0[v] - dN1[v];
        cM.type.a.push_back(dropM);
        cN.type.a.push_back(dropN);
        if (dropM + dropN != cL.type.a[j - 1])
            throw linearity_error("chain_image: cokernel splitting violates a' + a'' = a");
    }
    return {std::move(cM), std::move(cN)};
}

/// Fiber of phi_{MN,[eps]} over (c_M, c_N) inside the type-t chains of mt(eps).
inline std::vector<Chain> phi_fiber(const ExtClass& eps, const Chain& cM, const Chain& cN,
                                    const FlagType& t, const EnumerationLimits& lim = {}) {
    if (cM.type.i != t.i || cN.type.i != t.i)
        throw schema_error("phi_fiber: chain types use a different vertex sequence");
    for (int j = 0; j < t.length(); ++j)
        if (cM.type.a[j] + cN.type.a[j] != t.a[j])
            throw schema_error("phi_fiber: chain types do not sum to t");
    MiddleTerm mt = middle_term(eps);
    std::vector<Chain> out;
    std::string wantM = cM.key(), wantN = cN.key();
    for (Chain& cL : chains_of_type(mt.E, t, lim)) {
        auto [iM, iN] = chain_image(mt, cL);
        if (iM.key() == wantM && iN.key() == wantN) out.push_back(std::move(cL));
    }
    return out;
}

inline int log_p_exact(long long count, uint32_t p, const char* what) {
    if (count <= 0) throw linearity_error(std::string(what) + ": empty where a p-power is required");
    int k = 0;
    long long c = count;
    while (c % p == 0) {
        c /= p;
        ++k;
    }
    if (c != 1)
        throw linearity_error(std::string(what) + ": count " + std::to_string(count) +
                              " is not a power of p=" + std::to_string(p));
    return k;
}

/// k(c_M, c_N): log_p of the fiber over the split class; errors loudly if the
/// count is not a p-power (that would falsify the vector-bundle lemma).
inline int k_rank(const Representation& M, const Representation& N, const Chain& cM,
                  const Chain& cN, const EnumerationLimits& lim = {}) {
    FlagType t;
    t.i = cM.type.i;
    for (int j = 0; j < cM.type.length(); ++j) t.a.push_back(cM.type.a[j] + cN.type.a[j]);
    auto fib = phi_fiber(zero_ext(M, N), cM, cN, t, lim);
    return log_p_exact(static_cast<long long>(fib.size()), M.field().p, "k_rank");
}

// ---------------------------------------------------------------------------
// Refined socle / top series
// ---------------------------------------------------------------------------

enum class SeriesMode { socle, top };

/// The unique refined socle (resp. top) series of type i. Socle chains are
/// built bottom-up and may stop short of L itself; top chains start at L and
/// may stop short of zero.
inline Chain refined_socle_top(const Representation& L, const std::vector<int>& iseq,
                               SeriesMode mode) {
    const Quiver& Q = *L.quiver();
    int m = static_cast<int>(iseq.size());
    for (int v : iseq)
        if (v < 0 || v >= Q.n()) throw schema_error("refined series: vertex out of range");
    Chain c;
    c.type.i = iseq;
    std::vector<SubspaceFamily> mods(m + 1);
    if (mode == SeriesMode::socle) {
        // L_m = 0; L_{j-1}/L_j = soc_{S_{i_j}}(L/L_j), built from j = m down.
        mods[m] = zero_family(L);
        for (int j = m; j >= 1; --j) {
            // soc of L/L_j at vertex i_j: vectors v with arrow images inside L_j
            SubspaceFamily next = mods[j];
            int i = iseq[j - 1];
            // preimage of soc: x in L_i with M(a) x in (L_j)_{t(a)} for all a out of i,
            // i.e. kernel of the reduced outgoing maps, plus (L_j)_i itself.
            PrimeField f = L.field();
            std::vector<FVector> cols;
            int nrows = 0;
            std::vector<std::pair<int, const FMatrix*>> outs;
            for (size_t ai = 0; ai < Q.arrows().size(); ++ai)
                if (Q.arrows()[ai].source == i) {
                    outs.emplace_back(Q.arrows()[ai].target, &L.mat(static_cast<int>(ai)));
                    nrows += L.mat(static_cast<int>(ai)).rows();
                }
            FMatrix sys(f, nrows, L.dim(i));
            for (int ccol = 0; ccol < L.dim(i); ++ccol) {
                FVector e(L.dim(i), 0);
                e[ccol] = 1;
                int r0 = 0;
                for (auto& [tv, mp] : outs) {
                    FVector y = mods[j][tv].reduce(mp->apply(e));
                    for (size_t r = 0; r < y.size(); ++r) sys(r0 + static_cast<int>(r), ccol) = y[r];
                    r0 += static_cast<int>(y.size());
                }
            }
            Subspace pre = Subspace::span(sys.kernel_basis());
            // L_{j-1} = L_j everywhere except vertex i where it is pre + (L_j)_i
            FMatrix join(f, pre.dim() + mods[j][i].dim(), L.dim(i));
            for (int r = 0; r < pre.dim(); ++r)
                for (int cc = 0; cc < L.dim(i); ++cc) join(r, cc) = pre.basis()(r, cc);
            for (int r = 0; r < mods[j][i].dim(); ++r)
                for (int cc = 0; cc < L.dim(i); ++cc)
                    join(pre.dim() + r, cc) = mods[j][i].basis()(r, cc);
            next[i] = Subspace::span(join);
            mods[j - 1] = std::move(next);
        }
    } else {
        // L_0 = L; L_{j-1}/L_j = top_{S_{i_j}}(L_{j-1}), built from j = 1 up.
        mods[0] = full_family(L);
        for (int j = 1; j <= m; ++j) {
            int i = iseq[j - 1];
            PrimeField f = L.field();
            SubspaceFamily next = mods[j - 1];
            // radical part at vertex i of the submodule W = L_{j-1}:
            // (sum of incoming images within W) -- the top_{S_i} radical.
            FMatrix rows(f, 0, L.dim(i));
            std::vector<uint32_t> data;
            int nrows = 0;
            for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
                const Arrow& a = Q.arrows()[ai];
                if (a.target != i) continue;
                const Subspace& src = mods[j - 1][a.source];
                for (int r = 0; r < src.dim(); ++r) {
                    FVector x(src.ambient_dim());
                    for (int cc = 0; cc < src.ambient_dim(); ++cc) x[cc] = src.basis()(r, cc);
                    FVector y = L.mat(static_cast<int>(ai)).apply(x);
                    for (uint32_t val : y) data.push_back(val);
                    ++nrows;
                }
            }
            next[i] = Subspace::span(FMatrix(f, nrows, L.dim(i), std::move(data)));
            mods[j] = std::move(next);
        }
    }
    for (int j = 1; j <= m; ++j) {
        DimVector d0 = family_dims(mods[j - 1]), d1 = family_dims(mods[j]);
        int drop = 0;
        for (size_t v = 0; v < d0.size(); ++v) drop += d0[v] - d1[v];
        c.type.a.push_back(drop); // can exceed 1 for multiple socle copies
    }
    c.modules = std::move(mods);
    return c;
}

} // namespace qcchar
