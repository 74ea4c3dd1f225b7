#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "qcchar/rep.hpp"

namespace qcchar {

/// A path is the sequence of arrow indices it traverses, first arrow first.
using Path = std::vector<int>;

/// Path bases for the indecomposable projectives/injectives of an acyclic
/// quiver: paths[v] lists all paths with the prescribed endpoint at v, in a
/// fixed deterministic order.
struct PathFamily {
    std::vector<std::vector<Path>> paths; // per vertex
};

namespace detail {

inline void extend_paths_from(const Quiver& Q, int at, Path& cur,
                              std::vector<std::vector<Path>>& acc) {
    acc[at].push_back(cur);
    for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
        if (Q.arrows()[ai].source != at) continue;
        cur.push_back(static_cast<int>(ai));
        extend_paths_from(Q, Q.arrows()[ai].target, cur, acc);
        cur.pop_back();
    }
}

} // namespace detail

/// All paths starting at vertex i, grouped by their endpoint.
inline PathFamily paths_from(const Quiver& Q, int i) {
    Q.require_hereditary("paths_from");
    PathFamily pf;
    pf.paths.resize(Q.n());
    Path cur;
    detail::extend_paths_from(Q, i, cur, pf.paths);
    for (auto& v : pf.paths) std::sort(v.begin(), v.end());
    return pf;
}

/// All paths ending at vertex i, grouped by their start.
inline PathFamily paths_into(const Quiver& Q, int i) {
    Q.require_hereditary("paths_into");
    PathFamily pf;
    pf.paths.resize(Q.n());
    // enumerate from every start and keep those ending at i
    for (int s = 0; s < Q.n(); ++s) {
        PathFamily from = paths_from(Q, s);
        pf.paths[s] = from.paths[i];
    }
    return pf;
}

struct ProjectiveData {
    Representation rep;
    PathFamily basis; // basis.paths[v] indexes rep's basis at v
};

/// Indecomposable projective P_i: basis at vertex j = paths i->j, arrows act
/// by appending.
inline ProjectiveData projective(QuiverPtr q, PrimeField f, int i) {
    const Quiver& Q = *q;
    PathFamily pf = paths_from(Q, i);
    DimVector dims(Q.n());
    for (int v = 0; v < Q.n(); ++v) dims[v] = static_cast<int>(pf.paths[v].size());
    std::vector<FMatrix> mats;
    for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
        const Arrow& a = Q.arrows()[ai];
        FMatrix m(f, dims[a.target], dims[a.source]);
        for (int c = 0; c < dims[a.source]; ++c) {
            Path w = pf.paths[a.source][c];
            w.push_back(static_cast<int>(ai));
            auto it = std::lower_bound(pf.paths[a.target].begin(), pf.paths[a.target].end(), w);
            m(static_cast<int>(it - pf.paths[a.target].begin()), c) = 1;
        }
        mats.push_back(std::move(m));
    }
    return {Representation(q, f, dims, std::move(mats)), std::move(pf)};
}

struct InjectiveData {
    Representation rep;
    PathFamily basis; // basis.paths[v] = paths v->i, dual basis order
};

/// Indecomposable injective I_i: basis at vertex j dual to paths j->i; an
/// arrow a: j->j' sends the functional phi to w' |-> phi(a then w').
inline InjectiveData injective(QuiverPtr q, PrimeField f, int i) {
    const Quiver& Q = *q;
    PathFamily pf = paths_into(Q, i);
    DimVector dims(Q.n());
    for (int v = 0; v < Q.n(); ++v) dims[v] = static_cast<int>(pf.paths[v].size());
    std::vector<FMatrix> mats;
    for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
        const Arrow& a = Q.arrows()[ai];
        FMatrix m(f, dims[a.target], dims[a.source]);
        for (int r = 0; r < dims[a.target]; ++r) {
            Path w = {static_cast<int>(ai)};
            const Path& tail = pf.paths[a.target][r];
            w.insert(w.end(), tail.begin(), tail.end());
            auto it = std::lower_bound(pf.paths[a.source].begin(), pf.paths[a.source].end(), w);
            if (it != pf.paths[a.source].end() && *it == w)
                m(r, static_cast<int>(it - pf.paths[a.source].begin())) = 1;
        }
        mats.push_back(std::move(m));
    }
    return {Representation(q, f, dims, std::move(mats)), std::move(pf)};
}

inline Representation simple(QuiverPtr q, PrimeField f, int i) {
    DimVector dims(q->n(), 0);
    dims[i] = 1;
    return Representation(q, f, dims);
}

/// rad M as a subspace family: at vertex v the sum of the incoming images.
inline SubspaceFamily radical_family(const Representation& M) {
    const Quiver& Q = *M.quiver();
    PrimeField f = M.field();
    SubspaceFamily fam;
    for (int v = 0; v < Q.n(); ++v) {
        std::vector<uint32_t> rows;
        int nrows = 0;
        for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
            if (Q.arrows()[ai].target != v) continue;
            const FMatrix& m = M.mat(static_cast<int>(ai));
            for (int c = 0; c < m.cols(); ++c) {
                for (int r = 0; r < m.rows(); ++r) rows.push_back(m(r, c));
                ++nrows;
            }
        }
        fam.push_back(Subspace::span(FMatrix(f, nrows, M.dim(v), std::move(rows))));
    }
    return fam;
}

/// dim of top(M) = M/rad M per vertex.
inline DimVector top_dims(const Representation& M) {
    SubspaceFamily rad = radical_family(M);
    DimVector t(M.quiver()->n());
    for (int v = 0; v < M.quiver()->n(); ++v) t[v] = M.dim(v) - rad[v].dim();
    return t;
}

/// soc(M) per vertex: vectors killed by all outgoing arrows.
inline DimVector soc_dims(const Representation& M) {
    const Quiver& Q = *M.quiver();
    DimVector s(Q.n());
    for (int v = 0; v < Q.n(); ++v) {
        int nrows = 0;
        std::vector<uint32_t> rows;
        for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
            if (Q.arrows()[ai].source != v) continue;
            const FMatrix& m = M.mat(static_cast<int>(ai));
            for (int r = 0; r < m.rows(); ++r) {
                for (int c = 0; c < m.cols(); ++c) rows.push_back(m(r, c));
            }
            nrows += m.rows();
        }
        FMatrix stacked(M.field(), nrows, M.dim(v), std::move(rows));
        s[v] = M.dim(v) - stacked.rank();
    }
    return s;
}

/// Multiplicity vector b with sum_i b_i * unit_dims[i] = target. The unit
/// dim vectors of the n projectives (or injectives) of an acyclic quiver are
/// unimodular, so the solution is integral and unique when it exists.
inline DimVector decompose_dims(const Quiver& Q, const std::vector<DimVector>& unit_dims,
                                const DimVector& target) {
    int n = Q.n();
    IntMat A(n, std::vector<long long>(n, 0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) A[i][j] = unit_dims[j][i];
    long long det = detail::int_det(A);
    if (det == 0) throw schema_error("decompose_dims: unit dims are not independent");
    IntMat adj = detail::int_adjugate(A);
    DimVector mult(n, 0);
    for (int i = 0; i < n; ++i) {
        long long num = 0;
        for (int j = 0; j < n; ++j) num += adj[i][j] * target[j];
        if (num % det != 0) throw schema_error("decompose_dims: non-integral multiplicity");
        long long m = num / det;
        if (m < 0) throw schema_error("decompose_dims: negative multiplicity");
        mult[i] = static_cast<int>(m);
    }
    return mult;
}

/// Minimal projective presentation 0 -> P1 -f-> P0 -h-> M -> 0 (hereditary).
struct ProjPresentation {
    std::vector<std::pair<int, int>> p0;  // (vertex, copy) summands of P0
    std::vector<std::pair<int, int>> p1;  // summands of P1
    Representation P0;
    Representation P1rep;                 // the kernel K as a representation
    Morphism cover;                       // P0 -> M
    SubspaceFamily kernel;                // K inside P0
    DimVector p0_mult;
    DimVector p1_mult;
};

namespace detail {

/// Vectors whose classes form a basis of M_v / rad_v.
inline std::vector<FVector> top_lifts(const Representation& M, const SubspaceFamily& rad, int v) {
    std::vector<FVector> lifts;
    std::vector<bool> is_pivot(M.dim(v), false);
    for (int c : rad[v].pivots()) is_pivot[c] = true;
    for (int c = 0; c < M.dim(v); ++c) {
        if (is_pivot[c]) continue;
        FVector e(M.dim(v), 0);
        e[c] = 1;
        lifts.push_back(std::move(e));
    }
    return lifts;
}

} // namespace detail

inline ProjPresentation projective_presentation(const Representation& M) {
    const Quiver& Q = *M.quiver();
    QuiverPtr qp = M.quiver();
    PrimeField f = M.field();
    SubspaceFamily rad = radical_family(M);

    ProjPresentation out;
    out.p0_mult.assign(Q.n(), 0);
    std::vector<ProjectiveData> projs;
    for (int i = 0; i < Q.n(); ++i) projs.push_back(projective(qp, f, i));

    // P0 = sum of projectives over top lifts, with the cover map.
    std::vector<std::pair<int, FVector>> gens; // (vertex, generator image in M)
    for (int v = 0; v < Q.n(); ++v)
        for (FVector& lift : detail::top_lifts(M, rad, v)) {
            gens.emplace_back(v, lift);
            out.p0.emplace_back(v, out.p0_mult[v]);
            ++out.p0_mult[v];
        }

    Representation P0(qp, f, DimVector(Q.n(), 0));
    bool first = true;
    for (auto& g : gens) {
        const Representation& Pi = projs[g.first].rep;
        P0 = first ? Pi : direct_sum(P0, Pi);
        first = false;
    }
    if (gens.empty()) P0 = Representation(qp, f, DimVector(Q.n(), 0));

    // offsets of each summand inside P0, per vertex
    std::vector<DimVector> offs;
    DimVector run(Q.n(), 0);
    for (auto& g : gens) {
        offs.push_back(run);
        for (int v = 0; v < Q.n(); ++v) run[v] += projs[g.first].rep.dim(v);
    }

    Morphism h = zero_morphism(P0, M);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        int i = gens[gi].first;
        const PathFamily& pf = projs[i].basis;
        for (int v = 0; v < Q.n(); ++v)
            for (size_t b = 0; b < pf.paths[v].size(); ++b) {
                // image of the path basis vector: M(path) applied to the lift
                FVector img = gens[gi].second;
                for (int ai : pf.paths[v][b]) img = M.mat(ai).apply(img);
                for (int r = 0; r < M.dim(v); ++r)
                    h.comps[v](r, offs[gi][v] + static_cast<int>(b)) = img[r];
            }
    }
    out.P0 = P0;
    out.cover = h;

    // kernel family (arrow-invariant automatically)
    out.kernel.clear();
    for (int v = 0; v < Q.n(); ++v) out.kernel.push_back(Subspace::span(h.comps[v].kernel_basis()));
    SubQuotient ks = sub_quotient(P0, out.kernel);
    out.P1rep = ks.sub;
    out.p1_mult = top_dims(ks.sub);
    for (int i = 0; i < Q.n(); ++i)
        for (int c = 0; c < out.p1_mult[i]; ++c) out.p1.emplace_back(i, c);
    return out;
}

/// Minimal injective copresentation multiplicities (hereditary):
/// 0 -> M -> I0 -> I1 -> 0 with I0 = injective envelope.
struct InjCopresentation {
    DimVector i0_mult;
    DimVector i1_mult;
};

inline InjCopresentation injective_copresentation(const Representation& M) {
    const Quiver& Q = *M.quiver();
    QuiverPtr qp = M.quiver();
    InjCopresentation out;
    out.i0_mult = soc_dims(M);
    std::vector<DimVector> inj_dims;
    for (int i = 0; i < Q.n(); ++i) inj_dims.push_back(injective(qp, M.field(), i).rep.dims());
    DimVector cdims(Q.n());
    for (int v = 0; v < Q.n(); ++v) {
        long long d = -M.dim(v);
        for (int i = 0; i < Q.n(); ++i) d += static_cast<long long>(out.i0_mult[i]) * inj_dims[i][v];
        if (d < 0) throw schema_error("injective envelope dimension underflow");
        cdims[v] = static_cast<int>(d);
    }
    out.i1_mult = decompose_dims(Q, inj_dims, cdims);
    return out;
}

/// P_i is a direct summand of M iff the End(P_i)=k pairing
/// Hom(P_i,M) x Hom(M,P_i) -> k is nonzero.
inline bool has_projective_summand(const Representation& M) {
    const Quiver& Q = *M.quiver();
    QuiverPtr qp = M.quiver();
    for (int i = 0; i < Q.n(); ++i) {
        ProjectiveData Pi = projective(qp, M.field(), i);
        MorphismBasis in = hom_basis(Pi.rep, M);
        if (in.dim() == 0) continue;
        MorphismBasis outb = hom_basis(M, Pi.rep);
        // coordinate of the trivial path e_i inside P_i at vertex i
        Path triv;
        auto it = std::lower_bound(Pi.basis.paths[i].begin(), Pi.basis.paths[i].end(), triv);
        int e = static_cast<int>(it - Pi.basis.paths[i].begin());
        for (const Morphism& phi : in.basis)
            for (const Morphism& psi : outb.basis) {
                FMatrix comp = psi.comps[i] * phi.comps[i];
                if (comp(e, e) != 0) return true;
            }
    }
    return false;
}

struct TauResult {
    Representation tau;
    bool dropped_projective = false;
};

/// Auslander-Reiten translate via the Nakayama functor on the minimal
/// projective presentation; projective summands are annihilated.
inline TauResult ar_translate(const Representation& M) {
    const Quiver& Q = *M.quiver();
    Q.require_hereditary("ar_translate");
    QuiverPtr qp = M.quiver();
    PrimeField f = M.field();

    TauResult out;
    out.dropped_projective = has_projective_summand(M);
    if (M.is_zero()) {
        out.tau = M;
        return out;
    }

    ProjPresentation pres = projective_presentation(M);

    // Generators of K = P1 in P0 coordinates: top lifts of the kernel pulled
    // through the inclusion.
    SubQuotient ks = sub_quotient(pres.P0, pres.kernel);
    SubspaceFamily krad = radical_family(ks.sub);
    std::vector<std::pair<int, FVector>> gens; // (vertex, vector in P0_v)
    for (int v = 0; v < Q.n(); ++v)
        for (FVector& lift : detail::top_lifts(ks.sub, krad, v)) {
            FVector amb = ks.incl.comps[v].apply(lift);
            gens.emplace_back(v, amb);
        }

    std::vector<InjectiveData> injs;
    for (int i = 0; i < Q.n(); ++i) injs.push_back(injective(qp, f, i));
    std::vector<ProjectiveData> projs;
    for (int i = 0; i < Q.n(); ++i) projs.push_back(projective(qp, f, i));

    // nu(P1) = sum over gens of I_{vertex}, nu(P0) = sum over p0 of I_j.
    Representation nuP1(qp, f, DimVector(Q.n(), 0));
    std::vector<DimVector> offs1;
    {
        DimVector run(Q.n(), 0);
        bool first = true;
        for (auto& g : gens) {
            offs1.push_back(run);
            for (int v = 0; v < Q.n(); ++v) run[v] += injs[g.first].rep.dim(v);
            nuP1 = first ? injs[g.first].rep : direct_sum(nuP1, injs[g.first].rep);
            first = false;
        }
        if (gens.empty()) nuP1 = Representation(qp, f, DimVector(Q.n(), 0));
    }
    Representation nuP0(qp, f, DimVector(Q.n(), 0));
    std::vector<DimVector> offs0;
    {
        DimVector run(Q.n(), 0);
        bool first = true;
        for (auto& s : pres.p0) {
            offs0.push_back(run);
            for (int v = 0; v < Q.n(); ++v) run[v] += injs[s.first].rep.dim(v);
            nuP0 = first ? injs[s.first].rep : direct_sum(nuP0, injs[s.first].rep);
            first = false;
        }
        if (pres.p0.empty()) nuP0 = Representation(qp, f, DimVector(Q.n(), 0));
    }

    // P0 coordinate layout mirrors the construction in projective_presentation.
    std::vector<DimVector> p0offs;
    {
        DimVector run(Q.n(), 0);
        for (auto& s : pres.p0) {
            p0offs.push_back(run);
            for (int v = 0; v < Q.n(); ++v) run[v] += projs[s.first].rep.dim(v);
        }
    }

    // nu(f) : nuP1 -> nuP0 columnwise on dual path bases.
    Morphism nuf = zero_morphism(nuP1, nuP0);
    for (int l = 0; l < Q.n(); ++l) {
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int i = gens[gi].first; // generator lives at vertex i
            const auto& dual_i = injs[i].basis.paths[l]; // paths l -> i
            for (size_t col = 0; col < dual_i.size(); ++col) {
                const Path& wt = dual_i[col]; // delta functional of this path
                // image functional on each P_j-copy: w' |-> coeff of concat(w', w) in gen
                for (size_t s = 0; s < pres.p0.size(); ++s) {
                    int j = pres.p0[s].first;
                    const auto& dual_j = injs[j].basis.paths[l]; // paths l -> j
                    for (size_t row = 0; row < dual_j.size(); ++row) {
                        const Path& wp = dual_j[row];
                        // coefficient of the generator at (copy s, path w) with
                        // concat(wp, w) == wt, w a path j -> i
                        uint32_t coeff = 0;
                        if (wp.size() <= wt.size() &&
                            std::equal(wp.begin(), wp.end(), wt.begin())) {
                            Path w(wt.begin() + static_cast<long>(wp.size()), wt.end());
                            const auto& pj = projs[j].basis.paths[i]; // paths j -> i
                            auto it = std::lower_bound(pj.begin(), pj.end(), w);
                            if (it != pj.end() && *it == w) {
                                int bidx = static_cast<int>(it - pj.begin());
                                coeff = gens[gi].second[p0offs[s][i] + bidx];
                            }
                        }
                        if (coeff)
                            nuf.comps[l](offs0[s][l] + static_cast<int>(row),
                                         offs1[gi][l] + static_cast<int>(col)) = coeff;
                    }
                }
            }
        }
    }

    SubspaceFamily ker;
    for (int v = 0; v < Q.n(); ++v) ker.push_back(Subspace::span(nuf.comps[v].kernel_basis()));
    out.tau = sub_quotient(nuP1, ker).sub;
    return out;
}

} // namespace qcchar
