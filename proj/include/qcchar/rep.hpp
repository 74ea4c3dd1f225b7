#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcchar/quiver.hpp"
#include "qcchar/subspace.hpp"

namespace qcchar {

using QuiverPtr = std::shared_ptr<const Quiver>;

/// Finite-dimensional representation: one GF(p) space per vertex, one matrix
/// per arrow (shape dim(target) x dim(source), acting on column vectors).
class Representation {
public:
    Representation() = default;
    Representation(QuiverPtr q, PrimeField f, DimVector dims)
        : quiver_(std::move(q)), field_(f), dims_(std::move(dims)) {
        mats_.reserve(quiver_->arrows().size());
        for (const Arrow& a : quiver_->arrows())
            mats_.emplace_back(field_, dims_[a.target], dims_[a.source]);
    }
    Representation(QuiverPtr q, PrimeField f, DimVector dims, std::vector<FMatrix> mats)
        : quiver_(std::move(q)), field_(f), dims_(std::move(dims)), mats_(std::move(mats)) {
        validate();
    }

    const QuiverPtr& quiver() const { return quiver_; }
    const PrimeField& field() const { return field_; }
    const DimVector& dims() const { return dims_; }
    int dim(int v) const { return dims_[v]; }
    int total_dim() const {
        int t = 0;
        for (int d : dims_) t += d;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }

    const FMatrix& mat(int arrow_idx) const { return mats_[arrow_idx]; }
    const FMatrix& mat(const std::string& id) const { return mats_[quiver_->arrow_index(id)]; }
    FMatrix& mat(int arrow_idx) { return mats_[arrow_idx]; }

    void validate() const {
        const auto& arrows = quiver_->arrows();
        if (mats_.size() != arrows.size()) throw schema_error("matrix count != arrow count");
        if (static_cast<int>(dims_.size()) != quiver_->n())
            throw schema_error("dim vector length != vertex count");
        for (int d : dims_)
            if (d < 0) throw schema_error("negative dimension");
        for (size_t i = 0; i < arrows.size(); ++i) {
            if (mats_[i].rows() != dims_[arrows[i].target] ||
                mats_[i].cols() != dims_[arrows[i].source])
                throw schema_error("matrix shape mismatch for arrow '" + arrows[i].id + "'");
            if (mats_[i].field().p != field_.p) throw schema_error("matrix field mismatch");
        }
        for (const Relation& r : quiver_->relations())
            if (!relation_holds(r))
                throw schema_error("representation violates a quadratic relation");
    }

    bool relation_holds(const Relation& r) const {
        const Arrow& a1 = quiver_->arrows()[quiver_->arrow_index(r.front().first)];
        const Arrow& a2 = quiver_->arrows()[quiver_->arrow_index(r.front().second)];
        FMatrix acc(field_, dims_[a2.target], dims_[a1.source]);
        for (const RelationTerm& t : r) {
            FMatrix prod = mat(t.second) * mat(t.first); // t.first acts first
            acc = acc + prod.scaled(field_.reduce(t.coeff));
        }
        return acc.is_zero();
    }

    std::string key() const {
        std::string k = "p" + std::to_string(field_.p) + ";d";
        for (int d : dims_) k += std::to_string(d) + ",";
        for (const FMatrix& m : mats_) k += ";" + m.to_string();
        return k;
    }

    bool operator==(const Representation& o) const {
        return dims_ == o.dims_ && mats_ == o.mats_ && field_.p == o.field_.p;
    }

private:
    QuiverPtr quiver_;
    PrimeField field_;
    DimVector dims_;
    std::vector<FMatrix> mats_;
};

/// Vertex-indexed tuple of matrices f_i : M_i -> N_i.
struct Morphism {
    std::vector<FMatrix> comps; // comps[v] has shape dimN[v] x dimM[v]
};

inline Morphism zero_morphism(const Representation& M, const Representation& N) {
    Morphism f;
    for (int v = 0; v < M.quiver()->n(); ++v)
        f.comps.emplace_back(M.field(), N.dim(v), M.dim(v));
    return f;
}

inline Morphism identity_morphism(const Representation& M) {
    Morphism f;
    for (int v = 0; v < M.quiver()->n(); ++v)
        f.comps.push_back(FMatrix::identity(M.field(), M.dim(v)));
    return f;
}

inline Morphism compose(const Morphism& g, const Morphism& f) {
    Morphism h;
    for (size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
    return h;
}

namespace detail {

struct VarLayout {
    std::vector<int> offset; // per vertex
    int total = 0;
};

inline VarLayout hom_layout(const Representation& M, const Representation& N) {
    VarLayout L;
    L.offset.resize(M.quiver()->n());
    for (int v = 0; v < M.quiver()->n(); ++v) {
        L.offset[v] = L.total;
        L.total += N.dim(v) * M.dim(v);
    }
    return L;
}

inline Morphism morphism_from_vector(const Representation& M, const Representation& N,
                                     const VarLayout& L, const FVector& x) {
    Morphism f = zero_morphism(M, N);
    for (int v = 0; v < M.quiver()->n(); ++v)
        for (int r = 0; r < N.dim(v); ++r)
            for (int c = 0; c < M.dim(v); ++c)
                f.comps[v](r, c) = x[L.offset[v] + r * M.dim(v) + c];
    return f;
}

} // namespace detail

struct MorphismBasis {
    std::vector<Morphism> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

/// Basis of Hom(M,N): kernel of the intertwiner system
/// N(a) f_{s(a)} - f_{t(a)} M(a) = 0 over all arrows.
inline MorphismBasis hom_basis(const Representation& M, const Representation& N) {
    const Quiver& Q = *M.quiver();
    PrimeField f = M.field();
    detail::VarLayout L = detail::hom_layout(M, N);

    int nrows = 0;
    for (const Arrow& a : Q.arrows()) nrows += N.dim(a.target) * M.dim(a.source);
    FMatrix sys(f, nrows, L.total);
    int row = 0;
    for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
        const Arrow& a = Q.arrows()[ai];
        const FMatrix& Na = N.mat(static_cast<int>(ai));
        const FMatrix& Ma = M.mat(static_cast<int>(ai));
        int s = a.source, t = a.target;
        for (int r = 0; r < N.dim(t); ++r)
            for (int c = 0; c < M.dim(s); ++c) {
                // sum_k Na[r,k] f_s[k,c] - sum_k f_t[r,k] Ma[k,c] = 0
                for (int k = 0; k < N.dim(s); ++k)
                    sys(row, L.offset[s] + k * M.dim(s) + c) =
                        f.add(sys(row, L.offset[s] + k * M.dim(s) + c), Na(r, k));
                for (int k = 0; k < M.dim(t); ++k)
                    sys(row, L.offset[t] + r * M.dim(t) + k) =
                        f.sub(sys(row, L.offset[t] + r * M.dim(t) + k), Ma(k, c));
                ++row;
            }
    }
    FMatrix ker = sys.kernel_basis();
    MorphismBasis out;
    for (int i = 0; i < ker.rows(); ++i) {
        FVector x(L.total);
        for (int j = 0; j < L.total; ++j) x[j] = ker(i, j);
        out.basis.push_back(detail::morphism_from_vector(M, N, L, x));
    }
    return out;
}

inline int hom_dim(const Representation& M, const Representation& N) {
    return hom_basis(M, N).dim();
}

// ---------------------------------------------------------------------------
// Extensions as arrow cocycles
// ---------------------------------------------------------------------------

/// A first-extension class of M (quotient) by N (sub), stored as an
/// arrow-indexed cocycle eta_a : M_{s(a)} -> N_{t(a)}; classes are compared
/// after reduction modulo coboundaries.
struct ExtClass {
    Representation quotient; // M
    Representation sub;      // N
    std::vector<FMatrix> cocycle;
    bool normalized = false;
};

/// Cocycle/coboundary data for a fixed pair (M,N).
class ExtSpace {
public:
    ExtSpace(const Representation& M, const Representation& N) : M_(M), N_(N) {
        const Quiver& Q = *M.quiver();
        PrimeField f = M.field();
        offset_.resize(Q.arrows().size());
        total_ = 0;
        for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
            const Arrow& a = Q.arrows()[ai];
            offset_[ai] = total_;
            total_ += N.dim(a.target) * M.dim(a.source);
        }

        // Linearized relation constraints: for each relation sum c*(a2 . a1):
        // sum c * ( N(a2) eta_{a1} + eta_{a2} M(a1) ) = 0.
        int nrows = 0;
        for (const Relation& r : Q.relations()) {
            const Arrow& a1 = Q.arrows()[Q.arrow_index(r.front().first)];
            const Arrow& a2 = Q.arrows()[Q.arrow_index(r.front().second)];
            nrows += N.dim(a2.target) * M.dim(a1.source);
        }
        FMatrix sys(f, nrows, total_);
        int row0 = 0;
        for (const Relation& r : Q.relations()) {
            const Arrow& fst = Q.arrows()[Q.arrow_index(r.front().first)];
            const Arrow& snd = Q.arrows()[Q.arrow_index(r.front().second)];
            int R = N.dim(snd.target), C = M.dim(fst.source);
            for (const RelationTerm& t : r) {
                int i1 = Q.arrow_index(t.first);
                int i2 = Q.arrow_index(t.second);
                const Arrow& a1 = Q.arrows()[i1];
                const Arrow& a2 = Q.arrows()[i2];
                uint32_t c = f.reduce(t.coeff);
                // rows indexed by (r,cq) in R x C
                for (int rr = 0; rr < R; ++rr)
                    for (int cc = 0; cc < C; ++cc) {
                        int row = row0 + rr * C + cc;
                        // N(a2)[rr,k] * eta_{a1}[k,cc]
                        for (int k = 0; k < N.dim(a1.target); ++k) {
                            int var = offset_[i1] + k * M.dim(a1.source) + cc;
                            sys(row, var) = f.add(sys(row, var), f.mul(c, N.mat(i2)(rr, k)));
                        }
                        // eta_{a2}[rr,k] * M(a1)[k,cc]
                        for (int k = 0; k < M.dim(a2.source); ++k) {
                            int var = offset_[i2] + rr * M.dim(a2.source) + k;
                            sys(row, var) = f.add(sys(row, var), f.mul(c, M.mat(i1)(k, cc)));
                        }
                    }
            }
            row0 += R * C;
        }
        cocycles_ = sys.kernel_basis();

        // Coboundary image: phi |-> ( N(a) phi_{s(a)} - phi_{t(a)} M(a) )_a.
        detail::VarLayout hl = detail::hom_layout(M, N);
        FMatrix cob(f, hl.total, total_); // rows = phi basis images (as vectors)
        for (int v = 0; v < hl.total; ++v) {
            FVector unit(hl.total, 0);
            unit[v] = 1;
            Morphism phi = detail::morphism_from_vector(M, N, hl, unit);
            std::vector<FMatrix> eta = coboundary_of(phi);
            FVector img = flatten(eta);
            for (int j = 0; j < total_; ++j) cob(v, j) = img[j];
        }
        coboundaries_ = Subspace::span(cob);
    }

    const Representation& M() const { return M_; }
    const Representation& N() const { return N_; }
    int cocycle_dim() const { return cocycles_.rows(); }
    int coboundary_dim() const { return coboundaries_.dim(); }
    int ext_dim() const { return cocycle_dim() - coboundary_dim(); }
    int ambient_dim() const { return total_; }

    std::vector<FMatrix> coboundary_of(const Morphism& phi) const {
        const Quiver& Q = *M_.quiver();
        std::vector<FMatrix> eta;
        for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
            const Arrow& a = Q.arrows()[ai];
            eta.push_back(N_.mat(static_cast<int>(ai)) * phi.comps[a.source] -
                          phi.comps[a.target] * M_.mat(static_cast<int>(ai)));
        }
        return eta;
    }

    FVector flatten(const std::vector<FMatrix>& eta) const {
        FVector x(total_, 0);
        for (size_t ai = 0; ai < eta.size(); ++ai) {
            const FMatrix& m = eta[ai];
            int idx = offset_[ai];
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) x[idx++] = m(r, c);
        }
        return x;
    }

    std::vector<FMatrix> unflatten(const FVector& x) const {
        const Quiver& Q = *M_.quiver();
        std::vector<FMatrix> eta;
        for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
            const Arrow& a = Q.arrows()[ai];
            FMatrix m(M_.field(), N_.dim(a.target), M_.dim(a.source));
            int idx = offset_[ai];
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) m(r, c) = x[idx++];
            eta.push_back(std::move(m));
        }
        return eta;
    }

    /// Unique coset representative modulo coboundaries.
    FVector normalize_vector(const FVector& x) const { return coboundaries_.reduce(x); }

    ExtClass normalize(const ExtClass& e) const {
        ExtClass out = e;
        out.cocycle = unflatten(normalize_vector(flatten(e.cocycle)));
        out.normalized = true;
        return out;
    }

    /// Basis of Ext^1(M,N) as normalized cocycle classes.
    std::vector<ExtClass> basis() const {
        FMatrix reduced(M_.field(), cocycles_.rows(), total_);
        for (int i = 0; i < cocycles_.rows(); ++i) {
            FVector x(total_);
            for (int j = 0; j < total_; ++j) x[j] = cocycles_(i, j);
            FVector nx = normalize_vector(x);
            for (int j = 0; j < total_; ++j) reduced(i, j) = nx[j];
        }
        Subspace span = Subspace::span(reduced);
        std::vector<ExtClass> out;
        for (int i = 0; i < span.dim(); ++i) {
            FVector x(total_);
            for (int j = 0; j < total_; ++j) x[j] = span.basis()(i, j);
            out.push_back(ExtClass{M_, N_, unflatten(x), true});
        }
        return out;
    }

    /// Class from coefficients over basis(); the zero vector gives the split class.
    ExtClass from_coefficients(const std::vector<ExtClass>& basis,
                               const FVector& coeff) const {
        PrimeField f = M_.field();
        FVector x(total_, 0);
        for (size_t b = 0; b < basis.size(); ++b) {
            if (coeff[b] == 0) continue;
            FVector bx = flatten(basis[b].cocycle);
            for (int j = 0; j < total_; ++j) x[j] = f.add(x[j], f.mul(coeff[b], bx[j]));
        }
        return ExtClass{M_, N_, unflatten(x), true};
    }

private:
    Representation M_;
    Representation N_;
    std::vector<int> offset_;
    int total_ = 0;
    FMatrix cocycles_;     // rows span the cocycle space
    Subspace coboundaries_;
};

inline std::vector<ExtClass> ext_basis(const Representation& M, const Representation& N) {
    return ExtSpace(M, N).basis();
}

inline int ext_dim(const Representation& M, const Representation& N) {
    return ExtSpace(M, N).ext_dim();
}

inline ExtClass zero_ext(const Representation& M, const Representation& N) {
    ExtClass e{M, N, {}, true};
    const Quiver& Q = *M.quiver();
    for (const Arrow& a : Q.arrows())
        e.cocycle.emplace_back(M.field(), N.dim(a.target), M.dim(a.source));
    return e;
}

inline ExtClass ext_add(const ExtClass& a, const ExtClass& b) {
    ExtClass r = a;
    for (size_t i = 0; i < r.cocycle.size(); ++i) r.cocycle[i] = r.cocycle[i] + b.cocycle[i];
    r.normalized = false;
    return r;
}

inline ExtClass ext_scale(const ExtClass& a, uint32_t c) {
    ExtClass r = a;
    for (auto& m : r.cocycle) m = m.scaled(c);
    r.normalized = false;
    return r;
}

/// The extension module 0 -> N -> E -> M -> 0 built from a cocycle.
struct MiddleTerm {
    Representation E;
    Morphism incl; // N -> E
    Morphism proj; // E -> M
};

inline MiddleTerm middle_term(const ExtClass& e) {
    const Representation& M = e.quotient;
    const Representation& N = e.sub;
    const Quiver& Q = *M.quiver();
    PrimeField f = M.field();
    DimVector dims(Q.n());
    for (int v = 0; v < Q.n(); ++v) dims[v] = N.dim(v) + M.dim(v);
    std::vector<FMatrix> mats;
    for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
        const Arrow& a = Q.arrows()[ai];
        FMatrix m(f, dims[a.target], dims[a.source]);
        const FMatrix& Na = N.mat(static_cast<int>(ai));
        const FMatrix& Ma = M.mat(static_cast<int>(ai));
        const FMatrix& eta = e.cocycle[ai];
        for (int r = 0; r < Na.rows(); ++r)
            for (int c = 0; c < Na.cols(); ++c) m(r, c) = Na(r, c);
        for (int r = 0; r < eta.rows(); ++r)
            for (int c = 0; c < eta.cols(); ++c) m(r, N.dim(a.source) + c) = eta(r, c);
        for (int r = 0; r < Ma.rows(); ++r)
            for (int c = 0; c < Ma.cols(); ++c) m(N.dim(a.target) + r, N.dim(a.source) + c) = Ma(r, c);
        mats.push_back(std::move(m));
    }
    MiddleTerm out{Representation(M.quiver(), f, dims, std::move(mats)), {}, {}};
    for (int v = 0; v < Q.n(); ++v) {
        FMatrix iv(f, dims[v], N.dim(v));
        for (int r = 0; r < N.dim(v); ++r) iv(r, r) = 1;
        out.incl.comps.push_back(std::move(iv));
        FMatrix pv(f, M.dim(v), dims[v]);
        for (int r = 0; r < M.dim(v); ++r) pv(r, N.dim(v) + r) = 1;
        out.proj.comps.push_back(std::move(pv));
    }
    return out;
}

/// Pushout of e along lambda : N -> N'.
inline ExtClass pushout_class(const Morphism& lambda, const Representation& Nprime,
                              const ExtClass& e) {
    const Quiver& Q = *e.quotient.quiver();
    ExtClass r{e.quotient, Nprime, {}, false};
    for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
        const Arrow& a = Q.arrows()[ai];
        r.cocycle.push_back(lambda.comps[a.target] * e.cocycle[ai]);
    }
    return ExtSpace(r.quotient, r.sub).normalize(r);
}

/// Pullback of e along rho : M'' -> M.
inline ExtClass pullback_class(const ExtClass& e, const Morphism& rho,
                               const Representation& Mdprime) {
    const Quiver& Q = *e.quotient.quiver();
    ExtClass r{Mdprime, e.sub, {}, false};
    for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
        const Arrow& a = Q.arrows()[ai];
        r.cocycle.push_back(e.cocycle[ai] * rho.comps[a.source]);
    }
    return ExtSpace(r.quotient, r.sub).normalize(r);
}

// ---------------------------------------------------------------------------
// Direct sums, isomorphism, sub/quotient
// ---------------------------------------------------------------------------

inline Representation direct_sum(const Representation& A, const Representation& B) {
    const Quiver& Q = *A.quiver();
    PrimeField f = A.field();
    DimVector dims(Q.n());
    for (int v = 0; v < Q.n(); ++v) dims[v] = A.dim(v) + B.dim(v);
    std::vector<FMatrix> mats;
    for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
        const Arrow& a = Q.arrows()[ai];
        FMatrix m(f, dims[a.target], dims[a.source]);
        for (int r = 0; r < A.dim(a.target); ++r)
            for (int c = 0; c < A.dim(a.source); ++c) m(r, c) = A.mat(static_cast<int>(ai))(r, c);
        for (int r = 0; r < B.dim(a.target); ++r)
            for (int c = 0; c < B.dim(a.source); ++c)
                m(A.dim(a.target) + r, A.dim(a.source) + c) = B.mat(static_cast<int>(ai))(r, c);
        mats.push_back(std::move(m));
    }
    return Representation(A.quiver(), f, dims, std::move(mats));
}

/// Exhaustive search over Hom(M,N) for a vertexwise-invertible element.
inline bool is_isomorphic(const Representation& M, const Representation& N,
                          long long search_cap = kDefaultEnumerationCap) {
    if (M.dims() != N.dims()) return false;
    if (M.total_dim() == 0) return true;
    MorphismBasis H = hom_basis(M, N);
    int k = H.dim();
    PrimeField f = M.field();
    double size = 1;
    for (int i = 0; i < k; ++i) size *= f.p;
    if (size > static_cast<double>(search_cap))
        throw cap_error("isomorphism search space exceeds cap");
    std::vector<uint32_t> coeff(k, 0);
    while (true) {
        // advance odometer first so the all-zero morphism is skipped
        int pos = k - 1;
        while (pos >= 0 && coeff[pos] == f.p - 1) coeff[pos--] = 0;
        if (pos < 0) return false;
        ++coeff[pos];
        Morphism cand = zero_morphism(M, N);
        for (int b = 0; b < k; ++b) {
            if (coeff[b] == 0) continue;
            for (size_t v = 0; v < cand.comps.size(); ++v)
                cand.comps[v] = cand.comps[v] + H.basis[b].comps[v].scaled(coeff[b]);
        }
        bool invertible = true;
        for (size_t v = 0; v < cand.comps.size(); ++v)
            if (cand.comps[v].rank() != M.dim(static_cast<int>(v))) {
                invertible = false;
                break;
            }
        if (invertible) return true;
    }
}

/// Per-vertex subspace family, the carrier for submodules of a fixed module.
using SubspaceFamily = std::vector<Subspace>;

inline bool family_invariant(const Representation& M, const SubspaceFamily& U) {
    const Quiver& Q = *M.quiver();
    for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
        const Arrow& a = Q.arrows()[ai];
        const Subspace& src = U[a.source];
        for (int i = 0; i < src.dim(); ++i) {
            FVector v(src.ambient_dim());
            for (int j = 0; j < src.ambient_dim(); ++j) v[j] = src.basis()(i, j);
            if (!U[a.target].contains(M.mat(static_cast<int>(ai)).apply(v))) return false;
        }
    }
    return true;
}

struct SubQuotient {
    Representation sub;
    Morphism incl; // sub -> M
    Representation quot;
    Morphism proj; // M -> quot
};

/// Sub- and quotient representation induced by an arrow-invariant family.
inline SubQuotient sub_quotient(const Representation& M, const SubspaceFamily& U) {
    if (!family_invariant(M, U))
        throw schema_error("sub_quotient: subspace family is not arrow-invariant");
    const Quiver& Q = *M.quiver();
    PrimeField f = M.field();
    DimVector sdims(Q.n()), qdims(Q.n());
    std::vector<std::vector<int>> qcols(Q.n()); // non-pivot columns per vertex
    for (int v = 0; v < Q.n(); ++v) {
        sdims[v] = U[v].dim();
        qdims[v] = M.dim(v) - U[v].dim();
        std::vector<bool> is_pivot(M.dim(v), false);
        for (int c : U[v].pivots()) is_pivot[c] = true;
        for (int c = 0; c < M.dim(v); ++c)
            if (!is_pivot[c]) qcols[v].push_back(c);
    }
    std::vector<FMatrix> smats, qmats;
    for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
        const Arrow& a = Q.arrows()[ai];
        FMatrix sm(f, sdims[a.target], sdims[a.source]);
        for (int c = 0; c < sdims[a.source]; ++c) {
            FVector v(M.dim(a.source));
            for (int j = 0; j < M.dim(a.source); ++j) v[j] = U[a.source].basis()(c, j);
            FVector w = M.mat(static_cast<int>(ai)).apply(v);
            FVector coords = U[a.target].coordinates(w);
            for (int r = 0; r < sdims[a.target]; ++r) sm(r, c) = coords[r];
        }
        smats.push_back(std::move(sm));

        FMatrix qm(f, qdims[a.target], qdims[a.source]);
        for (int c = 0; c < qdims[a.source]; ++c) {
            FVector e(M.dim(a.source), 0);
            e[qcols[a.source][c]] = 1;
            FVector w = U[a.target].reduce(M.mat(static_cast<int>(ai)).apply(e));
            for (int r = 0; r < qdims[a.target]; ++r) qm(r, c) = w[qcols[a.target][r]];
        }
        qmats.push_back(std::move(qm));
    }
    SubQuotient out{Representation(M.quiver(), f, sdims, std::move(smats)),
                    {},
                    Representation(M.quiver(), f, qdims, std::move(qmats)),
                    {}};
    for (int v = 0; v < Q.n(); ++v) {
        FMatrix iv(f, M.dim(v), sdims[v]);
        for (int r = 0; r < M.dim(v); ++r)
            for (int c = 0; c < sdims[v]; ++c) iv(r, c) = U[v].basis()(c, r);
        out.incl.comps.push_back(std::move(iv));
        FMatrix pv(f, qdims[v], M.dim(v));
        for (int c = 0; c < M.dim(v); ++c) {
            FVector e(M.dim(v), 0);
            e[c] = 1;
            FVector w = U[v].reduce(e);
            for (int r = 0; r < qdims[v]; ++r) pv(r, c) = w[qcols[v][r]];
        }
        out.proj.comps.push_back(std::move(pv));
    }
    return out;
}

} // namespace qcchar
