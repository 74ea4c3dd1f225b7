#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qcchar/character.hpp"
#include "qcchar/qval.hpp"
#include "qcchar/submod.hpp"

namespace qcchar {

// All weight values are half-integers stored as integer counts of 1/2 units;
// no floating point anywhere.

// ---------------------------------------------------------------------------
// Enumerated compatibility loci
// ---------------------------------------------------------------------------

/// log_p #{ eps in Ext(Mq, Nsub) : phi-fiber over (cM, cN) is nonempty }.
/// The locus is p_0 Ker beta, a linear subspace, so the count must be a
/// p-power; anything else falsifies the vector-bundle lemma and throws.
inline int compat_eps_dim_chains(const Representation& Mq, const Representation& Nsub,
                                 const Chain& cM, const Chain& cN,
                                 const EnumerationLimits& lim = {}) {
    ExtSpace es(Mq, Nsub);
    std::vector<ExtClass> basis = es.basis();
    int e = static_cast<int>(basis.size());
    PrimeField f = Mq.field();
    FlagType t;
    t.i = cM.type.i;
    for (int j = 0; j < cM.type.length(); ++j) t.a.push_back(cM.type.a[j] + cN.type.a[j]);
    long long count = 0;
    std::vector<uint32_t> coeff(e, 0);
    while (true) {
        ExtClass eps = es.from_coefficients(basis, coeff);
        if (!phi_fiber(eps, cM, cN, t, lim).empty()) ++count;
        int pos = e - 1;
        while (pos >= 0 && coeff[pos] == f.p - 1) coeff[pos--] = 0;
        if (pos < 0) break;
        ++coeff[pos];
    }
    return log_p_exact(count, f.p, "compat_eps_dim_chains");
}

/// log_p #{ eps in Ext(Mq, Nsub) : refined fiber over (M0, N0) nonempty }.
inline int compat_eps_dim_submods(const Representation& Mq, const Representation& Nsub,
                                  const SubspaceFamily& M0, const SubspaceFamily& N0,
                                  const EnumerationLimits& lim = {}) {
    ExtSpace es(Mq, Nsub);
    std::vector<ExtClass> basis = es.basis();
    int e = static_cast<int>(basis.size());
    PrimeField f = Mq.field();
    long long count = 0;
    std::vector<uint32_t> coeff(e, 0);
    while (true) {
        ExtClass eps = es.from_coefficients(basis, coeff);
        if (!refined_fiber(RefinedFiberQuery{eps, M0, N0}, lim).empty()) ++count;
        int pos = e - 1;
        while (pos >= 0 && coeff[pos] == f.p - 1) coeff[pos--] = 0;
        if (pos < 0) break;
        ++coeff[pos];
    }
    return log_p_exact(count, f.p, "compat_eps_dim_submods");
}

// ---------------------------------------------------------------------------
// Named weight functions on chain pairs (abelian side)
// ---------------------------------------------------------------------------

/// f_hom(N,M,c_N,c_M) = k(c_M,c_N) - k(c_N,c_M); note the argument roles.
inline int eval_f_hom(const Representation& N, const Representation& M, const Chain& cN,
                      const Chain& cM, const EnumerationLimits& lim = {}) {
    return 2 * (k_rank(M, N, cM, cN, lim) - k_rank(N, M, cN, cM, lim));
}

enum class ExtSign { plus, minus };

/// f^+_ext(M,N,c_M,c_N) = dim Ext(M,N) - dim p0 Ker beta(c_M,c_N);
/// f^-_ext(N,M,c_N,c_M) = dim p0 Ker beta(c_M,c_N). Values in half-units.
inline int eval_f_ext(const Representation& first, const Representation& second,
                      const Chain& c1, const Chain& c2, ExtSign sign,
                      const EnumerationLimits& lim = {}) {
    if (sign == ExtSign::plus) {
        // arguments are (M, N, cM, cN)
        int e = ExtSpace(first, second).ext_dim();
        return 2 * (e - compat_eps_dim_chains(first, second, c1, c2, lim));
    }
    // arguments are (N, M, cN, cM)
    return 2 * compat_eps_dim_chains(second, first, c2, c1, lim);
}

/// l(M,N,M0,N0) = dim Hom(M0, N/N0) in half-units.
inline int eval_l_dim(const Representation& M, const SubspaceFamily& M0, const Representation& N,
                      const SubspaceFamily& N0) {
    return 2 * fiber_law_exponent(M, M0, N, N0);
}

// ---------------------------------------------------------------------------
// Named weight functions on submodule pairs (2-CY side)
// ---------------------------------------------------------------------------

struct GWeightContext {
    ClusterObject M;
    ClusterObject N;
    SubspaceFamily M0;
    SubspaceFamily N0;
    IntMat lambda;
};

/// dim Sigma p Ker alpha_{M0,N0} through the 2-CY decomposition: the
/// module-extension directions are enumerated, the mixed directions enter
/// through the orthogonal complement of the eta-side locus.
inline int sigma_p_ker_alpha_dim(const GWeightContext& g, const EnumerationLimits& lim = {}) {
    const Representation& FM = g.M.module_part;
    const Representation& FN = g.N.module_part;
    int A = compat_eps_dim_submods(FM, FN, g.M0, g.N0, lim);
    int B = compat_eps_dim_submods(FN, FM, g.N0, g.M0, lim);
    int ext_nm = ExtSpace(FN, FM).ext_dim();
    return A + (ext_nm - B);
}

enum class GWeightName { g_skew, g_MN, g_sigma, g_plus_ext, g_minus_ext };

/// Evaluate the named 2-CY weight; result in half-units.
inline int eval_g(GWeightName name, const GWeightContext& g, const EnumerationLimits& lim = {}) {
    const Quiver& Q = *g.M.module_part.quiver();
    switch (name) {
    case GWeightName::g_skew: {
        IndexVector pm = exponent_p(g.M, family_dims(g.M0));
        IndexVector pn = exponent_p(g.N, family_dims(g.N0));
        return static_cast<int>(2 * skew_form(g.lambda, pm, pn));
    }
    case GWeightName::g_MN: {
        IndexVector pm = exponent_p(g.M, family_dims(g.M0));
        IndexVector pn = exponent_p(g.N, family_dims(g.N0));
        int l = fiber_law_exponent(g.M.module_part, g.M0, g.N.module_part, g.N0);
        return static_cast<int>(skew_form(g.lambda, pm, pn)) - 2 * l;
    }
    case GWeightName::g_sigma: {
        // g_sigma(0,L,0,L0) = -1/2 <dim L0, l - dim L0>; evaluated with
        // (N, N0) as the (L, L0) slot.
        IntMat E = Q.euler_matrix();
        DimVector g0 = family_dims(g.N0);
        DimVector l = g.N.module_part.dims();
        long long w = 0;
        for (int i = 0; i < Q.n(); ++i)
            for (int j = 0; j < Q.n(); ++j)
                w += static_cast<long long>(g0[i]) * E[i][j] * (l[j] - g0[j]);
        return static_cast<int>(-w);
    }
    case GWeightName::g_minus_ext:
        return 2 * sigma_p_ker_alpha_dim(g, lim);
    case GWeightName::g_plus_ext:
        return 2 * (hom_c_dim(g.M, g.N) - sigma_p_ker_alpha_dim(g, lim));
    }
    throw schema_error("unknown g weight");
}

// ---------------------------------------------------------------------------
// Composable weight expressions on chain pairs
// ---------------------------------------------------------------------------

/// A chain-pair weight: evaluated at (first, second, c1, c2) tuples; whether
/// the tuple is an (M,N,cM,cN) or an (N,M,cN,cM) key is decided by the
/// surrounding refinement, per the support bookkeeping of the rightmost
/// factor.
using ChainWeightFn =
    std::function<int(const Representation&, const Representation&, const Chain&, const Chain&)>;

inline ChainWeightFn zero_weight() {
    return [](const Representation&, const Representation&, const Chain&, const Chain&) {
        return 0;
    };
}

/// Pointwise sum; the support area follows the rightmost factor.
inline ChainWeightFn compose(ChainWeightFn w1, ChainWeightFn w2) {
    return [w1 = std::move(w1), w2 = std::move(w2)](const Representation& a,
                                                    const Representation& b, const Chain& c1,
                                                    const Chain& c2) {
        return w1(a, b, c1, c2) + w2(a, b, c1, c2);
    };
}

/// Weight defined by an explicit table on canonical chain-pair keys, the
/// user_table escape hatch. Keys are "<c1 key>|<c2 key>".
inline ChainWeightFn user_table_weight(std::map<std::string, int> table) {
    return [table = std::move(table)](const Representation&, const Representation&,
                                      const Chain& c1, const Chain& c2) {
        auto it = table.find(c1.key() + "|" + c2.key());
        return it == table.end() ? 0 : it->second;
    };
}

/// S(eps, f_M, f_N): transport of base weights through the chain images of
/// the factor extensions. With zero bases this vanishes identically.
inline ChainWeightFn transported_weight(const ExtClass& epsM, ChainWeightFn fM,
                                        const ExtClass& epsN, ChainWeightFn fN) {
    return [epsM, fM = std::move(fM), epsN, fN = std::move(fN)](
               const Representation&, const Representation&, const Chain& c1, const Chain& c2) {
        MiddleTerm mtM = middle_term(epsM);
        auto [m1, m2] = chain_image(mtM, c1);
        MiddleTerm mtN = middle_term(epsN);
        auto [n1, n2] = chain_image(mtN, c2);
        return fM(epsM.quotient, epsM.sub, m1, m2) + fN(epsN.quotient, epsN.sub, n1, n2);
    };
}

// ---------------------------------------------------------------------------
// Weighted delta evaluation
// ---------------------------------------------------------------------------

/// [w * f_eps * delta_{mt eps}](d_t): enumerate the type-t chains of mt(eps),
/// group them by their induced chain pair, and sum q^{k + w(pair)} over the
/// image; the group size realizes q^k and must be a p-power.
inline QVal weighted_delta_eval(const ExtClass& eps, const FlagType& t, const ChainWeightFn& w,
                                const EnumerationLimits& lim = {}) {
    MiddleTerm mt = middle_term(eps);
    uint32_t p = mt.E.field().p;
    std::map<std::string, std::pair<long long, int>> groups; // key -> (count, halfunits)
    for (const Chain& cL : chains_of_type(mt.E, t, lim)) {
        auto [cM, cN] = chain_image(mt, cL);
        std::string key = cM.key() + "|" + cN.key();
        auto it = groups.find(key);
        if (it == groups.end())
            groups[key] = {1, w(eps.quotient, eps.sub, cM, cN)};
        else
            ++it->second.first;
    }
    QVal acc = QVal::zero(p);
    for (auto& [key, cw] : groups) {
        int k = log_p_exact(cw.first, p, "weighted_delta_eval fiber");
        acc = acc + QVal::q_halfpow(p, 2 * k + cw.second);
    }
    return acc;
}

/// Same, with the middle term checked against a prescribed L up to iso.
inline QVal weighted_delta_eval(const Representation& L, const FlagType& t, const ExtClass& eps,
                                const ChainWeightFn& w, const EnumerationLimits& lim = {}) {
    MiddleTerm mt = middle_term(eps);
    if (!is_isomorphic(mt.E, L))
        throw schema_error("weighted_delta_eval: mt(eps) is not isomorphic to L");
    return weighted_delta_eval(eps, t, w, lim);
}

/// One lexicographically-least representative per line of Ext(M,N):
/// coefficient vectors over the normalized basis whose first nonzero entry
/// is 1. Empty when Ext vanishes.
inline std::vector<ExtClass> projective_ext_representatives(const Representation& M,
                                                            const Representation& N) {
    ExtSpace es(M, N);
    std::vector<ExtClass> basis = es.basis();
    int e = static_cast<int>(basis.size());
    PrimeField f = M.field();
    std::vector<ExtClass> reps;
    std::vector<uint32_t> coeff(e, 0);
    while (true) {
        int pos = e - 1;
        while (pos >= 0 && coeff[pos] == f.p - 1) coeff[pos--] = 0;
        if (pos < 0) break;
        ++coeff[pos];
        int first = 0;
        while (first < e && coeff[first] == 0) ++first;
        if (first < e && coeff[first] == 1) reps.push_back(es.from_coefficients(basis, coeff));
    }
    return reps;
}

} // namespace qcchar
