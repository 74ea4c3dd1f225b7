#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "qcchar/weights.hpp"

namespace qcchar {

enum class Verdict { pass, fail, degenerate };

inline const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::degenerate: return "degenerate";
    }
    return "?";
}

/// Machine-readable record of one theorem-level check. Verdicts compare the
/// two sides bit-exactly on their canonical strings (or, for solve-based
/// checks, require pure v-power scalars).
struct VerificationReport {
    std::string theorem;
    std::string instance;
    Verdict verdict = Verdict::pass;
    std::string lhs;
    std::string rhs;
    std::vector<std::string> scalars;
    std::string witness;
    std::string notes;
    uint32_t p = 0;
    long long timing_us = 0;

    bool passed() const { return verdict != Verdict::fail; }

    std::string to_json(bool with_timing = true) const {
        auto esc = [](const std::string& s) {
            std::string o;
            for (char c : s) {
                if (c == '"' || c == '\\') o += '\\';
                o += c;
            }
            return o;
        };
        std::ostringstream os;
        os << "{\"theorem\":\"" << esc(theorem) << "\",\"instance\":\"" << esc(instance)
           << "\",\"verdict\":\"" << verdict_name(verdict) << "\",\"lhs\":\"" << esc(lhs)
           << "\",\"rhs\":\"" << esc(rhs) << "\",\"scalars\":[";
        for (size_t i = 0; i < scalars.size(); ++i)
            os << (i ? "," : "") << "\"" << esc(scalars[i]) << "\"";
        os << "],\"witness\":\"" << esc(witness) << "\",\"notes\":\"" << esc(notes)
           << "\",\"p\":" << p;
        if (with_timing) os << ",\"timing_us\":" << timing_us;
        os << "}";
        return os.str();
    }
};

namespace detail {
class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    long long us() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

inline long long projective_count(uint32_t p, int dim) {
    long long c = 0, pk = 1;
    for (int i = 0; i < dim; ++i) {
        c += pk;
        pk *= p;
    }
    return c; // (p^dim - 1) / (p - 1)
}
} // namespace detail

// ---------------------------------------------------------------------------
// Fiber law
// ---------------------------------------------------------------------------

struct FiberLawInstance {
    RefinedFiberQuery query;
    std::string label;
};

/// |Gr^eps_{M0,N0}(FL)| equals 0 or p^{dim Hom(M0, N/N0)} on every instance.
inline VerificationReport check_fiber_law(const std::vector<FiberLawInstance>& instances,
                                          const EnumerationLimits& lim = {}) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.theorem = "fiber-law";
    rep.instance = std::to_string(instances.size()) + " instances";
    if (!instances.empty()) rep.p = instances.front().query.eps.quotient.field().p;
    long long checked = 0;
    for (const FiberLawInstance& inst : instances) {
        uint32_t p = inst.query.eps.quotient.field().p;
        long long count = static_cast<long long>(refined_fiber(inst.query, lim).size());
        int l = fiber_law_exponent(inst.query.eps.quotient, inst.query.M0, inst.query.eps.sub,
                                   inst.query.N0);
        long long want = 1;
        for (int i = 0; i < l; ++i) want *= p;
        if (count != 0 && count != want) {
            rep.verdict = Verdict::fail;
            rep.witness = inst.label + ": count=" + std::to_string(count) +
                          " expected 0 or p^" + std::to_string(l);
            break;
        }
        ++checked;
    }
    rep.lhs = "counts";
    rep.rhs = "0 or p^{dim Hom(M0, N/N0)}";
    rep.notes = std::to_string(checked) + " instances verified";
    rep.timing_us = sw.us();
    return rep;
}

// ---------------------------------------------------------------------------
// Flag type sweeps
// ---------------------------------------------------------------------------

/// Every flag type (i, a) with 1 <= |i| <= depth, in lexicographic order.
inline std::vector<FlagType> all_flag_types(int n, int depth) {
    std::vector<FlagType> out;
    for (int m = 1; m <= depth; ++m) {
        std::vector<int> iv(m, 0);
        while (true) {
            std::vector<int> av(m, 0);
            while (true) {
                FlagType t;
                t.i = iv;
                t.a = av;
                out.push_back(t);
                int pos = m - 1;
                while (pos >= 0 && av[pos] == 1) av[pos--] = 0;
                if (pos < 0) break;
                ++av[pos];
            }
            int pos = m - 1;
            while (pos >= 0 && iv[pos] == n - 1) iv[pos--] = 0;
            if (pos < 0) break;
            ++iv[pos];
        }
    }
    return out;
}

/// All splits a = a' + a'' of the 0/1 vector a.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> type_splits(
    const std::vector<int>& a) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    int m = static_cast<int>(a.size());
    std::vector<int> ap(m, 0);
    while (true) {
        bool ok = true;
        std::vector<int> app(m);
        for (int j = 0; j < m; ++j) {
            if (ap[j] > a[j]) { ok = false; break; }
            app[j] = a[j] - ap[j];
        }
        if (ok) out.emplace_back(ap, app);
        int pos = m - 1;
        while (pos >= 0 && ap[pos] == 1) ap[pos--] = 0;
        if (pos < 0) break;
        ++ap[pos];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pointwise balance (mainlemma11) and the orthogonality dimension sum
// ---------------------------------------------------------------------------

struct ChainPairInstance {
    Representation M;
    Representation N;
    Chain cM;
    Chain cN;
    std::string label;
};

/// For each pair: dim p0Ker-beta + dim(Im beta' cap Ext(N,M)) = dim Ext(M,N),
/// both summands enumerated independently, and the two displayed balanced
/// variants hold exactly.
inline VerificationReport check_pointwise_balance(const std::vector<ChainPairInstance>& pairs,
                                                  const EnumerationLimits& lim = {}) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.theorem = "pointwise-balance";
    rep.instance = std::to_string(pairs.size()) + " chain pairs";
    if (!pairs.empty()) rep.p = pairs.front().M.field().p;
    for (const ChainPairInstance& inst : pairs) {
        uint32_t p = inst.M.field().p;
        int e = ExtSpace(inst.M, inst.N).ext_dim();
        int d1 = compat_eps_dim_chains(inst.M, inst.N, inst.cM, inst.cN, lim);
        int d2 = compat_eps_dim_chains(inst.N, inst.M, inst.cN, inst.cM, lim);
        if (d1 + d2 != e) {
            rep.verdict = Verdict::fail;
            rep.witness = inst.label + ": dim p0Ker=" + std::to_string(d1) +
                          " + dim(Im cap)=" + std::to_string(d2) +
                          " != dim Ext=" + std::to_string(e);
            break;
        }
        int kMN = k_rank(inst.M, inst.N, inst.cM, inst.cN, lim);
        int kNM = k_rank(inst.N, inst.M, inst.cN, inst.cM, lim);
        int fplus = eval_f_ext(inst.M, inst.N, inst.cM, inst.cN, ExtSign::plus, lim);
        int fminus = eval_f_ext(inst.N, inst.M, inst.cN, inst.cM, ExtSign::minus, lim);
        int fhom = eval_f_hom(inst.N, inst.M, inst.cN, inst.cM, lim);
        QVal lhs = QVal::integer(p, detail::projective_count(p, e)) * QVal::q_halfpow(p, 2 * kMN);
        QVal v1 = QVal::integer(p, detail::projective_count(p, d1)) *
                      QVal::q_halfpow(p, 2 * kMN + fplus) +
                  QVal::integer(p, detail::projective_count(p, d2)) *
                      QVal::q_halfpow(p, 2 * kNM + fhom);
        QVal v2 = QVal::integer(p, detail::projective_count(p, d1)) *
                      QVal::q_halfpow(p, 2 * kMN) +
                  QVal::integer(p, detail::projective_count(p, d2)) *
                      QVal::q_halfpow(p, 2 * kNM + fminus + fhom);
        if (lhs != v1 || lhs != v2) {
            rep.verdict = Verdict::fail;
            rep.witness = inst.label + ": lhs=" + lhs.to_string() + " v1=" + v1.to_string() +
                          " v2=" + v2.to_string();
            break;
        }
    }
    rep.lhs = "(q^e-1)/(q-1) * q^k";
    rep.rhs = "sigma1(f+) + sigma2(f_hom) and sigma1(0) + sigma2(f- + f_hom)";
    rep.timing_us = sw.us();
    return rep;
}

// ---------------------------------------------------------------------------
// The abelian multiplication theorem (maintheorem1)
// ---------------------------------------------------------------------------

struct BaseWeights {
    // f_{eps_M} and f_{eps_N}: extension supports plus chain-pair weights.
    // The default zero bases make S vanish, the configuration used by the
    // acceptance suite.
    std::optional<std::pair<ExtClass, ChainWeightFn>> for_M;
    std::optional<std::pair<ExtClass, ChainWeightFn>> for_N;
};

/// Both displayed balanced variants of the abelian multiplication theorem,
/// on all flag types up to the given depth. LHS and RHS are computed along
/// disjoint paths (split-refinement product vs per-extension enumerations).
inline VerificationReport check_maintheorem1(const Representation& M, const Representation& N,
                                             int depth, const BaseWeights& bw = {},
                                             const std::string& label = "",
                                             const EnumerationLimits& lim = {}) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.theorem = "maintheorem1";
    rep.instance = label;
    uint32_t p = M.field().p;
    rep.p = p;
    int e = ExtSpace(M, N).ext_dim();
    if (e < 1) throw schema_error("maintheorem1 requires Ext^1(M,N) != 0");

    ChainWeightFn S = zero_weight();
    ChainWeightFn S_swapped = zero_weight();
    if (bw.for_M && bw.for_N) {
        S = transported_weight(bw.for_M->first, bw.for_M->second, bw.for_N->first,
                               bw.for_N->second);
        S_swapped = transported_weight(bw.for_N->first, bw.for_N->second, bw.for_M->first,
                                       bw.for_M->second);
    }

    std::vector<ExtClass> eps_reps = projective_ext_representatives(M, N);
    std::vector<ExtClass> eta_reps = projective_ext_representatives(N, M);
    long long pext = detail::projective_count(p, e);

    ChainWeightFn w_fplus = compose(
        [&lim](const Representation& a, const Representation& b, const Chain& c1,
               const Chain& c2) { return eval_f_ext(a, b, c1, c2, ExtSign::plus, lim); },
        S);
    ChainWeightFn w_fhom = compose(
        [&lim](const Representation& a, const Representation& b, const Chain& c1,
               const Chain& c2) { return eval_f_hom(a, b, c1, c2, lim); },
        S_swapped);
    ChainWeightFn w_fminus_fhom = compose(
        [&lim](const Representation& a, const Representation& b, const Chain& c1,
               const Chain& c2) {
            return eval_f_ext(a, b, c1, c2, ExtSign::minus, lim) +
                   eval_f_hom(a, b, c1, c2, lim);
        },
        S_swapped);

    for (const FlagType& t : all_flag_types(M.quiver()->n(), depth)) {
        QVal lhs = weighted_delta_eval(zero_ext(M, N), t, S, lim).scaled(pext);
        QVal rhs1 = QVal::zero(p);
        QVal rhs2 = QVal::zero(p);
        for (const ExtClass& eps : eps_reps) {
            rhs1 = rhs1 + weighted_delta_eval(eps, t, w_fplus, lim);
            rhs2 = rhs2 + weighted_delta_eval(eps, t, S, lim);
        }
        for (const ExtClass& eta : eta_reps) {
            rhs1 = rhs1 + weighted_delta_eval(eta, t, w_fhom, lim);
            rhs2 = rhs2 + weighted_delta_eval(eta, t, w_fminus_fhom, lim);
        }
        if (lhs != rhs1 || lhs != rhs2) {
            rep.verdict = Verdict::fail;
            rep.witness = "type " + t.key() + ": lhs=" + lhs.to_string() +
                          " rhs1=" + rhs1.to_string() + " rhs2=" + rhs2.to_string();
            rep.lhs = lhs.to_string();
            rep.rhs = rhs1.to_string() + " ; " + rhs2.to_string();
            rep.timing_us = sw.us();
            return rep;
        }
    }
    rep.lhs = "|PExt| (f_M * delta_M)(f_N * delta_N), all types depth " + std::to_string(depth);
    rep.rhs = "both balanced variants";
    rep.timing_us = sw.us();
    return rep;
}

// ---------------------------------------------------------------------------
// dim Ext = 1 delta theorem
// ---------------------------------------------------------------------------

/// delta_M * delta_N = delta_L + f_hom * f_eta * delta_{L'} when both Ext
/// spaces are one-dimensional; the left side is additionally cross-checked
/// against the plain chain count of M + N.
inline VerificationReport check_onedim_delta(const Representation& M, const Representation& N,
                                             int depth, const std::string& label = "",
                                             const EnumerationLimits& lim = {}) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.theorem = "onedim-delta";
    rep.instance = label;
    uint32_t p = M.field().p;
    rep.p = p;
    if (ExtSpace(M, N).ext_dim() != 1 || ExtSpace(N, M).ext_dim() != 1)
        throw schema_error("onedim-delta requires dim Ext(M,N) = dim Ext(N,M) = 1");

    ExtClass eps = ext_basis(M, N).front();
    ExtClass eta = ext_basis(N, M).front();
    Representation L = middle_term(eps).E;
    Representation sum = direct_sum(M, N);

    ChainWeightFn w_fhom = [&lim](const Representation& a, const Representation& b,
                                  const Chain& c1, const Chain& c2) {
        return eval_f_hom(a, b, c1, c2, lim);
    };

    for (const FlagType& t : all_flag_types(M.quiver()->n(), depth)) {
        QVal lhs = weighted_delta_eval(zero_ext(M, N), t, zero_weight(), lim);
        QVal plain = QVal::integer(p, delta_eval(sum, t, lim));
        if (lhs != plain) {
            rep.verdict = Verdict::fail;
            rep.witness = "type " + t.key() + ": q^k refinement " + lhs.to_string() +
                          " != plain chain count " + plain.to_string();
            rep.timing_us = sw.us();
            return rep;
        }
        QVal rhs = QVal::integer(p, delta_eval(L, t, lim)) +
                   weighted_delta_eval(eta, t, w_fhom, lim);
        if (lhs != rhs) {
            rep.verdict = Verdict::fail;
            rep.witness =
                "type " + t.key() + ": lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
            rep.lhs = lhs.to_string();
            rep.rhs = rhs.to_string();
            rep.timing_us = sw.us();
            return rep;
        }
    }
    rep.lhs = "delta_M * delta_N, all types depth " + std::to_string(depth);
    rep.rhs = "delta_L + f_hom * f_eta * delta_{L'}";
    rep.timing_us = sw.us();
    return rep;
}

// ---------------------------------------------------------------------------
// Hereditary exchange (solve-then-classify)
// ---------------------------------------------------------------------------

/// Computes X~_M X~_N, solves for the two-term decomposition over
/// (X~_L, X~_L'), and classifies which displayed exponent pattern the
/// scalars match. Convention-sensitive placements are reported, not presumed.
inline VerificationReport check_exchange_hereditary(const ClusterObject& M,
                                                    const ClusterObject& N,
                                                    const ClusterObject& L,
                                                    const ClusterObject& Lp, const IntMat& lambda,
                                                    const std::string& label = "",
                                                    const EnumerationLimits& lim = {}) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.theorem = "exchange-hereditary";
    rep.instance = label;
    uint32_t p = M.module_part.field().p;
    rep.p = p;
    if (hom_c_dim(M, N) != 1) throw schema_error("exchange requires hom_c_dim(M,N) = 1");

    SkewPoly XM = tilde_character(M, lambda, lim);
    SkewPoly XN = tilde_character(N, lambda, lim);
    SkewPoly XL = tilde_character(L, lambda, lim);
    SkewPoly XLp = tilde_character(Lp, lambda, lim);
    SkewPoly prod = XM * XN;
    rep.lhs = prod.canonical_string();

    auto sol = solve_two_term(prod, XL, XLp);
    if (!sol) {
        rep.verdict = Verdict::fail;
        rep.rhs = "(no two-term decomposition over X~_L, X~_L')";
        rep.witness = "solve_two_term failed";
        rep.timing_us = sw.us();
        return rep;
    }
    rep.scalars = {sol->cA.to_string(), sol->cB.to_string()};
    rep.rhs = "(" + sol->cA.to_string() + ") * X~_L + (" + sol->cB.to_string() + ") * X~_L'";

    auto pa = sol->cA.pure_v_power();
    auto pb = sol->cB.pure_v_power();
    bool pure = pa.has_value() && pb.has_value();
    rep.verdict = pure ? Verdict::pass : Verdict::fail;
    if (!pure) {
        rep.witness = "scalars are not pure v-powers";
        rep.timing_us = sw.us();
        return rep;
    }

    IndexVector iM = index_vector(M), iN = index_vector(N);
    IndexVector iL = index_vector(L), iLp = index_vector(Lp);
    long long lam_mn = skew_form(lambda, iM, iN);
    long long lam_ml = skew_form(lambda, iM, iL);
    long long lam_mlp = skew_form(lambda, iM, iLp);
    bool sec7 = (*pa == lam_mn - 1) && (*pb == lam_mn);
    bool qin = (*pa == lam_ml) && (*pb == lam_mlp);
    bool both_fd = L.is_module() && !L.is_zero() && Lp.is_module() && !Lp.is_zero();
    bool degenerate = L.is_zero() || Lp.is_zero() || both_fd;
    std::ostringstream notes;
    notes << "variant-match:";
    if (sec7) notes << " section7-form";
    if (qin) notes << " qin-form";
    if (!sec7 && !qin) notes << " none";
    if (degenerate) {
        notes << "; degenerate:";
        if (L.is_zero()) notes << " L=0";
        if (Lp.is_zero()) notes << " L'=0";
        if (both_fd) notes << " both-in-fundamental-domain";
        if (rep.verdict == Verdict::pass) rep.verdict = Verdict::degenerate;
    }
    rep.notes = notes.str();
    rep.timing_us = sw.us();
    return rep;
}

// ---------------------------------------------------------------------------
// Exponent identity (qinformula), solve-then-classify on the sign variants
// ---------------------------------------------------------------------------

struct ExponentIdentityInstance {
    ClusterObject M;
    ClusterObject N;
    IntMat lambda;
    std::vector<long long> D;
    std::string label;
};

/// lambda(p(M,e), p(N,f)) against lambda(ind M, ind N) plus Euler-form terms,
/// for every submodule dimension pair. The asserted variant carries the signs
/// forced by the pinned p/ind/coind/Lambda conventions; the mirrored variant
/// (roles of (M,e) and (N,f) swapped) is evaluated alongside and reported.
inline VerificationReport check_exponent_identity(
    const std::vector<ExponentIdentityInstance>& instances, const EnumerationLimits& lim = {}) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.theorem = "exponent-identity";
    rep.instance = std::to_string(instances.size()) + " module pairs";
    if (!instances.empty()) rep.p = instances.front().M.module_part.field().p;
    bool mirrored_everywhere = true;
    long long pairs_checked = 0;
    for (const ExponentIdentityInstance& inst : instances) {
        const Quiver& Q = *inst.M.module_part.quiver();
        IntMat E = Q.euler_matrix();
        IndexVector iM = index_vector(inst.M), iN = index_vector(inst.N);
        long long lam_ind = skew_form(inst.lambda, iM, iN);
        DimVector m = inst.M.module_part.dims(), n = inst.N.module_part.dims();
        auto euler = [&](const DimVector& x, const DimVector& y) {
            long long s = 0;
            for (int i = 0; i < Q.n(); ++i)
                for (int j = 0; j < Q.n(); ++j) s += static_cast<long long>(x[i]) * E[i][j] * y[j];
            return s;
        };
        auto euler_d = [&](const DimVector& x, const DimVector& y) {
            // <x,y> with the left slot weighted by D (valued form)
            long long s = 0;
            for (int i = 0; i < Q.n(); ++i)
                for (int j = 0; j < Q.n(); ++j)
                    s += inst.D[i] * static_cast<long long>(x[i]) * E[i][j] * y[j];
            return s;
        };
        for (const DimVector& e : all_subdim_vectors(inst.M.module_part)) {
            if (grassmannian_count(inst.M.module_part, e, lim) == 0) continue;
            for (const DimVector& f : all_subdim_vectors(inst.N.module_part)) {
                if (grassmannian_count(inst.N.module_part, f, lim) == 0) continue;
                IndexVector pm = exponent_p(inst.M, e), pn = exponent_p(inst.N, f);
                long long lhs = skew_form(inst.lambda, pm, pn);
                // resolved variant: lam + <e,n>_D - <f,m>_D + <f,e>_D - <e,f>_D
                long long resolved =
                    lam_ind + euler_d(e, n) - euler_d(f, m) + euler_d(f, e) - euler_d(e, f);
                // mirrored variant: lam + <f,m> - <e,n> + <e,f> - <f,e>
                long long mirrored =
                    lam_ind + euler(f, m) - euler(e, n) + euler(e, f) - euler(f, e);
                if (lhs != resolved) {
                    rep.verdict = Verdict::fail;
                    rep.witness = inst.label + " e/f pair: lambda(p,p)=" + std::to_string(lhs) +
                                  " resolved-rhs=" + std::to_string(resolved);
                    rep.timing_us = sw.us();
                    return rep;
                }
                if (lhs != mirrored) mirrored_everywhere = false;
                ++pairs_checked;
            }
        }
    }
    rep.lhs = "lambda(p(M,e), p(N,f))";
    rep.rhs = "lambda(ind M, ind N) + <e,n> - <f,m> + <f,e> - <e,f> (D-weighted)";
    rep.notes = std::to_string(pairs_checked) + " (e,f) pairs; mirrored-sign variant " +
                (mirrored_everywhere ? "also holds" : "differs");
    rep.timing_us = sw.us();
    return rep;
}

// ---------------------------------------------------------------------------
// Scaling invariance of weighted delta characters
// ---------------------------------------------------------------------------

/// f_{eps}*delta_L = f_{c eps}*delta_L for every nonzero scalar c.
inline VerificationReport check_scaling_invariance(const Representation& M,
                                                   const Representation& N, int depth,
                                                   const std::string& label = "",
                                                   const EnumerationLimits& lim = {}) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.theorem = "scaling-invariance";
    rep.instance = label;
    uint32_t p = M.field().p;
    rep.p = p;
    std::vector<ExtClass> basis = ext_basis(M, N);
    ExtSpace es(M, N);
    for (const ExtClass& eps : basis) {
        for (uint32_t c = 2; c < p; ++c) {
            ExtClass scaled = es.normalize(ext_scale(eps, c));
            for (const FlagType& t : all_flag_types(M.quiver()->n(), depth)) {
                QVal a = weighted_delta_eval(eps, t, zero_weight(), lim);
                QVal b = weighted_delta_eval(scaled, t, zero_weight(), lim);
                if (a != b) {
                    rep.verdict = Verdict::fail;
                    rep.witness = "type " + t.key() + " scalar " + std::to_string(c) + ": " +
                                  a.to_string() + " != " + b.to_string();
                    rep.timing_us = sw.us();
                    return rep;
                }
            }
        }
        // middle terms of scaled classes stay isomorphic
        for (uint32_t c = 2; c < p; ++c) {
            ExtClass scaled = es.normalize(ext_scale(eps, c));
            if (!is_isomorphic(middle_term(eps).E, middle_term(scaled).E)) {
                rep.verdict = Verdict::fail;
                rep.witness = "mt(eps) not isomorphic to mt(" + std::to_string(c) + " eps)";
                rep.timing_us = sw.us();
                return rep;
            }
        }
    }
    rep.lhs = "f_eps * delta";
    rep.rhs = "f_{c eps} * delta (all nonzero c)";
    rep.notes = "p = " + std::to_string(p) + (p == 2 ? " (scaling trivial, mt checks only)" : "");
    rep.timing_us = sw.us();
    return rep;
}

} // namespace qcchar
