#pragma once

#include <random>

#include "qcchar/catalog.hpp"
#include "qcchar/verify.hpp"

namespace qcchar {

/// Randomized refined-fiber instances over A2/A3/K2, seeded, preceded by the
/// hand-derived instances.
inline std::vector<FiberLawInstance> fiber_law_suite(const Catalog& cat, int count,
                                                     uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<FiberLawInstance> out;
    std::vector<std::string> quivers = {"a2", "a3", "k2"};
    PrimeField f = cat.field();
    {
        QuiverPtr a2 = cat.quiver("a2");
        Representation S1 = simple(a2, f, 0), S2 = simple(a2, f, 1);
        auto eb = ext_basis(S1, S2);
        out.push_back({{eb[0], full_family(S1), full_family(S2)}, "a2 eps!=0 full/full"});
        out.push_back({{eb[0], full_family(S1), zero_family(S2)}, "a2 eps!=0 full/zero"});
        out.push_back({{zero_ext(S1, S1), full_family(S1), zero_family(S1)}, "a2 split S1+S1"});
    }
    while (static_cast<int>(out.size()) < count) {
        const std::string& qn = quivers[rng() % quivers.size()];
        QuiverPtr q = cat.quiver(qn);
        auto rand_rep = [&](int maxd) {
            DimVector dims(q->n());
            for (int v = 0; v < q->n(); ++v) dims[v] = static_cast<int>(rng() % (maxd + 1));
            std::vector<FMatrix> mats;
            for (const Arrow& a : q->arrows()) {
                FMatrix m(f, dims[a.target], dims[a.source]);
                for (int r = 0; r < m.rows(); ++r)
                    for (int c = 0; c < m.cols(); ++c)
                        m(r, c) = static_cast<uint32_t>(rng() % f.p);
                mats.push_back(std::move(m));
            }
            return Representation(q, f, dims, mats);
        };
        Representation M = rand_rep(2), N = rand_rep(2);
        ExtSpace es(M, N);
        auto basis = es.basis();
        FVector coeff(basis.size());
        for (auto& c : coeff) c = static_cast<uint32_t>(rng() % f.p);
        ExtClass eps = basis.empty() ? zero_ext(M, N) : es.from_coefficients(basis, coeff);
        auto pick_family = [&](const Representation& R) {
            auto gs = all_subdim_vectors(R);
            for (int tries = 0; tries < 20; ++tries) {
                const DimVector& g = gs[rng() % gs.size()];
                auto subs = submodules_of_dim(R, g);
                if (!subs.empty()) return subs[rng() % subs.size()];
            }
            return zero_family(R);
        };
        out.push_back({{eps, pick_family(M), pick_family(N)},
                       qn + " random #" + std::to_string(out.size())});
    }
    return out;
}

/// Full chain-pair sweep over the preprojective-A2 module set up to the
/// given flag-type depth.
inline std::vector<ChainPairInstance> balance_suite(const Catalog& cat, int depth) {
    std::vector<ChainPairInstance> out;
    std::vector<std::string> names = {"preproj-a2/s1", "preproj-a2/s2", "preproj-a2/b1",
                                      "preproj-a2/b2"};
    for (const std::string& mn : names)
        for (const std::string& nn : names) {
            const Representation& M = cat.object(mn);
            const Representation& N = cat.object(nn);
            for (const FlagType& t : all_flag_types(2, depth))
                for (auto& [ap, app] : type_splits(t.a)) {
                    FlagType tm{t.i, ap}, tn{t.i, app};
                    for (const Chain& cM : chains_of_type(M, tm))
                        for (const Chain& cN : chains_of_type(N, tn))
                            out.push_back({M, N, cM, cN,
                                           mn + "|" + nn + "|" + t.key() + "#" +
                                               std::to_string(out.size())});
                }
        }
    return out;
}

/// Module pairs for the exponent identity. A2 and K2 carry fully compatible
/// (Lambda, D) pairs, so all catalog pairs go in. Linear A3 admits no
/// compatible Lambda (odd rank); the block form closes exactly on pairs whose
/// dimension data satisfies m1 - m2 + m3 = 0 / n1 - n2 + n3 = 0 where vertex-3
/// support occurs, and the curated list below stays inside that reach.
inline std::vector<ExponentIdentityInstance> exponent_suite(const Catalog& cat) {
    std::vector<ExponentIdentityInstance> out;
    auto add = [&](const std::string& qn, const std::string& mn, const std::string& nn) {
        out.push_back({ClusterObject::module(cat.object(mn)),
                       ClusterObject::module(cat.object(nn)), cat.lambda_for(qn),
                       cat.d_for(qn), mn + "|" + nn});
    };
    std::vector<std::string> a2names = {"a2/s1", "a2/s2", "a2/p1"};
    for (auto& m : a2names)
        for (auto& n : a2names) add("a2", m, n);
    std::vector<std::string> k2names = {"k2/s1", "k2/s2", "k2/p1", "k2/m12"};
    for (auto& m : k2names)
        for (auto& n : k2names) add("k2", m, n);
    std::vector<std::string> a3flat = {"a3/s1", "a3/s2", "a3/m12"};
    for (auto& m : a3flat)
        for (auto& n : a3flat) add("a3", m, n);
    add("a3", "a3/m12", "a3/s3");
    add("a3", "a3/s3", "a3/m12");
    add("a3", "a3/p2", "a3/p2");
    add("a3", "a3/m12", "a3/p2");
    add("a3", "a3/p2", "a3/m12");
    return out;
}

} // namespace qcchar
