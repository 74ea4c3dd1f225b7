#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qcchar/weights.hpp"

using namespace qcchar;

namespace {
PrimeField f2(2);
QuiverPtr preproj_a2() {
    return std::make_shared<Quiver>(2, std::vector<Arrow>{{"a", 0, 1}, {"abar", 1, 0}},
                                    std::vector<Relation>{{{1, "a", "abar"}},
                                                          {{1, "abar", "a"}}});
}
QuiverPtr a2() { return std::make_shared<Quiver>(2, std::vector<Arrow>{{"a", 0, 1}}); }

struct PreprojPair {
    Representation S1, S2;
    Chain cM, cN;
    FlagType t;
};

PreprojPair canonical_pair() {
    auto q = preproj_a2();
    PreprojPair pp{simple(q, f2, 0), simple(q, f2, 1), {}, {}, {{0, 1}, {1, 1}}};
    auto eb = ext_basis(pp.S1, pp.S2);
    MiddleTerm mt = middle_term(eb[0]);
    auto chains = chains_of_type(mt.E, pp.t);
    auto [cM, cN] = chain_image(mt, chains[0]);
    pp.cM = cM;
    pp.cN = cN;
    return pp;
}
} // namespace

TEST_CASE("f_hom on the canonical preprojective pair") {
    PreprojPair pp = canonical_pair();
    CHECK(eval_f_hom(pp.S2, pp.S1, pp.cN, pp.cM) == 0);
    // symmetric arguments vanish
    Representation zero(preproj_a2(), f2, {0, 0});
    Chain empty = trivial_chain(zero);
    CHECK(eval_f_hom(zero, zero, empty, empty) == 0);
}

TEST_CASE("f_ext plus/minus on the canonical pair") {
    PreprojPair pp = canonical_pair();
    // every eps is compatible with this pair: f- = 1 unit, f+ = 0
    CHECK(eval_f_ext(pp.S2, pp.S1, pp.cN, pp.cM, ExtSign::minus) == 2);
    CHECK(eval_f_ext(pp.S1, pp.S2, pp.cM, pp.cN, ExtSign::plus) == 0);
}

TEST_CASE("complement pair: no compatible nonzero eps") {
    // chains (full S1 chain with a=(1,0)... ) paired so that only 0 fits:
    // take cM of type ((1,2),(0,1))-style mismatch by swapping roles.
    auto q = preproj_a2();
    Representation S1 = simple(q, f2, 0), S2 = simple(q, f2, 1);
    // cM' : chain of S1 of type ((1,2),(0,1))? S1 has no S2 factor, so use
    // the opposite split: cM of type (i,(0,1)) is impossible; instead check
    // the eta-side pair (cN, cM) against Ext(S2,S1) where only 0
    // is compatible exactly when the eps side is full.
    PreprojPair pp = canonical_pair();
    int d_eta = compat_eps_dim_chains(S2, S1, pp.cN, pp.cM);
    int d_eps = compat_eps_dim_chains(S1, S2, pp.cM, pp.cN);
    CHECK(d_eps == 1);
    CHECK(d_eta == 0);
    CHECK(d_eps + d_eta == ExtSpace(S1, S2).ext_dim());
}

TEST_CASE("orthogonality dimension sum across a type sweep") {
    auto q = preproj_a2();
    Representation S1 = simple(q, f2, 0), S2 = simple(q, f2, 1);
    int e = ExtSpace(S1, S2).ext_dim();
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2) {
            FlagType t{{i1, i2}, {1, 1}};
            for (auto& [ap, app] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
                     {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, {{1, 1}, {0, 0}}, {{0, 0}, {1, 1}}}) {
                FlagType tm{t.i, ap}, tn{t.i, app};
                for (const Chain& cM : chains_of_type(S1, tm))
                    for (const Chain& cN : chains_of_type(S2, tn)) {
                        int d1 = compat_eps_dim_chains(S1, S2, cM, cN);
                        int d2 = compat_eps_dim_chains(S2, S1, cN, cM);
                        CHECK(d1 + d2 == e);
                    }
            }
        }
}

TEST_CASE("l_dim") {
    auto q = a2();
    Representation S1 = simple(q, f2, 0);
    CHECK(eval_l_dim(S1, zero_family(S1), S1, zero_family(S1)) == 0);
    CHECK(eval_l_dim(S1, full_family(S1), S1, full_family(S1)) == 0);
    CHECK(eval_l_dim(S1, full_family(S1), S1, zero_family(S1)) == 2);
}

TEST_CASE("g weights on A2") {
    auto q = a2();
    Representation S1 = simple(q, f2, 0), S2 = simple(q, f2, 1);
    IntMat L = compatible_lambda(q->btilde(), {1, 1});
    GWeightContext gc{ClusterObject::module(S1), ClusterObject::module(S2), zero_family(S1),
                      zero_family(S2), L};
    CHECK(eval_g(GWeightName::g_skew, gc) == 2); // lambda = 1 in half-units: 2
    CHECK(eval_g(GWeightName::g_MN, gc) == 1);   // 1/2 - 0
    Representation P1 = projective(q, f2, 0).rep;
    GWeightContext gs{ClusterObject::module(S1), ClusterObject::module(P1), zero_family(S1),
                      zero_family(P1), L};
    CHECK(eval_g(GWeightName::g_sigma, gs) == 0);

    // g+- split the 2-CY Hom space: on (S1, S2) full/full the eps side fills it
    GWeightContext gfull{ClusterObject::module(S1), ClusterObject::module(S2), full_family(S1),
                         full_family(S2), L};
    CHECK(eval_g(GWeightName::g_minus_ext, gfull) == 2);
    CHECK(eval_g(GWeightName::g_plus_ext, gfull) == 0);
    // on (S1 full, 0) nothing in the eps direction is compatible
    GWeightContext gnone{ClusterObject::module(S1), ClusterObject::module(S2), full_family(S1),
                         zero_family(S2), L};
    CHECK(eval_g(GWeightName::g_minus_ext, gnone) == 0);
    CHECK(eval_g(GWeightName::g_plus_ext, gnone) == 2);
}

TEST_CASE("2-CY orthogonality sum over all submodule pairs") {
    auto q = a2();
    Representation S1 = simple(q, f2, 0), S2 = simple(q, f2, 1);
    IntMat L = compatible_lambda(q->btilde(), {1, 1});
    ClusterObject cM = ClusterObject::module(S1), cN = ClusterObject::module(S2);
    int hom_c = hom_c_dim(cM, cN);
    for (const DimVector& e : all_subdim_vectors(S1))
        for (const SubspaceFamily& M0 : submodules_of_dim(S1, e))
            for (const DimVector& fdim : all_subdim_vectors(S2))
                for (const SubspaceFamily& N0 : submodules_of_dim(S2, fdim)) {
                    GWeightContext g{cM, cN, M0, N0, L};
                    int minus = eval_g(GWeightName::g_minus_ext, g) / 2;
                    int plus = eval_g(GWeightName::g_plus_ext, g) / 2;
                    CHECK(minus + plus == hom_c);
                }
}

TEST_CASE("compose is pointwise addition and commutes") {
    PreprojPair pp = canonical_pair();
    ChainWeightFn fhom = [](const Representation& a, const Representation& b, const Chain& c1,
                            const Chain& c2) { return eval_f_hom(a, b, c1, c2); };
    ChainWeightFn fminus = [](const Representation& a, const Representation& b, const Chain& c1,
                              const Chain& c2) {
        return eval_f_ext(a, b, c1, c2, ExtSign::minus);
    };
    int v1 = compose(fhom, fminus)(pp.S2, pp.S1, pp.cN, pp.cM);
    int v2 = compose(fminus, fhom)(pp.S2, pp.S1, pp.cN, pp.cM);
    CHECK(v1 == 2); // 0 + 1 unit
    CHECK(v1 == v2);
    CHECK(compose(zero_weight(), fhom)(pp.S2, pp.S1, pp.cN, pp.cM) ==
          fhom(pp.S2, pp.S1, pp.cN, pp.cM));
}

TEST_CASE("user table weights") {
    PreprojPair pp = canonical_pair();
    std::map<std::string, int> table;
    table[pp.cM.key() + "|" + pp.cN.key()] = 3; // 3/2 units
    ChainWeightFn w = user_table_weight(table);
    CHECK(w(pp.S1, pp.S2, pp.cM, pp.cN) == 3);
    CHECK(w(pp.S1, pp.S2, pp.cN, pp.cM) == 0);
}

TEST_CASE("weighted delta eval basics") {
    auto q = preproj_a2();
    Representation S1 = simple(q, f2, 0), S2 = simple(q, f2, 1);
    FlagType t{{0, 1}, {1, 1}};
    QVal v = weighted_delta_eval(zero_ext(S1, S2), t, zero_weight());
    CHECK(v == QVal::integer(2, 1));
    // against the iso-checked overload
    QVal v2 = weighted_delta_eval(direct_sum(S2, S1), t, zero_ext(S1, S2), zero_weight());
    CHECK(v2 == v);
    CHECK_THROWS_AS(weighted_delta_eval(S1, t, zero_ext(S1, S2), zero_weight()), schema_error);
    // empty type on the zero module counts one empty chain
    Representation zero(q, f2, {0, 0});
    FlagType t0{{0}, {0}};
    CHECK(delta_eval(zero, t0) == 1);
}

TEST_CASE("projectivized representatives") {
    auto q = preproj_a2();
    PrimeField f3(3);
    Representation S1 = simple(q, f3, 0), S2 = simple(q, f3, 1);
    // 1-dim space over F3: (3-1)/(3-1)... one line
    CHECK(projective_ext_representatives(S1, S2).size() == 1);
    // 2-dim space: (9-1)/2 = 4 lines
    Representation M = direct_sum(S1, S2);
    CHECK(ExtSpace(M, M).ext_dim() == 2);
    CHECK(projective_ext_representatives(M, M).size() == 4);
}
