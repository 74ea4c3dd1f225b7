#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qcchar/catalog.hpp"
#include "qcchar/weights.hpp"

using namespace qcchar;

namespace {
PrimeField f2(2);
}

TEST_CASE("index and coindex on A2") {
    Catalog cat(2);
    auto q = cat.quiver("a2");
    auto S1 = ClusterObject::module(cat.object("a2/s1"));
    auto S2 = ClusterObject::module(cat.object("a2/s2"));
    auto P1 = ClusterObject::module(cat.object("a2/p1"));
    CHECK(coindex(S1) == IndexVector{1, 0});
    CHECK(coindex(P1) == IndexVector{0, 1});
    CHECK(index_vector(S1) == IndexVector{1, -1});
    CHECK(index_vector(S2) == IndexVector{0, 1});
    auto sp1 = ClusterObject::shifted_projective(q, f2, 0);
    auto sp2 = ClusterObject::shifted_projective(q, f2, 1);
    CHECK(coindex(sp1) == IndexVector{-1, 0});
    CHECK(index_vector(sp1) == IndexVector{1, 0});
    CHECK(index_vector(sp2) == IndexVector{0, 1});
    // additivity over direct sums
    ClusterObject sum{direct_sum(cat.object("a2/s1"), cat.object("a2/p1")), {0, 1}};
    IndexVector want = index_vector(S1);
    IndexVector ip = index_vector(P1);
    for (size_t i = 0; i < want.size(); ++i) want[i] += ip[i] + (i == 1 ? 1 : 0);
    CHECK(index_vector(sum) == want);
}

TEST_CASE("exponent vectors") {
    Catalog cat(2);
    auto S1 = ClusterObject::module(cat.object("a2/s1"));
    CHECK(exponent_p(S1, {0, 0}) == IndexVector{-1, 0});
    CHECK(exponent_p(S1, {1, 0}) == IndexVector{-1, 1});
    auto sp1 = ClusterObject::shifted_projective(cat.quiver("a2"), f2, 0);
    CHECK(exponent_p(sp1, {0, 0}) == IndexVector{1, 0});
}

TEST_CASE("degree additivity p(M,e) + p(N,f) = p(L,g) on refined triples") {
    Catalog cat(2);
    const Representation& S1 = cat.object("a2/s1");
    const Representation& S2 = cat.object("a2/s2");
    auto eb = ext_basis(S1, S2);
    MiddleTerm mt = middle_term(eb[0]);
    ClusterObject cL = ClusterObject::module(mt.E);
    ClusterObject cM = ClusterObject::module(S1), cN = ClusterObject::module(S2);
    for (const DimVector& e : all_subdim_vectors(S1))
        for (const SubspaceFamily& M0 : submodules_of_dim(S1, e))
            for (const DimVector& fd : all_subdim_vectors(S2))
                for (const SubspaceFamily& N0 : submodules_of_dim(S2, fd))
                    for (const SubspaceFamily& L0 :
                         refined_fiber(RefinedFiberQuery{eb[0], M0, N0})) {
                        IndexVector pm = exponent_p(cM, e), pn = exponent_p(cN, fd);
                        IndexVector pl = exponent_p(cL, family_dims(L0));
                        for (size_t i = 0; i < pm.size(); ++i)
                            CHECK(pm[i] + pn[i] == pl[i]);
                    }
}

TEST_CASE("tilde characters on A2") {
    Catalog cat(2);
    IntMat L = cat.lambda_for("a2");
    auto S1 = ClusterObject::module(cat.object("a2/s1"));
    auto P1 = ClusterObject::module(cat.object("a2/p1"));
    CHECK(tilde_character(S1, L).canonical_string() == "x^(-1,0) + x^(-1,1)");
    CHECK(tilde_character(P1, L).canonical_string() ==
          "x^(-1,-1) + x^(-1,0) + x^(0,-1)");
}

TEST_CASE("X_{Sigma P_i} = x_i for A2, A3, K2") {
    Catalog cat(2);
    for (const std::string qn : {"a2", "a3", "k2"}) {
        QuiverPtr q = cat.quiver(qn);
        IntMat L = cat.lambda_for(qn);
        for (int i = 0; i < q->n(); ++i) {
            auto sp = ClusterObject::shifted_projective(q, f2, i);
            SkewPoly want(L);
            SkewPoly::Exp e(q->n(), 0);
            e[i] = 1;
            want.add_term(e, VLaurent::one());
            CHECK(x_character(sp, L) == want);
            CHECK(tilde_character(sp, L) == want);
        }
    }
}

TEST_CASE("multiplication at eps = 0: X_M X_N = g_MN * X_{M+N}") {
    Catalog cat(2);
    for (auto& [qn, mname, nname] :
         std::vector<std::tuple<std::string, std::string, std::string>>{
             {"a2", "a2/s1", "a2/s2"},
             {"a2", "a2/p1", "a2/s2"},
             {"k2", "k2/s1", "k2/m12"}}) {
        IntMat L = cat.lambda_for(qn);
        const Representation& M = cat.object(mname);
        const Representation& N = cat.object(nname);
        ClusterObject cM = ClusterObject::module(M), cN = ClusterObject::module(N);
        SkewPoly lhs = x_character(cM, L) * x_character(cN, L);

        // right side: sum over submodule pairs of q^{l + g_MN} X^{p(M+N,g)},
        // assembled through the refined fibers of the split class
        Representation sum = direct_sum(N, M); // mt(0_{MN}) ordering: N first
        ClusterObject cSum = ClusterObject::module(sum);
        SkewPoly rhs(L);
        for (const DimVector& e : all_subdim_vectors(M))
            for (const SubspaceFamily& M0 : submodules_of_dim(M, e))
                for (const DimVector& fd : all_subdim_vectors(N))
                    for (const SubspaceFamily& N0 : submodules_of_dim(N, fd)) {
                        auto fib = refined_fiber(RefinedFiberQuery{zero_ext(M, N), M0, N0});
                        REQUIRE(!fib.empty());
                        GWeightContext g{cM, cN, M0, N0, L};
                        int l = fiber_law_exponent(M, M0, N, N0);
                        int w = eval_g(GWeightName::g_MN, g);
                        DimVector gdim = family_dims(fib.front());
                        // q^{l + w/2} enters as the formal v-power v^{2l + w}
                        int halfunits = 2 * l + w;
                        rhs.add_term(exponent_p(cSum, gdim), VLaurent::term(halfunits, 1));
                    }
        // the v-power bookkeeping above stays formal (v^{2k} twists), while
        // the left side carries integer counts; compare after v^2 -> p
        bool equal = true;
        std::map<SkewPoly::Exp, QVal> l_red, r_red;
        for (auto& [e, c] : lhs.terms()) l_red.emplace(e, reduce_vlaurent(c, 2));
        for (auto& [e, c] : rhs.terms()) r_red.emplace(e, reduce_vlaurent(c, 2));
        for (auto& [e, c] : l_red) {
            auto it = r_red.find(e);
            if (it == r_red.end() || !(it->second == c)) equal = false;
        }
        CHECK(equal);
        CHECK(l_red.size() == r_red.size());
    }
}

TEST_CASE("hom_c_dim") {
    Catalog cat(2);
    auto q = cat.quiver("a2");
    auto S1 = ClusterObject::module(cat.object("a2/s1"));
    auto S2 = ClusterObject::module(cat.object("a2/s2"));
    auto P1 = ClusterObject::module(cat.object("a2/p1"));
    CHECK(hom_c_dim(S1, S2) == 1);
    CHECK(hom_c_dim(P1, P1) == 0);
    auto M12 = ClusterObject::module(cat.object("a3/m12"));
    auto S3 = ClusterObject::module(cat.object("a3/s3"));
    CHECK(hom_c_dim(M12, S3) == 1);
    // Sigma P against modules: Hom_C(SP_i, Sigma Y) = dim Y_i
    auto sp1 = ClusterObject::shifted_projective(q, f2, 0);
    CHECK(hom_c_dim(sp1, P1) == 1);
    CHECK(hom_c_dim(P1, sp1) == 1);
    CHECK(hom_c_dim(sp1, sp1) == 0);
}

TEST_CASE("cone module part from tau-level data") {
    Catalog cat(2);
    PrimeField f(2);
    QuiverPtr a3 = cat.quiver("a3");
    // mixed map of the (S3, M12) pair: F eps : S3 -> tau(M12) = M23, the
    // socle inclusion; the cone's module part is S1 = W' with V = 0, P = 0
    const Representation& S3 = cat.object("a3/s3");
    const Representation& M23 = cat.object("a3/m23");
    const Representation& S1 = cat.object("a3/s1");
    Morphism feps = zero_morphism(S3, M23);
    feps.comps[2](0, 0) = 1;
    Representation part = cone_module_part(S3, feps, M23, S1, DimVector{0, 0, 0});
    CHECK(is_isomorphic(part, S1));

    // A2 pair (S2, S1): F eta : S2 -> tau(S1) = S2 is an isomorphism and the
    // cone vanishes
    QuiverPtr a2 = cat.quiver("a2");
    const Representation& S2a = cat.object("a2/s2");
    Morphism id2 = identity_morphism(S2a);
    Representation zero(a2, f, {0, 0});
    Representation part2 = cone_module_part(S2a, id2, S2a, zero, DimVector{0, 0});
    CHECK(part2.total_dim() == 0);

    // handing it inconsistent tau-data must fail loudly
    CHECK_THROWS_AS(cone_module_part(S3, feps, M23, cat.object("a3/s2"), DimVector{0, 0, 0}),
                    schema_error);
}

TEST_CASE("delta evaluations") {
    Catalog cat(2);
    const Representation& S1 = cat.object("preproj-a2/s1");
    const Representation& S2 = cat.object("preproj-a2/s2");
    FlagType t{{0, 1}, {1, 1}};
    CHECK(delta_eval(direct_sum(S1, S2), t) == 1);
    Representation zero(cat.quiver("preproj-a2"), f2, {0, 0});
    FlagType t0{{0}, {0}};
    CHECK(delta_eval(zero, t0) == 1);
    QVal v = weighted_delta_eval(zero_ext(S1, S2), t, zero_weight());
    CHECK(v == QVal::integer(2, 1));
}
