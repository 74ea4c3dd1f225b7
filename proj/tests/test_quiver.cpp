#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qcchar/hereditary.hpp"

using namespace qcchar;

namespace {
QuiverPtr a2() { return std::make_shared<Quiver>(2, std::vector<Arrow>{{"a", 0, 1}}); }
QuiverPtr a3() {
    return std::make_shared<Quiver>(3, std::vector<Arrow>{{"a", 0, 1}, {"b", 1, 2}});
}
QuiverPtr k2() {
    return std::make_shared<Quiver>(2, std::vector<Arrow>{{"a", 0, 1}, {"b", 0, 1}});
}
QuiverPtr preproj_a2() {
    return std::make_shared<Quiver>(2, std::vector<Arrow>{{"a", 0, 1}, {"abar", 1, 0}},
                                    std::vector<Relation>{{{1, "a", "abar"}},
                                                          {{1, "abar", "a"}}});
}
} // namespace

TEST_CASE("quiver validation") {
    CHECK(a2()->is_acyclic());
    CHECK_FALSE(preproj_a2()->is_acyclic());
    CHECK_THROWS_AS(Quiver(2, {{"a", 0, 1}},
                           std::vector<Relation>{{{1, "a", "nope"}}}),
                    schema_error);
    // non-composable relation path
    CHECK_THROWS_AS(Quiver(2, {{"a", 0, 1}}, std::vector<Relation>{{{1, "a", "a"}}}),
                    schema_error);
    // duplicate ids
    CHECK_THROWS_AS(Quiver(2, {{"a", 0, 1}, {"a", 1, 0}}), schema_error);
}

TEST_CASE("Euler matrices") {
    auto E = a2()->euler_matrix();
    CHECK(E == IntMat{{1, -1}, {0, 1}});
    CHECK(k2()->euler_matrix() == IntMat{{1, -2}, {0, 1}});
    Quiver lonely(3, {});
    CHECK(lonely.euler_matrix() == int_identity(3));
    CHECK_THROWS_AS(preproj_a2()->euler_matrix(), schema_error);
}

TEST_CASE("Euler form oracle: dim Hom - dim Ext = d^T E e") {
    std::mt19937_64 rng(11);
    for (uint32_t p : {2u, 3u}) {
        PrimeField f(p);
        for (QuiverPtr q : {a2(), a3(), k2()}) {
            for (int trial = 0; trial < 8; ++trial) {
                auto rand_rep = [&]() {
                    DimVector dims(q->n());
                    for (int v = 0; v < q->n(); ++v) dims[v] = static_cast<int>(rng() % 3);
                    std::vector<FMatrix> mats;
                    for (const Arrow& a : q->arrows()) {
                        FMatrix m(f, dims[a.target], dims[a.source]);
                        for (int r = 0; r < m.rows(); ++r)
                            for (int c = 0; c < m.cols(); ++c)
                                m(r, c) = static_cast<uint32_t>(rng() % p);
                        mats.push_back(std::move(m));
                    }
                    return Representation(q, f, dims, mats);
                };
                Representation M = rand_rep(), N = rand_rep();
                long long lhs = hom_dim(M, N) - ExtSpace(M, N).ext_dim();
                CHECK(lhs == q->euler_form(M.dims(), N.dims()));
            }
        }
    }
}

TEST_CASE("btilde") {
    CHECK(a2()->btilde() == IntMat{{0, 1}, {-1, 0}});
    CHECK(k2()->btilde() == IntMat{{0, 2}, {-2, 0}});
    Quiver lonely(2, {});
    CHECK(lonely.btilde() == IntMat{{0, 0}, {0, 0}});
    // antisymmetrization of -E
    auto E = a3()->euler_matrix();
    auto B = a3()->btilde();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(B[i][j] == E[j][i] - E[i][j]);
            CHECK(B[i][j] == -B[j][i]);
        }
}

TEST_CASE("compatible lambda") {
    IntMat L = compatible_lambda(a2()->btilde(), {1, 1});
    CHECK(L == IntMat{{0, 1}, {-1, 0}});
    // Lambda * (-Btilde) = D exactly
    IntMat mb = {{0, -1}, {1, 0}};
    CHECK(int_mul(L, mb) == int_identity(2));

    CHECK_THROWS_AS(compatible_lambda(a3()->btilde(), {1, 1, 1}), lambda_error);
    try {
        compatible_lambda(a3()->btilde(), {1, 1, 1});
    } catch (const lambda_error& e) {
        CHECK(e.kind == lambda_fail::singular);
    }

    IntMat Lk = compatible_lambda(k2()->btilde(), {2, 2});
    CHECK(Lk == IntMat{{0, 1}, {-1, 0}});
    try {
        compatible_lambda(k2()->btilde(), {1, 1});
        FAIL("expected non-integral");
    } catch (const lambda_error& e) {
        CHECK(e.kind == lambda_fail::non_integral);
    }
}
