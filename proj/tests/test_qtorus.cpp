#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qcchar/qtorus.hpp"
#include "qcchar/qval.hpp"

using namespace qcchar;

namespace {
const IntMat L = {{0, 1}, {-1, 0}};
SkewPoly X(long long a, long long b) { return SkewPoly::monomial(L, {a, b}); }
} // namespace

TEST_CASE("monomial multiplication rule") {
    CHECK((X(1, 0) * X(0, 1)).canonical_string() == "v * x^(1,1)");
    CHECK((X(0, 1) * X(1, 0)).canonical_string() == "v^-1 * x^(1,1)");
    CHECK((X(2, 3) * SkewPoly::unit(L)).canonical_string() == "x^(2,3)");
}

TEST_CASE("monomial commutation X^e X^f = v^{2 lambda} X^f X^e") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        long long e1 = static_cast<long long>(rng() % 7) - 3;
        long long e2 = static_cast<long long>(rng() % 7) - 3;
        long long f1 = static_cast<long long>(rng() % 7) - 3;
        long long f2 = static_cast<long long>(rng() % 7) - 3;
        SkewPoly lhs = X(e1, e2) * X(f1, f2);
        long long lam = skew_form(L, {e1, e2}, {f1, f2});
        SkewPoly rhs = (X(f1, f2) * X(e1, e2)).scale_vpow(static_cast<int>(2 * lam));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("associativity on randomized triples") {
    std::mt19937_64 rng(9);
    auto rand_poly = [&]() {
        SkewPoly s(L);
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            SkewPoly::Exp e = {static_cast<long long>(rng() % 5) - 2,
                               static_cast<long long>(rng() % 5) - 2};
            s.add_term(e, VLaurent::term(static_cast<int>(rng() % 5) - 2,
                                         static_cast<long long>(rng() % 4) + 1));
        }
        return s;
    };
    for (int trial = 0; trial < 15; ++trial) {
        SkewPoly A = rand_poly(), B = rand_poly(), C = rand_poly();
        CHECK(((A * B) * C) == (A * (B * C)));
        CHECK((A.scale_vpow(3) * B) == (A * B).scale_vpow(3));
        CHECK(A.scale_vpow(1).scale_vpow(-1) == A);
        CHECK((A + SkewPoly(L)) == A);
    }
}

TEST_CASE("canonical strings") {
    SkewPoly s = SkewPoly::monomial(L, {-1, 0}) + SkewPoly::monomial(L, {-1, 1});
    CHECK(s.canonical_string() == "x^(-1,0) + x^(-1,1)");
    CHECK(SkewPoly::monomial(L, {0, 0}, VLaurent::term(1, 1)).canonical_string() ==
          "v * x^(0,0)");
    CHECK(SkewPoly(L).canonical_string() == "0");
    VLaurent mixed = VLaurent::term(0, 1) + VLaurent::term(2, 1);
    CHECK(SkewPoly::monomial(L, {1, 0}, mixed).canonical_string() == "(1 + v^2) * x^(1,0)");
}

TEST_CASE("canonical strings separate distinct polynomials") {
    std::mt19937_64 rng(31);
    std::vector<SkewPoly> polys;
    for (int t = 0; t < 25; ++t) {
        SkewPoly s(L);
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < terms; ++k)
            s.add_term({static_cast<long long>(rng() % 3) - 1,
                        static_cast<long long>(rng() % 3) - 1},
                       VLaurent::term(static_cast<int>(rng() % 3) - 1,
                                      static_cast<long long>(rng() % 3) + 1));
        polys.push_back(s);
    }
    for (size_t i = 0; i < polys.size(); ++i)
        for (size_t j = i + 1; j < polys.size(); ++j)
            if (!(polys[i] == polys[j]))
                CHECK(polys[i].canonical_string() != polys[j].canonical_string());
}

TEST_CASE("two-term solver") {
    SkewPoly XS1 = X(-1, 0) + X(-1, 1);
    SkewPoly XS2 = X(1, -1) + X(0, -1);
    SkewPoly XP1 = X(0, -1) + X(-1, -1) + X(-1, 0);

    SECTION("A2 exchange product") {
        auto sol = solve_two_term(XS1 * XS2, XP1, SkewPoly::unit(L));
        REQUIRE(sol.has_value());
        CHECK(sol->cA.pure_v_power() == 1);
        CHECK(sol->cB.pure_v_power() == 0);
    }
    SECTION("P = A gives (1, 0)") {
        auto sol = solve_two_term(XP1, XP1, SkewPoly::unit(L));
        REQUIRE(sol.has_value());
        CHECK(sol->cA.pure_v_power() == 0);
        CHECK(sol->cB.is_zero());
    }
    SECTION("disjoint support is unsolvable") {
        CHECK_FALSE(solve_two_term(X(9, 9), XP1, XS1).has_value());
    }
    SECTION("general coefficients are recovered and verified") {
        VLaurent ca = VLaurent::term(-2, 3) + VLaurent::term(1, 1);
        VLaurent cb = VLaurent::term(0, 2);
        SkewPoly P = XP1.scale(ca) + XS1.scale(cb);
        auto sol = solve_two_term(P, XP1, XS1);
        REQUIRE(sol.has_value());
        CHECK(sol->cA == ca);
        CHECK(sol->cB == cb);
    }
}

TEST_CASE("QVal arithmetic in Z[1/p][v]/(v^2 - p)") {
    QVal a = QVal::q_halfpow(2, 3); // q^{3/2} = 2 v
    CHECK(a.to_string() == "2*v");
    QVal b = QVal::q_halfpow(2, -1); // q^{-1/2} = v / 2
    CHECK(b.to_string() == "1/2*v");
    CHECK((a * b).to_string() == "2"); // 2v * v/2 = v^2 = 2
    CHECK((a + a).to_string() == "4*v");
    CHECK(QVal::q_halfpow(3, 4).to_string() == "9");
    CHECK(QVal::q_halfpow(3, -4).to_string() == "1/9");
    VLaurent vl = VLaurent::term(2, 1) + VLaurent::term(0, 1); // 1 + v^2 -> 1 + p
    CHECK(reduce_vlaurent(vl, 3).to_string() == "4");
}
