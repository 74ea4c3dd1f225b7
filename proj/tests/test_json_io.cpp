#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qcchar/json_io.hpp"
#include "qcchar/submod.hpp"
#include "qcchar/qtorus.hpp"

using namespace qcchar;

TEST_CASE("quiver schema round trip") {
    json j = json::parse(R"({
        "vertices": 2,
        "arrows": [{"id": "a", "source": 1, "target": 2},
                   {"id": "abar", "source": 2, "target": 1}],
        "relations": [[{"coeff": 1, "path": ["a", "abar"]}],
                      [{"coeff": 1, "path": ["abar", "a"]}]]
    })");
    QuiverPtr q = quiver_from_json(j);
    CHECK(q->n() == 2);
    CHECK(q->arrows().size() == 2);
    CHECK(q->relations().size() == 2);
    CHECK_FALSE(q->is_acyclic());
    QuiverPtr q2 = quiver_from_json(quiver_to_json(*q));
    CHECK(q2->key() == q->key());
}

TEST_CASE("quiver schema errors") {
    CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"arrows": []})")), schema_error);
    CHECK_THROWS_AS(quiver_from_json(json::parse(
                        R"({"vertices": 2,
                            "arrows": [{"id": "a", "source": 1, "target": 2}],
                            "relations": [[{"coeff": 1, "path": ["a", "b"]}]]})")),
                    schema_error);
    CHECK_THROWS_AS(quiver_from_json(json::parse(
                        R"({"vertices": 2,
                            "arrows": [{"id": "a", "source": 1, "target": 2}],
                            "relations": [[{"coeff": 1, "path": ["a"]}]]})")),
                    schema_error);
}

TEST_CASE("representation schema") {
    PrimeField f2(2);
    QuiverPtr q = quiver_from_json(json::parse(
        R"({"vertices": 2, "arrows": [{"id": "a", "source": 1, "target": 2},
                                       {"id": "b", "source": 1, "target": 2}]})"));
    json j = json::parse(R"({"dims": [1, 2], "matrices": {"a": [[1],[0]], "b": [[0],[1]]}})");
    Representation r = rep_from_json(j, q, f2);
    CHECK(grassmannian_count(r, {0, 1}) == 3);
    Representation r2 = rep_from_json(rep_to_json(r), q, f2);
    CHECK(r2 == r);
    // entries reduce mod p
    json jm = json::parse(R"({"dims": [1, 2], "matrices": {"a": [[3],[2]], "b": [[0],[1]]}})");
    Representation rm = rep_from_json(jm, q, f2);
    CHECK(rm.mat("a")(0, 0) == 1);
    CHECK(rm.mat("a")(1, 0) == 0);
    // shape mismatch
    json jb = json::parse(R"({"dims": [1, 2], "matrices": {"a": [[1]], "b": [[0],[1]]}})");
    CHECK_THROWS_AS(rep_from_json(jb, q, f2), schema_error);
}

TEST_CASE("relation-violating representation is rejected") {
    PrimeField f2(2);
    QuiverPtr q = quiver_from_json(json::parse(
        R"({"vertices": 2,
            "arrows": [{"id": "a", "source": 1, "target": 2},
                       {"id": "abar", "source": 2, "target": 1}],
            "relations": [[{"coeff": 1, "path": ["a", "abar"]}],
                          [{"coeff": 1, "path": ["abar", "a"]}]]})"));
    json j = json::parse(R"({"dims": [1, 1], "matrices": {"a": [[1]], "abar": [[1]]}})");
    CHECK_THROWS_AS(rep_from_json(j, q, f2), schema_error);
}

TEST_CASE("user table schema") {
    auto table = user_table_from_json(json::parse(R"({"k1": 3, "k2": -1})"));
    CHECK(table.at("k1") == 3);
    CHECK(table.at("k2") == -1);
    CHECK_THROWS_AS(user_table_from_json(json::parse(R"([1,2])")), schema_error);
    CHECK_THROWS_AS(user_table_from_json(json::parse(R"({"k": "x"})")), schema_error);
}

TEST_CASE("skew poly json dump is canonical") {
    IntMat L = {{0, 1}, {-1, 0}};
    SkewPoly s = SkewPoly::monomial(L, {-1, 0}) +
                 SkewPoly::monomial(L, {0, 1}, VLaurent::term(2, 3));
    json j = json::parse(s.json_dump());
    CHECK(j["lambda"][0][1] == 1);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["exp"] == json::array({-1, 0}));
}
