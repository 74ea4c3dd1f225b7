#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "qcchar/rep.hpp"

namespace qcchar {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw schema_error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

/// Quiver schema (1-based vertices on the wire):
/// {"vertices": n,
///  "arrows": [{"id": s, "source": i, "target": j}],
///  "relations": [[{"coeff": c, "path": [id1, id2]}]]}
/// where path [id1, id2] applies id1 first.
inline QuiverPtr quiver_from_json(const json& j) {
    try {
        int n = j.at("vertices").get<int>();
        std::vector<Arrow> arrows;
        for (const json& a : j.value("arrows", json::array()))
            arrows.push_back(Arrow{a.at("id").get<std::string>(),
                                   a.at("source").get<int>() - 1, a.at("target").get<int>() - 1});
        std::vector<Relation> rels;
        for (const json& r : j.value("relations", json::array())) {
            Relation rel;
            for (const json& t : r) {
                const json& path = t.at("path");
                if (path.size() != 2) throw schema_error("relation paths must have length 2");
                rel.push_back(RelationTerm{t.value("coeff", 1LL),
                                           path.at(0).get<std::string>(),
                                           path.at(1).get<std::string>()});
            }
            rels.push_back(std::move(rel));
        }
        return std::make_shared<Quiver>(n, std::move(arrows), std::move(rels));
    } catch (const json::exception& e) {
        throw schema_error(std::string("bad quiver schema: ") + e.what());
    }
}

inline json quiver_to_json(const Quiver& q) {
    json j;
    j["vertices"] = q.n();
    j["arrows"] = json::array();
    for (const Arrow& a : q.arrows())
        j["arrows"].push_back({{"id", a.id}, {"source", a.source + 1}, {"target", a.target + 1}});
    j["relations"] = json::array();
    for (const Relation& r : q.relations()) {
        json rel = json::array();
        for (const RelationTerm& t : r)
            rel.push_back({{"coeff", t.coeff}, {"path", {t.first, t.second}}});
        j["relations"].push_back(rel);
    }
    return j;
}

/// Representation schema:
/// {"dims": [d1,...,dn], "matrices": {"arrowId": [[row], [row], ...]}}
/// with shape dim(target) x dim(source), entries in [0, p).
inline Representation rep_from_json(const json& j, QuiverPtr q, PrimeField f) {
    try {
        DimVector dims = j.at("dims").get<DimVector>();
        if (static_cast<int>(dims.size()) != q->n())
            throw schema_error("dims length != vertex count");
        std::vector<FMatrix> mats;
        const json& mj = j.value("matrices", json::object());
        for (const Arrow& a : q->arrows()) {
            int rows = dims[a.target], cols = dims[a.source];
            FMatrix m(f, rows, cols);
            if (mj.contains(a.id)) {
                const json& rowsj = mj.at(a.id);
                if (static_cast<int>(rowsj.size()) != rows)
                    throw schema_error("matrix '" + a.id + "' row count mismatch");
                for (int r = 0; r < rows; ++r) {
                    if (static_cast<int>(rowsj[r].size()) != cols)
                        throw schema_error("matrix '" + a.id + "' column count mismatch");
                    for (int c = 0; c < cols; ++c)
                        m(r, c) = f.reduce(rowsj[r][c].get<long long>());
                }
            } else if (rows > 0 && cols > 0) {
                // absent matrices mean zero maps
            }
            mats.push_back(std::move(m));
        }
        Representation rep(std::move(q), f, std::move(dims), std::move(mats));
        return rep;
    } catch (const json::exception& e) {
        throw schema_error(std::string("bad representation schema: ") + e.what());
    }
}

inline json rep_to_json(const Representation& r) {
    json j;
    j["dims"] = r.dims();
    json mats = json::object();
    const Quiver& q = *r.quiver();
    for (size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const FMatrix& m = r.mat(static_cast<int>(ai));
        json rows = json::array();
        for (int rr = 0; rr < m.rows(); ++rr) {
            json row = json::array();
            for (int cc = 0; cc < m.cols(); ++cc) row.push_back(m(rr, cc));
            rows.push_back(row);
        }
        mats[q.arrows()[ai].id] = rows;
    }
    j["matrices"] = mats;
    return j;
}

/// user_table weights: a flat map from canonical chain-pair keys to
/// half-unit integers, e.g. {"<c1 key>|<c2 key>": 3}.
inline std::map<std::string, int> user_table_from_json(const json& j) {
    std::map<std::string, int> table;
    if (!j.is_object()) throw schema_error("user_table: expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number_integer())
            throw schema_error("user_table: values must be half-unit integers");
        table[it.key()] = it.value().get<int>();
    }
    return table;
}

inline IntMat intmat_from_json(const json& j) {
    IntMat m;
    for (const json& row : j) m.push_back(row.get<std::vector<long long>>());
    int n = static_cast<int>(m.size());
    for (auto& r : m)
        if (static_cast<int>(r.size()) != n) throw schema_error("matrix is not square");
    return m;
}

} // namespace qcchar
