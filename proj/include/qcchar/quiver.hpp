#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qcchar/gf.hpp"

namespace qcchar {

using IntMat = std::vector<std::vector<long long>>;
using DimVector = std::vector<int>;

inline IntMat int_identity(int n) {
    IntMat m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMat int_transpose(const IntMat& a) {
    int n = static_cast<int>(a.size()), c = n ? static_cast<int>(a[0].size()) : 0;
    IntMat t(c, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < c; ++j) t[j][i] = a[i][j];
    return t;
}

inline IntMat int_mul(const IntMat& a, const IntMat& b) {
    int n = static_cast<int>(a.size());
    int m = static_cast<int>(b[0].size());
    int k = static_cast<int>(b.size());
    IntMat r(n, std::vector<long long>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t)
            for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    return r;
}

inline std::vector<long long> int_apply(const IntMat& a, const std::vector<long long>& x) {
    std::vector<long long> y(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

struct Arrow {
    std::string id;
    int source = 0; // 0-based vertex
    int target = 0;
};

/// One summand c * (second . first) of a quadratic relation; `first` acts first.
struct RelationTerm {
    long long coeff = 1;
    std::string first;
    std::string second;
};

using Relation = std::vector<RelationTerm>;

/// Finite quiver with optional quadratic relations.
///
/// Vertices are 0-based internally; the JSON schema is 1-based.
class Quiver {
public:
    Quiver() = default;
    Quiver(int n, std::vector<Arrow> arrows, std::vector<Relation> relations = {})
        : n_(n), arrows_(std::move(arrows)), relations_(std::move(relations)) {
        validate();
    }

    int n() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Relation>& relations() const { return relations_; }
    bool has_relations() const { return !relations_.empty(); }

    int arrow_index(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw schema_error("unknown arrow id '" + id + "'");
        return it->second;
    }

    /// Acyclicity of the underlying arrow digraph.
    bool is_acyclic() const {
        std::vector<int> indeg(n_, 0);
        for (const Arrow& a : arrows_) ++indeg[a.target];
        std::vector<int> stack;
        for (int v = 0; v < n_; ++v)
            if (indeg[v] == 0) stack.push_back(v);
        int seen = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++seen;
            for (const Arrow& a : arrows_)
                if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
        }
        return seen == n_;
    }

    bool is_hereditary() const { return relations_.empty() && is_acyclic(); }

    void require_hereditary(const char* op) const {
        if (!is_hereditary())
            throw schema_error(std::string(op) + " requires an acyclic relation-free quiver");
    }

    /// Euler matrix E with <d,e> = d^T E e = sum d_i e_i - sum_{a:i->j} d_i e_j.
    IntMat euler_matrix() const {
        require_hereditary("euler_matrix");
        IntMat e = int_identity(n_);
        for (const Arrow& a : arrows_) e[a.source][a.target] -= 1;
        return e;
    }

    /// Skew matrix with entries (#arrows i->j) - (#arrows j->i), i.e. E^T - E.
    IntMat btilde() const {
        require_hereditary("btilde");
        IntMat b(n_, std::vector<long long>(n_, 0));
        for (const Arrow& a : arrows_) {
            b[a.source][a.target] += 1;
            b[a.target][a.source] -= 1;
        }
        return b;
    }

    /// <d,e> = d^T E e.
    long long euler_form(const DimVector& d, const DimVector& e) const {
        IntMat E = euler_matrix();
        long long s = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) s += static_cast<long long>(d[i]) * E[i][j] * e[j];
        return s;
    }

    std::string key() const {
        std::string k = "n" + std::to_string(n_) + ";";
        for (const Arrow& a : arrows_)
            k += a.id + ":" + std::to_string(a.source) + ">" + std::to_string(a.target) + ";";
        for (const Relation& r : relations_) {
            k += "rel[";
            for (const RelationTerm& t : r)
                k += std::to_string(t.coeff) + "*" + t.first + "." + t.second + "+";
            k += "];";
        }
        return k;
    }

private:
    void validate() {
        if (n_ <= 0) throw schema_error("quiver needs at least one vertex");
        for (size_t i = 0; i < arrows_.size(); ++i) {
            const Arrow& a = arrows_[i];
            if (a.id.empty()) throw schema_error("arrow with empty id");
            if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
                throw schema_error("arrow '" + a.id + "' has endpoint out of range");
            if (index_.count(a.id)) throw schema_error("duplicate arrow id '" + a.id + "'");
            index_[a.id] = static_cast<int>(i);
        }
        for (const Relation& r : relations_) {
            if (r.empty()) throw schema_error("empty relation");
            int src = -1, tgt = -1;
            for (const RelationTerm& t : r) {
                const Arrow& a1 = arrows_[arrow_index(t.first)];
                const Arrow& a2 = arrows_[arrow_index(t.second)];
                if (a1.target != a2.source)
                    throw schema_error("relation path " + t.first + "." + t.second +
                                       " is not composable");
                if (src < 0) {
                    src = a1.source;
                    tgt = a2.target;
                } else if (src != a1.source || tgt != a2.target) {
                    throw schema_error("relation mixes paths with different endpoints");
                }
            }
        }
    }

    int n_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<Relation> relations_;
    std::map<std::string, int> index_;
};

namespace detail {
/// Exact determinant of an integer matrix (fraction-free Gaussian elimination
/// over rationals with long long; fine at the small sizes used here).
inline long long int_det(IntMat a) {
    int n = static_cast<int>(a.size());
    // Bareiss algorithm keeps intermediates integral.
    long long prev = 1;
    long long sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int sw = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { sw = r; break; }
            if (sw < 0) return 0;
            std::swap(a[k], a[sw]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Adjugate via cofactors; n stays tiny (quiver rank).
inline IntMat int_adjugate(const IntMat& a) {
    int n = static_cast<int>(a.size());
    IntMat adj(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMat minor(n - 1, std::vector<long long>(n - 1, 0));
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[rr][cc++] = a[r][c];
                }
                ++rr;
            }
            long long m = (n == 1) ? 1 : int_det(minor);
            adj[j][i] = ((i + j) % 2 ? -m : m);
        }
    return adj;
}
} // namespace detail

/// The unique skew Lambda with Lambda * (-Btilde) = D, when it exists.
inline IntMat compatible_lambda(const IntMat& btilde, const std::vector<long long>& D) {
    int n = static_cast<int>(btilde.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (btilde[i][j] != -btilde[j][i])
                throw schema_error("compatible_lambda: input is not skew-symmetric");
    for (long long d : D)
        if (d <= 0) throw schema_error("compatible_lambda: D must be positive");

    IntMat mb(n, std::vector<long long>(n, 0)); // -btilde
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mb[i][j] = -btilde[i][j];
    long long det = detail::int_det(mb);
    if (det == 0)
        throw lambda_error(lambda_fail::singular,
                           "-Btilde is singular; supply Lambda explicitly");
    IntMat adj = detail::int_adjugate(mb);
    IntMat lambda(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long num = D[i] * adj[i][j];
            if (num % det != 0)
                throw lambda_error(lambda_fail::non_integral,
                                   "D * (-Btilde)^{-1} is not an integer matrix");
            lambda[i][j] = num / det;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (lambda[i][j] != -lambda[j][i])
                throw lambda_error(lambda_fail::not_skew,
                                   "computed Lambda is not skew-symmetric");
    return lambda;
}

/// lambda(e,f) = e^T Lambda f.
inline long long skew_form(const IntMat& lambda, const std::vector<long long>& e,
                           const std::vector<long long>& f) {
    long long s = 0;
    for (size_t i = 0; i < lambda.size(); ++i)
        for (size_t j = 0; j < lambda.size(); ++j) s += e[i] * lambda[i][j] * f[j];
    return s;
}

} // namespace qcchar
