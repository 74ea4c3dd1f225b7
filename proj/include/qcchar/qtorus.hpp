#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcchar/quiver.hpp"

namespace qcchar {

/// Integer Laurent polynomial in the formal half-power v (v^2 plays q).
class VLaurent {
public:
    VLaurent() = default;
    static VLaurent term(int vpow, long long coeff) {
        VLaurent r;
        if (coeff) r.c_[vpow] = coeff;
        return r;
    }
    static VLaurent one() { return term(0, 1); }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, long long>& coeffs() const { return c_; }

    VLaurent& add_term(int vpow, long long coeff) {
        if (!coeff) return *this;
        auto it = c_.find(vpow);
        if (it == c_.end()) {
            c_[vpow] = coeff;
        } else if ((it->second += coeff) == 0) {
            c_.erase(it);
        }
        return *this;
    }

    VLaurent operator+(const VLaurent& o) const {
        VLaurent r = *this;
        for (auto& [k, v] : o.c_) r.add_term(k, v);
        return r;
    }
    VLaurent operator-(const VLaurent& o) const {
        VLaurent r = *this;
        for (auto& [k, v] : o.c_) r.add_term(k, -v);
        return r;
    }
    VLaurent operator*(const VLaurent& o) const {
        VLaurent r;
        for (auto& [k1, v1] : c_)
            for (auto& [k2, v2] : o.c_) r.add_term(k1 + k2, v1 * v2);
        return r;
    }
    VLaurent shifted(int vpow) const {
        VLaurent r;
        for (auto& [k, v] : c_) r.c_[k + vpow] = v;
        return r;
    }
    bool operator==(const VLaurent& o) const { return c_ == o.c_; }
    bool operator!=(const VLaurent& o) const { return !(*this == o); }

    /// v-exponent when this is a single term with coefficient 1.
    std::optional<int> pure_v_power() const {
        if (c_.size() == 1 && c_.begin()->second == 1) return c_.begin()->first;
        return std::nullopt;
    }

    /// Ascending v-powers; "v" for v^1, bare integer for v^0.
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [k, v] : c_) {
            long long a = v;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (k == 0) {
                os << a;
            } else {
                if (a != 1) os << a << "*";
                os << "v";
                if (k != 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<int, long long> c_; // vpow -> coeff, no zeros stored
};

/// Element of the skew-Laurent quantum torus A_{n,lambda}:
/// X^e X^f = v^{lambda(e,f)} X^{e+f} with lambda(e,f) = e^T Lambda f.
class SkewPoly {
public:
    using Exp = std::vector<long long>;

    SkewPoly() = default;
    explicit SkewPoly(IntMat lambda) : lambda_(std::move(lambda)) {}

    static SkewPoly monomial(IntMat lambda, Exp e, VLaurent c = VLaurent::one()) {
        SkewPoly r(std::move(lambda));
        if (!c.is_zero()) r.terms_[std::move(e)] = std::move(c);
        return r;
    }
    static SkewPoly unit(IntMat lambda) {
        int n = static_cast<int>(lambda.size());
        return monomial(std::move(lambda), Exp(n, 0));
    }

    const IntMat& lambda() const { return lambda_; }
    const std::map<Exp, VLaurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int rank() const { return static_cast<int>(lambda_.size()); }

    SkewPoly& add_term(const Exp& e, const VLaurent& c) {
        if (c.is_zero()) return *this;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    SkewPoly operator+(const SkewPoly& o) const {
        require_compatible(o);
        SkewPoly r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    SkewPoly operator-(const SkewPoly& o) const {
        require_compatible(o);
        SkewPoly r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, VLaurent() - c);
        return r;
    }

    /// Bilinear extension of X^e X^f = v^{e^T Lambda f} X^{e+f}.
    SkewPoly operator*(const SkewPoly& o) const {
        require_compatible(o);
        SkewPoly r(lambda_);
        for (auto& [e, ce] : terms_)
            for (auto& [f, cf] : o.terms_) {
                long long tw = skew_form(lambda_, e, f);
                Exp sum(e.size());
                for (size_t i = 0; i < e.size(); ++i) sum[i] = e[i] + f[i];
                r.add_term(sum, (ce * cf).shifted(static_cast<int>(tw)));
            }
        return r;
    }

    /// Multiply every coefficient by v^k (i.e. by q^{k/2}).
    SkewPoly scale_vpow(int k) const {
        SkewPoly r(lambda_);
        for (auto& [e, c] : terms_) r.terms_[e] = c.shifted(k);
        return r;
    }

    SkewPoly scale(const VLaurent& c) const {
        SkewPoly r(lambda_);
        for (auto& [e, cc] : terms_) r.add_term(e, cc * c);
        return r;
    }

    bool operator==(const SkewPoly& o) const {
        return lambda_ == o.lambda_ && terms_ == o.terms_;
    }

    /// Terms sorted lexicographically by exponent vector; bit-stable.
    std::string canonical_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            std::string cs = c.to_string();
            if (cs != "1") {
                bool simple = c.coeffs().size() == 1;
                if (!simple) os << "(" << cs << ")";
                else os << cs;
                os << " * ";
            }
            os << "x^(";
            for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
            os << ")";
        }
        return os.str();
    }

    std::string json_dump() const {
        std::ostringstream os;
        os << "{\"lambda\":[";
        for (size_t i = 0; i < lambda_.size(); ++i) {
            os << (i ? "," : "") << "[";
            for (size_t j = 0; j < lambda_[i].size(); ++j)
                os << (j ? "," : "") << lambda_[i][j];
            os << "]";
        }
        os << "],\"terms\":[";
        bool first = true;
        for (auto& [e, c] : terms_) {
            if (!first) os << ",";
            first = false;
            os << "{\"exp\":[";
            for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
            os << "],\"coeff\":[";
            bool f2 = true;
            for (auto& [k, v] : c.coeffs()) {
                if (!f2) os << ",";
                f2 = false;
                os << "[" << k << "," << v << "]";
            }
            os << "]}";
        }
        os << "]}";
        return os.str();
    }

private:
    void require_compatible(const SkewPoly& o) const {
        if (lambda_ != o.lambda_) throw schema_error("skew polynomials over different Lambda");
    }

    IntMat lambda_;
    std::map<Exp, VLaurent> terms_;
};

// ---------------------------------------------------------------------------
// Exact rational helpers for the two-term solver
// ---------------------------------------------------------------------------

namespace detail {

struct Rat {
    long long num = 0;
    long long den = 1;
    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }
    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator/(const Rat& o) const { return Rat(num * o.den, den * o.num); }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
};

/// Laurent polynomial in v with rational coefficients, for exact division.
using RatLaurent = std::map<int, Rat>;

inline RatLaurent to_rat(const VLaurent& a) {
    RatLaurent r;
    for (auto& [k, v] : a.coeffs()) r[k] = Rat(v);
    return r;
}

inline void trim(RatLaurent& a) {
    for (auto it = a.begin(); it != a.end();)
        it = it->second.is_zero() ? a.erase(it) : std::next(it);
}

inline RatLaurent rsub(const RatLaurent& a, const RatLaurent& b) {
    RatLaurent r = a;
    for (auto& [k, v] : b) {
        auto it = r.find(k);
        if (it == r.end()) r[k] = Rat(0) - v;
        else it->second = it->second - v;
    }
    trim(r);
    return r;
}

inline RatLaurent rmul(const RatLaurent& a, const RatLaurent& b) {
    RatLaurent r;
    for (auto& [k1, v1] : a)
        for (auto& [k2, v2] : b) {
            auto it = r.find(k1 + k2);
            if (it == r.end()) r[k1 + k2] = v1 * v2;
            else it->second = it->second + v1 * v2;
        }
    trim(r);
    return r;
}

/// Exact division a / b in Q[v,v^-1]; nullopt when the division has remainder.
inline std::optional<RatLaurent> rdiv(RatLaurent a, RatLaurent b) {
    trim(a);
    trim(b);
    if (b.empty()) return std::nullopt;
    if (a.empty()) return RatLaurent{};
    RatLaurent quot;
    while (!a.empty()) {
        int da = a.rbegin()->first, db = b.rbegin()->first;
        Rat c = a.rbegin()->second / b.rbegin()->second;
        int shift = da - db;
        quot[shift] = c;
        RatLaurent piece;
        for (auto& [k, v] : b) piece[k + shift] = v * c;
        a = rsub(a, piece);
        if (!a.empty() && a.rbegin()->first >= da) return std::nullopt; // no progress
    }
    return quot;
}

inline std::optional<VLaurent> to_integer_laurent(const RatLaurent& a) {
    VLaurent r;
    for (auto& [k, v] : a) {
        if (!v.is_integer()) return std::nullopt;
        r.add_term(k, v.num);
    }
    return r;
}

} // namespace detail

struct TwoTermSolution {
    VLaurent cA;
    VLaurent cB;
};

/// The unique coefficient pair (cA, cB) in Z[v,v^-1] with P = cA*A + cB*B,
/// if one exists. Unsolvable (or non-integral / non-unique) is a normal
/// absent return. The result is re-verified by direct expansion.
inline std::optional<TwoTermSolution> solve_two_term(const SkewPoly& P, const SkewPoly& A,
                                                     const SkewPoly& B) {
    using detail::RatLaurent;
    if (A.is_zero() || B.is_zero()) return std::nullopt;

    auto coeff_of = [](const SkewPoly& s, const SkewPoly::Exp& e) {
        auto it = s.terms().find(e);
        return it == s.terms().end() ? VLaurent() : it->second;
    };

    std::vector<SkewPoly::Exp> support;
    for (auto& [e, c] : P.terms()) support.push_back(e);
    for (auto& [e, c] : A.terms()) support.push_back(e);
    for (auto& [e, c] : B.terms()) support.push_back(e);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    std::optional<VLaurent> cA, cB;

    // Preferred: exponents seen by exactly one of A, B give direct quotients.
    for (auto& e : support) {
        VLaurent a = coeff_of(A, e), b = coeff_of(B, e), p = coeff_of(P, e);
        if (!cA && !a.is_zero() && b.is_zero()) {
            auto q = detail::rdiv(detail::to_rat(p), detail::to_rat(a));
            if (!q) return std::nullopt;
            auto z = detail::to_integer_laurent(*q);
            if (!z) return std::nullopt;
            cA = *z;
        }
        if (!cB && !b.is_zero() && a.is_zero()) {
            auto q = detail::rdiv(detail::to_rat(p), detail::to_rat(b));
            if (!q) return std::nullopt;
            auto z = detail::to_integer_laurent(*q);
            if (!z) return std::nullopt;
            cB = *z;
        }
    }

    // Cramer on a 2x2 subsystem for whatever is still unknown.
    if (!cA || !cB) {
        for (size_t i = 0; i < support.size() && !(cA && cB); ++i)
            for (size_t j = i + 1; j < support.size() && !(cA && cB); ++j) {
                RatLaurent a1 = detail::to_rat(coeff_of(A, support[i]));
                RatLaurent b1 = detail::to_rat(coeff_of(B, support[i]));
                RatLaurent a2 = detail::to_rat(coeff_of(A, support[j]));
                RatLaurent b2 = detail::to_rat(coeff_of(B, support[j]));
                RatLaurent det = detail::rsub(detail::rmul(a1, b2), detail::rmul(a2, b1));
                if (det.empty()) continue;
                RatLaurent p1 = detail::to_rat(coeff_of(P, support[i]));
                RatLaurent p2 = detail::to_rat(coeff_of(P, support[j]));
                auto qa = detail::rdiv(detail::rsub(detail::rmul(p1, b2), detail::rmul(p2, b1)), det);
                auto qb = detail::rdiv(detail::rsub(detail::rmul(a1, p2), detail::rmul(a2, p1)), det);
                if (!qa || !qb) continue;
                auto za = detail::to_integer_laurent(*qa);
                auto zb = detail::to_integer_laurent(*qb);
                if (!za || !zb) continue;
                cA = *za;
                cB = *zb;
            }
    }
    if (!cA || !cB) return std::nullopt;

    SkewPoly check = A.scale(*cA) + B.scale(*cB);
    if (!(check == P)) return std::nullopt;
    return TwoTermSolution{*cA, *cB};
}

} // namespace qcchar
