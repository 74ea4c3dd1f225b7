#pragma once

#include <sstream>
#include <string>

#include "qcchar/qtorus.hpp"

namespace qcchar {

/// Exact value in Z[1/p][v] / (v^2 - p): the ring where delta-side theorem
/// evaluations live once counts are taken at the fixed prime. Stored as
/// a + b*v with rational a, b.
struct QVal {
    uint32_t p = 2;
    detail::Rat a;
    detail::Rat b;

    static QVal zero(uint32_t p) { return {p, {}, {}}; }
    static QVal integer(uint32_t p, long long n) { return {p, detail::Rat(n), {}}; }

    /// q^{h/2} for the half-unit count h: even h gives a p-power, odd h an
    /// odd v-power (negative exponents give p-denominators).
    static QVal q_halfpow(uint32_t p, long long h) {
        long long m = (h >= 0) ? h / 2 : -((-h + 1) / 2); // floor(h/2)
        int r = static_cast<int>(h - 2 * m);              // 0 or 1
        detail::Rat scale = m >= 0 ? detail::Rat(ipow(p, m)) : detail::Rat(1, ipow(p, -m));
        QVal v{p, {}, {}};
        if (r == 0) v.a = scale;
        else v.b = scale;
        return v;
    }

    QVal operator+(const QVal& o) const { return {p, a + o.a, b + o.b}; }
    QVal operator*(const QVal& o) const {
        // (a + bv)(c + dv) = (ac + bd p) + (ad + bc) v
        detail::Rat pp(static_cast<long long>(p));
        return {p, a * o.a + b * o.b * pp, a * o.b + b * o.a};
    }
    QVal scaled(long long n) const { return {p, a * detail::Rat(n), b * detail::Rat(n)}; }
    bool operator==(const QVal& o) const { return p == o.p && a == o.a && b == o.b; }
    bool operator!=(const QVal& o) const { return !(*this == o); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    std::string to_string() const {
        auto rat = [](const detail::Rat& r) {
            std::string s = std::to_string(r.num);
            if (r.den != 1) s += "/" + std::to_string(r.den);
            return s;
        };
        if (b.is_zero()) return rat(a);
        std::string s;
        if (!a.is_zero()) s += rat(a) + " + ";
        s += rat(b) + "*v";
        return s;
    }

private:
    static long long ipow(uint32_t base, long long e) {
        long long r = 1;
        for (long long i = 0; i < e; ++i) r *= base;
        return r;
    }
};

/// Reduce a formal v-Laurent value into the v^2 = p quotient.
inline QVal reduce_vlaurent(const VLaurent& vl, uint32_t p) {
    QVal acc = QVal::zero(p);
    for (auto& [k, c] : vl.coeffs()) acc = acc + QVal::q_halfpow(p, k).scaled(c);
    return acc;
}

} // namespace qcchar
