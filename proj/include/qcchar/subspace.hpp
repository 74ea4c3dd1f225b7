#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qcchar/matrix.hpp"

namespace qcchar {

/// A subspace of GF(p)^n held by its unique reduced-row-echelon basis.
///
/// The RREF representative makes equality of subspaces a plain comparison
/// of entry vectors.
class Subspace {
public:
    Subspace() = default;
    Subspace(PrimeField f, int ambient) : basis_(f, 0, ambient) {}

    /// Canonicalize the row space of `rows`.
    static Subspace span(const FMatrix& rows) {
        FMatrix m = rows;
        std::vector<int> piv = m.rref_in_place();
        FMatrix b(m.field(), static_cast<int>(piv.size()), m.cols());
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) b(i, j) = m(i, j);
        Subspace s;
        s.basis_ = std::move(b);
        s.pivots_ = std::move(piv);
        return s;
    }

    static Subspace full(PrimeField f, int ambient) {
        return span(FMatrix::identity(f, ambient));
    }

    int ambient_dim() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    const FMatrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const PrimeField& field() const { return basis_.field(); }

    /// Residue of v modulo this subspace (pivot coordinates eliminated).
    FVector reduce(const FVector& v) const {
        FVector r = v;
        const PrimeField& f = basis_.field();
        for (int i = 0; i < basis_.rows(); ++i) {
            uint32_t c = r[pivots_[i]];
            if (c == 0) continue;
            for (int j = 0; j < basis_.cols(); ++j)
                r[j] = f.sub(r[j], f.mul(c, basis_(i, j)));
        }
        return r;
    }

    bool contains(const FVector& v) const {
        FVector r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
    }

    bool contains(const Subspace& other) const {
        for (int i = 0; i < other.dim(); ++i) {
            FVector v(ambient_dim());
            for (int j = 0; j < ambient_dim(); ++j) v[j] = other.basis()(i, j);
            if (!contains(v)) return false;
        }
        return true;
    }

    /// Coordinates of v in this basis; v must lie in the subspace.
    FVector coordinates(const FVector& v) const {
        FVector c(dim());
        for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
        return c;
    }

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const { return key() < o.key(); }

    /// Stable total order: pivot tuple first, then entries.
    std::string key() const {
        std::string k;
        k += std::to_string(dim());
        k += "|";
        for (int p : pivots_) k += std::to_string(p) + ",";
        k += "|";
        for (auto v : basis_.entries()) k += std::to_string(v) + ",";
        return k;
    }

private:
    FMatrix basis_;             // RREF, rows independent
    std::vector<int> pivots_;
};

/// ker(m) as a canonical Subspace; dim = cols - rank.
inline Subspace kernel_subspace(const FMatrix& m) { return Subspace::span(m.kernel_basis()); }

/// Gaussian binomial coefficient [n choose k]_p.
inline long long gaussian_binomial(int n, int k, uint32_t p) {
    if (k < 0 || k > n) return 0;
    // prod_{i=1}^{k} (p^{n-k+i}-1)/(p^i-1), exact at every step
    __int128 num = 1;
    for (int i = 1; i <= k; ++i) {
        __int128 a = 1;
        for (int t = 0; t < n - k + i; ++t) a *= p;
        __int128 b = 1;
        for (int t = 0; t < i; ++t) b *= p;
        num = num * (a - 1) / (b - 1);
    }
    return static_cast<long long>(num);
}

/// All k-dimensional subspaces of GF(p)^ambient, each exactly once.
///
/// Order: pivot tuples ascend lexicographically; within a pivot tuple the
/// free entries run like an odometer with the first free position (row-major)
/// most significant. The order never depends on how the work is scheduled.
inline std::vector<Subspace> enumerate_subspaces(int ambient, int k, PrimeField f,
                                                 const EnumerationLimits& lim = {}) {
    if (k < 0 || k > ambient) throw schema_error("enumerate_subspaces: k out of range");
    long long total = gaussian_binomial(ambient, k, f.p);
    if (total > lim.cap)
        throw cap_error("subspace enumeration of size " + std::to_string(total) +
                        " exceeds cap " + std::to_string(lim.cap));
    std::vector<Subspace> out;
    out.reserve(static_cast<size_t>(total));
    if (k == 0) {
        out.emplace_back(f, ambient);
        return out;
    }

    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_pivot(ambient, false);
        for (int c : piv) is_pivot[c] = true;
        std::vector<std::pair<int, int>> freepos; // (row, col), row-major order
        for (int r = 0; r < k; ++r)
            for (int c = piv[r] + 1; c < ambient; ++c)
                if (!is_pivot[c]) freepos.emplace_back(r, c);

        std::vector<uint32_t> vals(freepos.size(), 0);
        while (true) {
            FMatrix b(f, k, ambient);
            for (int r = 0; r < k; ++r) b(r, piv[r]) = 1;
            for (size_t i = 0; i < freepos.size(); ++i)
                b(freepos[i].first, freepos[i].second) = vals[i];
            Subspace s;
            s = Subspace::span(b); // already RREF; span re-derives pivots cheaply
            out.push_back(std::move(s));
            // odometer: last position least significant
            int pos = static_cast<int>(vals.size()) - 1;
            while (pos >= 0 && vals[pos] == f.p - 1) vals[pos--] = 0;
            if (pos < 0) break;
            ++vals[pos];
        }

        // next pivot combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && piv[i] == ambient - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

} // namespace qcchar
