#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include "qcchar/gf.hpp"

namespace qcchar {

using FVector = std::vector<uint32_t>;

/// Dense row-major matrix over GF(p).
class FMatrix {
public:
    FMatrix() = default;
    FMatrix(PrimeField f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
    FMatrix(PrimeField f, int rows, int cols, std::vector<uint32_t> entries)
        : field_(f), rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != static_cast<size_t>(rows) * cols)
            throw schema_error("matrix entry count does not match shape");
        for (auto& v : a_) v %= field_.p;
    }

    static FMatrix identity(PrimeField f, int n) {
        FMatrix m(f, n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    const PrimeField& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint32_t& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    uint32_t operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    const std::vector<uint32_t>& entries() const { return a_; }

    bool operator==(const FMatrix& o) const {
        return field_.p == o.field_.p && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const FMatrix& o) const { return !(*this == o); }

    FMatrix operator*(const FMatrix& o) const {
        require_same_field(o);
        if (cols_ != o.rows_) throw schema_error("matrix product shape mismatch");
        FMatrix r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                uint32_t v = (*this)(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) = field_.add(r(i, j), field_.mul(v, o(k, j)));
            }
        return r;
    }

    FMatrix operator+(const FMatrix& o) const {
        require_same_shape(o);
        FMatrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(r.a_[i], o.a_[i]);
        return r;
    }

    FMatrix operator-(const FMatrix& o) const {
        require_same_shape(o);
        FMatrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(r.a_[i], o.a_[i]);
        return r;
    }

    FMatrix scaled(uint32_t c) const {
        FMatrix r = *this;
        for (auto& v : r.a_) v = field_.mul(v, c);
        return r;
    }

    FMatrix transpose() const {
        FMatrix r(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (auto v : a_)
            if (v) return false;
        return true;
    }

    FVector apply(const FVector& x) const {
        if (static_cast<int>(x.size()) != cols_) throw schema_error("apply: vector length mismatch");
        FVector y(rows_, 0);
        for (int i = 0; i < rows_; ++i) {
            uint64_t acc = 0;
            for (int j = 0; j < cols_; ++j) acc += static_cast<uint64_t>((*this)(i, j)) * x[j];
            y[i] = static_cast<uint32_t>(acc % field_.p);
        }
        return y;
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<int> rref_in_place() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int sel = -1;
            for (int r = row; r < rows_; ++r)
                if ((*this)(r, col) != 0) { sel = r; break; }
            if (sel < 0) continue;
            swap_rows(sel, row);
            uint32_t inv = field_.inv((*this)(row, col));
            for (int j = col; j < cols_; ++j) (*this)(row, j) = field_.mul((*this)(row, j), inv);
            for (int r = 0; r < rows_; ++r) {
                if (r == row) continue;
                uint32_t v = (*this)(r, col);
                if (v == 0) continue;
                for (int j = col; j < cols_; ++j)
                    (*this)(r, j) = field_.sub((*this)(r, j), field_.mul(v, (*this)(row, j)));
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        FMatrix tmp = *this;
        return static_cast<int>(tmp.rref_in_place().size());
    }

    /// Basis of the right kernel, one row per basis vector, in RREF.
    FMatrix kernel_basis() const {
        FMatrix tmp = *this;
        std::vector<int> pivots = tmp.rref_in_place();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        int k = cols_ - static_cast<int>(pivots.size());
        FMatrix ker(field_, k, cols_);
        int row = 0;
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            ker(row, c) = 1;
            for (size_t pr = 0; pr < pivots.size(); ++pr)
                ker(row, pivots[pr]) = field_.neg(tmp(static_cast<int>(pr), c));
            ++row;
        }
        // Free columns ascend left to right, so the basis is already in RREF
        // up to row order; normalize by a final pass for safety.
        ker.rref_in_place();
        return ker;
    }

    /// Columns of `other` appended on the right.
    FMatrix hconcat(const FMatrix& other) const {
        require_same_field(other);
        if (rows_ != other.rows_) throw schema_error("hconcat: row mismatch");
        FMatrix r(field_, rows_, cols_ + other.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (int j = 0; j < other.cols_; ++j) r(i, cols_ + j) = other(i, j);
        }
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << rows_ << "x" << cols_ << ":";
        for (size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
        return os.str();
    }

private:
    void swap_rows(int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < cols_; ++j) std::swap((*this)(r1, j), (*this)(r2, j));
    }
    void require_same_field(const FMatrix& o) const {
        if (field_.p != o.field_.p) throw schema_error("field mismatch");
    }
    void require_same_shape(const FMatrix& o) const {
        require_same_field(o);
        if (rows_ != o.rows_ || cols_ != o.cols_) throw schema_error("shape mismatch");
    }

    PrimeField field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint32_t> a_;
};

struct SolveResult {
    std::optional<FVector> particular;
    FMatrix kernel; // rows span the homogeneous solutions
};

/// Solve m x = rhs exactly; inconsistency is a normal return, not an error.
inline SolveResult solve(const FMatrix& m, const FVector& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw schema_error("solve: rhs length mismatch");
    FMatrix aug(m.field(), m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i] % m.field().p;
    }
    std::vector<int> pivots = aug.rref_in_place();
    SolveResult res{std::nullopt, m.kernel_basis()};
    if (!pivots.empty() && pivots.back() == m.cols()) return res; // inconsistent
    FVector x(m.cols(), 0);
    for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug(static_cast<int>(pr), m.cols());
    res.particular = std::move(x);
    return res;
}

} // namespace qcchar
