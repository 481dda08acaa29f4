#pragma once

#include <cstddef>
#include <vector>

#include "kodaira/errors.hpp"
#include "kodaira/scalar.hpp"

namespace kodaira {

// Dense matrix of exact rationals. Rank goes through Bareiss fraction-free
// elimination on the denominator-cleared integer matrix, which bounds
// intermediate entry growth.
class ExactMatrix {
public:
    ExactMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, ExactScalar(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    ExactScalar& at(size_t r, size_t c) {
        check_index(r, c);
        return entries_[r * cols_ + c];
    }
    const ExactScalar& at(size_t r, size_t c) const {
        check_index(r, c);
        return entries_[r * cols_ + c];
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        ExactMatrix p(a.rows_, b.cols_);
        for (size_t r = 0; r < a.rows_; ++r)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a.at(r, k) == 0) continue;
                for (size_t c = 0; c < b.cols_; ++c)
                    p.at(r, c) += a.at(r, k) * b.at(k, c);
            }
        return p;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    size_t rank() const {
        // Clear denominators row by row (row scaling preserves rank).
        std::vector<std::vector<ExactInt>> m(rows_, std::vector<ExactInt>(cols_));
        for (size_t r = 0; r < rows_; ++r) {
            ExactInt l = 1;
            for (size_t c = 0; c < cols_; ++c) {
                ExactInt d = at(r, c).get_den();
                l = l / gcd(l, d) * d;
            }
            for (size_t c = 0; c < cols_; ++c) m[r][c] = ExactInt(at(r, c) * l);
        }
        // Bareiss elimination with row/column pivot search.
        size_t rank = 0;
        ExactInt prev = 1;
        size_t pr = 0;
        for (size_t pc = 0; pc < cols_ && pr < rows_; ++pc) {
            size_t piv = pr;
            while (piv < rows_ && m[piv][pc] == 0) ++piv;
            if (piv == rows_) continue;
            std::swap(m[pr], m[piv]);
            for (size_t r = pr + 1; r < rows_; ++r) {
                for (size_t c = pc + 1; c < cols_; ++c)
                    m[r][c] = (m[pr][pc] * m[r][c] - m[r][pc] * m[pr][c]) / prev;
                m[r][pc] = 0;
            }
            prev = m[pr][pc];
            ++pr;
            ++rank;
        }
        return rank;
    }

    size_t kernel_dim() const { return cols_ - rank(); }

    // Determinant by fraction-free elimination with rational bookkeeping.
    ExactScalar det() const {
        if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
        size_t n = rows_;
        std::vector<std::vector<ExactScalar>> m(n, std::vector<ExactScalar>(n));
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) m[r][c] = at(r, c);
        ExactScalar d(1);
        for (size_t p = 0; p < n; ++p) {
            size_t piv = p;
            while (piv < n && m[piv][p] == 0) ++piv;
            if (piv == n) return ExactScalar(0);
            if (piv != p) {
                std::swap(m[piv], m[p]);
                d = -d;
            }
            d *= m[p][p];
            for (size_t r = p + 1; r < n; ++r) {
                ExactScalar f = m[r][p] / m[p][p];
                for (size_t c = p; c < n; ++c) m[r][c] -= f * m[p][c];
            }
        }
        return d;
    }

    // Leading principal minor of order k (1-based size).
    ExactScalar leading_minor(size_t k) const {
        ExactMatrix sub(k, k);
        for (size_t r = 0; r < k; ++r)
            for (size_t c = 0; c < k; ++c) sub.at(r, c) = at(r, c);
        return sub.det();
    }

private:
    void check_index(size_t r, size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw IndexOutOfRange("matrix entry (" + std::to_string(r) + ", " +
                                  std::to_string(c) + ")");
    }

    size_t rows_, cols_;
    std::vector<ExactScalar> entries_;
};

// Rank over an arbitrary field (used with Gaussian rationals).
template <class F>
size_t field_rank(std::vector<std::vector<F>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0, pr = 0;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t piv = pr;
        while (piv < rows && m[piv][pc] == F(ExactScalar(0))) ++piv;
        if (piv == rows) continue;
        std::swap(m[pr], m[piv]);
        for (size_t r = pr + 1; r < rows; ++r) {
            if (m[r][pc] == F(ExactScalar(0))) continue;
            F f = m[r][pc] / m[pr][pc];
            for (size_t c = pc; c < cols; ++c) m[r][c] = m[r][c] - f * m[pr][c];
        }
        ++pr;
        ++rank;
    }
    return rank;
}

}  // namespace kodaira
