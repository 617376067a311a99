// Sparse integer matrices in coordinate form, column-major sorted, used for
// boundary operators of cell complexes.

#ifndef WEDGELAB_SPARSE_MATRIX_HPP
#define WEDGELAB_SPARSE_MATRIX_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "integer.hpp"

namespace wedgelab {

class SparseIntMatrix {
public:
    struct Entry {
        long long row;
        long long col;
        Integer value;
    };

    SparseIntMatrix(long long rows, long long cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("SparseIntMatrix: negative dimension");
    }

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }
    long long nnz() const {
        require_finalized();
        return static_cast<long long>(entries_.size());
    }

    // Accumulate v into (r, c).  Call finalize() once building is done.
    void add(long long r, long long c, Integer v) {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::invalid_argument("SparseIntMatrix::add: index out of range");
        finalized_ = false;
        entries_.push_back(Entry{r, c, std::move(v)});
    }

    // Sort by (col, row), merge duplicates, drop zeros, index the columns.
    void finalize() {
        std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
            return a.col != b.col ? a.col < b.col : a.row < b.row;
        });
        size_t out = 0;
        for (size_t i = 0; i < entries_.size();) {
            size_t j = i;
            Integer sum = 0;
            while (j < entries_.size() && entries_[j].col == entries_[i].col &&
                   entries_[j].row == entries_[i].row) {
                sum += entries_[j].value;
                ++j;
            }
            if (sum != 0) {
                entries_[out] = Entry{entries_[i].row, entries_[i].col, std::move(sum)};
                ++out;
            }
            i = j;
        }
        entries_.resize(out);
        col_offset_.assign(static_cast<size_t>(cols_) + 1, 0);
        for (const Entry& e : entries_) ++col_offset_[static_cast<size_t>(e.col) + 1];
        for (size_t c = 1; c < col_offset_.size(); ++c) col_offset_[c] += col_offset_[c - 1];
        finalized_ = true;
    }

    bool finalized() const { return finalized_; }

    // All nonzero entries sorted by (col, row).
    const std::vector<Entry>& entries() const {
        require_finalized();
        return entries_;
    }

    // Half-open range of positions in entries() holding column c.
    std::pair<size_t, size_t> col_range(long long c) const {
        require_finalized();
        if (c < 0 || c >= cols_) throw std::invalid_argument("col_range: column out of range");
        return {col_offset_[static_cast<size_t>(c)], col_offset_[static_cast<size_t>(c) + 1]};
    }

    Integer at(long long r, long long c) const {
        auto [lo, hi] = col_range(c);
        auto begin = entries_.begin() + static_cast<long long>(lo);
        auto end = entries_.begin() + static_cast<long long>(hi);
        auto it = std::lower_bound(begin, end, r,
                                   [](const Entry& e, long long row) { return e.row < row; });
        if (it == end || it->row != r) return 0;
        return it->value;
    }

private:
    void require_finalized() const {
        if (!finalized_) throw std::logic_error("SparseIntMatrix: finalize() not called");
    }

    long long rows_;
    long long cols_;
    bool finalized_ = false;
    std::vector<Entry> entries_;
    std::vector<size_t> col_offset_;
};

// A * B, exact.
inline SparseIntMatrix multiply(const SparseIntMatrix& A, const SparseIntMatrix& B) {
    if (A.cols() != B.rows())
        throw std::invalid_argument("multiply: inner dimensions disagree");
    SparseIntMatrix C(A.rows(), B.cols());
    for (long long c = 0; c < B.cols(); ++c) {
        auto [lo, hi] = B.col_range(c);
        for (size_t p = lo; p < hi; ++p) {
            const auto& eb = B.entries()[p];
            auto [alo, ahi] = A.col_range(eb.row);
            for (size_t q = alo; q < ahi; ++q) {
                const auto& ea = A.entries()[q];
                C.add(ea.row, c, ea.value * eb.value);
            }
        }
    }
    C.finalize();
    return C;
}

}  // namespace wedgelab

#endif
