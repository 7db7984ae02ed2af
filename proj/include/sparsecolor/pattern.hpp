#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sparsecolor {

// Compressed sparse column pattern. All indices are 1-based: col_ptr starts
// at 1 and row indices within a column are strictly increasing.
struct SparsityPattern {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<int> col_ptr;   // size n_cols + 1
    std::vector<int> row_idx;   // size nnz

    int nnz() const { return static_cast<int>(row_idx.size()); }

    // 1-based row ids stored in column j (1-based).
    std::span<const int> column(int j) const {
        return {row_idx.data() + col_ptr[j - 1] - 1,
                row_idx.data() + col_ptr[j] - 1};
    }
};

// Transposed pattern in compressed sparse row form.
struct CsrPattern {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<int> row_ptr;   // size n_rows + 1
    std::vector<int> col_idx;   // size nnz

    std::span<const int> row(int i) const {
        return {col_idx.data() + row_ptr[i - 1] - 1,
                col_idx.data() + row_ptr[i] - 1};
    }
};

inline void validate_pattern(const SparsityPattern& p) {
    if (p.n_rows < 0 || p.n_cols < 0)
        throw std::invalid_argument("pattern: negative dimension");
    if (static_cast<int>(p.col_ptr.size()) != p.n_cols + 1)
        throw std::invalid_argument("pattern: col_ptr size mismatch");
    if (p.col_ptr.front() != 1)
        throw std::invalid_argument("pattern: col_ptr must start at 1");
    if (p.col_ptr.back() != p.nnz() + 1)
        throw std::invalid_argument("pattern: col_ptr must end at nnz + 1");
    for (int j = 1; j <= p.n_cols; ++j) {
        if (p.col_ptr[j] < p.col_ptr[j - 1])
            throw std::invalid_argument("pattern: col_ptr not monotone");
        int prev = 0;
        for (int r : p.column(j)) {
            if (r < 1 || r > p.n_rows)
                throw std::invalid_argument("pattern: row index out of range");
            if (r <= prev)
                throw std::invalid_argument(
                    "pattern: duplicate or unsorted row index in column " +
                    std::to_string(j));
            prev = r;
        }
    }
}

// Builds a pattern from 1-based (row, col) coordinates. Rejects duplicates.
inline SparsityPattern from_coordinates(int n_rows, int n_cols,
                                        std::vector<std::pair<int, int>> entries) {
    for (auto [i, j] : entries) {
        if (i < 1 || i > n_rows || j < 1 || j > n_cols)
            throw std::invalid_argument("from_coordinates: entry out of range");
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) {
                  return a.second != b.second ? a.second < b.second
                                              : a.first < b.first;
              });
    SparsityPattern p;
    p.n_rows = n_rows;
    p.n_cols = n_cols;
    p.col_ptr.assign(n_cols + 1, 0);
    p.row_idx.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (k > 0 && entries[k] == entries[k - 1])
            throw std::invalid_argument("from_coordinates: duplicate entry");
        p.col_ptr[entries[k].second] += 1;
        p.row_idx.push_back(entries[k].first);
    }
    p.col_ptr[0] = 1;
    for (int j = 1; j <= n_cols; ++j) p.col_ptr[j] += p.col_ptr[j - 1];
    return p;
}

// Counting transpose: per-row counts, prefix sums, placement, pointer shift.
inline CsrPattern transpose_pattern(const SparsityPattern& p) {
    CsrPattern t;
    t.n_rows = p.n_rows;
    t.n_cols = p.n_cols;
    t.row_ptr.assign(p.n_rows + 1, 0);
    t.col_idx.assign(p.row_idx.size(), 0);
    for (int r : p.row_idx) t.row_ptr[r - 1] += 1;
    int counter = 1;
    for (int i = 1; i <= p.n_rows; ++i) {
        int count = t.row_ptr[i - 1];
        t.row_ptr[i - 1] = counter;
        counter += count;
    }
    t.row_ptr[p.n_rows] = counter;
    for (int j = 1; j <= p.n_cols; ++j) {
        for (int pos = p.col_ptr[j - 1]; pos < p.col_ptr[j]; ++pos) {
            int i = p.row_idx[pos - 1];
            t.col_idx[t.row_ptr[i - 1] - 1] = j;
            t.row_ptr[i - 1] += 1;
        }
    }
    for (int i = p.n_rows; i >= 1; --i) t.row_ptr[i] = t.row_ptr[i - 1];
    t.row_ptr[0] = 1;
    return t;
}

// The transpose reinterpreted as a CSC pattern (CSR of A is CSC of A^T).
inline SparsityPattern transpose_pattern_csc(const SparsityPattern& p) {
    CsrPattern t = transpose_pattern(p);
    SparsityPattern q;
    q.n_rows = p.n_cols;
    q.n_cols = p.n_rows;
    q.col_ptr = std::move(t.row_ptr);
    q.row_idx = std::move(t.col_idx);
    return q;
}

// 1-based stored position of entry (i, j); throws if absent.
inline int position_of(const SparsityPattern& p, int i, int j) {
    auto col = p.column(j);
    auto it = std::lower_bound(col.begin(), col.end(), i);
    if (it == col.end() || *it != i)
        throw std::invalid_argument("position_of: entry not stored");
    return p.col_ptr[j - 1] + static_cast<int>(it - col.begin());
}

inline bool is_structurally_symmetric(const SparsityPattern& p) {
    if (p.n_rows != p.n_cols) return false;
    SparsityPattern t = transpose_pattern_csc(p);
    return t.col_ptr == p.col_ptr && t.row_idx == p.row_idx;
}

}  // namespace sparsecolor
