#pragma once

#include <cstdlib>
#include <span>
#include <utility>
#include <vector>

#include "sparsecolor/bicoloring.hpp"
#include "sparsecolor/coloring.hpp"
#include "sparsecolor/dense.hpp"
#include "sparsecolor/graph.hpp"
#include "sparsecolor/pattern.hpp"
#include "sparsecolor/postprocess.hpp"

namespace sparsecolor {

// B = A * U for a grouping of the columns: column c of B sums the columns
// of color c. Neutral (color 0) columns contribute to no group.
template <typename T>
DenseMatrix<T> compress_columns(const SparsityPattern& p, std::span<const T> values,
                                const std::vector<int>& col_colors, int num_colors) {
    DenseMatrix<T> b(p.n_rows, num_colors);
    for (int j = 1; j <= p.n_cols; ++j) {
        int c = col_colors[j - 1];
        if (c == 0) continue;
        for (int pos = p.col_ptr[j - 1]; pos < p.col_ptr[j]; ++pos)
            b.at(p.row_idx[pos - 1], c) += values[pos - 1];
    }
    return b;
}

// B = V^T * A for a grouping of the rows: row c of B sums the rows of color c.
template <typename T>
DenseMatrix<T> compress_rows(const SparsityPattern& p, std::span<const T> values,
                             const std::vector<int>& row_colors, int num_colors) {
    DenseMatrix<T> b(num_colors, p.n_cols);
    for (int j = 1; j <= p.n_cols; ++j) {
        for (int pos = p.col_ptr[j - 1]; pos < p.col_ptr[j]; ++pos) {
            int c = row_colors[p.row_idx[pos - 1] - 1];
            if (c != 0) b.at(c, j) += values[pos - 1];
        }
    }
    return b;
}

enum class Triangle { lower, upper };

// Precomputed read locations for direct decompression: stored value k is
// read from the compressed matrix at linear index compressed_indices[k].
// Bicoloring plans split reads between B_c (first `split` slots) and B_r,
// with a_indices mapping slots back to stored positions.
struct DirectPlan {
    int b_rows = 0;
    int b_cols = 0;
    int b2_rows = 0;
    int b2_cols = 0;
    std::vector<int> compressed_indices;
    std::vector<int> a_indices;  // empty means identity
    int split = 0;
    std::vector<char> triangle;  // symmetric plans: 0 diagonal, 1 lower, 2 upper
};

inline DirectPlan plan_direct_columns(const SparsityPattern& p,
                                      const std::vector<int>& col_colors,
                                      int num_colors) {
    DirectPlan plan;
    plan.b_rows = p.n_rows;
    plan.b_cols = num_colors;
    plan.compressed_indices.resize(p.nnz());
    for (int j = 1; j <= p.n_cols; ++j) {
        int c = col_colors[j - 1];
        for (int pos = p.col_ptr[j - 1]; pos < p.col_ptr[j]; ++pos)
            plan.compressed_indices[pos - 1] =
                (c - 1) * p.n_rows + p.row_idx[pos - 1];
    }
    return plan;
}

inline DirectPlan plan_direct_rows(const SparsityPattern& p,
                                   const std::vector<int>& row_colors,
                                   int num_colors) {
    DirectPlan plan;
    plan.b_rows = num_colors;
    plan.b_cols = p.n_cols;
    plan.compressed_indices.resize(p.nnz());
    for (int j = 1; j <= p.n_cols; ++j) {
        for (int pos = p.col_ptr[j - 1]; pos < p.col_ptr[j]; ++pos)
            plan.compressed_indices[pos - 1] =
                (j - 1) * num_colors + row_colors[p.row_idx[pos - 1] - 1];
    }
    return plan;
}

// Symmetric star coloring: every off-diagonal entry is read on its spoke's
// row in the hub's color group; diagonals are read on their own color.
inline DirectPlan plan_direct_star(const AdjacencyGraph& g, const Coloring& coloring,
                                   const StarSet& stars) {
    const SparsityPattern& p = g.pattern;
    int n = p.n_cols;
    DirectPlan plan;
    plan.b_rows = n;
    plan.b_cols = coloring.num_colors;
    plan.compressed_indices.resize(p.nnz());
    plan.triangle.resize(p.nnz());
    for (int j = 1; j <= p.n_cols; ++j) {
        for (int pos = p.col_ptr[j - 1]; pos < p.col_ptr[j]; ++pos) {
            int i = p.row_idx[pos - 1];
            if (i == j) {
                plan.compressed_indices[pos - 1] =
                    (coloring.color[j - 1] - 1) * n + j;
                plan.triangle[pos - 1] = 0;
            } else {
                int s = stars.star[g.edge_to_index[pos - 1] - 1];
                int h = std::abs(stars.hub[s - 1]);
                int spoke = i == h ? j : i;
                plan.compressed_indices[pos - 1] =
                    (coloring.color[h - 1] - 1) * n + spoke;
                plan.triangle[pos - 1] = i > j ? 1 : 2;
            }
        }
    }
    return plan;
}

// Star bicoloring: entries hubbed at a column vertex are read from B_c,
// entries hubbed at a row vertex from B_r.
inline DirectPlan plan_direct_star_bicoloring(const SparsityPattern& j_pattern,
                                              const BicoloringResult& bc) {
    DirectPlan plan;
    plan.b_rows = bc.m;
    plan.b_cols = bc.remap.num_col_colors;
    plan.b2_rows = bc.remap.num_row_colors;
    plan.b2_cols = bc.n;
    std::vector<int> from_bc, from_br, idx_bc, idx_br;
    for (int j = 1; j <= j_pattern.n_cols; ++j) {
        for (int pos = j_pattern.col_ptr[j - 1]; pos < j_pattern.col_ptr[j]; ++pos) {
            int i = j_pattern.row_idx[pos - 1];
            int e = bc.augmented.edge_to_index[pos - 1];
            int s = bc.stars.star[e - 1];
            int h = std::abs(bc.stars.hub[s - 1]);
            int c = bc.sym.color[h - 1];
            if (h == j) {
                idx_bc.push_back(pos);
                from_bc.push_back((bc.remap.sym_to_col[c - 1] - 1) * bc.m + i);
            } else {
                idx_br.push_back(pos);
                from_br.push_back((j - 1) * bc.remap.num_row_colors +
                                  bc.remap.sym_to_row[c - 1]);
            }
        }
    }
    plan.split = static_cast<int>(from_bc.size());
    plan.compressed_indices = std::move(from_bc);
    plan.compressed_indices.insert(plan.compressed_indices.end(),
                                   from_br.begin(), from_br.end());
    plan.a_indices = std::move(idx_bc);
    plan.a_indices.insert(plan.a_indices.end(), idx_br.begin(), idx_br.end());
    return plan;
}

template <typename T>
std::vector<T> decompress_direct(const DenseMatrix<T>& b, const DirectPlan& plan) {
    std::vector<T> values(plan.compressed_indices.size(), T{});
    for (std::size_t k = 0; k < plan.compressed_indices.size(); ++k) {
        int target = plan.a_indices.empty() ? static_cast<int>(k) + 1
                                            : plan.a_indices[k];
        values[target - 1] = b.data[plan.compressed_indices[k] - 1];
    }
    return values;
}

template <typename T>
std::vector<T> decompress_direct(const DenseMatrix<T>& b_c, const DenseMatrix<T>& b_r,
                                 const DirectPlan& plan) {
    std::vector<T> values(plan.compressed_indices.size(), T{});
    for (std::size_t k = 0; k < plan.compressed_indices.size(); ++k) {
        const DenseMatrix<T>& src = static_cast<int>(k) < plan.split ? b_c : b_r;
        values[plan.a_indices[k] - 1] = src.data[plan.compressed_indices[k] - 1];
    }
    return values;
}

// Writes only the requested half of a symmetric direct plan; diagonal
// entries belong to both halves. Other slots stay zero.
template <typename T>
std::vector<T> decompress_triangle(const DenseMatrix<T>& b, const DirectPlan& plan,
                                   Triangle which) {
    std::vector<T> values(plan.compressed_indices.size(), T{});
    char want = which == Triangle::lower ? 1 : 2;
    for (std::size_t k = 0; k < plan.compressed_indices.size(); ++k) {
        if (plan.triangle[k] == 0 || plan.triangle[k] == want)
            values[k] = b.data[plan.compressed_indices[k] - 1];
    }
    return values;
}

// Recovery order and read locations for decompression by substitution:
// pairs are resolved leaf first, subtracting the accumulated contributions
// of already recovered incident edges. The accumulator is meaningful only
// within one tree — a vertex shared by several trees must not carry sums
// across them — so pairs stay grouped by tree and tree_offsets records the
// 1-based boundaries (tree k owns pairs [tree_offsets[k-1], tree_offsets[k])).
struct SubstitutionPlan {
    int nv = 0;        // accumulator length
    int n_values = 0;  // stored entries of the target pattern
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> tree_offsets;
    std::vector<int> src;        // per pair, linear index into B (or B_c / B_r)
    std::vector<char> src_side;  // 0 = B or B_c, 1 = B_r
    std::vector<int> pos1;       // stored position of (u, v)
    std::vector<int> pos2;       // mirror position, 0 when absent
    std::vector<std::pair<int, int>> diag;  // stored position, linear index
};

inline SubstitutionPlan plan_substitution(const AdjacencyGraph& g,
                                          const Coloring& coloring,
                                          const ReverseBfsPlan& order) {
    const SparsityPattern& p = g.pattern;
    SubstitutionPlan plan;
    plan.nv = g.num_vertices();
    plan.n_values = p.nnz();
    plan.pairs = order.pairs;
    plan.tree_offsets = order.tree_offsets;
    plan.src.reserve(plan.pairs.size());
    plan.src_side.assign(plan.pairs.size(), 0);
    plan.pos1.reserve(plan.pairs.size());
    plan.pos2.reserve(plan.pairs.size());
    for (auto [u, v] : plan.pairs) {
        plan.src.push_back((coloring.color[v - 1] - 1) * plan.nv + u);
        plan.pos1.push_back(position_of(p, u, v));
        plan.pos2.push_back(position_of(p, v, u));
    }
    for (int k = 1; k <= g.num_vertices(); ++k) {
        if (g.has_diagonal[k - 1])
            plan.diag.emplace_back(position_of(p, k, k),
                                   (coloring.color[k - 1] - 1) * plan.nv + k);
    }
    return plan;
}

inline SubstitutionPlan plan_substitution_bicoloring(const SparsityPattern& j_pattern,
                                                     const BicoloringResult& bc) {
    SubstitutionPlan plan;
    plan.nv = bc.n + bc.m;
    plan.n_values = j_pattern.nnz();
    plan.pairs = bc.plan.pairs;
    plan.tree_offsets = bc.plan.tree_offsets;
    plan.src.reserve(plan.pairs.size());
    plan.src_side.reserve(plan.pairs.size());
    plan.pos1.reserve(plan.pairs.size());
    plan.pos2.assign(plan.pairs.size(), 0);
    for (auto [u, v] : plan.pairs) {
        int c = bc.sym.color[v - 1];
        if (u <= bc.n) {
            plan.src.push_back((u - 1) * bc.remap.num_row_colors +
                               bc.remap.sym_to_row[c - 1]);
            plan.src_side.push_back(1);
            plan.pos1.push_back(position_of(j_pattern, v - bc.n, u));
        } else {
            plan.src.push_back((bc.remap.sym_to_col[c - 1] - 1) * bc.m + (u - bc.n));
            plan.src_side.push_back(0);
            plan.pos1.push_back(position_of(j_pattern, u - bc.n, v));
        }
    }
    return plan;
}

namespace detail {

// Leaf-first recurrence, one tree at a time. The accumulator entries touched
// by a tree are cleared before the next tree starts, so a vertex appearing
// in several trees never carries contributions across them.
template <typename T, typename ReadB, typename StoreValue>
void run_substitution(const SubstitutionPlan& plan, ReadB read, StoreValue store) {
    std::vector<T> acc(plan.nv, T{});
    int num_trees = static_cast<int>(plan.tree_offsets.size()) - 1;
    for (int k = 1; k <= num_trees; ++k) {
        for (int t = plan.tree_offsets[k - 1]; t < plan.tree_offsets[k]; ++t) {
            auto [u, v] = plan.pairs[t - 1];
            T value = read(t - 1) - acc[u - 1];
            acc[v - 1] += value;
            store(t - 1, value);
        }
        for (int t = plan.tree_offsets[k - 1]; t < plan.tree_offsets[k]; ++t) {
            acc[plan.pairs[t - 1].first - 1] = T{};
            acc[plan.pairs[t - 1].second - 1] = T{};
        }
    }
}

}  // namespace detail

template <typename T>
std::vector<T> decompress_substitution(const DenseMatrix<T>& b,
                                       const SubstitutionPlan& plan) {
    std::vector<T> values(plan.n_values, T{});
    for (auto [pos, lin] : plan.diag) values[pos - 1] = b.data[lin - 1];
    detail::run_substitution<T>(
        plan, [&](int t) { return b.data[plan.src[t] - 1]; },
        [&](int t, T value) {
            values[plan.pos1[t] - 1] = value;
            if (plan.pos2[t] != 0) values[plan.pos2[t] - 1] = value;
        });
    return values;
}

template <typename T>
std::vector<T> decompress_substitution(const DenseMatrix<T>& b_c,
                                       const DenseMatrix<T>& b_r,
                                       const SubstitutionPlan& plan) {
    std::vector<T> values(plan.n_values, T{});
    detail::run_substitution<T>(
        plan,
        [&](int t) {
            const DenseMatrix<T>& src = plan.src_side[t] ? b_r : b_c;
            return src.data[plan.src[t] - 1];
        },
        [&](int t, T value) { values[plan.pos1[t] - 1] = value; });
    return values;
}

template <typename T>
std::vector<T> decompress_triangle(const DenseMatrix<T>& b,
                                   const SubstitutionPlan& plan, Triangle which) {
    std::vector<T> values(plan.n_values, T{});
    for (auto [pos, lin] : plan.diag) values[pos - 1] = b.data[lin - 1];
    detail::run_substitution<T>(
        plan, [&](int t) { return b.data[plan.src[t] - 1]; },
        [&](int t, T value) {
            auto [u, v] = plan.pairs[t];
            int lower_pos = u > v ? plan.pos1[t] : plan.pos2[t];
            int upper_pos = u > v ? plan.pos2[t] : plan.pos1[t];
            int target = which == Triangle::lower ? lower_pos : upper_pos;
            if (target != 0) values[target - 1] = value;
        });
    return values;
}

// Streaming variant: consumes one column of B at a time (single-B plans).
template <typename T>
void decompress_single_color(const DirectPlan& plan, int color,
                             std::span<const T> b_column, std::vector<T>& values) {
    for (std::size_t k = 0; k < plan.compressed_indices.size(); ++k) {
        int lin = plan.compressed_indices[k] - 1;
        if (lin / plan.b_rows + 1 == color) values[k] = b_column[lin % plan.b_rows];
    }
}

}  // namespace sparsecolor
