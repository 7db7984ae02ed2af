#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sparsecolor/pattern.hpp"

namespace sparsecolor {

struct EdgeIndex {
    std::vector<int> edge_to_index;  // per stored position, 0 on the diagonal
    int num_edges = 0;
};

// Assigns each off-diagonal edge {i, j} one index shared by both stored
// positions. Edges are numbered in lower-triangle column-major discovery
// order; the mirrored position is located through a per-column offset
// counter (upper-triangle entries occupy the leading slots of each column).
inline EdgeIndex build_edge_index(const SparsityPattern& p) {
    if (!is_structurally_symmetric(p))
        throw std::invalid_argument("build_edge_index: pattern must be square and structurally symmetric");
    EdgeIndex e;
    e.edge_to_index.assign(p.row_idx.size(), 0);
    std::vector<int> offsets(p.n_cols, 0);
    int k = 0;
    for (int j = 1; j <= p.n_cols; ++j) {
        for (int pos = p.col_ptr[j - 1]; pos < p.col_ptr[j]; ++pos) {
            int i = p.row_idx[pos - 1];
            if (i > j) {
                k += 1;
                e.edge_to_index[pos - 1] = k;
                int q = p.col_ptr[i - 1] + offsets[i - 1];
                e.edge_to_index[q - 1] = k;
                offsets[i - 1] += 1;
            }
        }
    }
    e.num_edges = k;
    return e;
}

// Adjacency graph of a symmetric pattern. Self loops (diagonal entries) are
// kept in the pattern but excluded from neighbor iteration.
struct AdjacencyGraph {
    SparsityPattern pattern;
    std::vector<int> edge_to_index;
    std::vector<char> has_diagonal;
    int num_edges = 0;

    int num_vertices() const { return pattern.n_cols; }

    int degree(int v) const {
        auto col = pattern.column(v);
        return static_cast<int>(col.size()) - (has_diagonal[v - 1] ? 1 : 0);
    }

    template <typename F>
    void for_each_neighbor(int v, F&& f) const {
        for (int w : pattern.column(v))
            if (w != v) f(w);
    }

    // f(w, edge_index)
    template <typename F>
    void for_each_indexed_neighbor(int v, F&& f) const {
        for (int pos = pattern.col_ptr[v - 1]; pos < pattern.col_ptr[v]; ++pos) {
            int w = pattern.row_idx[pos - 1];
            if (w != v) f(w, edge_to_index[pos - 1]);
        }
    }
};

inline AdjacencyGraph build_adjacency_graph(SparsityPattern p) {
    EdgeIndex e = build_edge_index(p);
    AdjacencyGraph g;
    g.edge_to_index = std::move(e.edge_to_index);
    g.num_edges = e.num_edges;
    g.has_diagonal.assign(p.n_cols, 0);
    for (int j = 1; j <= p.n_cols; ++j) {
        for (int i : p.column(j))
            if (i == j) g.has_diagonal[j - 1] = 1;
    }
    g.pattern = std::move(p);
    return g;
}

// Endpoints (i, j) with i > j of every edge, indexed by edge id.
inline std::vector<std::pair<int, int>> edge_endpoints(const AdjacencyGraph& g) {
    std::vector<std::pair<int, int>> ends(g.num_edges);
    for (int j = 1; j <= g.pattern.n_cols; ++j) {
        for (int pos = g.pattern.col_ptr[j - 1]; pos < g.pattern.col_ptr[j]; ++pos) {
            int i = g.pattern.row_idx[pos - 1];
            if (i > j) ends[g.edge_to_index[pos - 1] - 1] = {i, j};
        }
    }
    return ends;
}

// Bipartite view of a rectangular pattern: columns on one side, rows on the
// other, with both orientations stored for distance-2 traversal.
struct BipartiteGraph {
    SparsityPattern csc;
    CsrPattern csr;

    int num_rows() const { return csc.n_rows; }
    int num_cols() const { return csc.n_cols; }

    std::span<const int> col_neighbors(int j) const { return csc.column(j); }
    std::span<const int> row_neighbors(int i) const { return csr.row(i); }
};

inline BipartiteGraph build_bipartite_graph(SparsityPattern p) {
    BipartiteGraph b;
    b.csr = transpose_pattern(p);
    b.csc = std::move(p);
    return b;
}

// Adjacency graph of the augmented matrix [[0, J^T], [J, 0]]: vertex k <= n
// is column k of J, vertex n + i is row i. Each nonzero of J becomes one
// edge, and edge ids follow the column-major order of J's stored entries.
inline AdjacencyGraph build_augmented_graph(const SparsityPattern& j) {
    CsrPattern csr = transpose_pattern(j);
    int n = j.n_cols, m = j.n_rows;
    SparsityPattern h;
    h.n_rows = h.n_cols = n + m;
    h.col_ptr.reserve(n + m + 1);
    h.row_idx.reserve(2 * j.row_idx.size());
    h.col_ptr.push_back(1);
    for (int c = 1; c <= n; ++c) {
        for (int i : j.column(c)) h.row_idx.push_back(n + i);
        h.col_ptr.push_back(static_cast<int>(h.row_idx.size()) + 1);
    }
    for (int i = 1; i <= m; ++i) {
        for (int c : csr.row(i)) h.row_idx.push_back(c);
        h.col_ptr.push_back(static_cast<int>(h.row_idx.size()) + 1);
    }
    return build_adjacency_graph(std::move(h));
}

}  // namespace sparsecolor
