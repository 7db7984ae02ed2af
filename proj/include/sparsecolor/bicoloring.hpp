#pragma once

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "sparsecolor/coloring.hpp"
#include "sparsecolor/dense.hpp"
#include "sparsecolor/graph.hpp"
#include "sparsecolor/ordering.hpp"
#include "sparsecolor/postprocess.hpp"

namespace sparsecolor {

// Renumbering of the symmetric colors of the augmented graph into separate
// row and column color ranges, in first-occurrence order (columns first).
struct RemapResult {
    std::vector<int> row_colors;  // size m, 0 = neutral
    std::vector<int> col_colors;  // size n
    std::vector<int> sym_to_row;  // size num_sym_colors, 0 = unused on rows
    std::vector<int> sym_to_col;
    int num_row_colors = 0;
    int num_col_colors = 0;
};

inline RemapResult remap_colors(int m, int n, int num_sym_colors,
                                const std::vector<int>& sym_colors) {
    RemapResult r;
    r.row_colors.assign(m, 0);
    r.col_colors.assign(n, 0);
    r.sym_to_row.assign(num_sym_colors, 0);
    r.sym_to_col.assign(num_sym_colors, 0);
    for (int j = 1; j <= n; ++j) {
        int c = sym_colors[j - 1];
        if (c == 0) continue;
        if (r.sym_to_col[c - 1] == 0) {
            r.num_col_colors += 1;
            r.sym_to_col[c - 1] = r.num_col_colors;
        }
        r.col_colors[j - 1] = r.sym_to_col[c - 1];
    }
    for (int i = 1; i <= m; ++i) {
        int c = sym_colors[n + i - 1];
        if (c == 0) continue;
        if (r.sym_to_row[c - 1] == 0) {
            r.num_row_colors += 1;
            r.sym_to_row[c - 1] = r.num_row_colors;
        }
        r.row_colors[i - 1] = r.sym_to_row[c - 1];
    }
    return r;
}

enum class BicolorMode { star, acyclic };

// Bidirectional coloring of a rectangular pattern through the augmented
// matrix [[0, J^T], [J, 0]]. Carries everything decompression needs.
struct BicoloringResult {
    BicolorMode mode = BicolorMode::star;
    int m = 0;
    int n = 0;
    AdjacencyGraph augmented;
    Coloring sym;  // post-processed, size n + m, 0 = neutral
    RemapResult remap;
    int num_sym_colors = 0;
    StarSet stars;        // star mode
    TreeSet trees;        // acyclic mode
    ReverseBfsPlan plan;  // acyclic mode

    int total_colors() const {
        return remap.num_row_colors + remap.num_col_colors;
    }
};

struct PhaseTimes {
    std::int64_t order_ns = 0;
    std::int64_t color_ns = 0;
};

inline BicoloringResult bicolor(const SparsityPattern& j, BicolorMode mode,
                                const OrderingCriterion& crit = {},
                                NeutralPreference preference = NeutralPreference::first_available,
                                BucketBackend backend = BucketBackend::stack,
                                PhaseTimes* times = nullptr) {
    BicoloringResult bc;
    bc.mode = mode;
    bc.m = j.n_rows;
    bc.n = j.n_cols;
    bc.augmented = build_augmented_graph(j);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<int> order = order_vertices(bc.augmented, crit, backend);
    auto t1 = std::chrono::steady_clock::now();
    auto record = [&](std::chrono::steady_clock::time_point t2) {
        if (!times) return;
        times->order_ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
        times->color_ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count();
    };
    if (mode == BicolorMode::star) {
        StarColoringResult sc = star_coloring(bc.augmented, order);
        record(std::chrono::steady_clock::now());
        bc.sym = std::move(sc.coloring);
        bc.stars = std::move(sc.stars);
        StructureSets sets = classify_structures(bc.augmented, bc.stars);
        PostProcessResult pp = post_process(bc.augmented, bc.sym, sets, preference, bc.n);
        apply_trivial_hubs(bc.stars, pp.trivial_hubs);
    } else {
        AcyclicColoringResult ac = acyclic_coloring(bc.augmented, order);
        record(std::chrono::steady_clock::now());
        bc.sym = std::move(ac.coloring);
        bc.trees = build_trees(bc.augmented, ac.forest);
        bc.plan = reverse_bfs(bc.trees, bc.augmented.num_vertices());
        StructureSets sets = classify_structures(bc.trees, bc.plan);
        PostProcessResult pp = post_process(bc.augmented, bc.sym, sets, preference, bc.n);
        apply_trivial_hubs(bc.plan, bc.trees, pp.trivial_hubs);
    }
    bc.num_sym_colors = bc.sym.num_colors;
    bc.remap = remap_colors(bc.m, bc.n, bc.num_sym_colors, bc.sym.color);
    return bc;
}

// Entry (r, c) of the implicit compressed matrix of the augmented system:
// rows of B_s that belong to column vertices read from the row compression
// and vice versa; anything else is structurally zero.
template <typename T>
T bs_entry(const RemapResult& remap, int n, int m, const DenseMatrix<T>& b_c,
           const DenseMatrix<T>& b_r, int r, int c) {
    if (r >= 1 && r <= n && remap.sym_to_row[c - 1] != 0)
        return b_r.at(remap.sym_to_row[c - 1], r);
    if (r > n && r <= n + m && remap.sym_to_col[c - 1] != 0)
        return b_c.at(r - n, remap.sym_to_col[c - 1]);
    return T{};
}

}  // namespace sparsecolor
