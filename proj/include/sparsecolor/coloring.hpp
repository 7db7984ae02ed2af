#pragma once

#include <array>
#include <vector>

#include "sparsecolor/forest.hpp"
#include "sparsecolor/graph.hpp"

namespace sparsecolor {

// Colors are 1-based; 0 means uncolored (or neutral after post-processing).
struct Coloring {
    std::vector<int> color;
    int num_colors = 0;
};

enum class Side { columns, rows };

// Greedy coloring of one side of a bipartite graph such that same-colored
// vertices share no distance-2 neighbor (structurally orthogonal groups).
inline Coloring partial_distance2_coloring(const BipartiteGraph& bg, Side side,
                                           const std::vector<int>& order) {
    int n_items = side == Side::columns ? bg.num_cols() : bg.num_rows();
    Coloring result;
    result.color.assign(n_items, 0);
    std::vector<int> forbidden(n_items + 2, 0);
    for (int v : order) {
        auto mid = side == Side::columns ? bg.col_neighbors(v) : bg.row_neighbors(v);
        for (int w : mid) {
            auto far = side == Side::columns ? bg.row_neighbors(w) : bg.col_neighbors(w);
            for (int x : far) {
                if (result.color[x - 1] != 0) forbidden[result.color[x - 1]] = v;
            }
        }
        int c = 1;
        while (forbidden[c] == v) ++c;
        result.color[v - 1] = c;
        if (c > result.num_colors) result.num_colors = c;
    }
    return result;
}

// Partition of the edges into stars, one star id per edge. A star with a
// single edge keeps the negative of its provisional hub until a real hub is
// known (or post-processing picks one).
struct StarSet {
    std::vector<int> star;  // per edge
    std::vector<int> hub;   // per star, signed
    int num_stars = 0;
};

struct StarColoringResult {
    Coloring coloring;
    StarSet stars;
};

// Greedy star coloring: every path on four vertices sees at least three
// colors, so every two-colored subgraph is a union of stars. Stars are
// tracked incrementally and used to forbid spoke colors at distance two.
inline StarColoringResult star_coloring(const AdjacencyGraph& g,
                                        const std::vector<int>& order) {
    int nv = g.num_vertices();
    StarColoringResult result;
    std::vector<int>& color = result.coloring.color;
    StarSet& stars = result.stars;
    color.assign(nv, 0);
    stars.star.assign(g.num_edges, 0);
    std::vector<int> forbidden(nv + 2, 0);
    std::vector<int> treated(nv, 0);
    std::vector<std::array<int, 3>> first_neighbor(nv + 1, {0, 0, 0});

    for (int v : order) {
        g.for_each_indexed_neighbor(v, [&](int w, int e_vw) {
            if (color[w - 1] == 0) return;
            forbidden[color[w - 1]] = v;
            auto [p, q, e_pq] = first_neighbor[color[w - 1]];
            if (p == v) {
                if (treated[q - 1] != v) {
                    g.for_each_neighbor(q, [&](int x) {
                        if (color[x - 1] != 0) forbidden[color[x - 1]] = v;
                    });
                    treated[q - 1] = v;
                }
                g.for_each_neighbor(w, [&](int x) {
                    if (color[x - 1] != 0) forbidden[color[x - 1]] = v;
                });
                treated[w - 1] = v;
            } else {
                first_neighbor[color[w - 1]] = {v, w, e_vw};
                g.for_each_indexed_neighbor(w, [&](int x, int e_wx) {
                    if (x == v || color[x - 1] == 0) return;
                    if (x == stars.hub[stars.star[e_wx - 1] - 1])
                        forbidden[color[x - 1]] = v;
                });
            }
        });
        int c = 1;
        while (forbidden[c] == v) ++c;
        color[v - 1] = c;
        if (c > result.coloring.num_colors) result.coloring.num_colors = c;

        // Attach each fresh edge (v, w) to a star of the color pair.
        for (int pos = g.pattern.col_ptr[v - 1]; pos < g.pattern.col_ptr[v]; ++pos) {
            int w = g.pattern.row_idx[pos - 1];
            if (w == v || color[w - 1] == 0) continue;
            int e_vw = g.edge_to_index[pos - 1];
            bool x_exists = false;
            for (int pw = g.pattern.col_ptr[w - 1]; pw < g.pattern.col_ptr[w]; ++pw) {
                int x = g.pattern.row_idx[pw - 1];
                if (x == w || x == v || color[x - 1] != color[v - 1]) continue;
                int star_wx = stars.star[g.edge_to_index[pw - 1] - 1];
                stars.hub[star_wx - 1] = w;
                stars.star[e_vw - 1] = star_wx;
                x_exists = true;
                break;
            }
            if (!x_exists) {
                auto [p, q, e_pq] = first_neighbor[color[w - 1]];
                if (p == v && q != w) {
                    int star_vq = stars.star[e_pq - 1];
                    stars.hub[star_vq - 1] = v;
                    stars.star[e_vw - 1] = star_vq;
                } else {
                    stars.num_stars += 1;
                    stars.hub.push_back(-w);
                    stars.star[e_vw - 1] = stars.num_stars;
                }
            }
        }
    }
    return result;
}

struct AcyclicColoringResult {
    Coloring coloring;
    Forest forest;  // two-colored trees, one set per tree of edges
};

// Greedy acyclic coloring: every cycle sees at least three colors, so every
// two-colored subgraph is a forest. The forest of two-colored trees is
// maintained with union-find and used to block would-be two-colored cycles.
inline AcyclicColoringResult acyclic_coloring(const AdjacencyGraph& g,
                                              const std::vector<int>& order) {
    int nv = g.num_vertices();
    AcyclicColoringResult result;
    std::vector<int>& color = result.coloring.color;
    color.assign(nv, 0);
    result.forest = create_forest(g.num_edges);
    Forest& forest = result.forest;
    std::vector<int> forbidden(nv + 2, 0);
    std::vector<std::array<int, 3>> first_neighbor(nv + 1, {0, 0, 0});
    std::vector<std::array<int, 2>> first_visit_to_tree(g.num_edges, {0, 0});

    for (int v : order) {
        g.for_each_indexed_neighbor(v, [&](int w, int) {
            if (color[w - 1] != 0) forbidden[color[w - 1]] = v;
        });
        // A second visit to the same two-colored tree through a different
        // neighbor would close a cycle; forbid the color that completes it.
        g.for_each_neighbor(v, [&](int w) {
            if (color[w - 1] == 0) return;
            g.for_each_indexed_neighbor(w, [&](int x, int e_wx) {
                if (color[x - 1] == 0 || forbidden[color[x - 1]] == v) return;
                int root = forest.find_root(e_wx);
                auto [p, q] = first_visit_to_tree[root - 1];
                if (p != v) first_visit_to_tree[root - 1] = {v, w};
                else if (q != w) forbidden[color[x - 1]] = v;
            });
        });
        int c = 1;
        while (forbidden[c] == v) ++c;
        color[v - 1] = c;
        if (c > result.coloring.num_colors) result.coloring.num_colors = c;

        // Merge the edges from v toward same-colored neighbors of w.
        g.for_each_indexed_neighbor(v, [&](int w, int e_vw) {
            if (color[w - 1] == 0) return;
            auto [p, q, e_pq] = first_neighbor[color[w - 1]];
            if (p != v) {
                first_neighbor[color[w - 1]] = {v, w, e_vw};
            } else {
                int root1 = forest.find_root(e_vw);
                int root2 = forest.find_root(e_pq);
                if (root1 != root2) forest.root_union(root1, root2);
            }
        });
        g.for_each_indexed_neighbor(v, [&](int w, int e_vw) {
            if (color[w - 1] == 0) return;
            g.for_each_indexed_neighbor(w, [&](int x, int e_wx) {
                if (x == v || color[x - 1] != color[v - 1]) return;
                int root1 = forest.find_root(e_vw);
                int root2 = forest.find_root(e_wx);
                if (root1 != root2) forest.root_union(root1, root2);
            });
        });
    }
    return result;
}

}  // namespace sparsecolor
