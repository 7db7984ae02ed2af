#pragma once

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "sparsecolor/coloring.hpp"
#include "sparsecolor/forest.hpp"
#include "sparsecolor/graph.hpp"

namespace sparsecolor {

// Two-colored trees packed into flat arrays. Tree k (1-based) owns
// tree_edge_indices[k] - tree_edge_indices[k-1] edges (0-based slots here,
// prefix convention starting at 1) and one more vertex; packed vertex slot
// iv holds its tree-local neighbors at tree_neighbors positions
// [tree_neighbor_indices[iv-1], tree_neighbor_indices[iv] - 1].
struct TreeSet {
    int num_trees = 0;
    int nvmax = 0;  // vertices of the largest tree
    std::vector<int> tree_edge_indices;      // size num_trees + 1
    std::vector<int> tree_vertices;          // size ne + num_trees
    std::vector<int> tree_neighbor_indices;  // size ne + num_trees + 1
    std::vector<int> tree_neighbors;         // size 2 * ne
};

inline TreeSet build_trees(const AdjacencyGraph& g, Forest& forest) {
    TreeSet ts;
    int ne = g.num_edges;
    if (ne == 0) {
        ts.tree_edge_indices = {1};
        return ts;
    }
    int nt = forest.nt;
    std::vector<int> root_to_tree(ne, 0);
    ts.tree_edge_indices.assign(nt + 1, 0);
    for (int k = 1; k <= ne; ++k) {
        int root = forest.find_root(k);
        if (root_to_tree[root - 1] == 0) {
            ts.num_trees += 1;
            root_to_tree[root - 1] = ts.num_trees;
        }
        ts.tree_edge_indices[root_to_tree[root - 1]] += 1;
    }
    ts.nvmax = *std::max_element(ts.tree_edge_indices.begin(),
                                 ts.tree_edge_indices.end()) + 1;
    std::vector<int> vertex_position(nt, 0), neighbor_position(nt, 0);
    for (int k = 2; k <= nt; ++k) {
        vertex_position[k - 1] =
            vertex_position[k - 2] + ts.tree_edge_indices[k - 1] + 1;
        neighbor_position[k - 1] =
            neighbor_position[k - 2] + 2 * ts.tree_edge_indices[k - 1];
    }
    ts.tree_vertices.assign(ne + nt, 0);
    ts.tree_neighbor_indices.assign(ne + nt + 1, 0);
    ts.tree_neighbors.assign(2 * ne, 0);
    std::vector<int> visited_trees(nt, 0);
    for (int j = 1; j <= g.num_vertices(); ++j) {
        g.for_each_indexed_neighbor(j, [&](int i, int e) {
            int tree = root_to_tree[forest.find_root(e) - 1];
            int vertex_index = vertex_position[tree - 1];
            if (visited_trees[tree - 1] != j) {
                visited_trees[tree - 1] = j;
                vertex_position[tree - 1] += 1;
                vertex_index += 1;
                ts.tree_vertices[vertex_index - 1] = j;
            }
            neighbor_position[tree - 1] += 1;
            ts.tree_neighbors[neighbor_position[tree - 1] - 1] = i;
            ts.tree_neighbor_indices[vertex_index] += 1;
        });
    }
    ts.tree_edge_indices[0] = 1;
    for (int k = 1; k <= nt; ++k)
        ts.tree_edge_indices[k] += ts.tree_edge_indices[k - 1];
    ts.tree_neighbor_indices[0] = 1;
    for (int k = 1; k <= ne + nt; ++k)
        ts.tree_neighbor_indices[k] += ts.tree_neighbor_indices[k - 1];
    return ts;
}

// Leaf-pruning order per tree: (leaf, parent) pairs grouped by tree, each
// edge emitted once, leaves first. Tree k owns pairs [tree_offsets[k-1],
// tree_offsets[k] - 1] (1-based). A tree whose initial leaves are all but
// at most one vertex is star shaped.
struct ReverseBfsPlan {
    std::vector<std::pair<int, int>> pairs;
    std::vector<char> is_star;
    std::vector<int> tree_offsets;
};

inline ReverseBfsPlan reverse_bfs(const TreeSet& ts, int num_vertices) {
    ReverseBfsPlan plan;
    plan.is_star.assign(ts.num_trees, 0);
    plan.tree_offsets = ts.tree_edge_indices;
    std::vector<int> degrees(num_vertices, 0), reverse_mapping(num_vertices, 0);
    std::vector<int> queue(ts.nvmax, 0);
    for (int k = 1; k <= ts.num_trees; ++k) {
        int first_vertex = ts.tree_edge_indices[k - 1] + k - 1;
        int last_vertex = ts.tree_edge_indices[k] + k - 1;
        int nv_tree = last_vertex - first_vertex + 1;
        for (int iv = first_vertex; iv <= last_vertex; ++iv) {
            int j = ts.tree_vertices[iv - 1];
            degrees[j - 1] = ts.tree_neighbor_indices[iv] -
                             ts.tree_neighbor_indices[iv - 1];
            reverse_mapping[j - 1] = iv;
        }
        int queue_start = 0, queue_end = 0;
        for (int iv = first_vertex; iv <= last_vertex; ++iv) {
            int j = ts.tree_vertices[iv - 1];
            if (degrees[j - 1] == 1) queue[queue_end++] = j;
        }
        plan.is_star[k - 1] = queue_end >= nv_tree - 1 ? 1 : 0;
        while (queue_start < queue_end) {
            int u = queue[queue_start++];
            degrees[u - 1] = 0;
            int iv = reverse_mapping[u - 1];
            for (int p = ts.tree_neighbor_indices[iv - 1];
                 p < ts.tree_neighbor_indices[iv]; ++p) {
                int w = ts.tree_neighbors[p - 1];
                if (degrees[w - 1] != 0) {
                    plan.pairs.emplace_back(u, w);
                    degrees[w - 1] -= 1;
                    if (degrees[w - 1] == 1) queue[queue_end++] = w;
                }
            }
        }
    }
    return plan;
}

// Structures of a two-colored partition, split by decompression role:
// deep trees need both colors, hubbed stars need the hub color, trivial
// single-edge structures may keep either endpoint color.
struct StructureSets {
    std::vector<std::array<int, 3>> two_colored_trees;  // id, edge endpoints
    std::vector<std::pair<int, int>> hub_stars;          // id, hub vertex
    std::vector<std::array<int, 3>> trivial_edges;       // id, endpoints
};

inline StructureSets classify_structures(const AdjacencyGraph& g,
                                         const StarSet& stars) {
    StructureSets sets;
    std::vector<std::pair<int, int>> star_edge(stars.num_stars, {0, 0});
    auto ends = edge_endpoints(g);
    for (int e = 1; e <= g.num_edges; ++e) {
        int s = stars.star[e - 1];
        if (stars.hub[s - 1] < 0) star_edge[s - 1] = ends[e - 1];
    }
    for (int s = 1; s <= stars.num_stars; ++s) {
        if (stars.hub[s - 1] > 0)
            sets.hub_stars.emplace_back(s, stars.hub[s - 1]);
        else
            sets.trivial_edges.push_back(
                {s, star_edge[s - 1].first, star_edge[s - 1].second});
    }
    return sets;
}

inline StructureSets classify_structures(const TreeSet& ts,
                                         const ReverseBfsPlan& plan) {
    StructureSets sets;
    for (int k = 1; k <= ts.num_trees; ++k) {
        int first_pair = ts.tree_edge_indices[k - 1];
        int ne_k = ts.tree_edge_indices[k] - ts.tree_edge_indices[k - 1];
        auto [u, w] = plan.pairs[first_pair - 1];
        if (ne_k == 1) sets.trivial_edges.push_back({k, u, w});
        else if (plan.is_star[k - 1]) sets.hub_stars.emplace_back(k, w);
        else sets.two_colored_trees.push_back({k, u, w});
    }
    return sets;
}

enum class NeutralPreference { first_available, neutralize_rows, neutralize_columns };

struct PostProcessResult {
    int num_colors = 0;
    std::vector<std::pair<int, int>> trivial_hubs;  // structure id, chosen hub
};

// Neutralizes colors no decompression step reads: keeps diagonal colors,
// both colors of deep trees and hub colors, sweeps trivial structures
// preferring an endpoint whose color is already kept, then renumbers the
// surviving colors contiguously. Neutral vertices get color 0.
inline PostProcessResult post_process(const AdjacencyGraph& g, Coloring& coloring,
                                      const StructureSets& sets,
                                      NeutralPreference preference = NeutralPreference::first_available,
                                      int n_split = 0) {
    PostProcessResult result;
    std::vector<int>& color = coloring.color;
    std::vector<char> used(coloring.num_colors + 1, 0);
    for (int k = 1; k <= g.num_vertices(); ++k)
        if (g.has_diagonal[k - 1]) used[color[k - 1]] = 1;
    for (const auto& [id, a, b] : sets.two_colored_trees) {
        used[color[a - 1]] = 1;
        used[color[b - 1]] = 1;
    }
    for (const auto& [id, h] : sets.hub_stars) used[color[h - 1]] = 1;
    for (const auto& [id, i, j] : sets.trivial_edges) {
        bool ui = used[color[i - 1]], uj = used[color[j - 1]];
        int h;
        if (ui && uj) h = std::min(i, j);
        else if (ui) h = i;
        else if (uj) h = j;
        else if (preference == NeutralPreference::neutralize_rows &&
                 (i <= n_split) != (j <= n_split))
            h = i <= n_split ? i : j;
        else if (preference == NeutralPreference::neutralize_columns &&
                 (i <= n_split) != (j <= n_split))
            h = i > n_split ? i : j;
        else h = std::min(i, j);
        used[color[h - 1]] = 1;
        result.trivial_hubs.emplace_back(id, h);
    }
    int num_neutral = 0;
    std::vector<int> offsets(coloring.num_colors + 1, 0);
    for (int c = 1; c <= coloring.num_colors; ++c) {
        if (!used[c]) num_neutral += 1;
        else offsets[c] = num_neutral;
    }
    for (int& c : color)
        if (c != 0) c = used[c] ? c - offsets[c] : 0;
    coloring.num_colors -= num_neutral;
    result.num_colors = coloring.num_colors;
    return result;
}

// Trivial stars keep a negative hub mark; decompression reads its magnitude.
inline void apply_trivial_hubs(StarSet& stars,
                               const std::vector<std::pair<int, int>>& hubs) {
    for (auto [s, h] : hubs) stars.hub[s - 1] = -h;
}

// Reorients the single pair of each trivial tree so the parent is the hub.
inline void apply_trivial_hubs(ReverseBfsPlan& plan, const TreeSet& ts,
                               const std::vector<std::pair<int, int>>& hubs) {
    for (auto [k, h] : hubs) {
        auto& pair = plan.pairs[ts.tree_edge_indices[k - 1] - 1];
        if (pair.second != h) pair = {pair.second, pair.first};
    }
}

}  // namespace sparsecolor
