#include <algorithm>
#include <map>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "support/test_matrices.hpp"

using namespace sparsecolor;
namespace ts = testsupport;

TEST_CASE("build_trees packs a single edge as one two-vertex tree") {
    AdjacencyGraph g = build_adjacency_graph(ts::path_adjacency(2));
    AcyclicColoringResult r = acyclic_coloring(g, natural_order(2));
    TreeSet trees = build_trees(g, r.forest);
    CHECK(trees.num_trees == 1);
    CHECK(trees.nvmax == 2);
    CHECK(trees.tree_edge_indices == std::vector<int>{1, 2});
    CHECK(trees.tree_vertices == std::vector<int>{1, 2});
    CHECK(trees.tree_neighbor_indices == std::vector<int>{1, 2, 3});
    CHECK(trees.tree_neighbors == std::vector<int>{2, 1});
}

TEST_CASE("build_trees packs the 4-path as one tree with six neighbor slots") {
    AdjacencyGraph g = build_adjacency_graph(ts::path_adjacency(4));
    AcyclicColoringResult r = acyclic_coloring(g, natural_order(4));
    TreeSet trees = build_trees(g, r.forest);
    CHECK(trees.num_trees == 1);
    CHECK(trees.tree_vertices == std::vector<int>{1, 2, 3, 4});
    CHECK(trees.tree_neighbors == std::vector<int>{2, 1, 3, 2, 4, 3});
    CHECK(trees.tree_neighbor_indices == std::vector<int>{1, 2, 4, 6, 7});
}

TEST_CASE("build_trees conserves edges and vertices on random graphs") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        SparsityPattern p = ts::random_symmetric(20, 0.15, false, rng);
        AdjacencyGraph g = build_adjacency_graph(p);
        AcyclicColoringResult r = acyclic_coloring(g, natural_order(20));
        TreeSet trees = build_trees(g, r.forest);
        CHECK(trees.num_trees == r.forest.nt);
        REQUIRE(static_cast<int>(trees.tree_edge_indices.size()) ==
                trees.num_trees + 1);
        int total_edges = 0;
        for (int k = 1; k <= trees.num_trees; ++k) {
            int ne_k = trees.tree_edge_indices[k] - trees.tree_edge_indices[k - 1];
            CHECK(ne_k >= 1);
            total_edges += ne_k;
        }
        CHECK(total_edges == g.num_edges);
        CHECK(static_cast<int>(trees.tree_vertices.size()) ==
              g.num_edges + trees.num_trees);
        CHECK(static_cast<int>(trees.tree_neighbors.size()) == 2 * g.num_edges);
    }
}

TEST_CASE("reverse_bfs peels a hub-and-spokes tree from its leaves") {
    AdjacencyGraph g = build_adjacency_graph(ts::star_adjacency(4));
    AcyclicColoringResult r = acyclic_coloring(g, natural_order(4));
    TreeSet trees = build_trees(g, r.forest);
    ReverseBfsPlan plan = reverse_bfs(trees, 4);
    REQUIRE(plan.is_star.size() == 1);
    CHECK(plan.is_star[0] == 1);
    CHECK(plan.pairs == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 1}});
}

TEST_CASE("reverse_bfs orders the 4-path leaves first") {
    AdjacencyGraph g = build_adjacency_graph(ts::path_adjacency(4));
    AcyclicColoringResult r = acyclic_coloring(g, natural_order(4));
    TreeSet trees = build_trees(g, r.forest);
    ReverseBfsPlan plan = reverse_bfs(trees, 4);
    CHECK(plan.is_star[0] == 0);
    CHECK(plan.pairs == std::vector<std::pair<int, int>>{{1, 2}, {4, 3}, {2, 3}});
}

TEST_CASE("reverse_bfs emits each tree edge exactly once") {
    std::mt19937 rng(47);
    SparsityPattern p = ts::random_symmetric(24, 0.2, false, rng);
    AdjacencyGraph g = build_adjacency_graph(p);
    AcyclicColoringResult r = acyclic_coloring(g, natural_order(24));
    TreeSet trees = build_trees(g, r.forest);
    ReverseBfsPlan plan = reverse_bfs(trees, 24);
    REQUIRE(static_cast<int>(plan.pairs.size()) == g.num_edges);
    std::multiset<std::pair<int, int>> emitted, expected;
    for (auto [u, w] : plan.pairs) emitted.insert(std::minmax(u, w));
    for (auto [a, b] : edge_endpoints(g)) expected.insert(std::minmax(a, b));
    CHECK(emitted == expected);
}

TEST_CASE("classify splits star-coloring structures into hubs and trivia") {
    AdjacencyGraph g = build_adjacency_graph(ts::path_adjacency(4));
    StarColoringResult r = star_coloring(g, natural_order(4));
    StructureSets sets = classify_structures(g, r.stars);
    CHECK(sets.two_colored_trees.empty());
    CHECK(sets.hub_stars == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(sets.trivial_edges == std::vector<std::array<int, 3>>{{2, 4, 3}});
}

TEST_CASE("classify splits tree structures by shape") {
    AdjacencyGraph g = build_adjacency_graph(ts::path_adjacency(4));
    AcyclicColoringResult r = acyclic_coloring(g, natural_order(4));
    TreeSet trees = build_trees(g, r.forest);
    ReverseBfsPlan plan = reverse_bfs(trees, 4);
    StructureSets sets = classify_structures(trees, plan);
    CHECK(sets.two_colored_trees == std::vector<std::array<int, 3>>{{1, 1, 2}});
    CHECK(sets.hub_stars.empty());
    CHECK(sets.trivial_edges.empty());

    AdjacencyGraph g2 = build_adjacency_graph(ts::path_adjacency(2));
    AcyclicColoringResult r2 = acyclic_coloring(g2, natural_order(2));
    TreeSet trees2 = build_trees(g2, r2.forest);
    ReverseBfsPlan plan2 = reverse_bfs(trees2, 2);
    StructureSets sets2 = classify_structures(trees2, plan2);
    CHECK(sets2.trivial_edges == std::vector<std::array<int, 3>>{{1, 1, 2}});
}

TEST_CASE("post-processing neutralizes one color of the anti-diagonal") {
    SparsityPattern p = from_coordinates(
        4, 4, {{4, 1}, {3, 2}, {2, 3}, {1, 4}});
    AdjacencyGraph g = build_adjacency_graph(p);
    StarColoringResult r = star_coloring(g, natural_order(4));
    REQUIRE(r.coloring.color == std::vector<int>{1, 1, 2, 2});
    StructureSets sets = classify_structures(g, r.stars);
    REQUIRE(sets.trivial_edges.size() == 2);
    PostProcessResult post = post_process(g, r.coloring, sets);
    CHECK(post.num_colors == 1);
    CHECK(r.coloring.num_colors == 1);
    CHECK(r.coloring.color == std::vector<int>{1, 1, 0, 0});
    apply_trivial_hubs(r.stars, post.trivial_hubs);
    CHECK(r.stars.hub == std::vector<int>{-2, -1});
}

TEST_CASE("a full diagonal keeps every color alive") {
    AdjacencyGraph g = build_adjacency_graph(ts::path_adjacency(3, true));
    StarColoringResult r = star_coloring(g, natural_order(3));
    std::vector<int> before = r.coloring.color;
    StructureSets sets = classify_structures(g, r.stars);
    PostProcessResult post = post_process(g, r.coloring, sets);
    CHECK(r.coloring.color == before);
    CHECK(post.num_colors == r.coloring.num_colors);
}

TEST_CASE("post-processing the 4-path star coloring drops the last color") {
    AdjacencyGraph g = build_adjacency_graph(ts::path_adjacency(4));
    StarColoringResult r = star_coloring(g, natural_order(4));
    StructureSets sets = classify_structures(g, r.stars);
    PostProcessResult post = post_process(g, r.coloring, sets);
    CHECK(r.coloring.color == std::vector<int>{1, 2, 1, 0});
    CHECK(post.num_colors == 2);
    CHECK(post.trivial_hubs == std::vector<std::pair<int, int>>{{2, 3}});
}

TEST_CASE("trivial tree pairs are reoriented toward the chosen hub") {
    AdjacencyGraph g = build_adjacency_graph(ts::path_adjacency(2));
    AcyclicColoringResult r = acyclic_coloring(g, natural_order(2));
    TreeSet trees = build_trees(g, r.forest);
    ReverseBfsPlan plan = reverse_bfs(trees, 2);
    REQUIRE(plan.pairs == std::vector<std::pair<int, int>>{{1, 2}});
    StructureSets sets = classify_structures(trees, plan);
    PostProcessResult post = post_process(g, r.coloring, sets);
    CHECK(post.trivial_hubs == std::vector<std::pair<int, int>>{{1, 1}});
    apply_trivial_hubs(plan, trees, post.trivial_hubs);
    CHECK(plan.pairs == std::vector<std::pair<int, int>>{{2, 1}});
}

TEST_CASE("neutral preference picks the requested bipartite side") {
    // Augmented pattern of a 1x1 nonzero: one edge between column 1 and
    // row 2, no diagonal, so the hub choice is purely preference-driven.
    SparsityPattern p = from_coordinates(2, 2, {{2, 1}, {1, 2}});
    AdjacencyGraph g = build_adjacency_graph(p);
    StarColoringResult r = star_coloring(g, natural_order(2));
    StructureSets sets = classify_structures(g, r.stars);

    Coloring keep_cols = r.coloring;
    PostProcessResult for_rows =
        post_process(g, keep_cols, sets, NeutralPreference::neutralize_rows, 1);
    CHECK(for_rows.trivial_hubs == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(keep_cols.color[1 - 1] != 0);
    CHECK(keep_cols.color[2 - 1] == 0);

    Coloring keep_rows = r.coloring;
    PostProcessResult for_cols =
        post_process(g, keep_rows, sets, NeutralPreference::neutralize_columns, 1);
    CHECK(for_cols.trivial_hubs == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(keep_rows.color[1 - 1] == 0);
    CHECK(keep_rows.color[2 - 1] != 0);
}

TEST_CASE("post-processing never increases colors and keeps them contiguous") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        bool with_diag = trial % 4 == 0;
        SparsityPattern p = ts::random_symmetric(20, 0.15, with_diag, rng);
        AdjacencyGraph g = build_adjacency_graph(p);
        StarColoringResult r = star_coloring(g, natural_order(20));
        int before = r.coloring.num_colors;
        StructureSets sets = classify_structures(g, r.stars);
        PostProcessResult post = post_process(g, r.coloring, sets);
        CHECK(post.num_colors <= before);
        std::set<int> positive;
        for (int c : r.coloring.color) {
            CHECK(c >= 0);
            CHECK(c <= post.num_colors);
            if (c > 0) positive.insert(c);
        }
        CHECK(static_cast<int>(positive.size()) == post.num_colors);
    }
}
