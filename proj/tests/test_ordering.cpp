#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "support/test_matrices.hpp"

using namespace sparsecolor;
namespace ts = testsupport;

namespace {

bool is_permutation_of_1_to_n(const std::vector<int>& order, int n) {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> seen(n + 1, 0);
    for (int v : order) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

TEST_CASE("natural order is the identity") {
    AdjacencyGraph g = build_adjacency_graph(ts::path_adjacency(5));
    CHECK(order_vertices(g, {OrderKind::natural, 0}) ==
          std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("random order is a seed-deterministic permutation") {
    AdjacencyGraph g = build_adjacency_graph(ts::path_adjacency(40));
    auto a = order_vertices(g, {OrderKind::random_order, 123});
    auto b = order_vertices(g, {OrderKind::random_order, 123});
    auto c = order_vertices(g, {OrderKind::random_order, 124});
    CHECK(a == b);
    CHECK(a != c);
    CHECK(is_permutation_of_1_to_n(a, 40));
    CHECK(is_permutation_of_1_to_n(c, 40));
}

TEST_CASE("largest first sorts by static degree with id tie-break") {
    AdjacencyGraph g = build_adjacency_graph(ts::path_adjacency(3));
    CHECK(order_vertices(g, {OrderKind::largest_first, 0}) ==
          std::vector<int>{2, 1, 3});
}

TEST_CASE("dynamic orders on the 3-path match hand execution") {
    AdjacencyGraph g = build_adjacency_graph(ts::path_adjacency(3));
    CHECK(order_vertices(g, {OrderKind::smallest_last, 0}) ==
          std::vector<int>{1, 2, 3});
    CHECK(order_vertices(g, {OrderKind::incidence_degree, 0}) ==
          std::vector<int>{3, 2, 1});
}

TEST_CASE("dynamic largest first extracts the hub of a star graph first") {
    AdjacencyGraph g = build_adjacency_graph(ts::star_adjacency(5));
    auto order = order_vertices(g, {OrderKind::dynamic_largest_first, 0});
    CHECK(order == std::vector<int>{1, 5, 4, 3, 2});
}

TEST_CASE("smallest last places the star center at the end of extraction") {
    // Stack tie-break: once the center's remaining degree drops to 1 it is
    // the most recent entry in bucket 1, so it is extracted before the last
    // leaf and lands second in the permutation.
    AdjacencyGraph g = build_adjacency_graph(ts::star_adjacency(5));
    auto order = order_vertices(g, {OrderKind::smallest_last, 0});
    CHECK(order == std::vector<int>{2, 1, 3, 4, 5});
}

TEST_CASE("all criteria yield permutations on random graphs, both backends") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        SparsityPattern p = ts::random_symmetric(25, 0.2, false, rng);
        AdjacencyGraph g = build_adjacency_graph(p);
        for (OrderKind kind :
             {OrderKind::natural, OrderKind::random_order, OrderKind::largest_first,
              OrderKind::smallest_last, OrderKind::incidence_degree,
              OrderKind::dynamic_largest_first}) {
            for (BucketBackend backend : {BucketBackend::stack, BucketBackend::vector}) {
                auto order = order_vertices(g, {kind, 9}, backend);
                CHECK(is_permutation_of_1_to_n(order, 25));
            }
        }
    }
}

TEST_CASE("bipartite side orderings use distance-2 degrees") {
    SparsityPattern p = from_coordinates(2, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}});
    BipartiteGraph bg = build_bipartite_graph(p);
    CHECK(order_vertices(bg, Side::columns, {OrderKind::largest_first, 0}) ==
          std::vector<int>{2, 1, 3});
    CHECK(order_vertices(bg, Side::rows, {OrderKind::natural, 0}) ==
          std::vector<int>{1, 2});
    for (OrderKind kind : {OrderKind::smallest_last, OrderKind::incidence_degree,
                           OrderKind::dynamic_largest_first}) {
        auto order = order_vertices(bg, Side::columns, {kind, 0});
        CHECK(is_permutation_of_1_to_n(order, 3));
    }
}

TEST_CASE("single vertex shifts between empty buckets") {
    std::vector<int> degrees{0};
    VectorDegreeBuckets vb(degrees, 1);
    vb.shift_up(1);
    CHECK(vb.bucket_members(0).empty());
    CHECK(vb.bucket_members(1) == std::vector<int>{1});
    StackDegreeBuckets sb(degrees, 1);
    sb.shift_up(1);
    CHECK(sb.bucket_members(0).empty());
    CHECK(sb.bucket_members(1) == std::vector<int>{1});
}

TEST_CASE("vector bucket shift inserts at the left edge of the next bucket") {
    std::vector<int> degrees{0, 0, 1};  // a=1, b=2, c=3
    VectorDegreeBuckets vb(degrees, 2);
    vb.shift_up(2);
    CHECK(vb.bucket_members(0) == std::vector<int>{1});
    CHECK(vb.bucket_members(1) == std::vector<int>{2, 3});
}

TEST_CASE("bucket shifts reject out-of-range moves") {
    std::vector<int> degrees{0, 2};
    StackDegreeBuckets sb(degrees, 2);
    CHECK_THROWS_AS(sb.shift_down(1), std::out_of_range);
    CHECK_THROWS_AS(sb.shift_up(2), std::out_of_range);
    VectorDegreeBuckets vb(degrees, 2);
    CHECK_THROWS_AS(vb.shift_down(1), std::out_of_range);
    CHECK_THROWS_AS(vb.shift_up(2), std::out_of_range);
}

TEST_CASE("bucket backends agree on per-degree sets under random shifts") {
    const int n = 100, maxd = 20;
    std::mt19937 rng(17);
    std::vector<int> degrees(n);
    std::uniform_int_distribution<int> d0(0, maxd);
    for (int& d : degrees) d = d0(rng);
    StackDegreeBuckets sb(degrees, maxd);
    VectorDegreeBuckets vb(degrees, maxd);
    std::uniform_int_distribution<int> pick(1, n);
    std::bernoulli_distribution up(0.5);
    for (int step = 0; step < 1000; ++step) {
        int v = pick(rng);
        ShiftDirection dir = up(rng) ? ShiftDirection::up : ShiftDirection::down;
        if (dir == ShiftDirection::up && sb.degree[v - 1] == maxd)
            dir = ShiftDirection::down;
        else if (dir == ShiftDirection::down && sb.degree[v - 1] == 0)
            dir = ShiftDirection::up;
        bucket_shift(sb, v, dir);
        bucket_shift(vb, v, dir);
        for (int d = 0; d <= maxd; ++d) {
            auto s = sb.bucket_members(d);
            auto w = vb.bucket_members(d);
            std::sort(s.begin(), s.end());
            std::sort(w.begin(), w.end());
            REQUIRE(s == w);
        }
    }
}

TEST_CASE("backends may order ties differently but both color validly") {
    std::mt19937 rng(23);
    SparsityPattern p = ts::random_symmetric(40, 0.15, false, rng);
    AdjacencyGraph g = build_adjacency_graph(p);
    for (OrderKind kind : {OrderKind::smallest_last, OrderKind::incidence_degree,
                           OrderKind::dynamic_largest_first}) {
        auto stack_order = order_vertices(g, {kind, 0}, BucketBackend::stack);
        auto vector_order = order_vertices(g, {kind, 0}, BucketBackend::vector);
        CHECK(is_permutation_of_1_to_n(stack_order, 40));
        CHECK(is_permutation_of_1_to_n(vector_order, 40));
    }
}
