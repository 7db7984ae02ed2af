#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sparsecolor/coloring.hpp"
#include "sparsecolor/graph.hpp"

namespace sparsecolor {

enum class OrderKind {
    natural,
    random_order,
    largest_first,
    smallest_last,
    incidence_degree,
    dynamic_largest_first
};

struct OrderingCriterion {
    OrderKind kind = OrderKind::natural;
    std::uint64_t seed = 0;
};

enum class BucketBackend { stack, vector };
enum class ShiftDirection { up, down };

// Degree buckets as one vector of int vectors. Removal swaps with the bucket
// tail; extraction pops the most recently entered vertex (stack semantics).
struct StackDegreeBuckets {
    std::vector<std::vector<int>> buckets;
    std::vector<int> degree;
    std::vector<int> position;  // index within the bucket
    int low_hint = 0;
    int high_hint = 0;

    StackDegreeBuckets(const std::vector<int>& degrees, int max_degree) {
        buckets.resize(max_degree + 1);
        degree = degrees;
        position.resize(degrees.size());
        for (int v = 1; v <= static_cast<int>(degrees.size()); ++v) {
            position[v - 1] = static_cast<int>(buckets[degrees[v - 1]].size());
            buckets[degrees[v - 1]].push_back(v);
        }
        high_hint = max_degree;
    }

    int max_degree() const { return static_cast<int>(buckets.size()) - 1; }

    void remove(int v) {
        std::vector<int>& b = buckets[degree[v - 1]];
        int p = position[v - 1];
        b[p] = b.back();
        position[b[p] - 1] = p;
        b.pop_back();
    }

    void shift_up(int v) {
        if (degree[v - 1] + 1 > max_degree())
            throw std::out_of_range("bucket_shift: above max degree");
        remove(v);
        degree[v - 1] += 1;
        position[v - 1] = static_cast<int>(buckets[degree[v - 1]].size());
        buckets[degree[v - 1]].push_back(v);
        high_hint = std::max(high_hint, degree[v - 1]);
    }

    void shift_down(int v) {
        if (degree[v - 1] == 0)
            throw std::out_of_range("bucket_shift: below degree 0");
        remove(v);
        degree[v - 1] -= 1;
        position[v - 1] = static_cast<int>(buckets[degree[v - 1]].size());
        buckets[degree[v - 1]].push_back(v);
        low_hint = std::min(low_hint, degree[v - 1]);
    }

    int extract_lowest() {
        while (buckets[low_hint].empty()) ++low_hint;
        int v = buckets[low_hint].back();
        buckets[low_hint].pop_back();
        return v;
    }

    int extract_highest() {
        while (buckets[high_hint].empty()) --high_hint;
        int v = buckets[high_hint].back();
        buckets[high_hint].pop_back();
        return v;
    }

    std::vector<int> bucket_members(int d) const { return buckets[d]; }
};

// Degree buckets as contiguous intervals of one shared vector. A shift moves
// a vertex to the adjacent bucket: the source shrinks from the right (up) or
// left (down) and the destination grows toward it. Extraction from the right
// end can leave gaps between intervals, so insertion slots are always taken
// from the destination interval and an empty destination is first relocated
// next to the source.
struct VectorDegreeBuckets {
    std::vector<int> bucketvec;
    std::vector<std::pair<int, int>> bucketlims;  // 1-based [first, last]
    std::vector<int> degree;
    std::vector<int> position;  // absolute 1-based slot in bucketvec
    int low_hint = 0;
    int high_hint = 0;

    VectorDegreeBuckets(const std::vector<int>& degrees, int max_degree) {
        int n = static_cast<int>(degrees.size());
        degree = degrees;
        bucketvec.assign(n, 0);
        position.assign(n, 0);
        std::vector<int> count(max_degree + 1, 0);
        for (int d : degrees) count[d] += 1;
        bucketlims.resize(max_degree + 1);
        int start = 1;
        for (int d = 0; d <= max_degree; ++d) {
            bucketlims[d] = {start, start + count[d] - 1};
            start += count[d];
        }
        std::vector<int> cursor(max_degree + 1);
        for (int d = 0; d <= max_degree; ++d) cursor[d] = bucketlims[d].first;
        for (int v = 1; v <= n; ++v) {
            int d = degrees[v - 1];
            bucketvec[cursor[d] - 1] = v;
            position[v - 1] = cursor[d];
            cursor[d] += 1;
        }
        high_hint = max_degree;
    }

    int max_degree() const { return static_cast<int>(bucketlims.size()) - 1; }

    bool bucket_empty(int d) const {
        return bucketlims[d].first > bucketlims[d].second;
    }

    void shift_up(int v) {
        int d = degree[v - 1];
        if (d + 1 > max_degree())
            throw std::out_of_range("bucket_shift: above max degree");
        auto [a, b] = bucketlims[d];
        int w = bucketvec[b - 1];
        bucketvec[position[v - 1] - 1] = w;
        position[w - 1] = position[v - 1];
        bucketlims[d] = {a, b - 1};
        if (bucket_empty(d + 1)) bucketlims[d + 1] = {b + 1, b};
        int slot = bucketlims[d + 1].first - 1;
        bucketvec[slot - 1] = v;
        position[v - 1] = slot;
        bucketlims[d + 1].first = slot;
        degree[v - 1] = d + 1;
        high_hint = std::max(high_hint, d + 1);
    }

    void shift_down(int v) {
        int d = degree[v - 1];
        if (d == 0) throw std::out_of_range("bucket_shift: below degree 0");
        auto [a, b] = bucketlims[d];
        int w = bucketvec[a - 1];
        bucketvec[position[v - 1] - 1] = w;
        position[w - 1] = position[v - 1];
        bucketlims[d] = {a + 1, b};
        if (bucket_empty(d - 1)) bucketlims[d - 1] = {a, a - 1};
        int slot = bucketlims[d - 1].second + 1;
        bucketvec[slot - 1] = v;
        position[v - 1] = slot;
        bucketlims[d - 1].second = slot;
        degree[v - 1] = d - 1;
        low_hint = std::min(low_hint, d - 1);
    }

    int extract(int d) {
        auto [a, b] = bucketlims[d];
        int v = bucketvec[b - 1];
        bucketlims[d] = {a, b - 1};
        return v;
    }

    int extract_lowest() {
        while (bucket_empty(low_hint)) ++low_hint;
        return extract(low_hint);
    }

    int extract_highest() {
        while (bucket_empty(high_hint)) --high_hint;
        return extract(high_hint);
    }

    std::vector<int> bucket_members(int d) const {
        auto [a, b] = bucketlims[d];
        if (a > b) return {};
        return {bucketvec.begin() + (a - 1), bucketvec.begin() + b};
    }
};

template <typename Buckets>
void bucket_shift(Buckets& b, int v, ShiftDirection dir) {
    if (dir == ShiftDirection::up) b.shift_up(v);
    else b.shift_down(v);
}

inline std::vector<int> natural_order(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    return order;
}

inline std::vector<int> random_order(int n, std::uint64_t seed) {
    std::vector<int> order = natural_order(n);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n - 1; ++i) {
        int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(n - i));
        std::swap(order[i], order[j]);
    }
    return order;
}

namespace detail {

// Shared dynamic-degree framework. for_each_neighbor(v, f) must call f once
// per distinct ordering-relevant neighbor of v.
template <typename Buckets, typename ForEach>
std::vector<int> dynamic_degree_order(int n, ForEach&& for_each_neighbor,
                                      OrderKind kind) {
    std::vector<int> degrees(n, 0);
    if (kind != OrderKind::incidence_degree) {
        for (int v = 1; v <= n; ++v) {
            int d = 0;
            for_each_neighbor(v, [&](int) { d += 1; });
            degrees[v - 1] = d;
        }
    }
    Buckets buckets(degrees, n > 0 ? n - 1 : 0);
    std::vector<int> order(n, 0);
    std::vector<char> placed(n, 0);
    bool backward = kind == OrderKind::smallest_last;
    for (int step = 0; step < n; ++step) {
        int v = backward ? buckets.extract_lowest() : buckets.extract_highest();
        order[backward ? n - 1 - step : step] = v;
        placed[v - 1] = 1;
        for_each_neighbor(v, [&](int w) {
            if (placed[w - 1]) return;
            if (kind == OrderKind::incidence_degree) buckets.shift_up(w);
            else buckets.shift_down(w);
        });
    }
    return order;
}

template <typename ForEach>
std::vector<int> ordered_by(int n, ForEach&& for_each_neighbor,
                            const OrderingCriterion& crit, BucketBackend backend) {
    switch (crit.kind) {
        case OrderKind::natural:
            return natural_order(n);
        case OrderKind::random_order:
            return random_order(n, crit.seed);
        case OrderKind::largest_first: {
            std::vector<int> order = natural_order(n);
            std::vector<int> degrees(n, 0);
            for (int v = 1; v <= n; ++v)
                for_each_neighbor(v, [&](int) { degrees[v - 1] += 1; });
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                return degrees[a - 1] != degrees[b - 1]
                           ? degrees[a - 1] > degrees[b - 1]
                           : a < b;
            });
            return order;
        }
        default:
            if (backend == BucketBackend::stack)
                return dynamic_degree_order<StackDegreeBuckets>(
                    n, for_each_neighbor, crit.kind);
            return dynamic_degree_order<VectorDegreeBuckets>(
                n, for_each_neighbor, crit.kind);
    }
}

}  // namespace detail

// Orders the vertices of an adjacency graph by the requested criterion.
inline std::vector<int> order_vertices(const AdjacencyGraph& g,
                                       const OrderingCriterion& crit,
                                       BucketBackend backend = BucketBackend::stack) {
    auto for_each = [&](int v, auto&& f) { g.for_each_neighbor(v, f); };
    return detail::ordered_by(g.num_vertices(), for_each, crit, backend);
}

// Orders one side of a bipartite graph; degree-based criteria use the
// distance-2 degree (distinct same-side vertices sharing a neighbor).
inline std::vector<int> order_vertices(const BipartiteGraph& bg, Side side,
                                       const OrderingCriterion& crit,
                                       BucketBackend backend = BucketBackend::stack) {
    int n_items = side == Side::columns ? bg.num_cols() : bg.num_rows();
    std::vector<int> mark(n_items + 1, 0);
    int stamp = 0;
    auto for_each = [&, stamp](int v, auto&& f) mutable {
        ++stamp;
        mark[v] = stamp;
        auto mid = side == Side::columns ? bg.col_neighbors(v) : bg.row_neighbors(v);
        for (int w : mid) {
            auto far = side == Side::columns ? bg.row_neighbors(w) : bg.col_neighbors(w);
            for (int x : far) {
                if (mark[x] != stamp) {
                    mark[x] = stamp;
                    f(x);
                }
            }
        }
    };
    return detail::ordered_by(n_items, for_each, crit, backend);
}

}  // namespace sparsecolor
