#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sparsecolor/coloring.hpp"
#include "sparsecolor/graph.hpp"
#include "sparsecolor/pattern.hpp"

namespace sparsecolor {

struct CheckResult {
    bool ok = true;
    std::string message;
};

namespace detail {

inline void fail(std::string* msg, const std::string& text) {
    if (msg) *msg = text;
}

inline bool proper_ok(const AdjacencyGraph& g, const std::vector<int>& colors,
                      std::string* msg) {
    for (int v = 1; v <= g.num_vertices(); ++v) {
        if (colors[v - 1] < 1) {
            fail(msg, "vertex " + std::to_string(v) + " is uncolored");
            return false;
        }
    }
    for (int v = 1; v <= g.num_vertices(); ++v) {
        for (int w : g.pattern.column(v)) {
            if (w != v && colors[w - 1] == colors[v - 1]) {
                fail(msg, "adjacent vertices " + std::to_string(v) + " and " +
                              std::to_string(w) + " share color " +
                              std::to_string(colors[v - 1]));
                return false;
            }
        }
    }
    return true;
}

// No path on four vertices may alternate between two colors.
inline bool star_ok(const AdjacencyGraph& g,
                    const std::vector<std::pair<int, int>>& ends,
                    const std::vector<int>& colors, std::string* msg) {
    if (!proper_ok(g, colors, msg)) return false;
    for (auto [a, b] : ends) {
        for (int v : g.pattern.column(a)) {
            if (v == a || v == b || colors[v - 1] != colors[b - 1]) continue;
            for (int y : g.pattern.column(b)) {
                if (y == b || y == a || y == v || colors[y - 1] != colors[a - 1])
                    continue;
                fail(msg, "two-colored path " + std::to_string(v) + "-" +
                              std::to_string(a) + "-" + std::to_string(b) + "-" +
                              std::to_string(y));
                return false;
            }
        }
    }
    return true;
}

// No cycle may use only two colors: union-find per color pair.
inline bool acyclic_ok(const AdjacencyGraph& g,
                       const std::vector<std::pair<int, int>>& ends,
                       const std::vector<int>& colors, std::string* msg) {
    if (!proper_ok(g, colors, msg)) return false;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(ends.size());
    for (auto [a, b] : ends)
        pairs.emplace_back(std::min(colors[a - 1], colors[b - 1]),
                           std::max(colors[a - 1], colors[b - 1]));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    int nv = g.num_vertices();
    std::vector<int> parent(nv + 1, 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [c1, c2] : pairs) {
        std::vector<int> touched;
        for (auto [a, b] : ends) {
            auto [e1, e2] = std::minmax(colors[a - 1], colors[b - 1]);
            if (e1 != c1 || e2 != c2) continue;
            if (parent[a] == 0) { parent[a] = a; touched.push_back(a); }
            if (parent[b] == 0) { parent[b] = b; touched.push_back(b); }
            int ra = find(a), rb = find(b);
            if (ra == rb) {
                fail(msg, "cycle using only colors " + std::to_string(c1) +
                              " and " + std::to_string(c2) + " through edge " +
                              std::to_string(a) + "-" + std::to_string(b));
                return false;
            }
            parent[ra] = rb;
        }
        for (int x : touched) parent[x] = 0;
    }
    return true;
}

// Post-processed star colorings with a neutral color: every edge keeps a
// colored endpoint, neighbors of a neutral vertex have pairwise distinct
// colors, and no fully colored walk v-a-b-y alternates between two colors.
// The witnesses v and y may coincide (a monochromatic triangle); only v = b
// and y = a are excluded, matching the two blocked recovery directions.
inline bool no_zigzag_ok(const AdjacencyGraph& g,
                         const std::vector<std::pair<int, int>>& ends,
                         const std::vector<int>& colors, std::string* msg) {
    for (auto [a, b] : ends) {
        if (colors[a - 1] == 0 && colors[b - 1] == 0) {
            fail(msg, "edge " + std::to_string(a) + "-" + std::to_string(b) +
                          " has two neutral endpoints");
            return false;
        }
    }
    int max_color = 0;
    for (int c : colors) max_color = std::max(max_color, c);
    std::vector<int> seen(max_color + 1, 0);
    for (int v = 1; v <= g.num_vertices(); ++v) {
        if (colors[v - 1] != 0) continue;
        for (int w : g.pattern.column(v)) {
            if (w == v) continue;
            int c = colors[w - 1];
            if (seen[c] == v) {
                fail(msg, "neutral vertex " + std::to_string(v) +
                              " has two neighbors of color " + std::to_string(c));
                return false;
            }
            seen[c] = v;
        }
    }
    for (auto [a, b] : ends) {
        if (colors[a - 1] == 0 || colors[b - 1] == 0) continue;
        for (int v : g.pattern.column(a)) {
            if (v == a || v == b || colors[v - 1] != colors[b - 1]) continue;
            for (int y : g.pattern.column(b)) {
                if (y == b || y == a || colors[y - 1] != colors[a - 1]) continue;
                fail(msg, "color-alternating walk " + std::to_string(v) + "-" +
                              std::to_string(a) + "-" + std::to_string(b) + "-" +
                              std::to_string(y));
                return false;
            }
        }
    }
    return true;
}

// Every stored entry of a symmetric matrix must be readable from one side:
// one endpoint's column is non-neutral and alone in its group on the other
// endpoint's row.
inline bool nsop_ok(const SparsityPattern& p, const std::vector<int>& colors,
                    std::string* msg) {
    int nnz = p.nnz();
    std::vector<char> unique_here(nnz, 0);
    std::vector<int> mirror(nnz, 0), offsets(p.n_cols, 0);
    int max_color = 0;
    for (int c : colors) max_color = std::max(max_color, c);
    std::vector<int> cnt(max_color + 1, 0);
    for (int j = 1; j <= p.n_cols; ++j) {
        for (int r : p.column(j))
            if (colors[r - 1] > 0) cnt[colors[r - 1]] += 1;
        for (int pos = p.col_ptr[j - 1]; pos < p.col_ptr[j]; ++pos) {
            int r = p.row_idx[pos - 1];
            unique_here[pos - 1] =
                colors[r - 1] > 0 && cnt[colors[r - 1]] == 1 ? 1 : 0;
            if (r > j) {
                int q = p.col_ptr[r - 1] + offsets[r - 1];
                mirror[pos - 1] = q;
                mirror[q - 1] = pos;
                offsets[r - 1] += 1;
            } else if (r == j) {
                mirror[pos - 1] = pos;
            }
        }
        for (int r : p.column(j))
            if (colors[r - 1] > 0) cnt[colors[r - 1]] = 0;
    }
    for (int j = 1; j <= p.n_cols; ++j) {
        for (int pos = p.col_ptr[j - 1]; pos < p.col_ptr[j]; ++pos) {
            if (!unique_here[pos - 1] && !unique_here[mirror[pos - 1] - 1]) {
                fail(msg, "entry (" + std::to_string(p.row_idx[pos - 1]) + ", " +
                              std::to_string(j) + ") is not recoverable");
                return false;
            }
        }
    }
    return true;
}

inline bool distance2_ok(const SparsityPattern& p, Side side,
                         const std::vector<int>& colors, std::string* msg) {
    int n_items = side == Side::columns ? p.n_cols : p.n_rows;
    for (int v = 1; v <= n_items; ++v) {
        if (colors[v - 1] < 1) {
            fail(msg, "item " + std::to_string(v) + " is uncolored");
            return false;
        }
    }
    CsrPattern csr;
    if (side == Side::columns) csr = transpose_pattern(p);
    int n_lines = side == Side::columns ? p.n_rows : p.n_cols;
    std::vector<int> seen(n_items + 1, 0), owner(n_items + 1, 0);
    for (int line = 1; line <= n_lines; ++line) {
        auto items = side == Side::columns ? csr.row(line) : p.column(line);
        for (int v : items) {
            int c = colors[v - 1];
            if (seen[c] == line && owner[c] != v) {
                fail(msg, (side == Side::columns ? "columns " : "rows ") +
                              std::to_string(owner[c]) + " and " + std::to_string(v) +
                              " share color " + std::to_string(c) + " and " +
                              (side == Side::columns ? "row " : "column ") +
                              std::to_string(line));
                return false;
            }
            seen[c] = line;
            owner[c] = v;
        }
    }
    return true;
}

}  // namespace detail

inline CheckResult check_distance2(const SparsityPattern& p, Side side,
                                   const std::vector<int>& colors) {
    CheckResult r;
    r.ok = detail::distance2_ok(p, side, colors, &r.message);
    return r;
}

inline CheckResult check_star(const AdjacencyGraph& g, const std::vector<int>& colors) {
    CheckResult r;
    auto ends = edge_endpoints(g);
    r.ok = detail::star_ok(g, ends, colors, &r.message);
    return r;
}

inline CheckResult check_acyclic(const AdjacencyGraph& g, const std::vector<int>& colors) {
    CheckResult r;
    auto ends = edge_endpoints(g);
    r.ok = detail::acyclic_ok(g, ends, colors, &r.message);
    return r;
}

inline CheckResult check_no_zigzag(const AdjacencyGraph& g, const std::vector<int>& colors) {
    CheckResult r;
    auto ends = edge_endpoints(g);
    r.ok = detail::no_zigzag_ok(g, ends, colors, &r.message);
    return r;
}

inline CheckResult check_nsop(const SparsityPattern& p, const std::vector<int>& colors) {
    if (!is_structurally_symmetric(p))
        throw std::invalid_argument("check_nsop: pattern must be symmetric");
    CheckResult r;
    r.ok = detail::nsop_ok(p, colors, &r.message);
    return r;
}

enum class ColoringModel { star, acyclic };

namespace detail {

struct BruteForce {
    const AdjacencyGraph& g;
    const std::vector<std::pair<int, int>>& ends;
    ColoringModel model;
    std::vector<int> colors;

    bool assign(int v, int max_used, int k) {
        if (v > g.num_vertices()) {
            return model == ColoringModel::star ? star_ok(g, ends, colors, nullptr)
                                                : acyclic_ok(g, ends, colors, nullptr);
        }
        int limit = std::min(max_used + 1, k);
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            for (int w : g.pattern.column(v)) {
                if (w < v && colors[w - 1] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;  // both models require a proper coloring
            colors[v - 1] = c;
            if (assign(v + 1, std::max(max_used, c), k)) return true;
        }
        return false;
    }
};

}  // namespace detail

// Exhaustive minimum over canonical color assignments; intended for small
// graphs (the search is Bell-number bounded).
inline int min_colors_bruteforce(const AdjacencyGraph& g, ColoringModel model) {
    int n = g.num_vertices();
    if (n == 0) return 0;
    auto ends = edge_endpoints(g);
    detail::BruteForce search{g, ends, model, std::vector<int>(n, 0)};
    for (int k = 1; k <= n; ++k) {
        if (search.assign(1, 0, k)) return k;
    }
    return n;
}

inline int min_colors_bruteforce(const SparsityPattern& p, Side side) {
    int n = side == Side::columns ? p.n_cols : p.n_rows;
    if (n == 0) return 0;
    std::vector<int> colors(n, 0);
    struct Search {
        const SparsityPattern& p;
        Side side;
        std::vector<int>& colors;
        bool assign(int v, int max_used, int k) {
            if (v > static_cast<int>(colors.size()))
                return detail::distance2_ok(p, side, colors, nullptr);
            int limit = std::min(max_used + 1, k);
            for (int c = 1; c <= limit; ++c) {
                colors[v - 1] = c;
                if (assign(v + 1, std::max(max_used, c), k)) return true;
            }
            return false;
        }
    } search{p, side, colors};
    for (int k = 1; k <= n; ++k) {
        if (search.assign(1, 0, k)) return k;
    }
    return n;
}

}  // namespace sparsecolor
