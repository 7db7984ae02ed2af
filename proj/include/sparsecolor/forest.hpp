#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace sparsecolor {

// Union-find over edge indices; tracks the number of disjoint trees.
struct Forest {
    std::vector<int> parents;
    std::vector<int> ranks;
    int nt = 0;

    int num_elements() const { return static_cast<int>(parents.size()); }

    int find_root(int index) {
        int root = index;
        while (parents[root - 1] != root) root = parents[root - 1];
        while (parents[index - 1] != root) {
            int next = parents[index - 1];
            parents[index - 1] = root;
            index = next;
        }
        return root;
    }

    // Union by rank; on equal ranks root1 absorbs root2 and gains rank.
    void root_union(int root1, int root2) {
        if (ranks[root1 - 1] < ranks[root2 - 1]) std::swap(root1, root2);
        else if (ranks[root1 - 1] == ranks[root2 - 1]) ranks[root1 - 1] += 1;
        parents[root2 - 1] = root1;
        nt -= 1;
    }
};

inline Forest create_forest(int ne) {
    Forest f;
    f.parents.resize(ne);
    std::iota(f.parents.begin(), f.parents.end(), 1);
    f.ranks.assign(ne, 0);
    f.nt = ne;
    return f;
}

}  // namespace sparsecolor
