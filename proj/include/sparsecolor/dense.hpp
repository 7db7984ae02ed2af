#pragma once

#include <vector>

namespace sparsecolor {

// Column-major dense matrix with 1-based accessors.
template <typename T>
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, T{}) {}

    int linear_index(int i, int j) const { return (j - 1) * rows + i; }
    T& at(int i, int j) { return data[linear_index(i, j) - 1]; }
    const T& at(int i, int j) const { return data[linear_index(i, j) - 1]; }
};

}  // namespace sparsecolor
