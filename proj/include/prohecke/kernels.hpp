#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "prohecke/scalar.hpp"

// Data-parallel inner loops. Every kernel has a serial reference twin that
// must produce identical output; tests and the benchmark compare the two.
namespace prohecke::kernels {

// Subtract multiples of row `pivot_row` from every other row so that column
// `col` is zero outside the pivot. Rows are stored densely with stride `cols`.
void eliminate_column_serial(std::vector<Scalar>& data, size_t rows, size_t cols, size_t pivot_row, size_t col);
void eliminate_column_omp(std::vector<Scalar>& data, size_t rows, size_t cols, size_t pivot_row, size_t col);

// out[i] = f(i) for i in [0, n).
template <class T>
void map_index_serial(size_t n, std::vector<T>& out, const std::function<T(size_t)>& f) {
    out.resize(n);
    for (size_t i = 0; i < n; ++i) out[i] = f(i);
}
template <class T>
void map_index_omp(size_t n, std::vector<T>& out, const std::function<T(size_t)>& f) {
    out.resize(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < static_cast<long>(n); ++i) out[i] = f(static_cast<size_t>(i));
}

}  // namespace prohecke::kernels
