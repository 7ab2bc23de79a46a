#include "prohecke/kernels.hpp"

namespace prohecke::kernels {

void eliminate_column_serial(std::vector<Scalar>& data, size_t rows, size_t cols, size_t pivot_row, size_t col) {
    const Scalar* piv = &data[pivot_row * cols];
    for (size_t r = 0; r < rows; ++r) {
        if (r == pivot_row) continue;
        Scalar* row = &data[r * cols];
        if (row[col].is_zero()) continue;
        Scalar f = row[col];
        for (size_t j = col; j < cols; ++j)
            if (!piv[j].is_zero()) row[j] -= f * piv[j];
    }
}

}  // namespace prohecke::kernels
