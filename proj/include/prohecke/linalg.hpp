#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "prohecke/scalar.hpp"

namespace prohecke {

using Vec = std::vector<Scalar>;

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(Field f, size_t rows, size_t cols);
    static ExactMatrix identity(const Field& f, size_t n);
    // Validates that every entry lies in f.
    static ExactMatrix from_rows(const Field& f, const std::vector<Vec>& rows);
    static ExactMatrix from_columns(const Field& f, const std::vector<Vec>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field& field() const { return field_; }
    const Scalar& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    Scalar& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    std::vector<Scalar>& raw() { return data_; }
    Vec row(size_t i) const;
    Vec col(size_t j) const;
    Vec apply(const Vec& v) const;

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix transpose() const;
    bool is_zero() const;
    bool operator==(const ExactMatrix& o) const;
    // Throws if some entry is not in field().
    void check_field() const;

private:
    Field field_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

enum class Exec { Serial, Parallel };

struct Echelon {
    ExactMatrix reduced;          // reduced row echelon form
    std::vector<size_t> pivots;   // pivot column of each nonzero row
};

// Pivoting: first nonzero column, then first row at or below the current one.
Echelon reduced_echelon(ExactMatrix m, Exec exec = Exec::Parallel);

struct RankKernel {
    size_t rank = 0;
    std::vector<Vec> kernel_basis;  // rows of a reduced echelon matrix
};

RankKernel rank_and_kernel(const ExactMatrix& m, Exec exec = Exec::Parallel);
size_t rank(const ExactMatrix& m, Exec exec = Exec::Parallel);
// Some x with A x = b, or nullopt.
std::optional<Vec> solve(const ExactMatrix& a, const Vec& b);

Vec zero_vec(const Field& f, size_t n);
bool is_zero_vec(const Vec& v);
Vec axpy(const Scalar& a, const Vec& x, const Vec& y);  // a*x + y
Vec scale(const Scalar& a, const Vec& x);

// Incrementally grown row space, kept in reduced echelon form.
class EchelonBasis {
public:
    EchelonBasis(Field f, size_t dim) : field_(std::move(f)), dim_(dim) {}
    // Reduces v against the basis; returns the residual.
    Vec reduce(Vec v) const;
    // Adds v; returns true iff the span grew.
    bool insert(const Vec& v);
    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
    size_t size() const { return rows_.size(); }
    size_t dim() const { return dim_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

private:
    Field field_;
    size_t dim_;
    std::vector<Vec> rows_;
    std::vector<size_t> pivots_;
};

using SparseVec = std::map<size_t, Scalar>;

void sparse_axpy(const Scalar& a, const SparseVec& x, SparseVec& y);

// Semi-echelon row space over sparse rows; pivot is the smallest column.
class SparseEchelon {
public:
    explicit SparseEchelon(Field f) : field_(std::move(f)) {}
    SparseVec reduce(SparseVec v) const;
    bool insert(SparseVec v);
    size_t rank() const { return rows_.size(); }

private:
    Field field_;
    std::map<size_t, SparseVec> rows_;  // pivot column -> row with unit pivot
};

// dim of k^cols modulo the span of rels. Relations with at most two terms are
// contracted by a weighted union-find before the rest is eliminated.
size_t quotient_dimension(const Field& f, size_t cols, const std::vector<SparseVec>& rels);

}  // namespace prohecke
