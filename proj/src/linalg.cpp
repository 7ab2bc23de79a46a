#include "prohecke/linalg.hpp"

#include <stdexcept>

#include "prohecke/kernels.hpp"

namespace prohecke {

ExactMatrix::ExactMatrix(Field f, size_t rows, size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field_)) {}

ExactMatrix ExactMatrix::identity(const Field& f, size_t n) {
    ExactMatrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const Field& f, const std::vector<Vec>& rows) {
    size_t c = rows.empty() ? 0 : rows[0].size();
    ExactMatrix m(f, rows.size(), c);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    m.check_field();
    return m;
}

ExactMatrix ExactMatrix::from_columns(const Field& f, const std::vector<Vec>& cols) {
    return from_rows(f, cols).transpose();
}

void ExactMatrix::check_field() const {
    for (const auto& s : data_)
        if (!s.in_field(field_)) throw std::invalid_argument("matrix entries lie in different fields");
}

Vec ExactMatrix::row(size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec ExactMatrix::col(size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

Vec ExactMatrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    Vec out(rows_, Scalar::zero(field_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    if (field_ != o.field_) throw std::invalid_argument("matrix product across fields");
    ExactMatrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool ExactMatrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

Echelon reduced_echelon(ExactMatrix m, Exec exec) {
    const size_t rows = m.rows(), cols = m.cols();
    Echelon e;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Scalar inv = m.at(r, c).inv();
        for (size_t j = c; j < cols; ++j)
            if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
        if (exec == Exec::Parallel) kernels::eliminate_column_omp(m.raw(), rows, cols, r, c);
        else kernels::eliminate_column_serial(m.raw(), rows, cols, r, c);
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

RankKernel rank_and_kernel(const ExactMatrix& m, Exec exec) {
    m.check_field();
    Echelon e = reduced_echelon(m, exec);
    RankKernel out;
    out.rank = e.pivots.size();
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> raw;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(f, m.cols());
        v[free] = Scalar::one(f);
        for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced.at(i, free);
        raw.push_back(std::move(v));
    }
    if (!raw.empty()) {
        Echelon k = reduced_echelon(ExactMatrix::from_rows(f, raw), exec);
        for (size_t i = 0; i < k.pivots.size(); ++i) out.kernel_basis.push_back(k.reduced.row(i));
    }
    return out;
}

size_t rank(const ExactMatrix& m, Exec exec) {
    m.check_field();
    return reduced_echelon(m, exec).pivots.size();
}

std::optional<Vec> solve(const ExactMatrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch in solve");
    ExactMatrix aug(a.field(), a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Echelon e = reduced_echelon(aug, Exec::Serial);
    Vec x = zero_vec(a.field(), a.cols());
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == a.cols()) return std::nullopt;
        x[e.pivots[i]] = e.reduced.at(i, a.cols());
    }
    return x;
}

Vec zero_vec(const Field& f, size_t n) { return Vec(n, Scalar::zero(f)); }

bool is_zero_vec(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Vec axpy(const Scalar& a, const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch in axpy");
    Vec r = y;
    if (a.is_zero()) return r;
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) r[i] += a * x[i];
    return r;
}

Vec scale(const Scalar& a, const Vec& x) {
    Vec r;
    r.reserve(x.size());
    for (const auto& s : x) r.push_back(a * s);
    return r;
}

Vec EchelonBasis::reduce(Vec v) const {
    if (v.size() != dim_) throw std::invalid_argument("dimension mismatch in echelon basis");
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = v[pivots_[i]];
        if (c.is_zero()) continue;
        Scalar f = c;
        const Vec& row = rows_[i];
        for (size_t j = pivots_[i]; j < dim_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
    return v;
}

bool EchelonBasis::insert(const Vec& v) {
    Vec r = reduce(v);
    size_t piv = 0;
    while (piv < dim_ && r[piv].is_zero()) ++piv;
    if (piv == dim_) return false;
    Scalar inv = r[piv].inv();
    for (size_t j = piv; j < dim_; ++j)
        if (!r[j].is_zero()) r[j] *= inv;
    // Keep existing rows reduced at the new pivot.
    for (auto& row : rows_) {
        if (row[piv].is_zero()) continue;
        Scalar f = row[piv];
        for (size_t j = piv; j < dim_; ++j)
            if (!r[j].is_zero()) row[j] -= f * r[j];
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

void sparse_axpy(const Scalar& a, const SparseVec& x, SparseVec& y) {
    if (a.is_zero()) return;
    for (const auto& [c, s] : x) {
        auto it = y.find(c);
        if (it == y.end()) {
            y.emplace(c, a * s);
        } else {
            it->second += a * s;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
    for (auto it = v.begin(); it != v.end();) {
        if (it->second.is_zero()) {
            it = v.erase(it);
            continue;
        }
        auto p = rows_.find(it->first);
        if (p == rows_.end()) {
            ++it;
            continue;
        }
        size_t col = it->first;
        sparse_axpy(-it->second, p->second, v);
        it = v.upper_bound(col);
    }
    return v;
}

bool SparseEchelon::insert(SparseVec v) {
    for (auto it = v.begin(); it != v.end();) {
        if (it->second.is_zero()) {
            it = v.erase(it);
            continue;
        }
        auto p = rows_.find(it->first);
        if (p == rows_.end()) break;
        size_t col = it->first;
        sparse_axpy(-it->second, p->second, v);
        it = v.lower_bound(col);
    }
    if (v.empty()) return false;
    Scalar inv = v.begin()->second.inv();
    for (auto& [c, s] : v) s *= inv;
    size_t piv = v.begin()->first;
    rows_.emplace(piv, std::move(v));
    return true;
}

size_t quotient_dimension(const Field& f, size_t cols, const std::vector<SparseVec>& rels) {
    // x_i = factor[i] * x_parent[i]
    std::vector<size_t> parent(cols);
    for (size_t i = 0; i < cols; ++i) parent[i] = i;
    std::vector<Scalar> factor(cols, Scalar::one(f));
    std::vector<bool> zero(cols, false);
    auto find = [&](size_t i) {
        std::vector<size_t> path;
        while (parent[i] != i) {
            path.push_back(i);
            i = parent[i];
        }
        // compress from the top so each factor is relative to the root
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            size_t p = parent[*it];
            if (p != i) factor[*it] = factor[*it] * factor[p];
            parent[*it] = i;
        }
        return i;
    };
    std::vector<const SparseVec*> rest;
    for (const auto& r : rels) {
        std::vector<std::pair<size_t, Scalar>> terms;
        for (const auto& [c, a] : r)
            if (!a.is_zero()) terms.emplace_back(c, a);
        if (terms.empty()) continue;
        if (terms.size() == 1) {
            zero[find(terms[0].first)] = true;
        } else if (terms.size() == 2) {
            auto [i, a] = terms[0];
            auto [j, b] = terms[1];
            size_t ri = find(i), rj = find(j);
            // a fi x_ri + b fj x_rj = 0; roots keep factor 1
            Scalar c = -(b * factor[j]) / (a * factor[i]);
            if (ri == rj) {
                if (!c.is_one()) zero[ri] = true;
            } else {
                parent[ri] = rj;
                factor[ri] = c;
                if (zero[ri]) zero[rj] = true;
            }
        } else {
            rest.push_back(&r);
        }
    }
    std::vector<long> slot(cols, -1);
    size_t live = 0;
    for (size_t i = 0; i < cols; ++i)
        if (find(i) == i && !zero[i]) slot[i] = static_cast<long>(live++);
    SparseEchelon ech(f);
    for (const SparseVec* r : rest) {
        SparseVec v;
        for (const auto& [c, a] : *r) {
            if (a.is_zero()) continue;
            size_t root = find(c);
            if (zero[root]) continue;
            Scalar coef = a * factor[c];
            SparseVec term{{static_cast<size_t>(slot[root]), coef}};
            sparse_axpy(Scalar::one(f), term, v);
        }
        ech.insert(std::move(v));
    }
    return live - ech.rank();
}

}  // namespace prohecke
