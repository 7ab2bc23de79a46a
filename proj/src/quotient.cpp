#include "prohecke/quotient.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

#include "prohecke/poly.hpp"

namespace prohecke {

QuotMat::QuotMat(int n, uint32_t q, int m) : n_(n), m_(m), q_(q), c_(static_cast<size_t>(n) * n * m, 0) {
    if (m < 1) throw std::invalid_argument("quotient level must be positive");
    for (int i = 0; i < n; ++i) coeff(i, i, 0) = 1;
}

QuotMat QuotMat::reduce(const GroupMat& g, int m) {
    QuotMat r(g.n(), g.q(), m);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) {
            const RatFunc& x = g.at(i, j);
            if (x.val() < 0) throw std::invalid_argument("reduction of a non-integral matrix");
            auto e = x.is_zero() ? std::vector<uint32_t>(m, 0) : x.expansion(0, m);
            for (int d = 0; d < m; ++d) r.coeff(i, j, d) = static_cast<uint8_t>(e[d]);
        }
    return r;
}

std::vector<uint8_t> QuotMat::entry(int i, int j) const {
    auto b = c_.begin() + (i * n_ + j) * m_;
    return {b, b + m_};
}

QuotMat QuotMat::operator*(const QuotMat& o) const {
    QuotMat r(n_, q_, m_);
    std::fill(r.c_.begin(), r.c_.end(), 0);
    std::vector<uint32_t> acc(m_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int k = 0; k < n_; ++k)
                for (int a = 0; a < m_; ++a) {
                    uint32_t x = coeff(i, k, a);
                    if (!x) continue;
                    for (int b = 0; a + b < m_; ++b) acc[a + b] += x * o.coeff(k, j, b);
                }
            for (int d = 0; d < m_; ++d) r.coeff(i, j, d) = static_cast<uint8_t>(acc[d] % q_);
        }
    return r;
}

GroupMat QuotMat::lift() const {
    std::vector<RatFunc> e;
    e.reserve(n_ * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            std::vector<uint32_t> cs(m_);
            for (int d = 0; d < m_; ++d) cs[d] = coeff(i, j, d);
            e.emplace_back(PolyFp(q_, cs));
        }
    return GroupMat::from_entries(n_, q_, std::move(e));
}

std::vector<uint8_t> trunc_mul(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b, uint32_t q) {
    size_t m = a.size();
    std::vector<uint32_t> acc(m, 0);
    for (size_t i = 0; i < m; ++i)
        if (a[i])
            for (size_t j = 0; i + j < m; ++j) acc[i + j] += uint32_t(a[i]) * b[j];
    std::vector<uint8_t> r(m);
    for (size_t i = 0; i < m; ++i) r[i] = static_cast<uint8_t>(acc[i] % q);
    return r;
}

std::vector<uint8_t> trunc_inv(const std::vector<uint8_t>& a, uint32_t q) {
    if (a.empty() || a[0] == 0) throw std::domain_error("inverse of a non-unit");
    size_t m = a.size();
    uint32_t a0inv = mod_inv(a[0], q);
    std::vector<uint8_t> r(m, 0);
    r[0] = static_cast<uint8_t>(a0inv);
    for (size_t k = 1; k < m; ++k) {
        uint32_t s = 0;
        for (size_t i = 1; i <= k; ++i) s += uint32_t(a[i]) * r[k - i];
        r[k] = static_cast<uint8_t>(mod_mul(q - s % q, a0inv, q));
    }
    return r;
}

void QuotMat::add_row_multiple(int dst, int src, const std::vector<uint8_t>& a) {
    for (int j = 0; j < n_; ++j) {
        auto p = trunc_mul(a, entry(src, j), q_);
        for (int d = 0; d < m_; ++d) coeff(dst, j, d) = static_cast<uint8_t>((coeff(dst, j, d) + p[d]) % q_);
    }
}

void QuotMat::scale_row(int i, const std::vector<uint8_t>& a) {
    for (int j = 0; j < n_; ++j) {
        auto p = trunc_mul(a, entry(i, j), q_);
        for (int d = 0; d < m_; ++d) coeff(i, j, d) = p[d];
    }
}

namespace {

std::vector<uint8_t> negate(std::vector<uint8_t> a, uint32_t q) {
    for (auto& x : a) x = static_cast<uint8_t>((q - x) % q);
    return a;
}

QuotMat canonical_left(const QuotMat& x, bool scale, std::vector<uint32_t>* pivot_units) {
    const int n = x.n();
    const uint32_t q = x.q();
    QuotMat r = x;
    std::vector<int> pivot(n, -1);
    if (pivot_units) pivot_units->assign(n, 1);
    for (int i = n - 1; i >= 0; --i) {
        for (int k = n - 1; k > i; --k) {
            auto c = r.entry(i, pivot[k]);
            if (!scale) c = trunc_mul(c, trunc_inv(r.entry(k, pivot[k]), q), q);
            r.add_row_multiple(i, k, negate(c, q));
        }
        int p = 0;
        while (p < n && !r.is_unit(i, p)) ++p;
        if (p == n) throw std::domain_error("matrix is not invertible modulo t");
        pivot[i] = p;
        if (scale) {
            auto u = r.entry(i, p);
            if (pivot_units) (*pivot_units)[i] = u[0];
            r.scale_row(i, trunc_inv(u, q));
        }
    }
    return r;
}

}  // namespace

QuotMat canonical_left_borel(const QuotMat& x, std::vector<uint32_t>* pivot_units) {
    return canonical_left(x, true, pivot_units);
}

QuotMat canonical_left_unipotent(const QuotMat& x) { return canonical_left(x, false, nullptr); }

BorelQuotient::BorelQuotient(int n, uint32_t q, int m, bool unipotent)
    : n_(n), m_(m), q_(q), unipotent_(unipotent) {
    std::vector<QuotMat> gens;
    for (const auto& g : finite_level_generators(n, q, SubgroupSpec::of(SubgroupSpec::Tag::K), m))
        gens.push_back(QuotMat::reduce(g, m));
    std::deque<size_t> todo;
    QuotMat start = canonical(QuotMat(n, q, m));
    index_.emplace(start.key(), 0);
    reps_.push_back(start);
    todo.push_back(0);
    while (!todo.empty()) {
        size_t i = todo.front();
        todo.pop_front();
        for (const auto& g : gens) {
            QuotMat y = canonical(reps_[i] * g);
            if (index_.emplace(y.key(), reps_.size()).second) {
                reps_.push_back(y);
                todo.push_back(reps_.size() - 1);
            }
        }
    }
}

QuotMat BorelQuotient::canonical(const QuotMat& x) const {
    return unipotent_ ? canonical_left_unipotent(x) : canonical_left_borel(x);
}

size_t BorelQuotient::locate(const QuotMat& x) const {
    auto it = index_.find(canonical(x).key());
    if (it == index_.end()) throw std::logic_error("coset missing from the enumerated quotient");
    return it->second;
}

DoubleCosets double_coset_count(int n, uint32_t q, const SubgroupSpec& omega) {
    int m = finite_level(n, omega);
    BorelQuotient quot(n, q, m);
    std::vector<QuotMat> gens;
    for (const auto& g : finite_level_generators(n, q, omega, m)) gens.push_back(QuotMat::reduce(g, m));
    std::vector<size_t> parent(quot.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (size_t i = 0; i < quot.size(); ++i)
        for (const auto& g : gens) {
            size_t a = find(i), b = find(quot.locate(quot.rep(i) * g));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    DoubleCosets out{0, {}, m};
    for (size_t i = 0; i < quot.size(); ++i)
        if (find(i) == i) {
            ++out.count;
            out.reps.push_back(quot.rep(i).lift());
        }
    return out;
}

}  // namespace prohecke
