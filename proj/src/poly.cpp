#include "prohecke/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace prohecke {

uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t mod_inv(uint32_t a, uint32_t p) {
    if (a % p == 0) throw std::domain_error("division by zero in F_p");
    return mod_pow(a, p - 2, p);
}

uint32_t mod_reduce(int64_t a, uint32_t p) {
    int64_t r = a % static_cast<int64_t>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PolyFp::PolyFp(uint32_t p, std::vector<uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= p_;
    trim();
}

PolyFp PolyFp::constant(uint32_t p, uint32_t c) { return PolyFp(p, {c}); }

PolyFp PolyFp::monomial(uint32_t p, uint32_t c, unsigned deg) {
    std::vector<uint32_t> v(deg + 1, 0);
    v[deg] = c;
    return PolyFp(p, std::move(v));
}

void PolyFp::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int PolyFp::low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) return static_cast<int>(i);
    return -1;
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
    PolyFp r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = mod_add(coeff(i), o.coeff(i), p_);
    r.trim();
    return r;
}

PolyFp PolyFp::operator-(const PolyFp& o) const {
    PolyFp r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = mod_sub(coeff(i), o.coeff(i), p_);
    r.trim();
    return r;
}

PolyFp PolyFp::operator-() const {
    PolyFp r(p_);
    r.c_.reserve(c_.size());
    for (auto x : c_) r.c_.push_back(x ? p_ - x : 0);
    return r;
}

PolyFp PolyFp::operator*(const PolyFp& o) const {
    PolyFp r(p_);
    if (is_zero() || o.is_zero()) return r;
    std::vector<uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) acc[i + j] = (acc[i + j] + (uint64_t)c_[i] * o.c_[j]) % p_;
    }
    r.c_.assign(acc.begin(), acc.end());
    r.trim();
    return r;
}

PolyFp PolyFp::scaled(uint32_t s) const {
    s %= p_;
    PolyFp r(p_);
    if (s == 0) return r;
    r.c_.reserve(c_.size());
    for (auto x : c_) r.c_.push_back(mod_mul(x, s, p_));
    return r;
}

PolyFp PolyFp::shifted(unsigned k) const {
    if (is_zero()) return *this;
    PolyFp r(p_);
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

PolyFp PolyFp::unshifted(unsigned k) const {
    if (is_zero()) return *this;
    if (low_degree() < static_cast<int>(k)) throw std::logic_error("unshift below lowest degree");
    PolyFp r(p_);
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

std::pair<PolyFp, PolyFp> PolyFp::divmod(const PolyFp& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    PolyFp q(p_), r = *this;
    if (r.degree() < d.degree()) return {q, r};
    q.c_.assign(r.degree() - d.degree() + 1, 0);
    uint32_t li = mod_inv(d.lead(), p_);
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        uint32_t f = mod_mul(r.lead(), li, p_);
        q.c_[shift] = f;
        for (size_t j = 0; j < d.c_.size(); ++j)
            r.c_[j + shift] = mod_sub(r.c_[j + shift], mod_mul(f, d.c_[j], p_), p_);
        r.trim();
    }
    q.trim();
    return {q, r};
}

PolyFp PolyFp::monic() const {
    if (is_zero()) return *this;
    return scaled(mod_inv(lead(), p_));
}

bool PolyFp::operator<(const PolyFp& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::string PolyFp::to_string(char var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
        if (i >= 1) {
            if (c_[i] != 1) s += "*";
            s += var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s;
}

PolyFp poly_gcd(PolyFp a, PolyFp b) {
    while (!b.is_zero()) {
        PolyFp r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::pair<PolyFp, PolyFp> poly_inverse_mod(const PolyFp& a, const PolyFp& m) {
    uint32_t p = m.prime();
    PolyFp r0 = m, r1 = a % m, s0(p), s1 = PolyFp::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        PolyFp s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero()) return {r0, s0};
    uint32_t li = mod_inv(r0.lead(), p);
    return {r0.scaled(li), s0.scaled(li)};
}

bool is_irreducible(const PolyFp& f) {
    int d = f.degree();
    if (d < 1) return false;
    uint32_t p = f.prime();
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int k = 1; 2 * k <= d; ++k) {
        std::vector<uint32_t> c(k + 1, 0);
        c[k] = 1;
        while (true) {
            if ((f % PolyFp(p, c)).is_zero()) return false;
            int i = 0;
            while (i < k && ++c[i] == p) c[i++] = 0;
            if (i == k) break;
        }
    }
    return true;
}

PolyFp first_irreducible(uint32_t p, unsigned d) {
    if (d == 0) throw std::invalid_argument("extension degree must be positive");
    std::vector<uint32_t> c(d + 1, 0);
    c[d] = 1;
    while (true) {
        PolyFp f(p, c);
        if (is_irreducible(f)) return f;
        unsigned i = 0;
        while (i < d && ++c[i] == p) c[i++] = 0;
        if (i == d) break;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace prohecke
