#include "prohecke/ratfunc.hpp"

#include <stdexcept>

namespace prohecke {

RatFunc::RatFunc(PolyFp num, PolyFp den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.prime() != den_.prime()) throw std::invalid_argument("mixed characteristic");
    normalize();
}

void RatFunc::normalize() {
    uint32_t p = den_.prime();
    if (num_.is_zero()) {
        den_ = PolyFp::constant(p, 1);
        return;
    }
    if (!den_.is_one()) {
        PolyFp g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        uint32_t li = mod_inv(den_.lead(), p);
        if (li != 1) {
            num_ = num_.scaled(li);
            den_ = den_.scaled(li);
        }
    }
}

RatFunc RatFunc::constant(uint32_t p, int64_t c) { return RatFunc(PolyFp::constant(p, mod_reduce(c, p))); }

RatFunc RatFunc::monomial(uint32_t p, int64_t c, int k) {
    uint32_t cc = mod_reduce(c, p);
    if (k >= 0) return RatFunc(PolyFp::monomial(p, cc, k));
    return RatFunc(PolyFp::constant(p, cc), PolyFp::monomial(p, 1, -k));
}

int RatFunc::val() const {
    if (is_zero()) return kValInfinity;
    return num_.low_degree() - den_.low_degree();
}

uint32_t RatFunc::ac() const {
    if (is_zero()) return 0;
    uint32_t p = prime();
    return mod_mul(num_.coeff(num_.low_degree()), mod_inv(den_.coeff(den_.low_degree()), p), p);
}

std::vector<uint32_t> RatFunc::expansion(int lo, int hi) const {
    std::vector<uint32_t> out(hi > lo ? hi - lo : 0, 0);
    if (is_zero() || hi <= lo) return out;
    int v = val();
    if (v < lo) throw std::domain_error("expansion window starts above the valuation");
    uint32_t p = prime();
    PolyFp n = num_.unshifted(num_.low_degree());
    PolyFp d = den_.unshifted(den_.low_degree());
    // Power series n/d with d(0) != 0, terms 0 .. hi-v-1.
    int terms = hi - v;
    if (terms <= 0) return out;
    uint32_t d0i = mod_inv(d.coeff(0), p);
    std::vector<uint32_t> s(terms, 0);
    for (int k = 0; k < terms; ++k) {
        uint32_t acc = n.coeff(k);
        for (int j = 1; j <= k && j <= d.degree(); ++j) acc = mod_sub(acc, mod_mul(d.coeff(j), s[k - j], p), p);
        s[k] = mod_mul(acc, d0i, p);
    }
    for (int k = 0; k < terms; ++k) {
        int e = v + k;
        if (e >= lo && e < hi) out[e - lo] = s[k];
    }
    return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return zero(prime());
    if (den_.is_one() && o.den_.is_one()) {
        RatFunc r = *this;
        r.num_ = num_ * o.num_;
        return r;
    }
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int64_t e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc r = one(prime()), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool RatFunc::operator<(const RatFunc& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace prohecke
