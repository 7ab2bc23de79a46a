#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include "prohecke/poly.hpp"

namespace prohecke {

constexpr int kValInfinity = INT_MAX;

// Element of F_p(t) in lowest terms with monic denominator. Models F_p((t)) for
// all valuation-level computations.
class RatFunc {
public:
    RatFunc() : num_(2), den_(PolyFp::constant(2, 1)) {}
    explicit RatFunc(uint32_t p) : num_(p), den_(PolyFp::constant(p, 1)) {}
    RatFunc(PolyFp num, PolyFp den);
    explicit RatFunc(const PolyFp& num) : RatFunc(num, PolyFp::constant(num.prime(), 1)) {}

    static RatFunc zero(uint32_t p) { return RatFunc(p); }
    static RatFunc one(uint32_t p) { return constant(p, 1); }
    static RatFunc constant(uint32_t p, int64_t c);
    // c * t^k, k may be negative.
    static RatFunc monomial(uint32_t p, int64_t c, int k);
    static RatFunc t(uint32_t p) { return monomial(p, 1, 1); }

    uint32_t prime() const { return num_.prime(); }
    const PolyFp& num() const { return num_; }
    const PolyFp& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    // t-adic valuation; kValInfinity for zero.
    int val() const;
    // Leading t-adic coefficient (angular component); 0 for zero.
    uint32_t ac() const;
    bool is_integral() const { return val() >= 0; }
    bool is_unit_integral() const { return val() == 0; }
    // Coefficients of t^lo .. t^(hi-1) in the t-adic expansion. Requires val() >= lo.
    std::vector<uint32_t> expansion(int lo, int hi) const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc inv() const;
    RatFunc pow(int64_t e) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const;

    std::string to_string() const;

private:
    void normalize();
    PolyFp num_, den_;
};

}  // namespace prohecke
