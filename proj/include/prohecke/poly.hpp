#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace prohecke {

// Arithmetic in F_p for small primes p.
inline uint32_t mod_add(uint32_t a, uint32_t b, uint32_t p) { uint32_t s = a + b; return s >= p ? s - p : s; }
inline uint32_t mod_sub(uint32_t a, uint32_t b, uint32_t p) { return a >= b ? a - b : a + p - b; }
inline uint32_t mod_mul(uint32_t a, uint32_t b, uint32_t p) { return static_cast<uint32_t>((uint64_t)a * b % p); }
uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p);
uint32_t mod_inv(uint32_t a, uint32_t p);
uint32_t mod_reduce(int64_t a, uint32_t p);
bool is_prime(uint64_t p);

// Dense polynomial over F_p, coefficients low degree first, no trailing zeros.
class PolyFp {
public:
    PolyFp() = default;
    explicit PolyFp(uint32_t p) : p_(p) {}
    PolyFp(uint32_t p, std::vector<uint32_t> coeffs);

    static PolyFp constant(uint32_t p, uint32_t c);
    static PolyFp monomial(uint32_t p, uint32_t c, unsigned deg);

    uint32_t prime() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    // Index of the lowest nonzero coefficient; -1 for zero.
    int low_degree() const;
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    PolyFp operator+(const PolyFp& o) const;
    PolyFp operator-(const PolyFp& o) const;
    PolyFp operator-() const;
    PolyFp operator*(const PolyFp& o) const;
    PolyFp scaled(uint32_t s) const;
    PolyFp shifted(unsigned k) const;  // times x^k
    // Divide by x^k exactly (requires low_degree() >= k).
    PolyFp unshifted(unsigned k) const;
    std::pair<PolyFp, PolyFp> divmod(const PolyFp& d) const;
    PolyFp operator%(const PolyFp& d) const { return divmod(d).second; }
    PolyFp monic() const;
    bool operator==(const PolyFp& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const PolyFp& o) const { return !(*this == o); }
    bool operator<(const PolyFp& o) const;

    std::string to_string(char var = 't') const;

private:
    void trim();
    uint32_t p_ = 2;
    std::vector<uint32_t> c_;
};

PolyFp poly_gcd(PolyFp a, PolyFp b);
// Returns (g, s) with s*a == g mod m, g = gcd(a, m) monic.
std::pair<PolyFp, PolyFp> poly_inverse_mod(const PolyFp& a, const PolyFp& m);
bool is_irreducible(const PolyFp& f);
// Lexicographically first monic irreducible polynomial of degree d over F_p.
PolyFp first_irreducible(uint32_t p, unsigned d);

}  // namespace prohecke
