#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "prohecke/poly.hpp"
#include "prohecke/ratfunc.hpp"

namespace prohecke {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Prime, Extension, Rational, RationalFunction };

struct ExtFieldData {
    uint32_t p;
    uint32_t d;
    PolyFp modulus;  // monic irreducible of degree d
};

// Descriptor of a coefficient field: F_p, F_{p^d}, Q or F_p(t).
class Field {
public:
    Field() = default;
    static Field prime(uint32_t p);
    static Field extension(uint32_t p, uint32_t d);
    static Field rationals();
    static Field rational_functions(uint32_t p);
    static Field from_ext_data(std::shared_ptr<const ExtFieldData> data);

    FieldKind kind() const { return kind_; }
    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return d_; }
    // Number of elements for finite fields, 0 otherwise.
    uint64_t size() const;
    const std::shared_ptr<const ExtFieldData>& ext() const { return ext_; }
    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_ && d_ == o.d_; }
    bool operator!=(const Field& o) const { return !(*this == o); }
    std::string name() const;

private:
    FieldKind kind_ = FieldKind::Rational;
    uint32_t p_ = 0;
    uint32_t d_ = 1;
    std::shared_ptr<const ExtFieldData> ext_;
};

// Immutable exact field element.
class Scalar {
public:
    struct PrimeElt {
        uint32_t p;
        uint32_t v;
    };
    struct ExtElt {
        std::shared_ptr<const ExtFieldData> f;
        std::vector<uint32_t> c;  // length d, reduced mod the modulus
    };

    Scalar() : v_(Rational(0)) {}
    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, int64_t x);
    static Scalar from_rational(const Rational& r) { return Scalar(Value(r)); }
    static Scalar from_ratfunc(const RatFunc& r) { return Scalar(Value(r)); }
    static Scalar prime_elt(uint32_t p, int64_t v) { return Scalar(Value(PrimeElt{p, mod_reduce(v, p)})); }
    // Extension field element from coefficients of the generator x (low degree first).
    static Scalar ext_elt(const Field& f, const std::vector<int64_t>& coeffs);

    Field field() const;
    bool in_field(const Field& f) const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inv() const;
    Scalar pow(int64_t e) const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const RatFunc* as_ratfunc() const { return std::get_if<RatFunc>(&v_); }
    std::string to_string() const;

private:
    using Value = std::variant<PrimeElt, ExtElt, Rational, RatFunc>;
    explicit Scalar(Value v) : v_(std::move(v)) {}
    Value v_;
};

// t-adic valuation of a rational-function scalar; kValInfinity for zero.
int t_adic_valuation(const Scalar& s);

// A primitive (q-1)-th root of unity in k, where (q-1) must divide |k^x|.
Scalar primitive_root_of_unity(const Field& k, uint32_t order);
// Smallest generator of F_p^x.
uint32_t primitive_root_mod(uint32_t p);

}  // namespace prohecke
