#include "prohecke/scalar.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace prohecke {

namespace {

[[noreturn]] void mixed() { throw std::invalid_argument("arithmetic between different fields"); }

std::vector<uint32_t> ext_reduce(const ExtFieldData& f, PolyFp x) {
    PolyFp r = x % f.modulus;
    std::vector<uint32_t> c(f.d, 0);
    for (uint32_t i = 0; i < f.d; ++i) c[i] = r.coeff(i);
    return c;
}

}  // namespace

Field Field::prime(uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    Field f;
    f.kind_ = FieldKind::Prime;
    f.p_ = p;
    return f;
}

Field Field::extension(uint32_t p, uint32_t d) {
    if (d == 1) return prime(p);
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const ExtFieldData>> table;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = table[{p, d}];
    if (!slot) slot = std::make_shared<const ExtFieldData>(ExtFieldData{p, d, first_irreducible(p, d)});
    return from_ext_data(slot);
}

Field Field::from_ext_data(std::shared_ptr<const ExtFieldData> data) {
    Field f;
    f.kind_ = FieldKind::Extension;
    f.p_ = data->p;
    f.d_ = data->d;
    f.ext_ = std::move(data);
    return f;
}

Field Field::rationals() { return Field(); }

Field Field::rational_functions(uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    Field f;
    f.kind_ = FieldKind::RationalFunction;
    f.p_ = p;
    return f;
}

uint64_t Field::size() const {
    if (kind_ == FieldKind::Prime) return p_;
    if (kind_ == FieldKind::Extension) {
        uint64_t s = 1;
        for (uint32_t i = 0; i < d_; ++i) s *= p_;
        return s;
    }
    return 0;
}

std::string Field::name() const {
    switch (kind_) {
        case FieldKind::Prime: return "F" + std::to_string(p_);
        case FieldKind::Extension: return "F" + std::to_string(p_) + "^" + std::to_string(d_);
        case FieldKind::Rational: return "Q";
        case FieldKind::RationalFunction: return "F" + std::to_string(p_) + "(t)";
    }
    return "?";
}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, int64_t x) {
    switch (f.kind()) {
        case FieldKind::Prime: return Scalar(Value(PrimeElt{f.characteristic(), mod_reduce(x, f.characteristic())}));
        case FieldKind::Extension: {
            std::vector<uint32_t> c(f.degree(), 0);
            c[0] = mod_reduce(x, f.characteristic());
            return Scalar(Value(ExtElt{f.ext(), std::move(c)}));
        }
        case FieldKind::Rational: return Scalar(Value(Rational(x)));
        case FieldKind::RationalFunction: return Scalar(Value(RatFunc::constant(f.characteristic(), x)));
    }
    throw std::logic_error("unknown field kind");
}

Scalar Scalar::ext_elt(const Field& f, const std::vector<int64_t>& coeffs) {
    if (f.kind() == FieldKind::Prime) return from_int(f, coeffs.empty() ? 0 : coeffs[0]);
    if (f.kind() != FieldKind::Extension) throw std::invalid_argument("not an extension field");
    std::vector<uint32_t> c;
    for (auto x : coeffs) c.push_back(mod_reduce(x, f.characteristic()));
    return Scalar(Value(ExtElt{f.ext(), ext_reduce(*f.ext(), PolyFp(f.characteristic(), c))}));
}

Field Scalar::field() const {
    return std::visit(
        [](const auto& x) -> Field {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PrimeElt>) return Field::prime(x.p);
            else if constexpr (std::is_same_v<T, ExtElt>) return Field::from_ext_data(x.f);
            else if constexpr (std::is_same_v<T, Rational>) return Field::rationals();
            else return Field::rational_functions(x.prime());
        },
        v_);
}

bool Scalar::in_field(const Field& f) const {
    switch (v_.index()) {
        case 0: return f.kind() == FieldKind::Prime && f.characteristic() == std::get<0>(v_).p;
        case 1: {
            auto& a = std::get<1>(v_);
            return f.kind() == FieldKind::Extension && f.characteristic() == a.f->p && f.degree() == a.f->d;
        }
        case 2: return f.kind() == FieldKind::Rational;
        default: return f.kind() == FieldKind::RationalFunction && f.characteristic() == std::get<3>(v_).prime();
    }
}

bool Scalar::is_zero() const {
    return std::visit(
        [](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PrimeElt>) return x.v == 0;
            else if constexpr (std::is_same_v<T, ExtElt>) {
                for (auto c : x.c)
                    if (c) return false;
                return true;
            } else if constexpr (std::is_same_v<T, Rational>) return x == 0;
            else return x.is_zero();
        },
        v_);
}

bool Scalar::is_one() const {
    return std::visit(
        [](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PrimeElt>) return x.v == 1;
            else if constexpr (std::is_same_v<T, ExtElt>) {
                for (size_t i = 0; i < x.c.size(); ++i)
                    if (x.c[i] != (i == 0 ? 1u : 0u)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, Rational>) return x == 1;
            else return x.is_one();
        },
        v_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (v_.index() != o.v_.index()) mixed();
    switch (v_.index()) {
        case 0: {
            auto& a = std::get<0>(v_);
            auto& b = std::get<0>(o.v_);
            if (a.p != b.p) mixed();
            return Scalar(Value(PrimeElt{a.p, mod_add(a.v, b.v, a.p)}));
        }
        case 1: {
            auto& a = std::get<1>(v_);
            auto& b = std::get<1>(o.v_);
            if (a.f->p != b.f->p || a.f->d != b.f->d) mixed();
            std::vector<uint32_t> c(a.c.size());
            for (size_t i = 0; i < c.size(); ++i) c[i] = mod_add(a.c[i], b.c[i], a.f->p);
            return Scalar(Value(ExtElt{a.f, std::move(c)}));
        }
        case 2: return Scalar(Value(Rational(std::get<2>(v_) + std::get<2>(o.v_))));
        default: {
            auto& a = std::get<3>(v_);
            auto& b = std::get<3>(o.v_);
            if (a.prime() != b.prime()) mixed();
            return Scalar(Value(a + b));
        }
    }
}

Scalar Scalar::operator-() const {
    switch (v_.index()) {
        case 0: {
            auto& a = std::get<0>(v_);
            return Scalar(Value(PrimeElt{a.p, a.v ? a.p - a.v : 0}));
        }
        case 1: {
            auto& a = std::get<1>(v_);
            std::vector<uint32_t> c(a.c.size());
            for (size_t i = 0; i < c.size(); ++i) c[i] = a.c[i] ? a.f->p - a.c[i] : 0;
            return Scalar(Value(ExtElt{a.f, std::move(c)}));
        }
        case 2: return Scalar(Value(Rational(-std::get<2>(v_))));
        default: return Scalar(Value(-std::get<3>(v_)));
    }
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (v_.index() != o.v_.index()) mixed();
    switch (v_.index()) {
        case 0: {
            auto& a = std::get<0>(v_);
            auto& b = std::get<0>(o.v_);
            if (a.p != b.p) mixed();
            return Scalar(Value(PrimeElt{a.p, mod_mul(a.v, b.v, a.p)}));
        }
        case 1: {
            auto& a = std::get<1>(v_);
            auto& b = std::get<1>(o.v_);
            if (a.f->p != b.f->p || a.f->d != b.f->d) mixed();
            PolyFp pa(a.f->p, a.c), pb(b.f->p, b.c);
            return Scalar(Value(ExtElt{a.f, ext_reduce(*a.f, pa * pb)}));
        }
        case 2: return Scalar(Value(Rational(std::get<2>(v_) * std::get<2>(o.v_))));
        default: {
            auto& a = std::get<3>(v_);
            auto& b = std::get<3>(o.v_);
            if (a.prime() != b.prime()) mixed();
            return Scalar(Value(a * b));
        }
    }
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    switch (v_.index()) {
        case 0: {
            auto& a = std::get<0>(v_);
            return Scalar(Value(PrimeElt{a.p, mod_inv(a.v, a.p)}));
        }
        case 1: {
            auto& a = std::get<1>(v_);
            auto [g, s] = poly_inverse_mod(PolyFp(a.f->p, a.c), a.f->modulus);
            if (!g.is_one()) throw std::logic_error("extension modulus is not irreducible");
            return Scalar(Value(ExtElt{a.f, ext_reduce(*a.f, s)}));
        }
        case 2: return Scalar(Value(Rational(1 / std::get<2>(v_))));
        default: return Scalar(Value(std::get<3>(v_).inv()));
    }
}

Scalar Scalar::pow(int64_t e) const {
    if (e < 0) return inv().pow(-e);
    Scalar r = one(field()), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (v_.index() != o.v_.index()) mixed();
    switch (v_.index()) {
        case 0: {
            auto& a = std::get<0>(v_);
            auto& b = std::get<0>(o.v_);
            if (a.p != b.p) mixed();
            return a.v == b.v;
        }
        case 1: {
            auto& a = std::get<1>(v_);
            auto& b = std::get<1>(o.v_);
            if (a.f->p != b.f->p || a.f->d != b.f->d) mixed();
            return a.c == b.c;
        }
        case 2: return std::get<2>(v_) == std::get<2>(o.v_);
        default: return std::get<3>(v_) == std::get<3>(o.v_);
    }
}

std::string Scalar::to_string() const {
    switch (v_.index()) {
        case 0: return std::to_string(std::get<0>(v_).v);
        case 1: {
            auto& a = std::get<1>(v_);
            return PolyFp(a.f->p, a.c).to_string('x');
        }
        case 2: return std::get<2>(v_).str();
        default: return std::get<3>(v_).to_string();
    }
}

int t_adic_valuation(const Scalar& s) {
    const RatFunc* r = s.as_ratfunc();
    if (!r) throw std::invalid_argument("valuation requires a rational-function scalar");
    return r->val();
}

uint32_t primitive_root_mod(uint32_t p) {
    if (p == 2) return 1;
    for (uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        uint32_t m = p - 1;
        for (uint32_t d = 2; d <= m; ++d) {
            if (m % d) continue;
            bool prime_d = true;
            for (uint32_t e = 2; e * e <= d; ++e)
                if (d % e == 0) prime_d = false;
            if (prime_d && mod_pow(g, m / d, p) == 1) ok = false;
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

Scalar primitive_root_of_unity(const Field& k, uint32_t order) {
    if (order == 0) throw std::invalid_argument("root of unity of order zero");
    Scalar one = Scalar::one(k);
    if (order == 1) return one;
    auto exact_order = [&](const Scalar& z) {
        if (!(z.pow(order) == one)) return false;
        for (uint32_t d = 1; d < order; ++d)
            if (order % d == 0 && z.pow(d) == one) return false;
        return true;
    };
    switch (k.kind()) {
        case FieldKind::Rational:
            if (order == 2) return -one;
            break;
        case FieldKind::Prime:
        case FieldKind::RationalFunction: {
            uint32_t p = k.characteristic();
            if ((p - 1) % order) break;
            for (uint32_t a = 2; a < p; ++a) {
                Scalar z = Scalar::from_int(k, a);
                if (exact_order(z)) return z;
            }
            break;
        }
        case FieldKind::Extension: {
            uint64_t sz = k.size();
            if ((sz - 1) % order) break;
            uint32_t p = k.characteristic(), d = k.degree();
            for (uint64_t idx = 2; idx < sz; ++idx) {
                std::vector<int64_t> c(d);
                uint64_t x = idx;
                for (uint32_t i = 0; i < d; ++i) {
                    c[i] = static_cast<int64_t>(x % p);
                    x /= p;
                }
                Scalar z = Scalar::ext_elt(k, c);
                if (exact_order(z)) return z;
            }
            break;
        }
    }
    throw std::invalid_argument("field " + k.name() + " has no primitive root of unity of order " + std::to_string(order));
}

}  // namespace prohecke
