#include "prohecke/character.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace prohecke {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

int64_t parse_int(const std::string& s) {
    size_t pos = 0;
    int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

std::vector<std::string> parse_list(const std::string& s) {
    std::string t = strip(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw std::invalid_argument("expected [..] list: " + s);
    t = t.substr(1, t.size() - 2);
    if (strip(t).empty()) return {};
    return split(t, ',');
}

}  // namespace

Scalar parse_scalar(const std::string& raw, const Field& k) {
    std::string s = strip(raw);
    if (s.empty()) throw std::invalid_argument("empty field element");
    switch (k.kind()) {
        case FieldKind::Prime: return Scalar::from_int(k, parse_int(s));
        case FieldKind::Rational: {
            auto slash = s.find('/');
            if (slash == std::string::npos) return Scalar::from_rational(Rational(parse_int(s)));
            int64_t a = parse_int(s.substr(0, slash)), b = parse_int(s.substr(slash + 1));
            if (b == 0) throw std::invalid_argument("zero denominator");
            if (b < 0) a = -a, b = -b;
            return Scalar::from_rational(Rational(a, b));
        }
        case FieldKind::Extension: {
            std::vector<int64_t> c(k.degree(), 0);
            for (const auto& term : split(s, '+')) {
                std::string coef = term, power = "0";
                auto x = term.find('x');
                if (x != std::string::npos) {
                    coef = strip(term.substr(0, x));
                    if (!coef.empty() && coef.back() == '*') coef = strip(coef.substr(0, coef.size() - 1));
                    if (coef.empty()) coef = "1";
                    std::string rest = strip(term.substr(x + 1));
                    power = rest.empty() ? "1" : rest.substr(rest.find('^') + 1);
                    if (!rest.empty() && rest[0] != '^') throw std::invalid_argument("bad term '" + term + "'");
                }
                int64_t e = parse_int(strip(power));
                if (e < 0 || e >= static_cast<int64_t>(k.degree()))
                    throw std::invalid_argument("power out of range in '" + term + "'");
                c[e] += parse_int(coef);
            }
            return Scalar::ext_elt(k, c);
        }
        case FieldKind::RationalFunction: break;
    }
    throw std::invalid_argument("unsupported coefficient field " + k.name());
}

PrincipalSeriesChar::PrincipalSeriesChar(Field k, uint32_t q, std::vector<Scalar> z, std::vector<uint32_t> tame)
    : k_(std::move(k)), q_(q), z_(std::move(z)), tame_(std::move(tame)) {
    if (k_.kind() == FieldKind::RationalFunction) throw std::invalid_argument("coefficient field must not be F_p(t)");
    if (tame_.empty()) tame_.assign(z_.size(), 0);
    if (tame_.size() != z_.size()) throw std::invalid_argument("character needs n unramified and n tame parameters");
    for (const auto& x : z_) {
        if (!x.in_field(k_)) throw std::invalid_argument("unramified parameter outside the coefficient field");
        if (x.is_zero()) throw std::invalid_argument("unramified parameters must be nonzero");
    }
    uint32_t order = 1;
    for (auto& o : tame_) {
        o %= (q_ - 1);
        uint32_t d = (q_ - 1) / std::gcd(o, q_ - 1);
        order = std::lcm(order, d);
    }
    Scalar zeta = primitive_root_of_unity(k_, order);
    for (auto o : tame_) eta_gen_.push_back(zeta.pow(static_cast<int64_t>(o) * order / (q_ - 1)));
}

PrincipalSeriesChar PrincipalSeriesChar::trivial(const Field& k, int n, uint32_t q) {
    return PrincipalSeriesChar(k, q, std::vector<Scalar>(n, Scalar::one(k)), {});
}

PrincipalSeriesChar PrincipalSeriesChar::parse(const std::string& spec, const Field& k, int n, uint32_t q) {
    std::vector<Scalar> z;
    std::vector<uint32_t> tame;
    bool seen_z = false;
    for (const auto& part : split(spec, ';')) {
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected key=value in character spec");
        std::string key = strip(part.substr(0, eq)), val = part.substr(eq + 1);
        if (key == "z") {
            for (const auto& v : parse_list(val)) z.push_back(parse_scalar(v, k));
            seen_z = true;
        } else if (key == "tame") {
            for (const auto& v : parse_list(val)) {
                int64_t o = parse_int(v);
                int64_t m = q - 1;
                tame.push_back(static_cast<uint32_t>(((o % m) + m) % m));
            }
        } else {
            throw std::invalid_argument("unknown character key '" + key + "'");
        }
    }
    if (!seen_z) z.assign(n, Scalar::one(k));
    if (static_cast<int>(z.size()) != n || (!tame.empty() && static_cast<int>(tame.size()) != n))
        throw std::invalid_argument("character spec must list n values");
    return PrincipalSeriesChar(k, q, std::move(z), std::move(tame));
}

bool PrincipalSeriesChar::tame_trivial() const {
    for (const auto& e : eta_gen_)
        if (!e.is_one()) return false;
    return true;
}

Scalar PrincipalSeriesChar::tame_value(int i, uint32_t c) const {
    c %= q_;
    if (c == 0) throw std::invalid_argument("tame character at zero");
    uint32_t g = primitive_root_mod(q_), x = 1;
    for (uint32_t j = 0; j < q_ - 1; ++j) {
        if (x == c) return eta_gen_[i].pow(j);
        x = mod_mul(x, g, q_);
    }
    throw std::logic_error("discrete logarithm not found");
}

Scalar PrincipalSeriesChar::on_diagonal(const std::vector<RatFunc>& d) const {
    if (d.size() != z_.size()) throw std::invalid_argument("diagonal of wrong size");
    Scalar r = Scalar::one(k_);
    for (int i = 0; i < n(); ++i) {
        if (d[i].is_zero()) throw std::invalid_argument("zero diagonal entry");
        r *= z_[i].pow(d[i].val()) * tame_value(i, d[i].ac());
    }
    return r;
}

Scalar PrincipalSeriesChar::on_borel(const GroupMat& b) const {
    std::vector<RatFunc> d;
    for (int i = 0; i < b.n(); ++i) d.push_back(b.at(i, i));
    return on_diagonal(d);
}

Scalar PrincipalSeriesChar::on_coweight(const Coweight& c) const {
    Scalar r = Scalar::one(k_);
    for (int i = 0; i < n(); ++i) {
        r *= z_[i].pow(-c.lambda[i]);
        if (!c.torus.empty()) r *= tame_value(i, c.torus[i]);
    }
    return r;
}

std::string PrincipalSeriesChar::to_string() const {
    std::ostringstream s;
    s << "z=[";
    for (int i = 0; i < n(); ++i) s << (i ? "," : "") << z_[i].to_string();
    s << "];tame=[";
    for (int i = 0; i < n(); ++i) s << (i ? "," : "") << tame_[i];
    s << "]";
    return s.str();
}

}  // namespace prohecke
