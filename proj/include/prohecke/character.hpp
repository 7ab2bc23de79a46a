#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prohecke/group.hpp"
#include "prohecke/scalar.hpp"

namespace prohecke {

// Smooth character chi of the diagonal torus, trivial on T1:
// chi(diag(x_i)) = prod z_i^val(x_i) * eta_i(ac(x_i)), eta_i(g^j) = zeta^(o_i j)
// for the smallest generator g of F_q^x and a root of unity zeta in k.
class PrincipalSeriesChar {
public:
    PrincipalSeriesChar(Field k, uint32_t q, std::vector<Scalar> z, std::vector<uint32_t> tame);
    static PrincipalSeriesChar trivial(const Field& k, int n, uint32_t q);
    // "z=[v1,...,vn];tame=[o1,...,on]". Values are integers, a/b over Q, or
    // polynomials in x over an extension field (e.g. "2*x+1"). "tame=" may be omitted.
    static PrincipalSeriesChar parse(const std::string& spec, const Field& k, int n, uint32_t q);

    const Field& field() const { return k_; }
    int n() const { return static_cast<int>(z_.size()); }
    uint32_t q() const { return q_; }
    const std::vector<Scalar>& unramified() const { return z_; }
    const std::vector<uint32_t>& tame() const { return tame_; }
    bool tame_trivial() const;

    // eta_i(c) for c in F_q^x.
    Scalar tame_value(int i, uint32_t c) const;
    Scalar on_diagonal(const std::vector<RatFunc>& d) const;
    // Value on the diagonal of an upper triangular matrix.
    Scalar on_borel(const GroupMat& b) const;
    // Value on the canonical lift diag(c_i t^(-lambda_i)) of e^c.
    Scalar on_coweight(const Coweight& c) const;

    std::string to_string() const;

private:
    Field k_;
    uint32_t q_;
    std::vector<Scalar> z_;
    std::vector<uint32_t> tame_;
    std::vector<Scalar> eta_gen_;  // eta_i(g)
};

Scalar parse_scalar(const std::string& s, const Field& k);

}  // namespace prohecke
