#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "prohecke/group.hpp"

namespace prohecke {

// Element of GL_n(F_q[t]/t^m). Entry (i,j) is a truncated polynomial stored as
// m coefficients, low degree first.
class QuotMat {
public:
    QuotMat() = default;
    QuotMat(int n, uint32_t q, int m);  // identity
    static QuotMat reduce(const GroupMat& g, int m);  // g must be integral

    int n() const { return n_; }
    uint32_t q() const { return q_; }
    int m() const { return m_; }
    uint8_t coeff(int i, int j, int d) const { return c_[(i * n_ + j) * m_ + d]; }
    uint8_t& coeff(int i, int j, int d) { return c_[(i * n_ + j) * m_ + d]; }
    bool is_unit(int i, int j) const { return coeff(i, j, 0) != 0; }
    const std::vector<uint8_t>& bytes() const { return c_; }

    QuotMat operator*(const QuotMat& o) const;
    bool operator==(const QuotMat& o) const { return c_ == o.c_; }
    bool operator<(const QuotMat& o) const { return c_ < o.c_; }
    // Polynomial lift with coefficients in [0, q).
    GroupMat lift() const;
    std::string key() const { return std::string(c_.begin(), c_.end()); }

    // row dst += a * row src, a a truncated polynomial of length m.
    void add_row_multiple(int dst, int src, const std::vector<uint8_t>& a);
    void scale_row(int i, const std::vector<uint8_t>& a);
    std::vector<uint8_t> entry(int i, int j) const;

private:
    int n_ = 0, m_ = 1;
    uint32_t q_ = 2;
    std::vector<uint8_t> c_;
};

// Truncated power-series helpers in F_q[t]/t^m.
std::vector<uint8_t> trunc_mul(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b, uint32_t q);
std::vector<uint8_t> trunc_inv(const std::vector<uint8_t>& a, uint32_t q);

// Canonical representative of the coset B x (upper triangular, scaling
// allowed) or U x (upper unitriangular). With scaling, pivot_units receives
// the residues u_i(0) with x in b * canonical and diag(b)(0) = (u_i(0)).
QuotMat canonical_left_borel(const QuotMat& x, std::vector<uint32_t>* pivot_units = nullptr);
QuotMat canonical_left_unipotent(const QuotMat& x);

// The finite set B\GL_n(F_q[t]/t^m) (or U\..., unipotent = true), enumerated
// from the identity by right multiplication with generators of K.
class BorelQuotient {
public:
    BorelQuotient(int n, uint32_t q, int m, bool unipotent = false);
    size_t size() const { return reps_.size(); }
    const QuotMat& rep(size_t i) const { return reps_[i]; }
    const std::vector<QuotMat>& reps() const { return reps_; }
    // Index of the coset of x.
    size_t locate(const QuotMat& x) const;
    QuotMat canonical(const QuotMat& x) const;
    int n() const { return n_; }
    uint32_t q() const { return q_; }
    int m() const { return m_; }

private:
    int n_, m_;
    uint32_t q_;
    bool unipotent_;
    std::vector<QuotMat> reps_;
    std::unordered_map<std::string, size_t> index_;
};

struct DoubleCosets {
    size_t count;
    std::vector<GroupMat> reps;
    int level;  // the m of the finite quotient used
};
// |B\G/Omega| through orbits of Omega on B\K/K_m.
DoubleCosets double_coset_count(int n, uint32_t q, const SubgroupSpec& omega);

}  // namespace prohecke
