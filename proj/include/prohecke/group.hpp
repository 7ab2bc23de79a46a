#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prohecke/ratfunc.hpp"
#include "prohecke/weyl.hpp"

namespace prohecke {

// Invertible n x n matrix over F_q(t), q prime.
class GroupMat {
public:
    GroupMat() = default;
    GroupMat(int n, uint32_t q);  // identity
    static GroupMat identity(int n, uint32_t q) { return GroupMat(n, q); }
    static GroupMat from_entries(int n, uint32_t q, std::vector<RatFunc> entries);
    static GroupMat diag(const std::vector<RatFunc>& d);
    // 1 + a E_ij (i != j) or the diagonal matrix with a at (i, i).
    static GroupMat elementary(int n, uint32_t q, int i, int j, const RatFunc& a);
    // Canonical lift diag(torus_i t^(-lambda_i)) * P_sigma.
    static GroupMat lift(const ExtendedWeylElt& w);

    int n() const { return n_; }
    uint32_t q() const { return q_; }
    const RatFunc& at(int i, int j) const { return e_[i * n_ + j]; }
    RatFunc& at(int i, int j) { return e_[i * n_ + j]; }
    const std::vector<RatFunc>& entries() const { return e_; }

    GroupMat operator*(const GroupMat& o) const;
    GroupMat inverse() const;
    RatFunc det() const;
    bool operator==(const GroupMat& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const GroupMat& o) const { return !(*this == o); }
    bool operator<(const GroupMat& o) const { return e_ < o.e_; }
    bool is_identity() const;
    // Minimum valuation over all entries.
    int min_val() const;
    std::string to_string() const;

    // Elementary column/row operations, in place.
    void swap_cols(int a, int b);
    void add_col_multiple(int dst, int src, const RatFunc& c);  // col dst += c * col src
    void add_row_multiple(int dst, int src, const RatFunc& c);  // row dst += c * row src
    void scale_col(int j, const RatFunc& c);
    void scale_row(int i, const RatFunc& c);

private:
    int n_ = 0;
    uint32_t q_ = 2;
    std::vector<RatFunc> e_;
};

struct SubgroupSpec {
    enum class Tag { K, Km, Iwahori, ProPIwahori, IPlus, IMinus, T0, T1, B, U, Uminus, B0, Center, ParahoricProP };
    Tag tag = Tag::K;
    int m = 0;                        // for Km
    ApartmentFacet facet;             // for ParahoricProP
    std::optional<GroupMat> translate;  // for ParahoricProP; empty means identity

    static SubgroupSpec of(Tag t) { return SubgroupSpec{t, 0, {}, std::nullopt}; }
    static SubgroupSpec k_m(int m) { return SubgroupSpec{Tag::Km, m, {}, std::nullopt}; }
    static SubgroupSpec parahoric(const ApartmentFacet& f, std::optional<GroupMat> g = std::nullopt) {
        return SubgroupSpec{Tag::ParahoricProP, 0, f, std::move(g)};
    }
    bool is_pro_p(uint32_t q) const;
    std::string name() const;
};

bool is_member(const GroupMat& g, const SubgroupSpec& s);

// Generators of the image of a subgroup of K containing K_m in K/K_m.
// Supported: K, K_m', Iwahori, ProPIwahori, ParahoricProP with identity translate.
std::vector<GroupMat> finite_level_generators(int n, uint32_t q, const SubgroupSpec& s, int m);
// Smallest m with K_m contained in s (s must lie in K); throws otherwise.
int finite_level(int n, const SubgroupSpec& s);

struct Iwasawa {
    GroupMat b;  // upper triangular
    GroupMat k;  // in K
};
Iwasawa iwasawa(const GroupMat& g);

ExtendedWeylElt bruhat_iwahori_class(const GroupMat& g);

struct IwahoriFactors {
    GroupMat uplus, t0, uminus;
};
IwahoriFactors iwahori_factor(const GroupMat& g);

// Root subgroup element for the affine simple reflection s_i at residue a.
GroupMat root_subgroup_elt(int n, uint32_t q, int i, uint32_t a);
constexpr int kDefaultCosetBudgetBits = 16;
// Representatives x with I w I = disjoint union of x I, built along the reduced word.
std::vector<GroupMat> coset_reps(const ExtendedWeylElt& w, int budget_bits = kDefaultCosetBudgetBits);
// Pairwise test x_i^-1 x_j not in I.
bool cosets_pairwise_distinct(const std::vector<GroupMat>& reps);

bool contraction_test(uint32_t q, const Coweight& c);

// Canonical form of the lattice g O^n up to scaling by powers of t.
std::string lattice_key(const GroupMat& g);

}  // namespace prohecke
