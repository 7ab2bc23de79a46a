#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "prohecke/character.hpp"
#include "prohecke/hecke.hpp"
#include "prohecke/quotient.hpp"

namespace prohecke {

// The K_m-fixed vectors of Ind_B^G(chi): functions with f(bg) = chi(b) f(g),
// stored by their values at the canonical representatives of B\K/K_m.
class InducedModel {
public:
    InducedModel(PrincipalSeriesChar chi, int m);

    const PrincipalSeriesChar& chi() const { return chi_; }
    const Field& field() const { return chi_.field(); }
    int n() const { return chi_.n(); }
    uint32_t q() const { return chi_.q(); }
    int level() const { return quot_.m(); }
    size_t dim() const { return quot_.size(); }
    const BorelQuotient& quotient() const { return quot_; }
    const GroupMat& point(size_t i) const { return points_[i]; }

    // (c, j) with f(g) = c f_j for every f in the model.
    std::pair<size_t, Scalar> resolve(const GroupMat& g) const;
    // f(g) for any g in G.
    Scalar evaluate(const Vec& f, const GroupMat& g) const;
    // Values of a function already known to lie in the model.
    Vec tabulate(const std::function<Scalar(const GroupMat&)>& fn) const;
    // x -> f(x g); stays in the model when g normalizes K_m.
    Vec translate(const Vec& f, const GroupMat& g) const;
    // Vectors fixed by right translation under every generator; generators must lie in K.
    std::vector<Vec> fixed_space(const std::vector<GroupMat>& gens) const;

private:
    PrincipalSeriesChar chi_;
    BorelQuotient quot_;
    std::vector<GroupMat> points_;
};

struct InvariantSpace {
    InducedModel model;
    std::vector<Vec> basis;  // reduced echelon rows in model coordinates
    DoubleCosets cosets;
    size_t evaluation_rank = 0;  // rank of basis evaluated at the double coset representatives
    bool matches_double_cosets() const { return basis.size() == cosets.count && evaluation_rank == cosets.count; }
};

// Omega must be pro-p and of finite level inside K.
InvariantSpace invariant_space(const PrincipalSeriesChar& chi, const SubgroupSpec& omega);

constexpr int kDefaultActionBudget = 6;

// V^I with the basis (f_w) indexed by S_n: f_w has support B w I and f_w(P_w) = 1.
// Vectors are coordinates in this basis, so the coordinate at w is f(P_w).
class IwahoriFixedSpace {
public:
    explicit IwahoriFixedSpace(PrincipalSeriesChar chi, int budget = kDefaultActionBudget);

    const PrincipalSeriesChar& chi() const { return chi_; }
    const Field& field() const { return chi_.field(); }
    int n() const { return chi_.n(); }
    uint32_t q() const { return chi_.q(); }
    size_t dim() const { return perms_.size(); }
    const std::vector<std::vector<int>>& perms() const { return perms_; }
    size_t index(const std::vector<int>& perm) const;
    Vec basis_vector(size_t i) const;
    Vec f_one() const { return basis_vector(index(ExtendedWeylElt::identity(n(), q()).perm)); }

    // f_w(g), from the Iwasawa decomposition and the Bruhat class of the K-part.
    Scalar basis_value(size_t i, const GroupMat& g) const;
    Scalar evaluate(const Vec& v, const GroupMat& g) const;

    // v . tau_w as the sum of v(g y) over y in I w^-1 I / I.
    Vec act_direct(const Vec& v, const ExtendedWeylElt& w) const;
    // v . tau_w along a reduced word, with cached matrices for the simple reflections.
    Vec act(const Vec& v, const ExtendedWeylElt& w) const;
    Vec act(const Vec& v, const HeckeElt& h) const;
    // Matrix of right multiplication by tau_{s_i}; column j is f_j . tau_{s_i}.
    const ExactMatrix& simple_matrix(int i) const { return simple_[i]; }

private:
    PrincipalSeriesChar chi_;
    int budget_;
    std::vector<std::vector<int>> perms_;
    std::map<std::vector<int>, size_t> index_;
    std::vector<GroupMat> perm_points_;
    std::vector<ExactMatrix> simple_;
};

struct FiberReport {
    SandwichResult sandwich;
    size_t evaluation_rank = 0;  // rank of h -> f_1 . h on the generators
    bool witness_ok = false;     // f_1 . tau_w = f_w for every w in S_n
    std::vector<std::string> witness;  // "w -> f_w" lines, or the first mismatch
    bool certified() const;
};

// Generators tau_w for the fiber truncation of span 2 (n = 2) or 3 (n = 3);
// relations are taken up to length L.
FiberReport verify_fiber_isomorphism(const PrincipalSeriesChar& chi, int L);

// Characters covering trivial, unramified regular and (q = 3) nontrivial tame
// cases over Q, over F_l with l != p, and over F_p.
std::vector<PrincipalSeriesChar> character_matrix(int n, uint32_t q);

}  // namespace prohecke
