#pragma once

#include <cstdint>
#include <vector>

#include "prohecke/character.hpp"
#include "prohecke/check.hpp"
#include "prohecke/linalg.hpp"
#include "prohecke/weyl.hpp"

namespace prohecke {

// GL_n(F_q), n <= 3, with matrices encoded as base-q integers (row major).
class FiniteGL {
public:
    FiniteGL(int n, uint32_t q);
    int n() const { return n_; }
    uint32_t q() const { return q_; }
    size_t order() const { return elements_.size(); }
    // All invertible codes, increasing.
    const std::vector<uint32_t>& elements() const { return elements_; }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const { return inv_[a]; }
    uint32_t identity() const { return id_; }
    uint32_t entry(uint32_t a, int i, int j) const;
    uint32_t encode(const std::vector<uint32_t>& rowmajor) const;
    // P e_j = e_perm[j]
    uint32_t permutation(const std::vector<int>& perm) const;
    uint32_t diagonal(const std::vector<uint32_t>& d) const;
    bool is_upper_unitriangular(uint32_t a) const;

private:
    int n_;
    uint32_t q_;
    uint32_t id_;
    std::vector<uint32_t> elements_;
    std::vector<uint32_t> inv_;  // indexed by code, 0 for singular codes
};

// k-valued functions on U\GL_n(F_q), U the upper unitriangular group, with
// right translation and convolution by U-biinvariant functions. This is the
// reduction mod t of k[I\K].
class FiniteCosetSpace {
public:
    FiniteCosetSpace(int n, uint32_t q);
    const FiniteGL& group() const { return g_; }
    int n() const { return g_.n(); }
    uint32_t q() const { return g_.q(); }
    size_t size() const { return reps_.size(); }
    // Smallest code of the coset.
    uint32_t rep(size_t c) const { return reps_[c]; }
    size_t coset_of(uint32_t g) const { return static_cast<size_t>(coset_of_[g]); }
    const std::vector<uint32_t>& unipotent() const { return unipotent_; }
    // c -> coset(rep(c) g)
    std::vector<size_t> right_translation(uint32_t g) const;
    // Orbits of the group generated by gens acting by right translation; each
    // orbit sorted, orbits ordered by their first coset.
    std::vector<std::vector<size_t>> right_orbits(const std::vector<uint32_t>& gens) const;
    // U\G/U.
    const std::vector<std::vector<size_t>>& double_cosets() const { return double_cosets_; }
    size_t double_coset_of(size_t c) const { return dc_of_[c]; }

    // (f . g)(x) = f(x g)
    Vec translate(const Vec& f, uint32_t g) const;
    // (a * b)(x) = sum_y a(x y^-1) b(y); a must be U-biinvariant.
    Vec convolve(const Vec& a, const Vec& b) const;

private:
    FiniteGL g_;
    std::vector<int32_t> coset_of_;
    std::vector<uint32_t> reps_;
    std::vector<uint32_t> unipotent_;
    std::vector<std::vector<size_t>> double_cosets_;
    std::vector<size_t> dc_of_;
    std::vector<std::vector<size_t>> right_by_inverse_;  // right translation by rep(y)^-1
};

// Data of a facet F of the base chamber through x0 at the finite level:
// X_F = k[I\P_F] and h_F = k[I\P_F/I], P_F the parahoric, realized in
// functions on U\GL_n(F_q). h_F acts on X_F on the left by convolution and
// P_F acts by right translation.
class FacetLevel {
public:
    FacetLevel(const FiniteCosetSpace& space, const ApartmentFacet& f, Field k);
    const FiniteCosetSpace& space() const { return *space_; }
    const ApartmentFacet& facet() const { return facet_; }
    const Field& field() const { return k_; }
    const std::vector<int>& blocks() const { return blocks_; }

    bool in_parabolic(uint32_t g) const;
    bool in_radical(uint32_t g) const;
    // Cosets in U\P_F, increasing.
    const std::vector<size_t>& x_cosets() const { return x_cosets_; }
    size_t x_dim() const { return x_cosets_.size(); }
    // Indices into space().double_cosets() of the double cosets inside P_F.
    const std::vector<size_t>& hecke_basis() const { return hecke_; }
    size_t hecke_dim() const { return hecke_.size(); }
    // Characteristic function of the i-th basis double coset.
    Vec tau(size_t i) const;
    // tau of the double coset containing g
    Vec tau_of(uint32_t g) const;
    Vec point(size_t c) const;  // characteristic function of one coset
    // Coordinates of a U-biinvariant function supported in P_F in the tau basis.
    Vec hecke_coords(const Vec& f) const;
    // Elements of the unipotent radical, the image of the pro-p group I_F.
    const std::vector<uint32_t>& radical() const { return radical_; }
    // tau_s for simple reflections of the Levi and tau_t for generators of the torus.
    std::vector<Vec> algebra_generators() const;
    std::vector<uint32_t> parabolic_elements() const;

private:
    const FiniteCosetSpace* space_;
    ApartmentFacet facet_;
    Field k_;
    std::vector<int> blocks_;
    std::vector<size_t> x_cosets_;
    std::vector<size_t> hecke_;
    std::vector<uint32_t> radical_;
};

// Unit and associativity of h_F through its structure constants; for the
// chamber also h_C = k[T0/T1].
CheckResult check_algebra_axioms(const FacetLevel& f);
// D_F = {d in S_n : d(Phi_F+) in Phi+}.
std::vector<std::vector<int>> minimal_coset_reps(int n, const ApartmentFacet& f);
// (h_d) -> sum tau_d h_d from the sum over D_F of h_F onto h_x0 is bijective.
CheckResult verify_free_basis(const FacetLevel& f, const FacetLevel& x0);
// h_x0 (x)_{h_F} X_F -> X_x0^{I_F}, with the tensor product presented as a
// quotient of the free module on pairs, is bijective and P_F-equivariant.
CheckResult verify_tensor_to_fixed(const FacetLevel& f, const FacetLevel& x0, uint32_t seed = 1);
// X_x0^{I_F} is free over k[T0/T1] on characteristic functions, and
// chi (x)_{k[T0/T1]} X_x0^{I_F} -> (Ind_{I'}^K chi)^{I_F} is bijective.
CheckResult verify_torus_specialization(const FacetLevel& f, const FacetLevel& x0, const PrincipalSeriesChar& chi);

}  // namespace prohecke
