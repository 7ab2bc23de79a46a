#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prohecke {

// Extended coweight: lambda in Z^n plus a residue torus part in (F_q^x)^n.
struct Coweight {
    std::vector<int64_t> lambda;
    std::vector<uint32_t> torus;  // entries in [1, q-1]

    bool operator==(const Coweight& o) const { return lambda == o.lambda && torus == o.torus; }
};

struct Antidominance {
    bool antidominant;
    bool strongly;
};

// lambda nondecreasing <=> <lambda, e_i - e_j> <= 0 for all i < j.
Antidominance is_antidominant(const std::vector<int64_t>& lambda);
inline Antidominance is_antidominant(const Coweight& c) { return is_antidominant(c.lambda); }

// Element of W~ = (Z^n x (F_q^x)^n) x| S_n. The canonical lift is
// diag(torus_i * t^(-lambda_i)) * P_perm with P_perm e_j = e_perm[j].
struct ExtendedWeylElt {
    int n = 0;
    uint32_t q = 2;
    std::vector<int> perm;  // 0-based, perm[j] = sigma(j)
    std::vector<int64_t> lambda;
    std::vector<uint32_t> torus;

    static ExtendedWeylElt identity(int n, uint32_t q);
    // s_0 is the affine reflection, s_i (i >= 1) swaps coordinates i-1 and i.
    static ExtendedWeylElt simple(int n, uint32_t q, int i);
    // Length-zero rotation: e_j -> e_{j+1}, e_n -> t^(-1) e_1.
    static ExtendedWeylElt omega(int n, uint32_t q);
    static ExtendedWeylElt translation(uint32_t q, const Coweight& c);
    static ExtendedWeylElt translation(uint32_t q, const std::vector<int64_t>& lambda);
    static ExtendedWeylElt torus_elt(uint32_t q, const std::vector<uint32_t>& torus);
    static ExtendedWeylElt permutation(uint32_t q, const std::vector<int>& perm);

    Coweight coweight() const { return {lambda, torus}; }
    bool has_trivial_torus() const;
    bool is_translation() const;
    std::vector<int> perm_inverse() const;

    bool operator==(const ExtendedWeylElt& o) const;
    bool operator!=(const ExtendedWeylElt& o) const { return !(*this == o); }
    bool operator<(const ExtendedWeylElt& o) const;
    std::string encode() const;
    std::string to_string() const;
};

ExtendedWeylElt multiply(const ExtendedWeylElt& a, const ExtendedWeylElt& b);
ExtendedWeylElt inverse(const ExtendedWeylElt& a);
inline ExtendedWeylElt operator*(const ExtendedWeylElt& a, const ExtendedWeylElt& b) { return multiply(a, b); }

int length(const ExtendedWeylElt& w);

struct ReducedWord {
    ExtendedWeylElt omega_part;
    std::vector<int> word;  // w = omega_part * s_word[0] * ... * s_word[k-1]
};
ReducedWord reduced_word(const ExtendedWeylElt& w);

// Vertex types of the base chamber; type j is the lattice diag(1^j, t^(n-j)) O^n.
struct ApartmentFacet {
    std::vector<int> vertex_types;  // sorted, nonempty
    int dim() const { return static_cast<int>(vertex_types.size()) - 1; }
    bool contains_base_vertex() const;
    bool operator==(const ApartmentFacet& o) const { return vertex_types == o.vertex_types; }
    bool operator<(const ApartmentFacet& o) const { return vertex_types < o.vertex_types; }
    std::string to_string() const;
};

// Image of the facet under omega^k (types shift by k mod n).
ApartmentFacet rotate_facet(const ApartmentFacet& f, int n, int k);
// All facets of the closed base chamber containing type 0.
std::vector<ApartmentFacet> facets_through_base_vertex(int n);
std::vector<ApartmentFacet> orbit_facets(int n, int i);
// Coweight nu_j = (1^j, 0^(n-j)) with canonical lift sending x0 to the type-j vertex.
std::vector<int64_t> vertex_coweight(int n, int type);
bool apartment_stabilizer_check(int n, const ApartmentFacet& f, int box = 2);

// Blocks of the Levi of the parahoric of a facet through x0: index -> block id.
std::vector<int> facet_blocks(int n, const ApartmentFacet& f);

std::vector<std::vector<int>> all_permutations(int n);

}  // namespace prohecke
