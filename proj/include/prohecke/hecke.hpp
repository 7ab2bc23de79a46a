#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prohecke/character.hpp"
#include "prohecke/group.hpp"
#include "prohecke/linalg.hpp"
#include "prohecke/weyl.hpp"

namespace prohecke {

// Finite k-linear combination of the basis tau_w of k[I\G/I].
class HeckeElt {
public:
    HeckeElt(Field k, int n, uint32_t q) : k_(std::move(k)), n_(n), q_(q) {}
    static HeckeElt tau(const Field& k, const ExtendedWeylElt& w);
    static HeckeElt tau(const Field& k, const ExtendedWeylElt& w, const Scalar& c);

    const Field& field() const { return k_; }
    int n() const { return n_; }
    uint32_t q() const { return q_; }
    const std::map<ExtendedWeylElt, Scalar>& terms() const { return terms_; }
    Scalar coeff(const ExtendedWeylElt& w) const;
    void add_term(const ExtendedWeylElt& w, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }
    int max_length() const;

    HeckeElt operator+(const HeckeElt& o) const;
    HeckeElt operator-(const HeckeElt& o) const;
    HeckeElt scaled(const Scalar& c) const;
    bool operator==(const HeckeElt& o) const;
    bool operator!=(const HeckeElt& o) const { return !(*this == o); }
    std::string to_string() const;

private:
    Field k_;
    int n_;
    uint32_t q_;
    std::map<ExtendedWeylElt, Scalar> terms_;  // no zero coefficients
};

constexpr int kDefaultHeckeBudget = 24;

// Torus elements h with tau_s^2 = q tau_1 + sum_h tau_h for the lifted simple reflection s.
std::vector<ExtendedWeylElt> quadratic_torus_terms(int n, uint32_t q, int s);

// Product in the tau basis from the braid and quadratic relations.
HeckeElt tau_multiply(const HeckeElt& a, const HeckeElt& b, int budget = kDefaultHeckeBudget);
HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);

// Independent product: structure constants c_v = #{x in IwI/I : x^-1 v in I w2 I}.
// Coset representatives of I w I / I; defaults to coset_reps.
using CosetSource = std::function<std::vector<GroupMat>(const ExtendedWeylElt&)>;
HeckeElt convolve_oracle(const ExtendedWeylElt& w, const ExtendedWeylElt& w2, const Field& k,
                         Exec exec = Exec::Parallel, const CosetSource& source = {});

// Regular character of the antidominant subalgebra.
class AntiCharacter {
public:
    AntiCharacter(Field k, int n, uint32_t q, std::function<Scalar(const Coweight&)> fn)
        : k_(std::move(k)), n_(n), q_(q), fn_(std::move(fn)) {}
    const Field& field() const { return k_; }
    int n() const { return n_; }
    uint32_t q() const { return q_; }
    // Value on tau_{e^c}; c must be antidominant.
    Scalar value(const Coweight& c) const;
    // Value on an element supported on antidominant translations.
    Scalar value(const HeckeElt& h) const;

private:
    Field k_;
    int n_;
    uint32_t q_;
    std::function<Scalar(const Coweight&)> fn_;
};

// chibar(tau_{e^lambda}) = chi(lift of e^-lambda).
AntiCharacter build_anti_character(const PrincipalSeriesChar& chi);

// lambda = lambda1 - lambda2 with both antidominant; the torus part goes to lambda1.
std::pair<Coweight, Coweight> antidominant_difference(const Coweight& lambda);

// The inverse map psi -> psi_ on torus elements: psi_(lift of e^mu) from
// psi(tau_{e^l1}) psi(tau_{e^l2})^-1 with l1 - l2 = -mu, so that the round trip
// from a torus character is the identity.
Scalar underline_character(const AntiCharacter& psi, const Coweight& mu);
// The same formula with l1 - l2 = mu; it returns chi(t^-1).
Scalar underline_character_reversed(const AntiCharacter& psi, const Coweight& mu);

// Truncated fiber k (x)_{A_anti} H: coordinates are tau_w for w in N_L (trivial
// torus, lambda_0 = 0, length <= L); torus and central factors are folded into
// scalars through the character.
class FiberTruncation {
public:
    FiberTruncation(const AntiCharacter& chibar, int L);
    int L() const { return L_; }
    size_t size() const { return basis_.size(); }
    const std::vector<ExtendedWeylElt>& basis() const { return basis_; }
    std::optional<size_t> index(const ExtendedWeylElt& w) const;
    // Image of 1 (x) h; nullopt if h leaves the truncation.
    std::optional<SparseVec> fold(const HeckeElt& h) const;
    // All relations 1 (x) (tau_{e^lambda} tau_w - chibar(e^lambda) tau_w) inside the truncation.
    const std::vector<SparseVec>& relations() const { return relations_; }
    size_t relation_rank() const { return relation_rank_; }

private:
    AntiCharacter chibar_;
    int L_;
    std::vector<ExtendedWeylElt> basis_;
    std::map<ExtendedWeylElt, size_t> index_;
    std::vector<SparseVec> relations_;
    size_t relation_rank_ = 0;
};

struct SandwichResult {
    size_t upper = 0;
    size_t lower = 0;
    size_t truncation_size = 0;
    size_t relation_count = 0;
    bool certified() const { return upper == lower; }
};

// Image of 1 (x) h in a target space, used for the lower bound.
using FiberEvaluator = std::function<Vec(const HeckeElt&)>;

// upper: dimension of the span of 1 (x) g, g in generators, modulo the relations
// of the length-L truncation; lower: rank of the evaluator on the generators.
SandwichResult fiber_dimension_sandwich(const std::vector<HeckeElt>& generators, const AntiCharacter& chibar, int L,
                                        const FiberEvaluator& eval);

}  // namespace prohecke
