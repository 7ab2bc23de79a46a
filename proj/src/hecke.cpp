#include "prohecke/hecke.hpp"

#include <algorithm>
#include <omp.h>
#include <set>
#include <stdexcept>

#include "prohecke/group.hpp"

namespace prohecke {

HeckeElt HeckeElt::tau(const Field& k, const ExtendedWeylElt& w) { return tau(k, w, Scalar::one(k)); }

HeckeElt HeckeElt::tau(const Field& k, const ExtendedWeylElt& w, const Scalar& c) {
    HeckeElt h(k, w.n, w.q);
    h.add_term(w, c);
    return h;
}

Scalar HeckeElt::coeff(const ExtendedWeylElt& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(k_) : it->second;
}

void HeckeElt::add_term(const ExtendedWeylElt& w, const Scalar& c) {
    if (w.n != n_ || w.q != q_) throw std::invalid_argument("Hecke term of the wrong group");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int HeckeElt::max_length() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, length(w));
    return m;
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
    HeckeElt r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const { return *this + o.scaled(-Scalar::one(k_)); }

HeckeElt HeckeElt::scaled(const Scalar& c) const {
    HeckeElt r(k_, n_, q_);
    for (const auto& [w, x] : terms_) r.add_term(w, x * c);
    return r;
}

bool HeckeElt::operator==(const HeckeElt& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [w, c] : terms_) {
        auto it = o.terms_.find(w);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

std::string HeckeElt::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) s += (s.empty() ? "" : " + ") + c.to_string() + "*tau[" + w.encode() + "]";
    return s;
}

std::vector<ExtendedWeylElt> quadratic_torus_terms(int n, uint32_t q, int s) {
    int i = s == 0 ? 0 : s - 1, j = s == 0 ? n - 1 : s;
    std::vector<ExtendedWeylElt> out;
    for (uint32_t c = 1; c < q; ++c) {
        std::vector<uint32_t> tor(n, 1);
        tor[i] = c;
        tor[j] = (q - mod_inv(c, q)) % q;
        out.push_back(ExtendedWeylElt::torus_elt(q, tor));
    }
    return out;
}

namespace {

// Right multiplication of every term by tau_s.
HeckeElt times_simple(const HeckeElt& x, int s) {
    const int n = x.n();
    const uint32_t q = x.q();
    ExtendedWeylElt sw = ExtendedWeylElt::simple(n, q, s);
    auto torus_terms = quadratic_torus_terms(n, q, s);
    Scalar qk = Scalar::from_int(x.field(), q);
    HeckeElt r(x.field(), n, q);
    for (const auto& [z, c] : x.terms()) {
        ExtendedWeylElt zs = z * sw;
        if (length(zs) > length(z)) {
            r.add_term(zs, c);
        } else {
            r.add_term(zs, c * qk);
            for (const auto& h : torus_terms) r.add_term(z * h, c);
        }
    }
    return r;
}

}  // namespace

HeckeElt tau_multiply(const HeckeElt& a, const HeckeElt& b, int budget) {
    if (a.field() != b.field() || a.n() != b.n() || a.q() != b.q())
        throw std::invalid_argument("Hecke elements of different algebras");
    if (a.max_length() + b.max_length() > budget) throw std::length_error("Hecke product exceeds the length budget");
    HeckeElt r(a.field(), a.n(), a.q());
    for (const auto& [w2, c2] : b.terms()) {
        ReducedWord rw = reduced_word(w2);
        HeckeElt part(a.field(), a.n(), a.q());
        for (const auto& [w1, c1] : a.terms()) part.add_term(w1 * rw.omega_part, c1 * c2);
        for (int s : rw.word) part = times_simple(part, s);
        r = r + part;
    }
    return r;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) { return tau_multiply(a, b); }

HeckeElt convolve_oracle(const ExtendedWeylElt& w, const ExtendedWeylElt& w2, const Field& k, Exec exec,
                         const CosetSource& source) {
    auto reps = [&](const ExtendedWeylElt& x) { return source ? source(x) : coset_reps(x); };
    auto xs = reps(w), ys = reps(w2);
    const long nx = static_cast<long>(xs.size());
    std::vector<std::set<ExtendedWeylElt>> cand(nx);
    std::vector<GroupMat> xinv(nx);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long i = 0; i < nx; ++i) {
        xinv[i] = xs[i].inverse();
        for (const auto& y : ys) cand[i].insert(bruhat_iwahori_class(xs[i] * y));
    }
    std::set<ExtendedWeylElt> all;
    for (const auto& c : cand) all.insert(c.begin(), c.end());
    std::vector<ExtendedWeylElt> vs(all.begin(), all.end());
    std::vector<GroupMat> vhat;
    for (const auto& v : vs) vhat.push_back(GroupMat::lift(v));
    std::vector<long> counts(vs.size(), 0);
    const long nv = static_cast<long>(vs.size());
#pragma omp parallel for collapse(2) schedule(dynamic) if (exec == Exec::Parallel)
    for (long a = 0; a < nv; ++a)
        for (long i = 0; i < nx; ++i)
            if (bruhat_iwahori_class(xinv[i] * vhat[a]) == w2) {
#pragma omp atomic
                ++counts[a];
            }
    HeckeElt r(k, w.n, w.q);
    for (long a = 0; a < nv; ++a) r.add_term(vs[a], Scalar::from_int(k, counts[a]));
    return r;
}

Scalar AntiCharacter::value(const Coweight& c) const {
    if (static_cast<int>(c.lambda.size()) != n_) throw std::invalid_argument("coweight of wrong rank");
    if (!is_antidominant(c.lambda).antidominant) throw std::domain_error("character evaluated off the antidominant part");
    return fn_(c);
}

Scalar AntiCharacter::value(const HeckeElt& h) const {
    Scalar r = Scalar::zero(k_);
    for (const auto& [w, c] : h.terms()) {
        if (!w.is_translation()) throw std::domain_error("element outside the antidominant subalgebra");
        r += c * value(w.coweight());
    }
    return r;
}

AntiCharacter build_anti_character(const PrincipalSeriesChar& chi) {
    const uint32_t q = chi.q();
    return AntiCharacter(chi.field(), chi.n(), q, [chi, q](const Coweight& c) {
        return chi.on_coweight(inverse(ExtendedWeylElt::translation(q, c)).coweight());
    });
}

std::pair<Coweight, Coweight> antidominant_difference(const Coweight& lambda) {
    const int n = static_cast<int>(lambda.lambda.size());
    int64_t c = 0;
    for (int i = 0; i + 1 < n; ++i) c = std::max(c, lambda.lambda[i] - lambda.lambda[i + 1]);
    Coweight l1 = lambda, l2{std::vector<int64_t>(n), {}};
    for (int i = 0; i < n; ++i) {
        l2.lambda[i] = c * i;
        l1.lambda[i] += c * i;
    }
    return {l1, l2};
}

namespace {

Scalar underline_at(const AntiCharacter& psi, const Coweight& lambda) {
    auto [l1, l2] = antidominant_difference(lambda);
    return psi.value(l1) * psi.value(l2).inv();
}

}  // namespace

Scalar underline_character(const AntiCharacter& psi, const Coweight& mu) {
    return underline_at(psi, inverse(ExtendedWeylElt::translation(psi.q(), mu)).coweight());
}

Scalar underline_character_reversed(const AntiCharacter& psi, const Coweight& mu) {
    return underline_at(psi, ExtendedWeylElt::translation(psi.q(), mu).coweight());
}

FiberTruncation::FiberTruncation(const AntiCharacter& chibar, int L) : chibar_(chibar), L_(L) {
    const int n = chibar.n();
    const uint32_t q = chibar.q();
    for (const auto& p : all_permutations(n)) {
        std::vector<int64_t> lam(n, -(L + 1));
        lam[0] = 0;
        while (true) {
            ExtendedWeylElt w = ExtendedWeylElt::permutation(q, p);
            w.lambda = lam;
            if (length(w) <= L) basis_.push_back(w);
            int i = 1;
            while (i < n && ++lam[i] > L + 1) lam[i++] = -(L + 1);
            if (i == n) break;
        }
    }
    std::stable_sort(basis_.begin(), basis_.end(), [](const ExtendedWeylElt& a, const ExtendedWeylElt& b) {
        int la = length(a), lb = length(b);
        return la != lb ? la < lb : a < b;
    });
    for (size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);

    // Nonzero antidominant lambda with lambda_0 = 0 and length <= L.
    std::vector<std::vector<int64_t>> anti;
    std::vector<int64_t> lam(n, 0);
    while (true) {
        if (is_antidominant(lam).antidominant && length(ExtendedWeylElt::translation(q, lam)) <= L &&
            std::any_of(lam.begin(), lam.end(), [](int64_t x) { return x != 0; }))
            anti.push_back(lam);
        int i = 1;
        while (i < n && ++lam[i] > L) lam[i++] = 0;
        if (i == n || n == 1) break;
    }
    const Field& k = chibar.field();
    SparseEchelon ech(k);
    for (const auto& l : anti) {
        ExtendedWeylElt e = ExtendedWeylElt::translation(q, l);
        int le = length(e);
        HeckeElt te = HeckeElt::tau(k, e);
        Scalar val = chibar.value(e.coweight());
        for (size_t j = 0; j < basis_.size(); ++j) {
            if (le + length(basis_[j]) > L) continue;
            auto v = fold(tau_multiply(te, HeckeElt::tau(k, basis_[j]), 2 * L + 2));
            if (!v) throw std::logic_error("relation left the truncation");
            sparse_axpy(-val, SparseVec{{j, Scalar::one(k)}}, *v);
            if (v->empty()) continue;
            relations_.push_back(*v);
            ech.insert(*v);
        }
    }
    relation_rank_ = ech.rank();
}

std::optional<size_t> FiberTruncation::index(const ExtendedWeylElt& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<SparseVec> FiberTruncation::fold(const HeckeElt& h) const {
    const int n = chibar_.n();
    const uint32_t q = chibar_.q();
    SparseVec out;
    for (const auto& [v, c] : h.terms()) {
        // v = a * w0 with a = e^(z,...,z) times the torus part of v.
        int64_t z = v.lambda[0];
        Coweight a{std::vector<int64_t>(n, z), v.torus};
        ExtendedWeylElt w0 = ExtendedWeylElt::permutation(q, v.perm);
        for (int i = 0; i < n; ++i) w0.lambda[i] = v.lambda[i] - z;
        auto idx = index(w0);
        if (!idx) return std::nullopt;
        sparse_axpy(c * chibar_.value(a), SparseVec{{*idx, Scalar::one(chibar_.field())}}, out);
    }
    return out;
}

SandwichResult fiber_dimension_sandwich(const std::vector<HeckeElt>& generators, const AntiCharacter& chibar, int L,
                                        const FiberEvaluator& eval) {
    for (const auto& g : generators)
        if (g.max_length() > L) throw std::length_error("generator longer than the truncation");
    FiberTruncation trunc(chibar, L);
    const Field& k = chibar.field();
    SparseEchelon ech(k);
    for (const auto& r : trunc.relations()) ech.insert(r);
    size_t base = ech.rank();
    std::vector<Vec> images;
    for (const auto& g : generators) {
        auto v = trunc.fold(g);
        if (!v) throw std::logic_error("generator left the truncation");
        ech.insert(*v);
        images.push_back(eval(g));
    }
    SandwichResult res;
    res.upper = ech.rank() - base;
    res.truncation_size = trunc.size();
    res.relation_count = trunc.relations().size();
    if (!images.empty()) {
        EchelonBasis lower(k, images.front().size());
        for (const auto& v : images) lower.insert(v);
        res.lower = lower.size();
    }
    return res;
}

}  // namespace prohecke
