#include "prohecke/finite_level.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

namespace prohecke {

namespace {

using Entries = std::array<uint32_t, 9>;

Entries decode(uint32_t code, int n, uint32_t q) {
    Entries e{};
    for (int k = 0; k < n * n; ++k) {
        e[k] = code % q;
        code /= q;
    }
    return e;
}

uint32_t inv_mod(uint32_t x, uint32_t q) {
    uint32_t r = 1;
    for (uint32_t i = 0; i + 2 < q; ++i) r = r * x % q;
    return r;
}

// Gauss-Jordan over F_q; false if singular.
bool invert(const Entries& a, int n, uint32_t q, Entries& out) {
    std::array<uint32_t, 18> m{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[i * 2 * n + j] = a[i * n + j];
            m[i * 2 * n + n + j] = i == j;
        }
    const int w = 2 * n;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[p * w + c] == 0) ++p;
        if (p == n) return false;
        for (int j = 0; j < w; ++j) std::swap(m[c * w + j], m[p * w + j]);
        uint32_t s = inv_mod(m[c * w + c], q);
        for (int j = 0; j < w; ++j) m[c * w + j] = m[c * w + j] * s % q;
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r * w + c] == 0) continue;
            uint32_t f = m[r * w + c];
            for (int j = 0; j < w; ++j) m[r * w + j] = (m[r * w + j] + (q - f) * m[c * w + j]) % q;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i * n + j] = m[i * w + n + j];
    return true;
}

void sparse_add(SparseVec& v, size_t i, const Scalar& a) {
    auto it = v.find(i);
    if (it == v.end())
        v.emplace(i, a);
    else
        it->second += a;
}

size_t find_root(std::vector<size_t>& parent, size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

FiniteGL::FiniteGL(int n, uint32_t q) : n_(n), q_(q) {
    if (n < 1 || n > 3) throw std::invalid_argument("FiniteGL supports n <= 3");
    if (q != 2 && q != 3) throw std::invalid_argument("FiniteGL supports q in {2, 3}");
    uint32_t total = 1;
    for (int k = 0; k < n * n; ++k) total *= q;
    inv_.assign(total, 0);
    for (uint32_t c = 0; c < total; ++c) {
        Entries out{};
        if (invert(decode(c, n, q), n, q, out)) {
            elements_.push_back(c);
            inv_[c] = encode(std::vector<uint32_t>(out.begin(), out.begin() + n * n));
        }
    }
    std::vector<uint32_t> id(n * n, 0);
    for (int i = 0; i < n; ++i) id[i * n + i] = 1;
    id_ = encode(id);
}

uint32_t FiniteGL::mul(uint32_t a, uint32_t b) const {
    Entries x = decode(a, n_, q_), y = decode(b, n_, q_);
    std::vector<uint32_t> r(n_ * n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            uint32_t s = 0;
            for (int k = 0; k < n_; ++k) s += x[i * n_ + k] * y[k * n_ + j];
            r[i * n_ + j] = s % q_;
        }
    return encode(r);
}

uint32_t FiniteGL::entry(uint32_t a, int i, int j) const {
    for (int k = 0; k < i * n_ + j; ++k) a /= q_;
    return a % q_;
}

uint32_t FiniteGL::encode(const std::vector<uint32_t>& e) const {
    uint32_t c = 0;
    for (int k = n_ * n_ - 1; k >= 0; --k) c = c * q_ + e[k] % q_;
    return c;
}

uint32_t FiniteGL::permutation(const std::vector<int>& perm) const {
    std::vector<uint32_t> e(n_ * n_, 0);
    for (int j = 0; j < n_; ++j) e[perm[j] * n_ + j] = 1;
    return encode(e);
}

uint32_t FiniteGL::diagonal(const std::vector<uint32_t>& d) const {
    std::vector<uint32_t> e(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) e[i * n_ + i] = d[i];
    return encode(e);
}

bool FiniteGL::is_upper_unitriangular(uint32_t a) const {
    Entries e = decode(a, n_, q_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j)
            if (e[i * n_ + j] != (i == j ? 1u : 0u)) return false;
    return true;
}

FiniteCosetSpace::FiniteCosetSpace(int n, uint32_t q) : g_(n, q) {
    for (uint32_t c : g_.elements())
        if (g_.is_upper_unitriangular(c)) unipotent_.push_back(c);
    coset_of_.assign(g_.elements().back() + 1, -1);
    for (uint32_t c : g_.elements()) {
        if (coset_of_[c] >= 0) continue;
        const int32_t id = static_cast<int32_t>(reps_.size());
        reps_.push_back(c);
        for (uint32_t u : unipotent_) coset_of_[g_.mul(u, c)] = id;
    }
    double_cosets_ = right_orbits(unipotent_);
    for (size_t y = 0; y < size(); ++y) right_by_inverse_.push_back(right_translation(g_.inv(reps_[y])));
    dc_of_.assign(size(), 0);
    for (size_t d = 0; d < double_cosets_.size(); ++d)
        for (size_t c : double_cosets_[d]) dc_of_[c] = d;
}

std::vector<size_t> FiniteCosetSpace::right_translation(uint32_t g) const {
    std::vector<size_t> out(size());
    for (size_t c = 0; c < size(); ++c) out[c] = coset_of(g_.mul(reps_[c], g));
    return out;
}

std::vector<std::vector<size_t>> FiniteCosetSpace::right_orbits(const std::vector<uint32_t>& gens) const {
    std::vector<size_t> parent(size());
    std::iota(parent.begin(), parent.end(), 0);
    for (uint32_t g : gens) {
        auto pi = right_translation(g);
        for (size_t c = 0; c < size(); ++c) {
            size_t a = find_root(parent, c), b = find_root(parent, pi[c]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::vector<size_t>> orbits;
    std::vector<long> slot(size(), -1);
    for (size_t c = 0; c < size(); ++c) {
        size_t r = find_root(parent, c);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(orbits.size());
            orbits.emplace_back();
        }
        orbits[slot[r]].push_back(c);
    }
    return orbits;
}

Vec FiniteCosetSpace::translate(const Vec& f, uint32_t g) const {
    auto pi = right_translation(g);
    Vec out(size());
    for (size_t c = 0; c < size(); ++c) out[c] = f[pi[c]];
    return out;
}

Vec FiniteCosetSpace::convolve(const Vec& a, const Vec& b) const {
    const Field k = a.front().field();
    Vec out = zero_vec(k, size());
    for (size_t y = 0; y < size(); ++y) {
        if (b[y].is_zero()) continue;
        // (a * e_y)(x) = a(x rep(y)^-1)
        const auto& pi = right_by_inverse_[y];
        for (size_t x = 0; x < size(); ++x)
            if (!a[pi[x]].is_zero()) out[x] += a[pi[x]] * b[y];
    }
    return out;
}

FacetLevel::FacetLevel(const FiniteCosetSpace& space, const ApartmentFacet& f, Field k)
    : space_(&space), facet_(f), k_(std::move(k)), blocks_(facet_blocks(space.n(), f)) {
    for (size_t c = 0; c < space.size(); ++c)
        if (in_parabolic(space.rep(c))) x_cosets_.push_back(c);
    for (size_t d = 0; d < space.double_cosets().size(); ++d)
        if (in_parabolic(space.rep(space.double_cosets()[d].front()))) hecke_.push_back(d);
    for (uint32_t u : space.unipotent())
        if (in_radical(u)) radical_.push_back(u);
}

bool FacetLevel::in_parabolic(uint32_t g) const {
    const auto& G = space_->group();
    for (int i = 0; i < G.n(); ++i)
        for (int j = 0; j < G.n(); ++j)
            if (blocks_[i] > blocks_[j] && G.entry(g, i, j) != 0) return false;
    return true;
}

bool FacetLevel::in_radical(uint32_t g) const {
    const auto& G = space_->group();
    if (!in_parabolic(g)) return false;
    for (int i = 0; i < G.n(); ++i)
        for (int j = 0; j < G.n(); ++j)
            if (blocks_[i] == blocks_[j] && G.entry(g, i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

Vec FacetLevel::tau(size_t i) const {
    Vec v = zero_vec(k_, space_->size());
    for (size_t c : space_->double_cosets()[hecke_[i]]) v[c] = Scalar::one(k_);
    return v;
}

Vec FacetLevel::tau_of(uint32_t g) const {
    size_t d = space_->double_coset_of(space_->coset_of(g));
    auto it = std::find(hecke_.begin(), hecke_.end(), d);
    if (it == hecke_.end()) throw std::invalid_argument("element outside the parahoric");
    return tau(static_cast<size_t>(it - hecke_.begin()));
}

Vec FacetLevel::point(size_t c) const {
    Vec v = zero_vec(k_, space_->size());
    v[c] = Scalar::one(k_);
    return v;
}

Vec FacetLevel::hecke_coords(const Vec& f) const {
    Vec out;
    for (size_t d : hecke_) out.push_back(f[space_->double_cosets()[d].front()]);
    return out;
}

std::vector<Vec> FacetLevel::algebra_generators() const {
    const auto& G = space_->group();
    const int n = G.n();
    std::vector<Vec> gens;
    for (int i = 1; i < n; ++i) {
        if (blocks_[i - 1] != blocks_[i]) continue;
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[i - 1], p[i]);
        gens.push_back(tau_of(G.permutation(p)));
    }
    if (G.q() > 2)
        for (int i = 0; i < n; ++i) {
            std::vector<uint32_t> d(n, 1);
            d[i] = primitive_root_mod(G.q());
            gens.push_back(tau_of(G.diagonal(d)));
        }
    return gens;
}

std::vector<uint32_t> FacetLevel::parabolic_elements() const {
    std::vector<uint32_t> out;
    for (uint32_t g : space_->group().elements())
        if (in_parabolic(g)) out.push_back(g);
    return out;
}

CheckResult check_algebra_axioms(const FacetLevel& f) {
    CheckResult res;
    const size_t d = f.hecke_dim();
    const auto& S = f.space();
    res.record("dim_h_F", static_cast<int64_t>(d));
    std::vector<Vec> taus;
    for (size_t i = 0; i < d; ++i) taus.push_back(f.tau(i));
    // c[i][j] = coordinates of tau_i tau_j
    std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(d); ++i)
        for (size_t j = 0; j < d; ++j) c[i][j] = f.hecke_coords(S.convolve(taus[i], taus[j]));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            Vec full = S.convolve(taus[i], taus[j]);
            Vec back = zero_vec(f.field(), S.size());
            for (size_t k = 0; k < d; ++k) back = axpy(c[i][j][k], taus[k], back);
            if (!res.expect(back == full, "product of basis elements leaves the algebra")) return res;
        }
    size_t unit = 0;
    while (unit < d && f.tau(unit)[S.coset_of(S.group().identity())].is_zero()) ++unit;
    res.expect(unit < d, "no identity double coset");
    for (size_t i = 0; i < d && res.pass; ++i) {
        Vec e = zero_vec(f.field(), d);
        e[i] = Scalar::one(f.field());
        res.expect(c[unit][i] == e && c[i][unit] == e, "tau_1 is not a unit");
    }
    bool assoc = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : assoc)
    for (long a = 0; a < static_cast<long>(d); ++a)
        for (size_t b = 0; b < d; ++b)
            for (size_t g = 0; g < d; ++g) {
                Vec left = zero_vec(f.field(), d), right = zero_vec(f.field(), d);
                for (size_t k = 0; k < d; ++k) {
                    if (!c[a][b][k].is_zero()) left = axpy(c[a][b][k], c[k][g], left);
                    if (!c[b][g][k].is_zero()) right = axpy(c[b][g][k], c[a][k], right);
                }
                assoc = assoc && left == right;
            }
    res.expect(assoc, "structure constants are not associative");
    if (f.facet().vertex_types.size() == static_cast<size_t>(S.n())) {
        // chamber: every double coset is a single torus coset and tau_t tau_t' = tau_tt'
        size_t t_order = 1;
        for (int i = 0; i < S.n(); ++i) t_order *= S.q() - 1;
        res.expect(d == t_order, "chamber algebra has the wrong dimension");
        for (size_t i = 0; i < d && res.pass; ++i) {
            res.expect(S.double_cosets()[f.hecke_basis()[i]].size() == 1, "chamber double coset is not a coset");
            for (size_t j = 0; j < d; ++j) {
                uint32_t x = S.rep(S.double_cosets()[f.hecke_basis()[i]].front());
                uint32_t y = S.rep(S.double_cosets()[f.hecke_basis()[j]].front());
                res.expect(S.convolve(taus[i], taus[j]) == f.tau_of(S.group().mul(x, y)),
                           "chamber algebra is not the torus group algebra");
            }
        }
    }
    return res;
}

std::vector<std::vector<int>> minimal_coset_reps(int n, const ApartmentFacet& f) {
    auto blocks = facet_blocks(n, f);
    std::vector<std::vector<int>> out;
    for (const auto& d : all_permutations(n)) {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (blocks[i] == blocks[j] && d[i] > d[j]) ok = false;
        if (ok) out.push_back(d);
    }
    return out;
}

CheckResult verify_free_basis(const FacetLevel& f, const FacetLevel& x0) {
    CheckResult res;
    const auto& S = f.space();
    auto reps = minimal_coset_reps(S.n(), f.facet());
    res.record("D_F", static_cast<int64_t>(reps.size()));
    res.record("dim_h_F", static_cast<int64_t>(f.hecke_dim()));
    res.record("dim_h_x0", static_cast<int64_t>(x0.hecke_dim()));
    std::vector<Vec> cols;
    for (const auto& d : reps) {
        Vec td = x0.tau_of(S.group().permutation(d));
        for (size_t b = 0; b < f.hecke_dim(); ++b) cols.push_back(x0.hecke_coords(S.convolve(td, f.tau(b))));
    }
    size_t r = rank(ExactMatrix::from_columns(f.field(), cols));
    res.record("rank", static_cast<int64_t>(r));
    res.expect(reps.size() * f.hecke_dim() == x0.hecke_dim(), "|D_F| dim h_F != dim h_x0");
    res.expect(r == x0.hecke_dim(), "sum of tau_d h_F does not span h_x0");
    return res;
}

CheckResult verify_tensor_to_fixed(const FacetLevel& f, const FacetLevel& x0, uint32_t seed) {
    CheckResult res;
    const auto& S = f.space();
    const Field& k = f.field();
    const size_t H = x0.hecke_dim(), X = f.x_dim();
    auto pair = [&](size_t h, size_t xi) { return h * X + xi; };
    std::vector<long> x_slot(S.size(), -1);
    for (size_t i = 0; i < X; ++i) x_slot[f.x_cosets()[i]] = static_cast<long>(i);

    std::vector<Vec> tau_x0;
    for (size_t h = 0; h < H; ++h) tau_x0.push_back(x0.tau(h));
    // Image of tau_h (x) e_c, as sparse columns over U\G.
    std::vector<SparseVec> image(H * X);
#pragma omp parallel for schedule(dynamic)
    for (long h = 0; h < static_cast<long>(H); ++h)
        for (size_t i = 0; i < X; ++i) {
            Vec v = S.convolve(tau_x0[h], f.point(f.x_cosets()[i]));
            SparseVec s;
            for (size_t c = 0; c < v.size(); ++c)
                if (!v[c].is_zero()) s[c] = v[c];
            image[pair(h, i)] = std::move(s);
        }

    // Middle relations (tau_h b) (x) e_c - tau_h (x) (b e_c) for algebra generators b of h_F.
    std::vector<SparseVec> relations;
    bool map_kills = true;
    for (const auto& b : f.algebra_generators()) {
        std::vector<Vec> hb(H), be(X);
        for (size_t h = 0; h < H; ++h) hb[h] = x0.hecke_coords(S.convolve(tau_x0[h], b));
        for (size_t i = 0; i < X; ++i) be[i] = S.convolve(b, f.point(f.x_cosets()[i]));
        for (size_t h = 0; h < H; ++h)
            for (size_t i = 0; i < X; ++i) {
                SparseVec rel;
                for (size_t h2 = 0; h2 < H; ++h2)
                    if (!hb[h][h2].is_zero()) sparse_add(rel, pair(h2, i), hb[h][h2]);
                for (size_t c = 0; c < S.size(); ++c) {
                    if (be[i][c].is_zero()) continue;
                    if (x_slot[c] < 0) throw std::logic_error("h_F moved X_F outside P_F");
                    sparse_add(rel, pair(h, x_slot[c]), -be[i][c]);
                }
                for (auto it = rel.begin(); it != rel.end();) it = it->second.is_zero() ? rel.erase(it) : std::next(it);
                if (rel.empty()) continue;
                SparseVec img;
                for (const auto& [col, a] : rel) sparse_axpy(a, image[col], img);
                map_kills = map_kills && img.empty();
                relations.push_back(std::move(rel));
            }
    }
    const size_t tensor_dim = quotient_dimension(k, H * X, relations);

    // Fixed space of the radical: characteristic functions of its orbits.
    auto orbits = S.right_orbits(f.radical());
    SparseEchelon span(k);
    bool fixed = true;
    std::vector<long> orbit_of(S.size());
    for (size_t o = 0; o < orbits.size(); ++o)
        for (size_t c : orbits[o]) orbit_of[c] = static_cast<long>(o);
    for (const auto& col : image) {
        // constant on every orbit
        for (const auto& [c, a] : col)
            for (size_t c2 : orbits[orbit_of[c]]) {
                auto it = col.find(c2);
                if (it == col.end() || it->second != a) fixed = false;
            }
        // the rank cannot exceed the number of orbits once the image is fixed
        if (span.rank() < orbits.size()) span.insert(col);
    }
    res.record("dim_tensor", static_cast<int64_t>(tensor_dim));
    res.record("dim_fixed", static_cast<int64_t>(orbits.size()));
    res.record("rank_map", static_cast<int64_t>(span.rank()));
    res.expect(map_kills, "the natural map does not vanish on the middle relations");
    res.expect(fixed, "image not fixed by I_F");
    res.expect(span.rank() == orbits.size(), "map is not surjective onto the I_F-fixed vectors");
    res.expect(span.rank() == tensor_dim, "map is not injective on the tensor product");

    // Equivariance for random elements of the parahoric.
    auto para = f.parabolic_elements();
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 3; ++trial) {
        uint32_t g = para[rng() % para.size()];
        size_t h = rng() % H, i = rng() % X;
        Vec lhs = S.convolve(tau_x0[h], S.translate(f.point(f.x_cosets()[i]), g));
        Vec rhs = S.translate(S.convolve(tau_x0[h], f.point(f.x_cosets()[i])), g);
        res.expect(lhs == rhs, "natural map is not P_F-equivariant");
    }
    return res;
}

CheckResult verify_torus_specialization(const FacetLevel& f, const FacetLevel& x0, const PrincipalSeriesChar& chi) {
    CheckResult res;
    const auto& S = f.space();
    const auto& G = S.group();
    const Field& k = chi.field();
    if (k != f.field()) throw std::invalid_argument("character and facet data over different fields");
    const int n = S.n();
    const uint32_t q = S.q();

    std::vector<uint32_t> torus;
    std::vector<std::vector<uint32_t>> diag_entries{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<uint32_t>> next;
        for (const auto& d : diag_entries)
            for (uint32_t c = 1; c < q; ++c) {
                auto e = d;
                e.push_back(c);
                next.push_back(e);
            }
        diag_entries = next;
    }
    std::vector<Scalar> chi_t;
    for (const auto& d : diag_entries) {
        torus.push_back(G.diagonal(d));
        Scalar v = Scalar::one(k);
        for (int i = 0; i < n; ++i) v *= chi.tame_value(i, d[i]);
        chi_t.push_back(v);
    }

    // X_x0^{I_F}: characteristic functions of U\G/I_F.
    auto orbits = S.right_orbits(f.radical());
    const size_t r0 = orbits.size();
    std::vector<Vec> basis;
    for (const auto& o : orbits) {
        Vec v = zero_vec(k, S.size());
        for (size_t c : o) v[c] = Scalar::one(k);
        basis.push_back(std::move(v));
    }
    std::vector<Vec> tau_t;
    for (uint32_t t : torus) tau_t.push_back(x0.tau_of(t));

    // (i) freeness: T-classes of orbits, one representative each.
    std::vector<long> cls(r0, -1);
    std::vector<size_t> class_reps;
    std::vector<long> orbit_of(S.size());
    for (size_t o = 0; o < r0; ++o)
        for (size_t c : orbits[o]) orbit_of[c] = static_cast<long>(o);
    for (size_t o = 0; o < r0; ++o) {
        if (cls[o] >= 0) continue;
        long id = static_cast<long>(class_reps.size());
        class_reps.push_back(o);
        for (uint32_t t : torus) cls[orbit_of[S.coset_of(G.mul(t, S.rep(orbits[o].front())))]] = id;
    }
    auto sparse = [](const Vec& v) {
        SparseVec out;
        for (size_t c = 0; c < v.size(); ++c)
            if (!v[c].is_zero()) out.emplace(c, v[c]);
        return out;
    };
    SparseEchelon free_span(k);
    for (size_t j : class_reps)
        for (const auto& tt : tau_t) free_span.insert(sparse(S.convolve(tt, basis[j])));
    res.record("dim_fixed", static_cast<int64_t>(r0));
    res.record("free_rank", static_cast<int64_t>(class_reps.size()));
    res.expect(class_reps.size() * torus.size() == r0, "torus does not act freely on U\\G/I_F");
    res.expect(free_span.rank() == r0, "characteristic functions are not a free k[T0/T1]-basis");

    // (ii) specialization: relations tau_t f - chi(t)^-1 f, in orbit coordinates.
    std::vector<SparseVec> rels;
    for (size_t ti = 0; ti < torus.size(); ++ti)
        for (size_t o = 0; o < r0; ++o) {
            Vec tb = S.convolve(tau_t[ti], basis[o]);
            Vec coords;
            for (const auto& orb : orbits) coords.push_back(tb[orb.front()]);
            coords[o] -= chi_t[ti].inv();
            rels.push_back(sparse(coords));
        }
    const size_t lhs_dim = quotient_dimension(k, r0, rels);

    // (Ind chi)^{I_F}: phi on U\G with phi(t x) = chi(t) phi(x), right I_F-invariant.
    std::vector<std::vector<size_t>> left_t;
    for (uint32_t t : torus) {
        std::vector<size_t> m(S.size());
        for (size_t c = 0; c < S.size(); ++c) m[c] = S.coset_of(G.mul(t, S.rep(c)));
        left_t.push_back(std::move(m));
    }
    std::vector<std::vector<size_t>> right_u;
    for (uint32_t u : f.radical()) right_u.push_back(S.right_translation(u));
    std::vector<SparseVec> cons;
    for (size_t ti = 0; ti < torus.size(); ++ti)
        for (size_t c = 0; c < S.size(); ++c) {
            SparseVec row;
            sparse_axpy(Scalar::one(k), SparseVec{{left_t[ti][c], Scalar::one(k)}}, row);
            sparse_axpy(Scalar::one(k), SparseVec{{c, -chi_t[ti]}}, row);
            if (!row.empty()) cons.push_back(std::move(row));
        }
    for (const auto& pi : right_u)
        for (size_t c = 0; c < S.size(); ++c)
            if (pi[c] != c) cons.push_back(SparseVec{{pi[c], Scalar::one(k)}, {c, -Scalar::one(k)}});
    const size_t rhs_dim = quotient_dimension(k, S.size(), cons);
    auto satisfies = [&](const Vec& phi) {
        for (size_t ti = 0; ti < torus.size(); ++ti)
            for (size_t c = 0; c < S.size(); ++c)
                if (phi[left_t[ti][c]] != chi_t[ti] * phi[c]) return false;
        for (const auto& pi : right_u)
            for (size_t c = 0; c < S.size(); ++c)
                if (phi[pi[c]] != phi[c]) return false;
        return true;
    };

    // Phi(f)(x) = sum_t chi(t)^-1 f(t x)
    auto phi = [&](const Vec& fv) {
        Vec out = zero_vec(k, S.size());
        for (size_t c = 0; c < S.size(); ++c)
            for (size_t ti = 0; ti < torus.size(); ++ti) {
                const Scalar& v = fv[left_t[ti][c]];
                if (!v.is_zero()) out[c] += chi_t[ti].inv() * v;
            }
        return out;
    };
    bool in_target = true, kills = true;
    SparseEchelon image(k);
    for (size_t o = 0; o < r0; ++o) {
        Vec img = phi(basis[o]);
        in_target = in_target && satisfies(img);
        if (image.rank() < rhs_dim) image.insert(sparse(img));
        for (size_t ti = 0; ti < torus.size() && kills; ++ti) {
            Vec rel = axpy(-chi_t[ti].inv(), basis[o], S.convolve(tau_t[ti], basis[o]));
            kills = is_zero_vec(phi(rel));
        }
    }
    const size_t map_rank = image.rank();
    res.record("dim_specialized", static_cast<int64_t>(lhs_dim));
    res.record("dim_induced_fixed", static_cast<int64_t>(rhs_dim));
    res.record("rank_map", static_cast<int64_t>(map_rank));
    res.expect(in_target, "image outside (Ind chi)^{I_F}");
    res.expect(kills, "map does not factor through the specialization");
    res.expect(map_rank == rhs_dim, "specialized map is not surjective");
    res.expect(map_rank == lhs_dim, "specialized map is not injective");
    res.expect(rhs_dim == class_reps.size(), "dim (Ind chi)^{I_F} != |I'\\K/I_F|");
    return res;
}

}  // namespace prohecke
