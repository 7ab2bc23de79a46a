#include "prohecke/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "prohecke/poly.hpp"

namespace prohecke {

Antidominance is_antidominant(const std::vector<int64_t>& lambda) {
    Antidominance a{true, true};
    for (size_t i = 0; i + 1 < lambda.size(); ++i) {
        if (lambda[i] > lambda[i + 1]) a.antidominant = false;
        if (lambda[i] >= lambda[i + 1]) a.strongly = false;
    }
    a.strongly = a.strongly && a.antidominant;
    return a;
}

ExtendedWeylElt ExtendedWeylElt::identity(int n, uint32_t q) {
    ExtendedWeylElt w;
    w.n = n;
    w.q = q;
    w.perm.resize(n);
    for (int i = 0; i < n; ++i) w.perm[i] = i;
    w.lambda.assign(n, 0);
    w.torus.assign(n, 1);
    return w;
}

ExtendedWeylElt ExtendedWeylElt::simple(int n, uint32_t q, int i) {
    if (i < 0 || i >= n || n < 2) throw std::invalid_argument("simple reflection index out of range");
    ExtendedWeylElt w = identity(n, q);
    if (i == 0) {
        std::swap(w.perm[0], w.perm[n - 1]);
        w.lambda[0] = 1;
        w.lambda[n - 1] = -1;
    } else {
        std::swap(w.perm[i - 1], w.perm[i]);
    }
    return w;
}

ExtendedWeylElt ExtendedWeylElt::omega(int n, uint32_t q) {
    ExtendedWeylElt w = identity(n, q);
    for (int j = 0; j < n; ++j) w.perm[j] = (j + 1) % n;
    w.lambda[0] = 1;
    return w;
}

ExtendedWeylElt ExtendedWeylElt::translation(uint32_t q, const Coweight& c) {
    ExtendedWeylElt w = identity(static_cast<int>(c.lambda.size()), q);
    w.lambda = c.lambda;
    if (!c.torus.empty()) {
        if (c.torus.size() != c.lambda.size()) throw std::invalid_argument("coweight torus size mismatch");
        for (auto x : c.torus)
            if (x % q == 0) throw std::invalid_argument("torus entries must be nonzero");
        w.torus = c.torus;
    }
    return w;
}

ExtendedWeylElt ExtendedWeylElt::translation(uint32_t q, const std::vector<int64_t>& lambda) {
    return translation(q, Coweight{lambda, {}});
}

ExtendedWeylElt ExtendedWeylElt::torus_elt(uint32_t q, const std::vector<uint32_t>& torus) {
    return translation(q, Coweight{std::vector<int64_t>(torus.size(), 0), torus});
}

ExtendedWeylElt ExtendedWeylElt::permutation(uint32_t q, const std::vector<int>& perm) {
    ExtendedWeylElt w = identity(static_cast<int>(perm.size()), q);
    w.perm = perm;
    return w;
}

bool ExtendedWeylElt::has_trivial_torus() const {
    return std::all_of(torus.begin(), torus.end(), [](uint32_t x) { return x == 1; });
}

bool ExtendedWeylElt::is_translation() const {
    for (int i = 0; i < n; ++i)
        if (perm[i] != i) return false;
    return true;
}

std::vector<int> ExtendedWeylElt::perm_inverse() const {
    std::vector<int> inv(n);
    for (int j = 0; j < n; ++j) inv[perm[j]] = j;
    return inv;
}

bool ExtendedWeylElt::operator==(const ExtendedWeylElt& o) const {
    return n == o.n && q == o.q && perm == o.perm && lambda == o.lambda && torus == o.torus;
}

bool ExtendedWeylElt::operator<(const ExtendedWeylElt& o) const {
    if (n != o.n) return n < o.n;
    if (perm != o.perm) return perm < o.perm;
    if (lambda != o.lambda) return lambda < o.lambda;
    return torus < o.torus;
}

std::string ExtendedWeylElt::encode() const {
    std::ostringstream s;
    s << n << ';' << q << ';';
    for (int i = 0; i < n; ++i) s << (i ? "," : "") << perm[i];
    s << ';';
    for (int i = 0; i < n; ++i) s << (i ? "," : "") << lambda[i];
    s << ';';
    for (int i = 0; i < n; ++i) s << (i ? "," : "") << torus[i];
    return s.str();
}

std::string ExtendedWeylElt::to_string() const {
    std::ostringstream s;
    s << "w(perm=[";
    for (int i = 0; i < n; ++i) s << (i ? "," : "") << perm[i] + 1;
    s << "],lambda=(";
    for (int i = 0; i < n; ++i) s << (i ? "," : "") << lambda[i];
    s << "),torus=(";
    for (int i = 0; i < n; ++i) s << (i ? "," : "") << torus[i];
    s << "))";
    return s.str();
}

ExtendedWeylElt multiply(const ExtendedWeylElt& a, const ExtendedWeylElt& b) {
    if (a.n != b.n || a.q != b.q) throw std::invalid_argument("Weyl group elements of different rank");
    ExtendedWeylElt r = ExtendedWeylElt::identity(a.n, a.q);
    std::vector<int> ainv = a.perm_inverse();
    for (int i = 0; i < a.n; ++i) {
        r.lambda[i] = a.lambda[i] + b.lambda[ainv[i]];
        r.torus[i] = mod_mul(a.torus[i], b.torus[ainv[i]], a.q);
        r.perm[i] = a.perm[b.perm[i]];
    }
    return r;
}

ExtendedWeylElt inverse(const ExtendedWeylElt& a) {
    ExtendedWeylElt r = ExtendedWeylElt::identity(a.n, a.q);
    r.perm = a.perm_inverse();
    for (int i = 0; i < a.n; ++i) {
        r.lambda[i] = -a.lambda[a.perm[i]];
        r.torus[i] = mod_inv(a.torus[a.perm[i]], a.q);
    }
    return r;
}

int length(const ExtendedWeylElt& w) {
    // Index of I' cap w I' w^-1 in I', entrywise: row i of the lift carries
    // t^(e_i) in column sigma^-1(i), e_i = -lambda_i.
    std::vector<int> sinv = w.perm_inverse();
    auto a = [](int i, int j) { return i > j ? 1 : 0; };
    int64_t total = 0;
    for (int i = 0; i < w.n; ++i)
        for (int j = 0; j < w.n; ++j) {
            if (i == j) continue;
            int64_t b = -w.lambda[i] + w.lambda[j] + a(sinv[i], sinv[j]) - a(i, j);
            if (b > 0) total += b;
        }
    return static_cast<int>(total);
}

ReducedWord reduced_word(const ExtendedWeylElt& w) {
    ReducedWord rw{w, {}};
    int len = length(w);
    std::vector<int> peeled;
    while (len > 0) {
        bool found = false;
        for (int i = 0; i < w.n; ++i) {
            ExtendedWeylElt x = multiply(rw.omega_part, ExtendedWeylElt::simple(w.n, w.q, i));
            int lx = length(x);
            if (lx < len) {
                rw.omega_part = std::move(x);
                len = lx;
                peeled.push_back(i);
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no descent found for element of positive length");
    }
    rw.word.assign(peeled.rbegin(), peeled.rend());
    return rw;
}

bool ApartmentFacet::contains_base_vertex() const {
    return std::find(vertex_types.begin(), vertex_types.end(), 0) != vertex_types.end();
}

std::string ApartmentFacet::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < vertex_types.size(); ++i) s += (i ? "," : "") + std::to_string(vertex_types[i]);
    return s + "}";
}

ApartmentFacet rotate_facet(const ApartmentFacet& f, int n, int k) {
    ApartmentFacet r;
    for (int t : f.vertex_types) r.vertex_types.push_back(((t + k) % n + n) % n);
    std::sort(r.vertex_types.begin(), r.vertex_types.end());
    return r;
}

std::vector<ApartmentFacet> facets_through_base_vertex(int n) {
    std::vector<ApartmentFacet> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        ApartmentFacet f;
        f.vertex_types.push_back(0);
        for (int j = 1; j < n; ++j)
            if (mask & (1u << (j - 1))) f.vertex_types.push_back(j);
        out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const ApartmentFacet& a, const ApartmentFacet& b) {
        if (a.vertex_types.size() != b.vertex_types.size()) return a.vertex_types.size() < b.vertex_types.size();
        return a.vertex_types < b.vertex_types;
    });
    return out;
}

std::vector<ApartmentFacet> orbit_facets(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("facet dimension out of range");
    std::set<ApartmentFacet> reps;
    for (const auto& f : facets_through_base_vertex(n)) {
        if (f.dim() != i) continue;
        ApartmentFacet best = f;
        for (int k = 0; k < n; ++k) {
            ApartmentFacet g = rotate_facet(f, n, k);
            if (g.contains_base_vertex() && g < best) best = g;
        }
        reps.insert(best);
    }
    return {reps.begin(), reps.end()};
}

std::vector<int64_t> vertex_coweight(int n, int type) {
    std::vector<int64_t> nu(n, 0);
    for (int i = 0; i < type; ++i) nu[i] = 1;
    return nu;
}

namespace {

// Canonical representative of a coweight modulo the central line Z(1,...,1).
std::vector<int64_t> mod_center(std::vector<int64_t> v) {
    int64_t c = v[0];
    for (auto& x : v) x -= c;
    return v;
}

}  // namespace

bool apartment_stabilizer_check(int n, const ApartmentFacet& f, int box) {
    std::set<std::vector<int64_t>> verts;
    for (int j : f.vertex_types) verts.insert(mod_center(vertex_coweight(n, j)));
    std::vector<int64_t> lam(n, -box);
    while (true) {
        bool moves_x0_into_closure = verts.count(mod_center(lam)) > 0;
        std::set<std::vector<int64_t>> image;
        for (const auto& v : verts) {
            std::vector<int64_t> s(n);
            for (int i = 0; i < n; ++i) s[i] = v[i] + lam[i];
            image.insert(mod_center(s));
        }
        bool central = std::all_of(lam.begin(), lam.end(), [&](int64_t x) { return x == lam[0]; });
        if (moves_x0_into_closure && image == verts && !central) return false;
        int i = 0;
        while (i < n && ++lam[i] > box) lam[i++] = -box;
        if (i == n) break;
    }
    return true;
}

std::vector<int> facet_blocks(int n, const ApartmentFacet& f) {
    if (!f.contains_base_vertex()) throw std::invalid_argument("facet must contain the base vertex");
    std::vector<int> block(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j : f.vertex_types)
            if (j != 0 && j <= i) ++block[i];
    return block;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace prohecke
