#include "prohecke/group.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "prohecke/scalar.hpp"

namespace prohecke {

GroupMat::GroupMat(int n, uint32_t q) : n_(n), q_(q), e_(n * n, RatFunc::zero(q)) {
    for (int i = 0; i < n; ++i) at(i, i) = RatFunc::one(q);
}

GroupMat GroupMat::from_entries(int n, uint32_t q, std::vector<RatFunc> entries) {
    if (static_cast<int>(entries.size()) != n * n) throw std::invalid_argument("wrong number of matrix entries");
    GroupMat g;
    g.n_ = n;
    g.q_ = q;
    g.e_ = std::move(entries);
    if (g.det().is_zero()) throw std::invalid_argument("singular matrix is not a group element");
    return g;
}

GroupMat GroupMat::diag(const std::vector<RatFunc>& d) {
    int n = static_cast<int>(d.size());
    GroupMat g(n, d.at(0).prime());
    for (int i = 0; i < n; ++i) {
        if (d[i].is_zero()) throw std::invalid_argument("zero diagonal entry");
        g.at(i, i) = d[i];
    }
    return g;
}

GroupMat GroupMat::elementary(int n, uint32_t q, int i, int j, const RatFunc& a) {
    GroupMat g(n, q);
    if (i == j) {
        if (a.is_zero()) throw std::invalid_argument("zero diagonal entry");
        g.at(i, i) = a;
    } else {
        g.at(i, j) = a;
    }
    return g;
}

GroupMat GroupMat::lift(const ExtendedWeylElt& w) {
    GroupMat g(w.n, w.q);
    for (int i = 0; i < w.n; ++i) g.at(i, i) = RatFunc::zero(w.q);
    std::vector<int> sinv = w.perm_inverse();
    for (int i = 0; i < w.n; ++i)
        g.at(i, sinv[i]) = RatFunc::monomial(w.q, w.torus[i], static_cast<int>(-w.lambda[i]));
    return g;
}

GroupMat GroupMat::operator*(const GroupMat& o) const {
    if (n_ != o.n_ || q_ != o.q_) throw std::invalid_argument("group elements of different shape");
    GroupMat r(n_, q_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            RatFunc s = RatFunc::zero(q_);
            for (int k = 0; k < n_; ++k)
                if (!at(i, k).is_zero() && !o.at(k, j).is_zero()) s += at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(s);
        }
    return r;
}

GroupMat GroupMat::inverse() const {
    GroupMat a = *this, inv(n_, q_);
    for (int c = 0; c < n_; ++c) {
        int piv = c;
        while (piv < n_ && a.at(piv, c).is_zero()) ++piv;
        if (piv == n_) throw std::domain_error("singular matrix");
        if (piv != c)
            for (int j = 0; j < n_; ++j) {
                std::swap(a.at(piv, j), a.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        RatFunc s = a.at(c, c).inv();
        a.scale_row(c, s);
        inv.scale_row(c, s);
        for (int r = 0; r < n_; ++r) {
            if (r == c || a.at(r, c).is_zero()) continue;
            RatFunc f = -a.at(r, c);
            a.add_row_multiple(r, c, f);
            inv.add_row_multiple(r, c, f);
        }
    }
    return inv;
}

RatFunc GroupMat::det() const {
    GroupMat a = *this;
    RatFunc d = RatFunc::one(q_);
    for (int c = 0; c < n_; ++c) {
        int piv = c;
        while (piv < n_ && a.at(piv, c).is_zero()) ++piv;
        if (piv == n_) return RatFunc::zero(q_);
        if (piv != c) {
            for (int j = 0; j < n_; ++j) std::swap(a.at(piv, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        RatFunc s = a.at(c, c).inv();
        for (int r = c + 1; r < n_; ++r)
            if (!a.at(r, c).is_zero()) a.add_row_multiple(r, c, -(a.at(r, c) * s));
    }
    return d;
}

bool GroupMat::is_identity() const { return *this == GroupMat(n_, q_); }

int GroupMat::min_val() const {
    int v = kValInfinity;
    for (const auto& x : e_) v = std::min(v, x.val());
    return v;
}

std::string GroupMat::to_string() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        s += i ? ";" : "";
        for (int j = 0; j < n_; ++j) s += (j ? "," : "") + at(i, j).to_string();
    }
    return s + "]";
}

void GroupMat::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < n_; ++i) std::swap(at(i, a), at(i, b));
}

void GroupMat::add_col_multiple(int dst, int src, const RatFunc& c) {
    if (c.is_zero()) return;
    for (int i = 0; i < n_; ++i)
        if (!at(i, src).is_zero()) at(i, dst) += c * at(i, src);
}

void GroupMat::add_row_multiple(int dst, int src, const RatFunc& c) {
    if (c.is_zero()) return;
    for (int j = 0; j < n_; ++j)
        if (!at(src, j).is_zero()) at(dst, j) += c * at(src, j);
}

void GroupMat::scale_col(int j, const RatFunc& c) {
    for (int i = 0; i < n_; ++i) at(i, j) *= c;
}

void GroupMat::scale_row(int i, const RatFunc& c) {
    for (int j = 0; j < n_; ++j) at(i, j) *= c;
}

namespace {

bool in_k(const GroupMat& g) {
    if (g.min_val() < 0) return false;
    return g.det().val() == 0;
}

int val_minus_delta(const GroupMat& g, int i, int j) {
    if (i != j) return g.at(i, j).val();
    return (g.at(i, i) - RatFunc::one(g.q())).val();
}

bool is_upper(const GroupMat& g) {
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < i; ++j)
            if (!g.at(i, j).is_zero()) return false;
    return true;
}

bool is_lower(const GroupMat& g) {
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (!g.at(i, j).is_zero()) return false;
    return true;
}

bool unit_diagonal(const GroupMat& g) {
    for (int i = 0; i < g.n(); ++i)
        if (!g.at(i, i).is_one()) return false;
    return true;
}

// Membership in the standard I_F for a facet through x0.
bool in_standard_prop_parahoric(const GroupMat& g, const ApartmentFacet& f) {
    if (!in_k(g)) return false;
    std::vector<int> block = facet_blocks(g.n(), f);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) {
            if (i != j && block[i] < block[j]) continue;
            if (val_minus_delta(g, i, j) < 1) return false;
        }
    return true;
}

// omega^k and the facet F0 = omega^-k F through x0.
std::pair<int, ApartmentFacet> normalize_facet(int n, const ApartmentFacet& f) {
    if (f.vertex_types.empty()) throw std::invalid_argument("empty facet");
    int k = f.vertex_types.front();
    return {k, rotate_facet(f, n, -k)};
}

GroupMat omega_power(int n, uint32_t q, int k) {
    ExtendedWeylElt w = ExtendedWeylElt::identity(n, q);
    ExtendedWeylElt om = k >= 0 ? ExtendedWeylElt::omega(n, q) : inverse(ExtendedWeylElt::omega(n, q));
    for (int i = 0; i < std::abs(k); ++i) w = multiply(w, om);
    return GroupMat::lift(w);
}

}  // namespace

bool SubgroupSpec::is_pro_p(uint32_t q) const {
    switch (tag) {
        case Tag::Km: return m >= 1;
        case Tag::ProPIwahori:
        case Tag::IPlus:
        case Tag::IMinus:
        case Tag::T1:
        case Tag::ParahoricProP: return true;
        case Tag::Iwahori:
        case Tag::T0: return q == 2;
        default: return false;
    }
}

std::string SubgroupSpec::name() const {
    switch (tag) {
        case Tag::K: return "K";
        case Tag::Km: return "K_" + std::to_string(m);
        case Tag::Iwahori: return "I'";
        case Tag::ProPIwahori: return "I";
        case Tag::IPlus: return "I+";
        case Tag::IMinus: return "I-";
        case Tag::T0: return "T0";
        case Tag::T1: return "T1";
        case Tag::B: return "B";
        case Tag::U: return "U";
        case Tag::Uminus: return "U-";
        case Tag::B0: return "B0";
        case Tag::Center: return "Z";
        case Tag::ParahoricProP: return "I_F" + facet.to_string() + (translate ? "^g" : "");
    }
    return "?";
}

bool is_member(const GroupMat& g, const SubgroupSpec& s) {
    using Tag = SubgroupSpec::Tag;
    const int n = g.n();
    switch (s.tag) {
        case Tag::K: return in_k(g);
        case Tag::Km: {
            if (!in_k(g)) return false;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (val_minus_delta(g, i, j) < s.m) return false;
            return true;
        }
        case Tag::Iwahori:
        case Tag::ProPIwahori: {
            if (!in_k(g)) return false;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < i; ++j)
                    if (g.at(i, j).val() < 1) return false;
            if (s.tag == Tag::ProPIwahori)
                for (int i = 0; i < n; ++i)
                    if (val_minus_delta(g, i, i) < 1) return false;
            return true;
        }
        case Tag::IPlus: return is_upper(g) && unit_diagonal(g) && g.min_val() >= 0;
        case Tag::IMinus: {
            if (!is_lower(g) || !unit_diagonal(g)) return false;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < i; ++j)
                    if (g.at(i, j).val() < 1) return false;
            return true;
        }
        case Tag::T0:
        case Tag::T1: {
            if (!is_upper(g) || !is_lower(g)) return false;
            for (int i = 0; i < n; ++i) {
                if (g.at(i, i).val() != 0) return false;
                if (s.tag == Tag::T1 && val_minus_delta(g, i, i) < 1) return false;
            }
            return true;
        }
        case Tag::B: return is_upper(g);
        case Tag::U: return is_upper(g) && unit_diagonal(g);
        case Tag::Uminus: return is_lower(g) && unit_diagonal(g);
        case Tag::B0: return is_upper(g) && in_k(g);
        case Tag::Center: {
            if (!is_upper(g) || !is_lower(g)) return false;
            for (int i = 1; i < n; ++i)
                if (g.at(i, i) != g.at(0, 0)) return false;
            return true;
        }
        case Tag::ParahoricProP: {
            GroupMat h = g;
            if (s.translate) h = s.translate->inverse() * h * *s.translate;
            auto [k, f0] = normalize_facet(n, s.facet);
            if (k != 0) {
                GroupMat om = omega_power(n, g.q(), k);
                h = om.inverse() * h * om;
            }
            return in_standard_prop_parahoric(h, f0);
        }
    }
    return false;
}

int finite_level(int n, const SubgroupSpec& s) {
    using Tag = SubgroupSpec::Tag;
    (void)n;
    switch (s.tag) {
        case Tag::K:
        case Tag::Iwahori:
        case Tag::ProPIwahori: return 1;
        case Tag::Km: return std::max(1, s.m);
        case Tag::ParahoricProP:
            if (!s.facet.contains_base_vertex()) break;
            if (s.translate && !is_member(*s.translate, SubgroupSpec::of(Tag::K))) break;
            return 1;
        default: break;
    }
    throw std::invalid_argument("subgroup " + s.name() + " is not a finite-level subgroup of K");
}

std::vector<GroupMat> finite_level_generators(int n, uint32_t q, const SubgroupSpec& s, int m) {
    using Tag = SubgroupSpec::Tag;
    if (finite_level(n, s) > m) throw std::invalid_argument("quotient level too small for subgroup");
    std::vector<std::vector<int>> bound(n, std::vector<int>(n, 0));
    int diag_bound = 1;
    bool units = false;
    switch (s.tag) {
        case Tag::K: units = true; break;
        case Tag::Km:
            for (auto& r : bound) std::fill(r.begin(), r.end(), std::max(1, s.m));
            diag_bound = std::max(1, s.m);
            break;
        case Tag::Iwahori:
        case Tag::ProPIwahori:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) bound[i][j] = i > j ? 1 : 0;
            units = s.tag == Tag::Iwahori;
            break;
        case Tag::ParahoricProP: {
            std::vector<int> block = facet_blocks(n, s.facet);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) bound[i][j] = block[i] < block[j] ? 0 : 1;
            break;
        }
        default: throw std::invalid_argument("no finite-level generators for " + s.name());
    }
    std::vector<GroupMat> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int v = bound[i][j]; v < m; ++v) gens.push_back(GroupMat::elementary(n, q, i, j, RatFunc::monomial(q, 1, v)));
        }
    for (int i = 0; i < n; ++i) {
        for (int v = diag_bound; v < m; ++v)
            gens.push_back(GroupMat::elementary(n, q, i, i, RatFunc::one(q) + RatFunc::monomial(q, 1, v)));
        if (units && q > 2) gens.push_back(GroupMat::elementary(n, q, i, i, RatFunc::constant(q, primitive_root_mod(q))));
    }
    if (s.tag == Tag::ParahoricProP && s.translate) {
        GroupMat gi = s.translate->inverse();
        for (auto& g : gens) g = *s.translate * g * gi;
    }
    return gens;
}

Iwasawa iwasawa(const GroupMat& g) {
    const int n = g.n();
    GroupMat a = g, kp(n, g.q());
    for (int i = n - 1; i >= 0; --i) {
        int best = -1, bv = kValInfinity;
        for (int c = 0; c <= i; ++c) {
            int v = a.at(i, c).val();
            if (v <= bv && v != kValInfinity) {
                bv = v;
                best = c;
            }
        }
        if (best < 0) throw std::domain_error("singular matrix in Iwasawa decomposition");
        a.swap_cols(best, i);
        kp.swap_cols(best, i);
        RatFunc piv_inv = a.at(i, i).inv();
        for (int c = 0; c < i; ++c) {
            if (a.at(i, c).is_zero()) continue;
            RatFunc f = -(a.at(i, c) * piv_inv);
            a.add_col_multiple(c, i, f);
            kp.add_col_multiple(c, i, f);
        }
    }
    return {a, kp.inverse()};
}

ExtendedWeylElt bruhat_iwahori_class(const GroupMat& g) {
    const int n = g.n();
    const uint32_t q = g.q();
    GroupMat a = g;
    std::vector<bool> row_done(n, false), col_done(n, false);
    std::vector<int> col_of_row(n, -1);
    for (int step = 0; step < n; ++step) {
        int v = kValInfinity;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!row_done[i] && !col_done[j]) v = std::min(v, a.at(i, j).val());
        if (v == kValInfinity) throw std::domain_error("singular matrix in Bruhat decomposition");
        // Largest row holding the minimal valuation, then its first such column:
        // every clearing multiplier is then an element of I.
        int i0 = -1, j0 = -1;
        for (int i = n - 1; i >= 0 && i0 < 0; --i) {
            if (row_done[i]) continue;
            for (int j = 0; j < n; ++j)
                if (!col_done[j] && a.at(i, j).val() == v) {
                    i0 = i;
                    j0 = j;
                    break;
                }
        }
        RatFunc inv = a.at(i0, j0).inv();
        for (int r = 0; r < n; ++r)
            if (r != i0 && !a.at(r, j0).is_zero()) a.add_row_multiple(r, i0, -(a.at(r, j0) * inv));
        for (int c = 0; c < n; ++c)
            if (c != j0 && !a.at(i0, c).is_zero()) a.add_col_multiple(c, j0, -(a.at(i0, c) * inv));
        row_done[i0] = col_done[j0] = true;
        col_of_row[i0] = j0;
    }
    ExtendedWeylElt w = ExtendedWeylElt::identity(n, q);
    for (int i = 0; i < n; ++i) {
        const RatFunc& x = a.at(i, col_of_row[i]);
        w.perm[col_of_row[i]] = i;
        w.lambda[i] = -x.val();
        w.torus[i] = x.ac();
    }
    return w;
}

IwahoriFactors iwahori_factor(const GroupMat& g) {
    if (!is_member(g, SubgroupSpec::of(SubgroupSpec::Tag::ProPIwahori)))
        throw std::invalid_argument("Iwahori factorization requires an element of I");
    const int n = g.n();
    GroupMat a = g, rows(n, g.q()), cols(n, g.q());
    for (int k = n - 1; k >= 0; --k) {
        RatFunc inv = a.at(k, k).inv();
        for (int r = 0; r < k; ++r) {
            if (a.at(r, k).is_zero()) continue;
            RatFunc f = -(a.at(r, k) * inv);
            a.add_row_multiple(r, k, f);
            rows.add_row_multiple(r, k, f);
        }
        for (int c = 0; c < k; ++c) {
            if (a.at(k, c).is_zero()) continue;
            RatFunc f = -(a.at(k, c) * inv);
            a.add_col_multiple(c, k, f);
            cols.add_col_multiple(c, k, f);
        }
    }
    return {rows.inverse(), a, cols.inverse()};
}

GroupMat root_subgroup_elt(int n, uint32_t q, int i, uint32_t a) {
    if (i == 0) return GroupMat::elementary(n, q, n - 1, 0, RatFunc::monomial(q, a, 1));
    return GroupMat::elementary(n, q, i - 1, i, RatFunc::constant(q, a));
}

std::vector<GroupMat> coset_reps(const ExtendedWeylElt& w, int budget_bits) {
    int len = length(w);
    if (len * std::log2(static_cast<double>(w.q)) > budget_bits + 1e-9)
        throw std::length_error("coset enumeration exceeds the configured budget");
    ReducedWord rw = reduced_word(w);
    std::vector<GroupMat> reps{GroupMat::lift(rw.omega_part)};
    for (int i : rw.word) {
        GroupMat s = GroupMat::lift(ExtendedWeylElt::simple(w.n, w.q, i));
        std::vector<GroupMat> next;
        next.reserve(reps.size() * w.q);
        for (const auto& x : reps)
            for (uint32_t a = 0; a < w.q; ++a) next.push_back(x * root_subgroup_elt(w.n, w.q, i, a) * s);
        reps = std::move(next);
    }
    return reps;
}

bool cosets_pairwise_distinct(const std::vector<GroupMat>& reps) {
    auto spec = SubgroupSpec::of(SubgroupSpec::Tag::ProPIwahori);
    for (size_t i = 0; i < reps.size(); ++i) {
        GroupMat inv = reps[i].inverse();
        for (size_t j = i + 1; j < reps.size(); ++j)
            if (is_member(inv * reps[j], spec)) return false;
    }
    return true;
}

bool contraction_test(uint32_t q, const Coweight& c) {
    int n = static_cast<int>(c.lambda.size());
    GroupMat g = GroupMat::lift(ExtendedWeylElt::translation(q, c)), gi = g.inverse();
    auto iplus = SubgroupSpec::of(SubgroupSpec::Tag::IPlus);
    auto iminus = SubgroupSpec::of(SubgroupSpec::Tag::IMinus);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i < j && !is_member(g * GroupMat::elementary(n, q, i, j, RatFunc::one(q)) * gi, iplus)) return false;
            if (i > j && !is_member(gi * GroupMat::elementary(n, q, i, j, RatFunc::t(q)) * g, iminus)) return false;
        }
    return true;
}

std::string lattice_key(const GroupMat& g) {
    const int n = g.n();
    GroupMat a = g;
    std::vector<int> expo(n);
    for (int i = 0; i < n; ++i) {
        int best = -1, bv = kValInfinity;
        for (int c = i; c < n; ++c) {
            int v = a.at(i, c).val();
            if (v < bv) {
                bv = v;
                best = c;
            }
        }
        if (best < 0) throw std::domain_error("singular lattice basis");
        a.swap_cols(best, i);
        RatFunc inv = a.at(i, i).inv();
        for (int c = i + 1; c < n; ++c)
            if (!a.at(i, c).is_zero()) a.add_col_multiple(c, i, -(a.at(i, c) * inv));
        // Normalize the pivot to exactly t^v by a unit.
        a.scale_col(i, RatFunc::monomial(g.q(), 1, bv) * inv);
        expo[i] = bv;
    }
    // Reduce below-diagonal entries modulo t^expo[i] using column i.
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            const RatFunc& x = a.at(i, j);
            if (x.is_zero()) continue;
            int lo = x.val();
            if (lo >= expo[i]) {
                a.add_col_multiple(j, i, -(x * RatFunc::monomial(g.q(), 1, -expo[i])));
                continue;
            }
            std::vector<uint32_t> head = x.expansion(lo, expo[i]);
            RatFunc trunc = RatFunc::zero(g.q());
            for (int e = lo; e < expo[i]; ++e)
                if (head[e - lo]) trunc += RatFunc::monomial(g.q(), head[e - lo], e);
            a.add_col_multiple(j, i, -((x - trunc) * RatFunc::monomial(g.q(), 1, -expo[i])));
        }
    std::ostringstream s;
    int shift = expo[0];
    for (int i = 0; i < n; ++i) s << expo[i] - shift << ';';
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            const RatFunc& x = a.at(i, j);
            s << '[';
            if (!x.is_zero()) {
                int lo = x.val();
                auto c = x.expansion(lo, expo[i]);
                s << lo - shift << ':';
                for (auto v : c) s << v << ',';
            }
            s << ']';
        }
    return s.str();
}

}  // namespace prohecke
