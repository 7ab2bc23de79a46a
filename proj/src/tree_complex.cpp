#include "prohecke/tree_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace prohecke {

namespace {

GroupMat mat2(uint32_t q, RatFunc a, RatFunc b, RatFunc c, RatFunc d) {
    return GroupMat::from_entries(2, q, {std::move(a), std::move(b), std::move(c), std::move(d)});
}

GroupMat x1_mat(uint32_t q) { return GroupMat::diag({RatFunc::one(q), RatFunc::t(q)}); }

// antidiag(1, t): swaps x0 and x1 and normalizes I.
GroupMat reversal(uint32_t q) { return mat2(q, RatFunc::zero(q), RatFunc::one(q), RatFunc::t(q), RatFunc::zero(q)); }

// Neighbours of x0 as h x0, each paired with k in K with k x1 = h x0.
struct Step {
    GroupMat h, k;
};

std::vector<Step> steps(uint32_t q) {
    std::vector<Step> out;
    const RatFunc one = RatFunc::one(q), zero = RatFunc::zero(q), t = RatFunc::t(q);
    for (uint32_t a = 0; a < q; ++a) {
        RatFunc ra = RatFunc::constant(q, a);
        out.push_back({mat2(q, t, ra, zero, one), mat2(q, ra, one, one, zero)});
    }
    out.push_back({x1_mat(q), GroupMat::identity(2, q)});
    return out;
}

// Topological generators of K_1 modulo K_depth.
std::vector<GroupMat> k1_generators(uint32_t q, int depth) {
    std::vector<GroupMat> out;
    for (int v = 1; v < depth; ++v) {
        RatFunc tv = RatFunc::monomial(q, 1, v);
        out.push_back(GroupMat::elementary(2, q, 0, 1, tv));
        out.push_back(GroupMat::elementary(2, q, 1, 0, tv));
        out.push_back(GroupMat::elementary(2, q, 0, 0, RatFunc::one(q) + tv));
        out.push_back(GroupMat::elementary(2, q, 1, 1, RatFunc::one(q) + tv));
    }
    return out;
}

// K_m lies in g K_1 g^-1 when every entry of g^-1 X g, X integral, has valuation >= 1 - m.
bool level_covers(const GroupMat& g, int m) { return g.min_val() + g.inverse().min_val() + m >= 1; }

// x -> f(x g) for each f, with one Iwasawa decomposition per point.
std::vector<Vec> transport(const InducedModel& target, const InducedModel& source, const std::vector<Vec>& fs,
                           const GroupMat& g) {
    std::vector<std::pair<size_t, Scalar>> res(target.dim());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(target.dim()); ++i) res[i] = source.resolve(target.point(i) * g);
    std::vector<Vec> out;
    for (const auto& f : fs) {
        Vec v;
        v.reserve(res.size());
        for (const auto& [j, c] : res) v.push_back(c * f[j]);
        out.push_back(std::move(v));
    }
    return out;
}

Vec transport(const InducedModel& target, const InducedModel& source, const Vec& f, const GroupMat& g) {
    return transport(target, source, std::vector<Vec>{f}, g).front();
}

std::vector<Vec> unit_basis(const Field& f, size_t d) {
    std::vector<Vec> out;
    for (size_t i = 0; i < d; ++i) {
        Vec e = zero_vec(f, d);
        e[i] = Scalar::one(f);
        out.push_back(std::move(e));
    }
    return out;
}

size_t span_rank(const Field& f, size_t dim, const std::vector<Vec>& vs) {
    EchelonBasis b(f, dim);
    for (const auto& v : vs) b.insert(v);
    return b.size();
}

bool same_span(const Field& f, size_t dim, const std::vector<Vec>& a, const std::vector<Vec>& b) {
    EchelonBasis ea(f, dim), eb(f, dim);
    for (const auto& v : a) ea.insert(v);
    for (const auto& v : b) eb.insert(v);
    if (ea.size() != eb.size()) return false;
    return std::all_of(b.begin(), b.end(), [&](const Vec& v) { return ea.contains(v); });
}

}  // namespace

TreeBall build_ball(int r, uint32_t q) {
    if (q != 2 && q != 3) throw std::invalid_argument("build_ball: q must be 2 or 3");
    if (r < 0 || r > 4) throw std::invalid_argument("build_ball: radius must be in [0, 4]");
    TreeBall ball;
    ball.q = q;
    ball.radius = r;
    GroupMat id = GroupMat::identity(2, q);
    ball.vertices.push_back({id, 0, -1, lattice_key(id)});
    const auto st = steps(q);
    for (size_t cur = 0; cur < ball.vertices.size(); ++cur) {
        if (ball.vertices[cur].distance == r) continue;
        const GroupMat g = ball.vertices[cur].g;
        const int parent = ball.vertices[cur].parent;
        for (const auto& s : st) {
            GroupMat child = g * s.h;
            std::string key = lattice_key(child);
            if (parent >= 0 && key == ball.vertices[parent].key) continue;
            int idx = static_cast<int>(ball.vertices.size());
            ball.vertices.push_back({child, ball.vertices[cur].distance + 1, static_cast<int>(cur), key});
            ball.edges.push_back({static_cast<int>(cur), idx, g * s.k});
        }
    }
    return ball;
}

TreeComplex::TreeComplex(const TreeBall& ball, const PrincipalSeriesChar& chi)
    : ball_(ball), model_(chi, ball.radius + 2) {
    if (chi.n() != 2 || chi.q() != ball.q) throw std::invalid_argument("TreeComplex: character must be for GL_2 over the ball's field");
    const Field& k = model_.field();
    const int m = level();
    InducedModel base(chi, 1);
    const std::vector<Vec> vk1 = unit_basis(k, base.dim());
    const std::vector<Vec> vi = invariant_space(chi, SubgroupSpec::of(SubgroupSpec::Tag::ProPIwahori)).basis;

    for (const auto& v : ball_.vertices) {
        if (!level_covers(v.g, m)) throw std::logic_error("TreeComplex: model level too small for the ball");
        vertex_spaces_.push_back(transport(model_, base, vk1, v.g));
    }
    for (const auto& e : ball_.edges) {
        if (!level_covers(e.g, m)) throw std::logic_error("TreeComplex: model level too small for the ball");
        edge_spaces_.push_back(transport(model_, base, vi, e.g));
    }

    c0_offset_ = {0};
    for (const auto& s : vertex_spaces_) c0_offset_.push_back(c0_offset_.back() + s.size());
    c1_offset_ = {0};
    for (const auto& s : edge_spaces_) c1_offset_.push_back(c1_offset_.back() + s.size());

    // Inclusions, by exact solve and by invariance of edge vectors under I_v.
    boundary_ = ExactMatrix(k, chain_dim(0), chain_dim(1));
    const auto gens = k1_generators(ball_.q, m + ball_.radius + 1);
    std::vector<std::vector<size_t>> incident(ball_.vertices.size());
    for (size_t e = 0; e < ball_.edges.size(); ++e) {
        const auto& ed = ball_.edges[e];
        incident[ed.tail].push_back(e);
        incident[ed.head].push_back(e);
        for (size_t j = 0; j < edge_spaces_[e].size(); ++j) {
            const Vec& v = edge_spaces_[e][j];
            for (int side = 0; side < 2; ++side) {
                const int vert = side == 0 ? ed.tail : ed.head;
                Vec c = vertex_coords(vert, v);
                if (!inclusions_.expect(!c.empty(), "edge " + std::to_string(e) + " vector " + std::to_string(j) +
                                                         " not in vertex " + std::to_string(vert)))
                    continue;
                const Scalar sign = side == 0 ? -Scalar::one(k) : Scalar::one(k);
                for (size_t i = 0; i < c.size(); ++i)
                    boundary_.at(c0_offset_[vert] + i, c1_offset_[e] + j) += sign * c[i];
            }
        }
    }
    for (size_t vert = 0; vert < ball_.vertices.size(); ++vert) {
        const GroupMat& gv = ball_.vertices[vert].g;
        const GroupMat gvi = gv.inverse();
        std::vector<Vec> vs;
        for (size_t e : incident[vert]) vs.insert(vs.end(), edge_spaces_[e].begin(), edge_spaces_[e].end());
        for (const auto& h : gens) {
            const auto moved = transport(model_, model_, vs, gv * h * gvi);
            for (size_t i = 0; i < vs.size(); ++i)
                inclusions_.expect(moved[i] == vs[i], "edge vector not fixed by I_v at vertex " + std::to_string(vert));
        }
    }
    inclusions_.record("incidences", static_cast<int64_t>(2 * ball_.edges.size()));

    std::vector<Vec> cols;
    for (const auto& s : vertex_spaces_)
        for (const auto& v : s) cols.push_back(v);
    augmentation_ = cols.empty() ? ExactMatrix(k, model_.dim(), 0) : ExactMatrix::from_columns(k, cols);
}

Vec TreeComplex::edge_chain(size_t e, const Vec& coeff) const {
    Vec out = zero_vec(model_.field(), chain_dim(1));
    for (size_t j = 0; j < coeff.size(); ++j) out[c1_offset_[e] + j] = coeff[j];
    return out;
}

Vec TreeComplex::vertex_coords(size_t vertex, const Vec& v) const {
    auto c = solve(ExactMatrix::from_columns(model_.field(), vertex_spaces_[vertex]), v);
    return c ? *c : Vec{};
}

CheckResult exactness_report(const TreeBall& ball, const PrincipalSeriesChar& chi) {
    return exactness_report(TreeComplex(ball, chi));
}

CheckResult exactness_report(const TreeComplex& cx) {
    CheckResult r;
    const TreeBall& ball = cx.ball();
    const PrincipalSeriesChar& chi = cx.model().chi();
    r.merge(cx.inclusions(), "inclusion: ");
    const size_t c0 = cx.chain_dim(0), c1 = cx.chain_dim(1);
    r.record("vertices", static_cast<int64_t>(ball.vertices.size()));
    r.record("edges", static_cast<int64_t>(ball.edges.size()));
    r.record("dim_C0", static_cast<int64_t>(c0));
    r.record("dim_C1", static_cast<int64_t>(c1));
    r.record("level", cx.level());
    for (const auto& s : cx.vertex_spaces())
        r.expect(span_rank(chi.field(), cx.model().dim(), s) == s.size(), "vertex coefficient space degenerate");
    for (const auto& s : cx.edge_spaces())
        r.expect(span_rank(chi.field(), cx.model().dim(), s) == s.size(), "edge coefficient space degenerate");

    const bool composite_zero = c1 == 0 || (cx.augmentation() * cx.boundary()).is_zero();
    r.expect(composite_zero, "augmentation does not kill boundaries");
    const size_t rank_d = c1 == 0 ? 0 : rank(cx.boundary());
    const size_t rank_e = c0 == 0 ? 0 : rank(cx.augmentation());
    r.record("rank_boundary", static_cast<int64_t>(rank_d));
    r.record("rank_augmentation", static_cast<int64_t>(rank_e));
    r.record("dim_ker_augmentation", static_cast<int64_t>(c0 - rank_e));
    r.expect(rank_d == c1, "E1: boundary not injective");
    r.expect(c0 - rank_e == rank_d, "E2: kernel of augmentation larger than the boundaries");
    return r;
}

CheckResult exactness_series(int max_r, uint32_t q, const PrincipalSeriesChar& chi) {
    CheckResult r;
    int64_t prev = -1;
    for (int rad = 0; rad <= max_r; ++rad) {
        const std::string tag = "r" + std::to_string(rad) + ".";
        TreeComplex cx(build_ball(rad, q), chi);
        CheckResult e = exactness_report(cx);
        r.merge(e, tag);
        const int64_t rk = e.get("rank_augmentation");
        r.expect(rk >= prev, tag + "E3: rank of the augmentation decreased");
        prev = rk;

        // V^{K_probe} must lie in the image of the augmentation.
        const int probe = std::max(1, rad);
        InducedModel pm(chi, probe);
        EchelonBasis img(chi.field(), cx.model().dim());
        for (size_t j = 0; j < cx.augmentation().cols(); ++j) img.insert(cx.augmentation().col(j));
        size_t inside = 0;
        for (const auto& f : unit_basis(chi.field(), pm.dim()))
            if (img.contains(transport(cx.model(), pm, f, GroupMat::identity(2, q)))) ++inside;
        r.record(tag + "probe_level", probe);
        r.record(tag + "dim_probe", static_cast<int64_t>(pm.dim()));
        r.record(tag + "probe_inside", static_cast<int64_t>(inside));
        r.expect(inside == pm.dim() && rk >= static_cast<int64_t>(pm.dim()),
                 tag + "E3: V^{K_" + std::to_string(probe) + "} not in the image of the augmentation");
    }
    return r;
}

CheckResult orbit_decomposition_check(const TreeBall& ball, const PrincipalSeriesChar& chi) {
    CheckResult r;
    const uint32_t q = ball.q;
    const GroupMat x1 = x1_mat(q);
    for (size_t v = 0; v < ball.vertices.size(); ++v)
        r.expect(lattice_key(ball.vertices[v].g) == ball.vertices[v].key, "vertex " + std::to_string(v) + " not g x0");
    for (size_t e = 0; e < ball.edges.size(); ++e) {
        const auto& ed = ball.edges[e];
        r.expect(lattice_key(ed.g) == ball.vertices[ed.tail].key, "edge " + std::to_string(e) + ": g x0 is not the tail");
        r.expect(lattice_key(ed.g * x1) == ball.vertices[ed.head].key, "edge " + std::to_string(e) + ": g x1 is not the head");
    }
    // Distinct facets.
    std::vector<std::string> keys;
    for (const auto& v : ball.vertices) keys.push_back(v.key);
    std::sort(keys.begin(), keys.end());
    r.expect(std::adjacent_find(keys.begin(), keys.end()) == keys.end(), "repeated vertex");
    r.record("vertices", static_cast<int64_t>(ball.vertices.size()));
    r.record("edges", static_cast<int64_t>(ball.edges.size()));

    const GroupMat pi = reversal(q);
    r.expect(lattice_key(pi) == lattice_key(x1) && lattice_key(pi * x1) == lattice_key(GroupMat::identity(2, q)),
             "antidiag(1, t) does not reverse the base edge");

    // Coefficient spaces do not depend on the chosen representative: g k for k
    // in the stabilizer gives the same subspace, and for edges also g Pi.
    TreeComplex cx(ball, chi);
    const Field& k = chi.field();
    InducedModel base(chi, 1);
    const auto vi = invariant_space(chi, SubgroupSpec::of(SubgroupSpec::Tag::ProPIwahori)).basis;
    const auto vk1 = unit_basis(k, base.dim());
    const RatFunc one = RatFunc::one(q), zero = RatFunc::zero(q), t = RatFunc::t(q);
    // In the Iwahori and in K respectively.
    const GroupMat in_iwahori = mat2(q, RatFunc::constant(q, q - 1), one, t, one);
    const GroupMat in_k = mat2(q, one, one, one, zero);
    for (size_t v = 0; v < ball.vertices.size(); ++v) {
        const auto alt = transport(cx.model(), base, vk1, ball.vertices[v].g * in_k);
        r.expect(same_span(k, cx.model().dim(), alt, cx.vertex_spaces()[v]), "vertex space depends on representative");
    }
    for (size_t e = 0; e < ball.edges.size(); ++e) {
        for (const GroupMat& s : {in_iwahori, pi}) {
            const auto alt = transport(cx.model(), base, vi, ball.edges[e].g * s);
            r.expect(same_span(k, cx.model().dim(), alt, cx.edge_spaces()[e]), "edge space depends on representative");
        }
    }

    // Pi acts on V^{I_C} invertibly with Pi^2 = chi(t), and reversing C turns
    // (C, v) into (C, -Pi v): both sides of the equivariance of the boundary agree.
    const std::vector<Vec> pv = [&] {
        std::vector<Vec> out;
        for (const auto& f : vi) out.push_back(transport(base, base, f, pi));
        return out;
    }();
    r.expect(span_rank(k, base.dim(), pv) == vi.size() && same_span(k, base.dim(), pv, vi), "Pi does not preserve V^I");
    const Scalar central = chi.on_borel(GroupMat::diag({t, t}));
    for (size_t j = 0; j < vi.size(); ++j)
        r.expect(transport(base, base, pv[j], pi) == scale(central, vi[j]), "Pi^2 is not the central character");
    r.record("orientation_sign", k.characteristic() == 2 ? 1 : -1);

    if (!ball.edges.empty()) {
        // The base edge is the one with identity representative.
        size_t c = ball.edges.size();
        for (size_t e = 0; e < ball.edges.size(); ++e)
            if (ball.edges[e].g.is_identity()) c = e;
        r.expect(c < ball.edges.size(), "base edge missing from the ball");
        if (c < ball.edges.size()) {
            const auto& ed = ball.edges[c];
            for (size_t j = 0; j < vi.size(); ++j) {
                const Vec v = cx.edge_spaces()[c][j];
                const Vec piv = transport(cx.model(), cx.model(), v, pi);
                // coefficient of -Pi v on C, and the boundary of the image chain
                auto coeff = solve(ExactMatrix::from_columns(k, cx.edge_spaces()[c]), piv);
                if (!r.expect(coeff.has_value(), "Pi v not in V^{I_C}")) continue;
                const Vec lhs = cx.boundary().apply(cx.edge_chain(c, scale(-Scalar::one(k), *coeff)));
                // Pi . d(C, v): (v at head) - (v at tail) moved to (Pi v at tail) - (Pi v at head).
                Vec rhs = zero_vec(k, cx.chain_dim(0));
                auto at_tail = cx.vertex_coords(ed.tail, piv), at_head = cx.vertex_coords(ed.head, piv);
                if (!r.expect(!at_tail.empty() && !at_head.empty(), "Pi v not in the vertex spaces")) continue;
                size_t off_t = 0, off_h = 0;
                for (int i = 0; i < ed.tail; ++i) off_t += cx.vertex_spaces()[i].size();
                for (int i = 0; i < ed.head; ++i) off_h += cx.vertex_spaces()[i].size();
                for (size_t i = 0; i < at_tail.size(); ++i) rhs[off_t + i] += at_tail[i];
                for (size_t i = 0; i < at_head.size(); ++i) rhs[off_h + i] -= at_head[i];
                r.expect(lhs == rhs, "boundary not equivariant under the reversal of C");
            }
        }
    }
    return r;
}

}  // namespace prohecke
