#include "prohecke/principal_series.hpp"

#include <stdexcept>

namespace prohecke {

InducedModel::InducedModel(PrincipalSeriesChar chi, int m)
    : chi_(std::move(chi)), quot_(chi_.n(), chi_.q(), m) {
    points_.reserve(quot_.size());
    for (const auto& r : quot_.reps()) points_.push_back(r.lift());
}

std::pair<size_t, Scalar> InducedModel::resolve(const GroupMat& g) const {
    Iwasawa d = iwasawa(g);
    Scalar c = chi_.on_borel(d.b);
    std::vector<uint32_t> units;
    QuotMat canon = canonical_left_borel(QuotMat::reduce(d.k, level()), &units);
    for (int i = 0; i < n(); ++i) c *= chi_.tame_value(i, units[i]);
    return {quot_.locate(canon), c};
}

Scalar InducedModel::evaluate(const Vec& f, const GroupMat& g) const {
    auto [j, c] = resolve(g);
    return c * f[j];
}

Vec InducedModel::tabulate(const std::function<Scalar(const GroupMat&)>& fn) const {
    Vec out;
    out.reserve(dim());
    for (const auto& p : points_) out.push_back(fn(p));
    return out;
}

Vec InducedModel::translate(const Vec& f, const GroupMat& g) const {
    Vec out(dim());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(dim()); ++i) out[i] = evaluate(f, points_[i] * g);
    return out;
}

std::vector<Vec> InducedModel::fixed_space(const std::vector<GroupMat>& gens) const {
    const size_t d = dim();
    std::vector<Vec> rows;
    for (const auto& h : gens) {
        if (!is_member(h, SubgroupSpec::of(SubgroupSpec::Tag::K)))
            throw std::invalid_argument("fixed_space generators must lie in K");
        std::vector<std::pair<size_t, Scalar>> images(d);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(d); ++i) images[i] = resolve(points_[i] * h);
        for (size_t i = 0; i < d; ++i) {
            Vec r = zero_vec(field(), d);
            r[images[i].first] += images[i].second;
            r[i] -= Scalar::one(field());
            if (!is_zero_vec(r)) rows.push_back(std::move(r));
        }
    }
    if (rows.empty()) {
        std::vector<Vec> all;
        for (size_t i = 0; i < d; ++i) {
            Vec e = zero_vec(field(), d);
            e[i] = Scalar::one(field());
            all.push_back(std::move(e));
        }
        return all;
    }
    return rank_and_kernel(ExactMatrix::from_rows(field(), rows)).kernel_basis;
}

InvariantSpace invariant_space(const PrincipalSeriesChar& chi, const SubgroupSpec& omega) {
    const int n = chi.n();
    const uint32_t q = chi.q();
    if (!omega.is_pro_p(q)) throw std::invalid_argument(omega.name() + " is not pro-p");
    int m = finite_level(n, omega);
    InducedModel model(chi, m);
    std::vector<Vec> basis = model.fixed_space(finite_level_generators(n, q, omega, m));
    DoubleCosets cosets = double_coset_count(n, q, omega);
    size_t ev_rank = 0;
    if (!basis.empty()) {
        std::vector<Vec> rows;
        for (const auto& f : basis) {
            Vec r;
            for (const auto& g : cosets.reps) r.push_back(model.evaluate(f, g));
            rows.push_back(std::move(r));
        }
        ev_rank = rank(ExactMatrix::from_rows(chi.field(), rows));
    }
    return InvariantSpace{std::move(model), std::move(basis), std::move(cosets), ev_rank};
}

IwahoriFixedSpace::IwahoriFixedSpace(PrincipalSeriesChar chi, int budget)
    : chi_(std::move(chi)), budget_(budget), perms_(all_permutations(chi_.n())) {
    for (size_t i = 0; i < perms_.size(); ++i) {
        index_[perms_[i]] = i;
        perm_points_.push_back(GroupMat::lift(ExtendedWeylElt::permutation(q(), perms_[i])));
    }
    for (int s = 0; s < n(); ++s) {
        std::vector<Vec> cols;
        for (size_t j = 0; j < dim(); ++j)
            cols.push_back(act_direct(basis_vector(j), ExtendedWeylElt::simple(n(), q(), s)));
        simple_.push_back(ExactMatrix::from_columns(field(), cols));
    }
}

size_t IwahoriFixedSpace::index(const std::vector<int>& perm) const {
    auto it = index_.find(perm);
    if (it == index_.end()) throw std::invalid_argument("not a permutation of the right size");
    return it->second;
}

Vec IwahoriFixedSpace::basis_vector(size_t i) const {
    Vec v = zero_vec(field(), dim());
    v[i] = Scalar::one(field());
    return v;
}

Scalar IwahoriFixedSpace::basis_value(size_t i, const GroupMat& g) const {
    Iwasawa d = iwasawa(g);
    ExtendedWeylElt cls = bruhat_iwahori_class(d.k);
    if (cls.perm != perms_[i]) return Scalar::zero(field());
    Scalar c = chi_.on_borel(d.b);
    for (int j = 0; j < n(); ++j) {
        if (cls.lambda[j] != 0) throw std::logic_error("Iwasawa K-part outside K");
        c *= chi_.tame_value(j, cls.torus[j]);
    }
    return c;
}

Scalar IwahoriFixedSpace::evaluate(const Vec& v, const GroupMat& g) const {
    Iwasawa d = iwasawa(g);
    ExtendedWeylElt cls = bruhat_iwahori_class(d.k);
    const Scalar& coord = v[index(cls.perm)];
    if (coord.is_zero()) return coord;
    Scalar c = chi_.on_borel(d.b);
    for (int j = 0; j < n(); ++j) c *= chi_.tame_value(j, cls.torus[j]);
    return c * coord;
}

Vec IwahoriFixedSpace::act_direct(const Vec& v, const ExtendedWeylElt& w) const {
    if (length(w) > budget_) throw std::length_error("action budget exceeded");
    std::vector<GroupMat> ys = coset_reps(inverse(w));
    Vec out(dim());
#pragma omp parallel for schedule(dynamic)
    for (long u = 0; u < static_cast<long>(dim()); ++u) {
        Scalar s = Scalar::zero(field());
        for (const auto& y : ys) s += evaluate(v, perm_points_[u] * y);
        out[u] = s;
    }
    return out;
}

Vec IwahoriFixedSpace::act(const Vec& v, const ExtendedWeylElt& w) const {
    if (length(w) > budget_) throw std::length_error("action budget exceeded");
    ReducedWord rw = reduced_word(w);
    Vec r = act_direct(v, rw.omega_part);
    for (int s : rw.word) r = simple_[s].apply(r);
    return r;
}

Vec IwahoriFixedSpace::act(const Vec& v, const HeckeElt& h) const {
    Vec out = zero_vec(field(), dim());
    for (const auto& [w, c] : h.terms()) out = axpy(c, act(v, w), out);
    return out;
}

bool FiberReport::certified() const {
    return sandwich.certified() && sandwich.upper == evaluation_rank && witness_ok &&
           evaluation_rank == witness.size();
}

FiberReport verify_fiber_isomorphism(const PrincipalSeriesChar& chi, int L) {
    const int n = chi.n();
    AntiCharacter chibar = build_anti_character(chi);
    IwahoriFixedSpace space(chi);
    FiberTruncation span(chibar, n == 2 ? 2 : 3);
    std::vector<HeckeElt> gens;
    for (const auto& w : span.basis()) gens.push_back(HeckeElt::tau(chi.field(), w));
    const Vec f1 = space.f_one();
    FiberReport rep;
    rep.sandwich = fiber_dimension_sandwich(gens, chibar, L, [&](const HeckeElt& h) { return space.act(f1, h); });
    rep.evaluation_rank = rep.sandwich.lower;
    rep.witness_ok = true;
    for (size_t i = 0; i < space.dim(); ++i) {
        ExtendedWeylElt w = ExtendedWeylElt::permutation(chi.q(), space.perms()[i]);
        Vec img = space.act(f1, w);
        bool ok = img == space.basis_vector(i);
        rep.witness.push_back("1 (x) tau_" + w.to_string() + (ok ? " -> f_" : " -/-> f_") + w.to_string());
        if (!ok) {
            rep.witness_ok = false;
            break;
        }
    }
    return rep;
}

std::vector<PrincipalSeriesChar> character_matrix(int n, uint32_t q) {
    const Field Q = Field::rationals(), Fp = Field::prime(q), Fl = Field::prime(5);
    auto z = [&](const Field& k, std::vector<int64_t> v) {
        std::vector<Scalar> out;
        for (int i = 0; i < n; ++i) out.push_back(Scalar::from_int(k, v[i]));
        return out;
    };
    std::vector<PrincipalSeriesChar> out{
        PrincipalSeriesChar::trivial(Fp, n, q),
        PrincipalSeriesChar::trivial(Q, n, q),
        PrincipalSeriesChar(Q, q, z(Q, {2, 3, 7}), {}),
        PrincipalSeriesChar(Fl, q, z(Fl, {2, 1, 3}), {}),
    };
    if (q == 2) {
        // char p with a nontrivial unramified part needs a field larger than F_2
        const Field F4 = Field::extension(2, 2);
        const Scalar x = Scalar::ext_elt(F4, {0, 1}), one = Scalar::one(F4);
        std::vector<Scalar> zz{x, one, x + one};
        zz.resize(n);
        out.emplace_back(F4, q, zz, std::vector<uint32_t>{});
    } else {
        out.emplace_back(Fp, q, z(Fp, {1, 2, 1}), std::vector<uint32_t>{});
    }
    if (q == 3) {
        std::vector<uint32_t> tame(n, 0);
        tame[0] = 1;
        out.emplace_back(Fl, q, z(Fl, {1, 2, 1}), tame);
        out.emplace_back(Q, q, z(Q, {1, 1, 1}), tame);
        std::vector<uint32_t> tame_p(n, 1);
        tame_p[n - 1] = 0;
        out.emplace_back(Fp, q, z(Fp, {2, 1, 1}), tame_p);
    }
    return out;
}

}  // namespace prohecke
