#include "prohecke/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "prohecke/finite_level.hpp"
#include "prohecke/hecke.hpp"
#include "prohecke/principal_series.hpp"
#include "prohecke/tree_complex.hpp"

namespace prohecke {

namespace {

using Tag = SubgroupSpec::Tag;

std::vector<std::vector<uint32_t>> all_tori(int n, uint32_t q) {
    std::vector<std::vector<uint32_t>> tori{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<uint32_t>> next;
        for (const auto& t : tori)
            for (uint32_t c = 1; c < q; ++c) {
                auto u = t;
                u.push_back(c);
                next.push_back(u);
            }
        tori = std::move(next);
    }
    return tori;
}

// All integer vectors in [-box, box]^n, last coordinate slowest.
std::vector<std::vector<int64_t>> box_vectors(int n, int box) {
    std::vector<std::vector<int64_t>> out;
    std::vector<int64_t> lam(n, -box);
    while (true) {
        out.push_back(lam);
        int i = 0;
        while (i < n && ++lam[i] > box) lam[i++] = -box;
        if (i == n) break;
    }
    return out;
}

// Elements of length <= max_len modulo the center (sum of lambda in [0, n-1]), all torus parts.
std::vector<ExtendedWeylElt> elements_up_to(int n, uint32_t q, int max_len) {
    std::vector<ExtendedWeylElt> out;
    const auto tori = all_tori(n, q);
    for (const auto& p : all_permutations(n))
        for (const auto& lam : box_vectors(n, max_len + 1)) {
            int64_t sum = 0;
            for (auto x : lam) sum += x;
            if (sum < 0 || sum >= n) continue;
            ExtendedWeylElt w = ExtendedWeylElt::permutation(q, p);
            w.lambda = lam;
            if (length(w) > max_len) continue;
            for (const auto& t : tori) {
                w.torus = t;
                out.push_back(w);
            }
        }
    return out;
}

RatFunc random_poly(uint32_t q, std::mt19937_64& rng, int lo, int hi) {
    RatFunc r = RatFunc::zero(q);
    for (int e = lo; e <= hi; ++e) r += RatFunc::monomial(q, rng() % q, e);
    return r;
}

GroupMat random_prop_iwahori(int n, uint32_t q, std::mt19937_64& rng) {
    GroupMat g(n, q);
    for (int r = 0; r < 3; ++r)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RatFunc a = i < j ? random_poly(q, rng, 0, 2) : random_poly(q, rng, 1, 2);
                if (i == j) a += RatFunc::one(q);
                if (i == j && a.is_zero()) continue;
                g = g * GroupMat::elementary(n, q, i, j, a);
            }
    return g;
}

std::string n2_only(const VerifierConfig& c) { return c.n == 2 ? "" : "implemented for n = 2 only"; }
std::string always(const VerifierConfig&) { return ""; }

CheckResult antidominance_contraction(const SuiteContext& ctx, std::vector<std::string>&) {
    CheckResult r;
    const int n = ctx.config.n;
    const uint32_t q = ctx.config.q;
    int64_t count = 0, antidominant = 0;
    for (const auto& lam : box_vectors(n, 2))
        for (const auto& t : all_tori(n, q)) {
            const bool expect = is_antidominant(lam).antidominant;
            r.expect(contraction_test(q, Coweight{lam, t}) == expect, "contraction test disagrees at " +
                                                                          ExtendedWeylElt::translation(q, Coweight{lam, t}).to_string());
            ++count;
            antidominant += expect;
        }
    r.record("coweights", count);
    r.record("antidominant", antidominant);
    return r;
}

CheckResult conjugation_into_k_m(const SuiteContext& ctx, std::vector<std::string>&) {
    CheckResult r;
    const int n = ctx.config.n;
    const uint32_t q = ctx.config.q;
    std::vector<int64_t> lam(n);
    for (int i = 0; i < n; ++i) lam[i] = i;
    r.expect(is_antidominant(lam).strongly, "probe coweight not strongly antidominant");
    const GroupMat t = GroupMat::lift(ExtendedWeylElt::translation(q, lam));
    int64_t count = 0;
    for (int m = 0; m <= 2; ++m) {
        GroupMat tm(n, q);
        for (int k = 0; k < m; ++k) tm = tm * t;
        const GroupMat tmi = tm.inverse();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j)
                for (uint32_t a = 1; a < q; ++a)
                    for (int v = 1; v <= 2; ++v) {
                        const GroupMat u = GroupMat::elementary(n, q, i, j, RatFunc::monomial(q, a, v));
                        r.expect(is_member(u, SubgroupSpec::of(Tag::IMinus)), "generator not in I-");
                        const GroupMat c = tmi * u * tm;
                        r.expect(is_member(c, SubgroupSpec::k_m(m + 1)) && is_member(c, SubgroupSpec::of(Tag::Uminus)),
                                 "t^-m u t^m outside K_{m+1} cap U- for m = " + std::to_string(m));
                        ++count;
                    }
    }
    r.record("conjugates", count);
    return r;
}

CheckResult iwahori_factorization(const SuiteContext& ctx, std::vector<std::string>&) {
    CheckResult r;
    const int n = ctx.config.n;
    const uint32_t q = ctx.config.q;
    std::mt19937_64 rng(ctx.config.seed);
    const auto id = iwahori_factor(GroupMat(n, q));
    r.expect(id.uplus.is_identity() && id.t0.is_identity() && id.uminus.is_identity(), "identity factors nontrivially");
    const int trials = 60;
    for (int k = 0; k < trials; ++k) {
        const GroupMat g = random_prop_iwahori(n, q, rng);
        const auto f = iwahori_factor(g);
        r.expect(f.uplus * f.t0 * f.uminus == g, "factors do not multiply back to " + g.to_string());
        r.expect(is_member(f.uplus, SubgroupSpec::of(Tag::IPlus)), "I+ factor outside I+");
        r.expect(is_member(f.t0, SubgroupSpec::of(Tag::T1)), "torus factor outside T1");
        r.expect(is_member(f.uminus, SubgroupSpec::of(Tag::IMinus)), "I- factor outside I-");
    }
    bool rejected = false;
    try {
        iwahori_factor(GroupMat::lift(ExtendedWeylElt::simple(n, q, 1)));
    } catch (const std::exception&) {
        rejected = true;
    }
    r.expect(rejected, "element outside I was factored");
    r.record("samples", trials);
    return r;
}

CheckResult braid_vs_oracle(const SuiteContext& ctx, std::vector<std::string>&) {
    CheckResult r;
    const int n = ctx.config.n;
    const uint32_t q = ctx.config.q;
    const int max_total = n == 2 ? 4 : 2;
    const auto elems = elements_up_to(n, q, max_total);
    CosetSource source = [&](const ExtendedWeylElt& w) { return ctx.cache.get(w); };
    int64_t pairs = 0;
    for (const auto& a : elems)
        for (const auto& b : elems) {
            if (length(a) + length(b) > max_total) continue;
            const HeckeElt prod = tau_multiply(HeckeElt::tau(ctx.field, a), HeckeElt::tau(ctx.field, b));
            const HeckeElt oracle = convolve_oracle(a, b, ctx.field, Exec::Parallel, source);
            r.expect(prod == oracle, a.to_string() + " * " + b.to_string() + ": " + prod.to_string() + " vs " +
                                         oracle.to_string());
            ++pairs;
        }
    r.record("pairs", pairs);
    r.record("max_total_length", max_total);
    return r;
}

CheckResult hecke_free_basis(const SuiteContext& ctx, std::vector<std::string>&) {
    CheckResult r;
    FiniteCosetSpace S(ctx.config.n, ctx.config.q);
    FacetLevel x0(S, ApartmentFacet{{0}}, ctx.field);
    for (const auto& f : facets_through_base_vertex(ctx.config.n)) r.merge(verify_free_basis(FacetLevel(S, f, ctx.field), x0), f.to_string() + ".");
    return r;
}

CheckResult tensor_to_fixed(const SuiteContext& ctx, std::vector<std::string>&) {
    CheckResult r;
    FiniteCosetSpace S(ctx.config.n, ctx.config.q);
    FacetLevel x0(S, ApartmentFacet{{0}}, ctx.field);
    for (const auto& f : facets_through_base_vertex(ctx.config.n)) {
        const auto one = verify_tensor_to_fixed(FacetLevel(S, f, ctx.field), x0, static_cast<uint32_t>(ctx.config.seed));
        r.merge(one, f.to_string() + ".");
        r.expect(one.get("dim_tensor") == one.get("dim_fixed"), f.to_string() + ": dimensions differ");
    }
    return r;
}

CheckResult facet_orbit_decomposition(const SuiteContext& ctx, std::vector<std::string>&) {
    return orbit_decomposition_check(build_ball(ctx.config.radius, ctx.config.q), ctx.chi);
}

CheckResult anti_character_roundtrip(const SuiteContext& ctx, std::vector<std::string>&) {
    CheckResult r;
    const int n = ctx.config.n;
    const uint32_t q = ctx.config.q;
    const AntiCharacter chibar = build_anti_character(ctx.chi);
    std::mt19937_64 rng(ctx.config.seed);
    const int trials = 50;
    for (int k = 0; k < trials; ++k) {
        Coweight mu;
        for (int i = 0; i < n; ++i) {
            mu.lambda.push_back(static_cast<int64_t>(rng() % 7) - 3);
            mu.torus.push_back(1 + static_cast<uint32_t>(rng() % (q - 1)));
        }
        r.expect(underline_character(chibar, mu) == ctx.chi.on_coweight(mu),
                 "round trip differs at " + ExtendedWeylElt::translation(q, mu).to_string());
        const auto [l1, l2] = antidominant_difference(mu);
        r.expect(is_antidominant(l1).antidominant && is_antidominant(l2).antidominant, "difference not antidominant");
        r.expect(!chibar.value(l1).is_zero() && !chibar.value(l2).is_zero(), "character not regular");
    }
    // multiplicativity on antidominant translations
    std::vector<std::vector<int64_t>> anti;
    for (const auto& l : box_vectors(n, 2))
        if (is_antidominant(l).antidominant) anti.push_back(l);
    for (int k = 0; k < trials; ++k) {
        const Coweight a{anti[rng() % anti.size()], std::vector<uint32_t>(n, 1)};
        const Coweight b{anti[rng() % anti.size()], std::vector<uint32_t>(n, 1)};
        const auto ab = (ExtendedWeylElt::translation(q, a) * ExtendedWeylElt::translation(q, b)).coweight();
        r.expect(chibar.value(ab) == chibar.value(a) * chibar.value(b), "anti-character not multiplicative");
    }
    r.record("samples", trials);
    return r;
}

CheckResult invariant_dimension(const SuiteContext& ctx, std::vector<std::string>&) {
    CheckResult r;
    std::vector<std::pair<std::string, SubgroupSpec>> omegas{{"I", SubgroupSpec::of(Tag::ProPIwahori)},
                                                             {"K1", SubgroupSpec::k_m(1)}};
    for (const auto& f : facets_through_base_vertex(ctx.config.n))
        omegas.emplace_back("I_F" + f.to_string(), SubgroupSpec::parahoric(f));
    for (const auto& [name, omega] : omegas) {
        const auto inv = invariant_space(ctx.chi, omega);
        r.record("dim_" + name, static_cast<int64_t>(inv.basis.size()));
        r.record("double_cosets_" + name, static_cast<int64_t>(inv.cosets.count));
        r.record("rank_" + name, static_cast<int64_t>(inv.evaluation_rank));
        r.expect(inv.matches_double_cosets(), name + ": dimension or rank differs from |B\\G/Omega|");
    }
    size_t fact = 1;
    for (int i = 2; i <= ctx.config.n; ++i) fact *= i;
    r.expect(r.get("dim_I") == static_cast<int64_t>(fact), "dim V^I is not |W|");
    return r;
}

CheckResult f_one_normalization(const SuiteContext& ctx, std::vector<std::string>&) {
    CheckResult r;
    const int n = ctx.config.n;
    const uint32_t q = ctx.config.q;
    IwahoriFixedSpace space(ctx.chi, 8);
    const AntiCharacter chibar = build_anti_character(ctx.chi);
    const Vec f1 = space.f_one();
    int64_t count = 0;
    for (const auto& lam : box_vectors(n, 2)) {
        if (!is_antidominant(lam).antidominant) continue;
        for (const auto& t : all_tori(n, q)) {
            const Coweight c{lam, t};
            r.expect(space.act(f1, ExtendedWeylElt::translation(q, c)) == scale(chibar.value(c), f1),
                     "f_1 . tau_{e^lambda} differs at " + ExtendedWeylElt::translation(q, c).to_string());
            ++count;
        }
    }
    r.record("translations", count);
    return r;
}

CheckResult fiber_isomorphism(const SuiteContext& ctx, std::vector<std::string>& details) {
    CheckResult r;
    const FiberReport rep = verify_fiber_isomorphism(ctx.chi, ctx.config.budget_L);
    size_t fact = 1;
    for (int i = 2; i <= ctx.config.n; ++i) fact *= i;
    r.record("L", ctx.config.budget_L);
    r.record("upper", static_cast<int64_t>(rep.sandwich.upper));
    r.record("lower", static_cast<int64_t>(rep.sandwich.lower));
    r.record("evaluation_rank", static_cast<int64_t>(rep.evaluation_rank));
    r.record("truncation_size", static_cast<int64_t>(rep.sandwich.truncation_size));
    r.record("relations", static_cast<int64_t>(rep.sandwich.relation_count));
    r.expect(rep.witness_ok, "witness map failed");
    r.expect(rep.certified(), "upper bound " + std::to_string(rep.sandwich.upper) + " and evaluation rank " +
                                  std::to_string(rep.evaluation_rank) + " do not meet at L = " +
                                  std::to_string(ctx.config.budget_L));
    r.expect(rep.evaluation_rank == fact, "fiber dimension is not n!");
    details = rep.witness;
    return r;
}

CheckResult torus_specialization(const SuiteContext& ctx, std::vector<std::string>&) {
    CheckResult r;
    FiniteCosetSpace S(ctx.config.n, ctx.config.q);
    FacetLevel x0(S, ApartmentFacet{{0}}, ctx.field);
    for (const auto& f : facets_through_base_vertex(ctx.config.n)) {
        const auto one = verify_torus_specialization(FacetLevel(S, f, ctx.field), x0, ctx.chi);
        r.merge(one, f.to_string() + ".");
        const auto inv = invariant_space(ctx.chi, SubgroupSpec::parahoric(f));
        r.expect(one.get("dim_induced_fixed") == static_cast<int64_t>(inv.basis.size()),
                 f.to_string() + ": finite-level and principal series dimensions differ");
    }
    return r;
}

CheckResult apartment_stabilizer(const SuiteContext& ctx, std::vector<std::string>&) {
    CheckResult r;
    int64_t count = 0;
    for (const auto& f : facets_through_base_vertex(ctx.config.n)) {
        r.expect(apartment_stabilizer_check(ctx.config.n, f), f.to_string() + ": stabilizer meets B outside B0 Z");
        ++count;
    }
    r.record("facets", count);
    return r;
}

CheckResult ball_exactness(const SuiteContext& ctx, std::vector<std::string>&) {
    return exactness_series(ctx.config.radius, ctx.config.q, ctx.chi);
}

std::string radius_ok(const VerifierConfig& c) {
    if (c.n != 2) return "implemented for n = 2 only";
    if (c.radius > (c.q == 2 ? 3 : 2)) return "radius above the supported range";
    return "";
}

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "skipped";
    }
}

Field VerifierConfig::field() const {
    if (characteristic == 0) {
        if (ext_degree != 1) throw std::invalid_argument("extension degree must be 1 over Q");
        return Field::rationals();
    }
    return Field::extension(characteristic, ext_degree);
}

PrincipalSeriesChar VerifierConfig::character() const {
    const Field k = field();
    if (chi == "trivial") return PrincipalSeriesChar::trivial(k, n, q);
    return PrincipalSeriesChar::parse(chi, k, n, q);
}

void VerifierConfig::validate() const {
    if (n != 2 && n != 3) throw std::invalid_argument("n must be 2 or 3");
    if (q != 2 && q != 3) throw std::invalid_argument("q must be 2 or 3");
    if (budget_L < 0 || budget_L > 8) throw std::invalid_argument("budget L must be in [0, 8]");
    if (radius < 0 || radius > 4) throw std::invalid_argument("radius must be in [0, 4]");
    if (jobs < 1) throw std::invalid_argument("jobs must be positive");
    for (const auto& c : checks) {
        const auto& cat = check_catalog();
        if (std::none_of(cat.begin(), cat.end(), [&](const CheckInfo& i) { return i.name == c; }))
            throw std::invalid_argument("unknown check " + c);
    }
    character();
}

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> catalog{
        {"antidominance_contraction", "t I+ t^-1 in I+ and t^-1 I- t in I- for t the lift of e^lambda iff lambda is antidominant",
         always, antidominance_contraction},
        {"conjugation_into_K_m", "t^-m u t^m lies in K_{m+1} cap U- for generators u of I- and t strongly antidominant",
         always, conjugation_into_k_m},
        {"iwahori_factorization", "I = I+ I0 I-", always, iwahori_factorization},
        {"braid_vs_oracle", "tau products from the braid and quadratic relations equal the convolution counts", always,
         braid_vs_oracle},
        {"hecke_free_basis", "h_x0 is free over h_F with basis tau_d, d in D_F", always, hecke_free_basis},
        {"tensor_to_fixed", "h_x0 (x)_{h_F} X_F is isomorphic to X_x0^{I_F}", always, tensor_to_fixed},
        {"facet_orbit_decomposition", "oriented chains decompose over G-orbits of facets with coefficients V^{I_F}",
         n2_only, facet_orbit_decomposition},
        {"anti_character_roundtrip", "torus characters and regular characters of A_anti correspond bijectively", always,
         anti_character_roundtrip},
        {"invariant_dimension", "dim (Ind_B^G chi)^Omega = |B\\G/Omega|", always, invariant_dimension},
        {"f_one_normalization", "f_1 . tau_{e^lambda} = chibar(tau_{e^lambda}) f_1 for antidominant lambda", always,
         f_one_normalization},
        {"fiber_isomorphism", "V^I is isomorphic to chibar (x)_{A_anti} H", always, fiber_isomorphism},
        {"torus_specialization", "chi (x)_{k[T0/T1]} X_x0^{I_F} is isomorphic to (Ind chi)^{I_F}", always,
         torus_specialization},
        {"apartment_stabilizer", "the stabilizer of F meets B inside B0 Z", always, apartment_stabilizer},
        {"ball_exactness", "on ball-supported chains the boundary is injective, ker of the augmentation equals the boundaries and its rank grows with r; consistent with exactness of the resolution, not a proof of it", radius_ok, ball_exactness},
    };
    return catalog;
}

std::vector<Certificate> run_suite(const VerifierConfig& config) {
    config.validate();
    const Field k = config.field();
    const PrincipalSeriesChar chi = config.character();
    CosetTableCache cache(resolve_cache_dir(config.cache_dir));
    SuiteContext ctx{config, k, chi, cache};

    std::vector<const CheckInfo*> selected;
    for (const auto& c : check_catalog())
        if (config.checks.empty() || std::find(config.checks.begin(), config.checks.end(), c.name) != config.checks.end())
            selected.push_back(&c);

    std::vector<Certificate> certs(selected.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < selected.size();) {
            const CheckInfo& info = *selected[i];
            Certificate& c = certs[i];
            c.name = info.name;
            c.statement = info.statement;
            if (std::string why = info.unsupported(config); !why.empty()) {
                c.status = Status::Skipped;
                c.reason = why;
                continue;
            }
            const auto t0 = std::chrono::steady_clock::now();
            try {
                c.result = info.run(ctx, c.details);
            } catch (const std::exception& e) {
                c.result = CheckResult{};
                c.result.expect(false, std::string("exception: ") + e.what());
            }
            c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
            c.status = c.result.pass ? Status::Pass : Status::Fail;
        }
    };
    const int threads = std::min<int>(config.jobs, static_cast<int>(selected.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(certs.begin(), certs.end(), [](const Certificate& a, const Certificate& b) { return a.name < b.name; });
    return certs;
}

bool aggregate_pass(const std::vector<Certificate>& certs) {
    return std::none_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.status == Status::Fail; });
}

std::string certificates_json(const VerifierConfig& config, const std::vector<Certificate>& certs, bool with_timing) {
    using nlohmann::json;
    json cfg = {{"n", config.n},
                {"q", config.q},
                {"char", config.characteristic},
                {"ext_degree", config.ext_degree},
                {"chi", config.chi},
                {"budget_L", config.budget_L},
                {"radius", config.radius},
                {"seed", config.seed},
                {"checks", config.checks}};
    json list = json::array();
    for (const auto& c : certs) {
        json observed = json::object();
        for (const auto& [key, v] : c.result.observed) observed[key] = v;
        json j = {{"name", c.name},
                  {"statement", c.statement},
                  {"status", status_name(c.status)},
                  {"params", cfg},
                  {"observed", observed},
                  {"tool_version", kToolVersion}};
        if (c.status == Status::Fail) j["witness"] = c.result.witness;
        if (c.status == Status::Skipped) j["reason"] = c.reason;
        if (!c.details.empty()) j["details"] = c.details;
        if (with_timing) j["elapsed_ms"] = c.elapsed_ms;
        list.push_back(std::move(j));
    }
    json doc = {{"schema", 1}, {"tool_version", kToolVersion}, {"config", cfg}, {"certificates", list},
                {"aggregate", aggregate_pass(certs) ? "pass" : "fail"}};
    return doc.dump(2) + "\n";
}

std::string summary_table(const std::vector<Certificate>& certs) {
    std::ostringstream s;
    size_t width = 5;
    for (const auto& c : certs) width = std::max(width, c.name.size());
    s << std::left;
    s.width(static_cast<std::streamsize>(width + 2));
    s << "check" << "status   ms      note\n";
    for (const auto& c : certs) {
        s.width(static_cast<std::streamsize>(width + 2));
        s << c.name;
        s.width(9);
        s << status_name(c.status);
        s.width(8);
        s << c.elapsed_ms;
        s << (c.status == Status::Fail ? c.result.witness : c.reason) << "\n";
    }
    s << "aggregate: " << (aggregate_pass(certs) ? "pass" : "fail") << "\n";
    return s.str();
}

}  // namespace prohecke
