#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "prohecke/weyl.hpp"

using namespace prohecke;

namespace {

using Key = std::pair<std::vector<int>, std::vector<int64_t>>;
Key key_of(const ExtendedWeylElt& w) { return {w.perm, w.lambda}; }

// Word length in s_0..s_{n-1} with length-zero rotations free: breadth-first
// search from the omega powers, independent of the closed-form length.
std::map<Key, int> bfs_lengths(int n, int max_len) {
    std::map<Key, int> dist;
    std::vector<ExtendedWeylElt> frontier;
    ExtendedWeylElt om = ExtendedWeylElt::omega(n, 2), x = ExtendedWeylElt::identity(n, 2);
    ExtendedWeylElt y = x;
    for (int k = 0; k <= 4 * n; ++k) {
        for (const auto& e : {x, y})
            if (dist.emplace(key_of(e), 0).second) frontier.push_back(e);
        x = multiply(x, om);
        y = multiply(y, inverse(om));
    }
    for (int d = 1; d <= max_len; ++d) {
        std::vector<ExtendedWeylElt> next;
        for (const auto& w : frontier)
            for (int i = 0; i < n; ++i) {
                ExtendedWeylElt v = multiply(w, ExtendedWeylElt::simple(n, 2, i));
                if (dist.emplace(key_of(v), d).second) next.push_back(v);
            }
        frontier = std::move(next);
    }
    return dist;
}

std::vector<ExtendedWeylElt> box_elements(int n, uint32_t q, int box) {
    std::vector<ExtendedWeylElt> out;
    for (const auto& p : all_permutations(n)) {
        std::vector<int64_t> lam(n, -box);
        while (true) {
            ExtendedWeylElt w = ExtendedWeylElt::permutation(q, p);
            w.lambda = lam;
            out.push_back(w);
            int i = 0;
            while (i < n && ++lam[i] > box) lam[i++] = -box;
            if (i == n) break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("length examples") {
    CHECK(length(ExtendedWeylElt::identity(3, 2)) == 0);
    CHECK(length(ExtendedWeylElt::simple(2, 2, 1)) == 1);
    CHECK(length(ExtendedWeylElt::translation(2, {0, 1})) == 1);
    for (int n : {2, 3, 4}) {
        CHECK(length(ExtendedWeylElt::omega(n, 3)) == 0);
        for (int i = 0; i < n; ++i) {
            auto s = ExtendedWeylElt::simple(n, 3, i);
            CHECK(length(s) == 1);
            CHECK(multiply(s, s) == ExtendedWeylElt::identity(n, 3));
        }
    }
}

TEST_CASE("closed-form length matches breadth-first word search") {
    for (int n : {2, 3}) {
        auto dist = bfs_lengths(n, 4);
        for (const auto& [k, d] : dist) {
            ExtendedWeylElt w = ExtendedWeylElt::permutation(2, k.first);
            w.lambda = k.second;
            CHECK(length(w) == d);
        }
        for (const auto& w : box_elements(n, 2, 3)) {
            if (length(w) > 4) continue;
            auto it = dist.find(key_of(w));
            REQUIRE(it != dist.end());
            CHECK(it->second == length(w));
        }
    }
}

TEST_CASE("length is subadditive, inverse-invariant and torus-blind") {
    for (int n : {2, 3}) {
        std::vector<ExtendedWeylElt> small;
        for (const auto& w : box_elements(n, 3, 2))
            if (length(w) <= 3) small.push_back(w);
        for (const auto& a : small) {
            CHECK(length(inverse(a)) == length(a));
            ExtendedWeylElt b = a;
            b.torus[0] = 2;
            CHECK(length(b) == length(a));
            for (const auto& c : small) CHECK(length(multiply(a, c)) <= length(a) + length(c));
        }
    }
}

TEST_CASE("antidominant translations add lengths") {
    for (int n : {2, 3}) {
        std::vector<std::vector<int64_t>> anti;
        for (const auto& w : box_elements(n, 2, 3))
            if (w.is_translation() && is_antidominant(w.lambda).antidominant) anti.push_back(w.lambda);
        for (const auto& l : anti)
            for (const auto& m : anti) {
                std::vector<int64_t> s(n);
                for (int i = 0; i < n; ++i) s[i] = l[i] + m[i];
                CHECK(length(ExtendedWeylElt::translation(2, s)) ==
                      length(ExtendedWeylElt::translation(2, l)) + length(ExtendedWeylElt::translation(2, m)));
            }
    }
}

TEST_CASE("antidominance flags") {
    CHECK(is_antidominant(std::vector<int64_t>{0, 0, 0}).antidominant);
    CHECK(!is_antidominant(std::vector<int64_t>{0, 0, 0}).strongly);
    CHECK(is_antidominant(std::vector<int64_t>{0, 1, 2}).strongly);
    CHECK(!is_antidominant(std::vector<int64_t>{1, 0}).antidominant);
}

TEST_CASE("group law") {
    uint32_t q = 3;
    auto s1 = ExtendedWeylElt::simple(2, q, 1);
    CHECK(multiply(s1, ExtendedWeylElt::translation(q, {1, 0})) ==
          multiply(ExtendedWeylElt::translation(q, {0, 1}), s1));
    auto a = ExtendedWeylElt::translation(q, Coweight{{1, -2}, {2, 1}});
    auto b = ExtendedWeylElt::translation(q, Coweight{{0, 3}, {2, 2}});
    CHECK(multiply(a, b) == ExtendedWeylElt::translation(q, Coweight{{1, 1}, {1, 2}}));
    std::mt19937 rng(7);
    auto elems = box_elements(3, q, 1);
    for (int t = 0; t < 300; ++t) {
        auto x = elems[rng() % elems.size()], y = elems[rng() % elems.size()], z = elems[rng() % elems.size()];
        x.torus = {1 + (uint32_t)(rng() % 2), 1, 2};
        CHECK(multiply(x, inverse(x)) == ExtendedWeylElt::identity(3, q));
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
}

TEST_CASE("splitting is an equivariant homomorphism") {
    uint32_t q = 3;
    for (const auto& p : all_permutations(3)) {
        auto sigma = ExtendedWeylElt::permutation(q, p);
        std::vector<int64_t> lam{2, -1, 0}, mu{1, 1, -3};
        auto el = ExtendedWeylElt::translation(q, lam);
        std::vector<int64_t> moved(3), sum(3);
        for (int j = 0; j < 3; ++j) moved[p[j]] = lam[j];
        for (int j = 0; j < 3; ++j) sum[j] = lam[j] + mu[j];
        CHECK(multiply(multiply(sigma, el), inverse(sigma)) == ExtendedWeylElt::translation(q, moved));
        CHECK(multiply(el, ExtendedWeylElt::translation(q, mu)) == ExtendedWeylElt::translation(q, sum));
    }
}

TEST_CASE("reduced words") {
    auto id = reduced_word(ExtendedWeylElt::identity(2, 2));
    CHECK(id.word.empty());
    CHECK(id.omega_part == ExtendedWeylElt::identity(2, 2));
    for (int i = 0; i < 3; ++i) {
        auto rw = reduced_word(ExtendedWeylElt::simple(3, 2, i));
        CHECK(rw.word == std::vector<int>{i});
        CHECK(rw.omega_part == ExtendedWeylElt::identity(3, 2));
    }
    auto t = ExtendedWeylElt::translation(2, {0, 1});
    auto rw = reduced_word(t);
    CHECK(rw.word.size() == 1);
    CHECK(length(rw.omega_part) == 0);
    for (int n : {2, 3})
        for (auto w : box_elements(n, 3, 2)) {
            w.torus[n - 1] = 2;
            auto r = reduced_word(w);
            CHECK(static_cast<int>(r.word.size()) == length(w));
            CHECK(length(r.omega_part) == 0);
            ExtendedWeylElt prod = r.omega_part;
            for (int i : r.word) prod = multiply(prod, ExtendedWeylElt::simple(n, 3, i));
            CHECK(prod == w);
        }
}

TEST_CASE("facet orbits and apartment stabilizers") {
    CHECK(orbit_facets(2, 0) == std::vector<ApartmentFacet>{{{0}}});
    CHECK(orbit_facets(2, 1) == std::vector<ApartmentFacet>{{{0, 1}}});
    CHECK(orbit_facets(3, 0) == std::vector<ApartmentFacet>{{{0}}});
    CHECK(orbit_facets(3, 1) == std::vector<ApartmentFacet>{{{0, 1}}});
    CHECK(orbit_facets(3, 2) == std::vector<ApartmentFacet>{{{0, 1, 2}}});
    CHECK_THROWS(orbit_facets(2, 2));
    CHECK(facets_through_base_vertex(3).size() == 4);
    for (int n : {2, 3})
        for (const auto& f : facets_through_base_vertex(n)) CHECK(apartment_stabilizer_check(n, f));
    CHECK(facet_blocks(3, ApartmentFacet{{0, 1}}) == std::vector<int>{0, 1, 1});
    CHECK(facet_blocks(3, ApartmentFacet{{0, 2}}) == std::vector<int>{0, 0, 1});
    CHECK(facet_blocks(3, ApartmentFacet{{0}}) == std::vector<int>{0, 0, 0});
    CHECK(rotate_facet(ApartmentFacet{{0, 2}}, 3, 1) == ApartmentFacet{{0, 1}});
}
