#include "doctest.h"
#include "prohecke/tree_complex.hpp"

using namespace prohecke;

namespace {

size_t expected_vertices(int r, uint32_t q) {
    size_t s = 1, shell = q + 1;
    for (int i = 1; i <= r; ++i, shell *= q) s += shell;
    return s;
}

int max_radius(uint32_t q) { return q == 2 ? 3 : 2; }

}  // namespace

TEST_CASE("ball sizes") {
    for (uint32_t q : {2u, 3u})
        for (int r = 0; r <= max_radius(q) + 1; ++r) {
            TreeBall b = build_ball(r, q);
            CHECK(b.vertices.size() == expected_vertices(r, q));
            CHECK(b.edges.size() + 1 == b.vertices.size());
        }
    CHECK_THROWS(build_ball(1, 5));
}

TEST_CASE("radius one over F_2 for the trivial character") {
    auto chi = character_matrix(2, 2).front();
    TreeComplex cx(build_ball(1, 2), chi);
    CHECK(cx.boundary().rows() == 12);
    CHECK(cx.boundary().cols() == 6);
    for (const auto& s : cx.vertex_spaces()) CHECK(s.size() == 3);
    for (const auto& s : cx.edge_spaces()) CHECK(s.size() == 2);
    CHECK(cx.inclusions().pass);
}

TEST_CASE("augmented complex on balls") {
    for (uint32_t q : {2u, 3u})
        for (const auto& chi : character_matrix(2, q)) {
            auto r = exactness_series(max_radius(q), q, chi);
            CAPTURE(chi.to_string());
            CAPTURE(r.witness);
            CHECK(r.pass);
        }
}

TEST_CASE("facets are translates of the base facets") {
    for (uint32_t q : {2u, 3u})
        for (const auto& chi : character_matrix(2, q)) {
            auto r = orbit_decomposition_check(build_ball(2, q), chi);
            CAPTURE(chi.to_string());
            CAPTURE(r.witness);
            CHECK(r.pass);
        }
}

TEST_CASE("image of the augmentation on the ball of radius r is V^{K_{r+1}}") {
    for (uint32_t q : {2u, 3u}) {
        auto chi = character_matrix(2, q).back();
        auto r = exactness_series(max_radius(q), q, chi);
        int64_t dim = q + 1;
        for (int rad = 0; rad <= max_radius(q); ++rad, dim *= q) {
            const std::string tag = "r" + std::to_string(rad) + ".";
            CHECK(r.get(tag + "rank_augmentation") == dim);
            CHECK(r.get(tag + "dim_C0") == static_cast<int64_t>((q + 1) * expected_vertices(rad, q)));
            CHECK(r.get(tag + "rank_boundary") == static_cast<int64_t>(2 * (expected_vertices(rad, q) - 1)));
        }
    }
}
