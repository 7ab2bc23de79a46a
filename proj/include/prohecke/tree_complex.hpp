#pragma once

#include <string>
#include <vector>

#include "prohecke/check.hpp"
#include "prohecke/principal_series.hpp"

namespace prohecke {

// Ball of radius r around x0 in the tree of PGL_2. The base vertex x0 is the
// class of O^2 and the base edge C joins x0 to x1 = diag(1, t) O^2.
struct TreeBall {
    struct Vertex {
        GroupMat g;  // vertex = g x0
        int distance;
        int parent;  // -1 for x0
        std::string key;
    };
    struct Edge {
        int tail, head;  // parent, child
        GroupMat g;      // g x0 = tail, g x1 = head
    };
    uint32_t q = 2;
    int radius = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
};

// q in {2, 3}, r <= 4.
TreeBall build_ball(int r, uint32_t q);

// The augmented oriented chain complex of the coefficient system F -> V^{I_F}
// on a ball, with V = Ind_B^G(chi). Coefficient spaces are transported from
// V^{K_1} and V^I by right translation and stored as K_m-fixed vectors, m = r + 2.
class TreeComplex {
public:
    TreeComplex(const TreeBall& ball, const PrincipalSeriesChar& chi);

    const TreeBall& ball() const { return ball_; }
    const InducedModel& model() const { return model_; }
    int level() const { return model_.level(); }
    const std::vector<std::vector<Vec>>& vertex_spaces() const { return vertex_spaces_; }
    const std::vector<std::vector<Vec>>& edge_spaces() const { return edge_spaces_; }
    size_t chain_dim(int degree) const { return degree == 0 ? c0_offset_.back() : c1_offset_.back(); }
    // Rows indexed by 0-chain coordinates, columns by 1-chain coordinates.
    const ExactMatrix& boundary() const { return boundary_; }
    // Rows indexed by the model coordinates of V^{K_m}.
    const ExactMatrix& augmentation() const { return augmentation_; }
    // Inclusion V^{I_e} in V^{I_v} for every incident pair, by exact solve and
    // by invariance under generators of I_v.
    const CheckResult& inclusions() const { return inclusions_; }

    // Coordinates of a 1-chain supported on edge e with coefficient v in V^{I_e}.
    Vec edge_chain(size_t e, const Vec& coeff) const;
    // Coordinates of the V^{I_vertex}-component of a vector, or empty if outside.
    Vec vertex_coords(size_t vertex, const Vec& v) const;

private:
    TreeBall ball_;
    InducedModel model_;
    std::vector<std::vector<Vec>> vertex_spaces_, edge_spaces_;
    std::vector<size_t> c0_offset_, c1_offset_;
    ExactMatrix boundary_, augmentation_;
    CheckResult inclusions_;
};

// E1: the boundary is injective on ball-supported 1-chains; E2: dim ker of
// the augmentation on ball-supported 0-chains equals rank of the boundary.
// Also checks that the augmentation kills boundaries.
CheckResult exactness_report(const TreeBall& ball, const PrincipalSeriesChar& chi);
CheckResult exactness_report(const TreeComplex& cx);

// E1 and E2 for each radius 0..max_r plus E3: rank of the augmentation is
// nondecreasing in r and its image contains V^{K_r} (probe level r, and 1 at r = 0).
CheckResult exactness_series(int max_r, uint32_t q, const PrincipalSeriesChar& chi);

// Every ball facet is the recorded g times the base facet, and antidiag(1, t)
// reverses C and acts on its coefficients compatibly with the orientation sign.
CheckResult orbit_decomposition_check(const TreeBall& ball, const PrincipalSeriesChar& chi);

}  // namespace prohecke
