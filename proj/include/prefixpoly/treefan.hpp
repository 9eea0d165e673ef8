#pragma once

// Plane binary trees with the binary search labeling, the fan F_n they
// index, triangulations of the (n+2)-gon, the contour-walk tree of a point
// of Pi_n(x), and the subdivision of Pi_n(x) into the cells Delta_T.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prefixpoly/ballot.hpp"
#include "prefixpoly/exactmath.hpp"

namespace prefixpoly {

/// Internal vertices are labeled 1..n in symmetric (inorder) order, so every
/// label exceeds those of its left subtree and precedes those of its right
/// subtree.  Child and parent entries of 0 denote a leaf / no parent.
class PlaneBinaryTree {
public:
    PlaneBinaryTree() = default;
    /// n = 0 is the single leaf.
    static PlaneBinaryTree from_children(std::vector<unsigned> left, std::vector<unsigned> right);
    /// "(" left ")" right, with the empty word for a leaf.
    static PlaneBinaryTree from_dyck(std::string_view word);

    unsigned size() const { return n_; }
    unsigned root() const { return root_; }
    unsigned left(unsigned v) const { return left_[v]; }
    unsigned right(unsigned v) const { return right_[v]; }
    unsigned parent(unsigned v) const { return parent_[v]; }
    /// Smallest and largest label in the subtree of v.
    std::pair<unsigned, unsigned> span_of(unsigned v) const;

    std::string dyck() const;
    /// Nested form, e.g. "3(1(.,2),4)".
    std::string to_string() const;
    nlohmann::json to_json() const;

    bool operator==(const PlaneBinaryTree& o) const { return left_ == o.left_ && right_ == o.right_; }
    bool operator<(const PlaneBinaryTree& o) const { return dyck() < o.dyck(); }

private:
    unsigned n_ = 0;
    unsigned root_ = 0;
    std::vector<unsigned> left_{0}, right_{0}, parent_{0};  // index 0 unused
};

/// All C_n trees, ordered by Dyck word.
std::vector<PlaneBinaryTree> enumerate_trees(unsigned n);

Composition k_of_tree(const PlaneBinaryTree& t);
/// Inverse of k_of_tree; throws DomainError when k is not in K_n.
PlaneBinaryTree tree_of_k(std::span<const unsigned> k);

/// sum_{h=lo}^{hi} y_h {<=, >=} 0, with y indexed 2..n in the fan.
struct SignedInterval {
    unsigned lo = 0, hi = 0;
    bool upper = true;  ///< true: sum <= 0; false: sum >= 0
    std::string to_string(const char* var = "y") const;
};
/// One inequality per parent/child pair (p, c): p < c gives y_{p+1..c} <= 0,
/// p > c gives y_{c+1..p} >= 0.
std::vector<SignedInterval> fan_inequalities(const PlaneBinaryTree& t);

struct FanLocation {
    PlaneBinaryTree tree;
    bool boundary = false;  ///< some defining sum vanishes
};
/// point = (y_2, ..., y_n).
FanLocation locate_in_fan(std::span<const Rational> point);
/// Trees whose open chamber contains the point, by checking every chamber.
std::vector<PlaneBinaryTree> open_chambers_containing(std::span<const Rational> point);

using Diagonal = std::pair<unsigned, unsigned>;
/// Diagonals of the (n+2)-gon with vertices 0..n+1; the root edge is (0, n+1).
std::vector<Diagonal> tree_triangulation(const PlaneBinaryTree& t);
PlaneBinaryTree tree_from_triangulation(unsigned n, std::span<const Diagonal> diagonals);
bool crossing(const Diagonal& a, const Diagonal& b);

using IntRay = std::vector<std::int64_t>;  ///< coordinates y_2..y_n
/// Primitive generators of the extreme rays of the chamber, sorted.
std::vector<IntRay> chamber_rays(const PlaneBinaryTree& t);
IntRay p_of_diagonal(const Diagonal& d, unsigned n);

/// Face poset of F_n against noncrossing diagonal sets of the (n+2)-gon.
struct AssocCheck {
    bool isomorphic = false;
    std::size_t chambers = 0, rays = 0, faces = 0, decompositions = 0;
};
AssocCheck assoc_face_poset_check(unsigned n);

/// Contour-walk tree with edge lengths.  Vertex 0 is the root of the
/// planted tree; children are listed left to right.
struct PlantedTree {
    std::vector<int> parent;
    std::vector<std::vector<unsigned>> children;
    std::vector<Rational> height;
    std::vector<Rational> length;  ///< edge to parent; 0 for the root
    /// Valley vertex created by the i-th down step, i = 1..n (index 0 unused).
    std::vector<unsigned> valley;
    bool degenerate = false;
    std::optional<PlaneBinaryTree> binary;  ///< unplanted tree when not degenerate
    nlohmann::json to_json() const;
};
PlantedTree build_tree_phi(std::span<const Rational> x, std::span<const Rational> y, const Rational& s);

bool in_polytope(std::span<const Rational> x, std::span<const Rational> y);
/// Closed cell Delta_T: y in Pi_n(x) and the fan inequalities hold for y_h - x_h.
bool delta_membership(const PlaneBinaryTree& t, std::span<const Rational> x, std::span<const Rational> y);
/// Open version: every defining sum is strict.
bool delta_membership_strict(const PlaneBinaryTree& t, std::span<const Rational> x, std::span<const Rational> y);
Rational delta_volume(const PlaneBinaryTree& t, std::span<const Rational> x);

struct FaceStructure {
    std::vector<unsigned> blocks;
    Integer vertex_count;
};
FaceStructure face_structure(std::span<const Rational> x);

/// a . y <= b.
struct HalfSpace {
    std::vector<Rational> a;
    Rational b;
};
/// Vertices of a bounded polyhedron by solving every d-subset of the
/// constraints; sorted and deduplicated.
std::vector<std::vector<Rational>> vertices_of(std::span<const HalfSpace> constraints, std::size_t dim);
std::vector<HalfSpace> polytope_halfspaces(std::span<const Rational> x);
std::vector<HalfSpace> delta_halfspaces(const PlaneBinaryTree& t, std::span<const Rational> x);
std::vector<std::vector<Rational>> polytope_vertices(std::span<const Rational> x);

/// {x, chambers: [{tree, k, inequalities, vertices, volume}]}.
nlohmann::json subdivision_json(std::span<const Rational> x);
/// n = 2 only.
std::string subdivision_svg(std::span<const Rational> x);
/// n = 3 only.
std::string subdivision_obj(std::span<const Rational> x);

}  // namespace prefixpoly
