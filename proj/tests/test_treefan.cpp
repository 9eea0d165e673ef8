#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "helpers.hpp"
#include "prefixpoly/ballot.hpp"
#include "prefixpoly/probability.hpp"
#include "prefixpoly/treefan.hpp"
#include "prefixpoly/volume.hpp"

using namespace prefixpoly;
using testutil::ints;
using testutil::q;

TEST_CASE("tree enumeration and labels") {
    for (unsigned n = 0; n <= 7; ++n)
        CHECK(Integer(static_cast<unsigned long>(enumerate_trees(n).size())) == catalan(n));
    const auto left_comb = PlaneBinaryTree::from_dyck("(())");
    CHECK(left_comb.root() == 2);
    CHECK(left_comb.left(2) == 1);
    CHECK(left_comb.to_string() == "2(1,.)");
    CHECK(k_of_tree(left_comb) == Composition{2, 0});
    const auto right_comb = PlaneBinaryTree::from_dyck("()()");
    CHECK(k_of_tree(right_comb) == Composition{1, 1});
    CHECK(PlaneBinaryTree::from_dyck(left_comb.dyck()) == left_comb);
    CHECK_THROWS(PlaneBinaryTree::from_dyck("(()"));
}

TEST_CASE("k of a tree and its inverse") {
    CHECK(tree_of_k(std::vector<unsigned>{2, 0, 1}).to_string() == "2(1,3)");
    const Composition k{2, 3, 0, 1, 0, 1, 0, 2, 0};
    CHECK(k_of_tree(tree_of_k(k)) == k);
    for (unsigned n = 1; n <= 7; ++n) {
        // All ones give the right comb, (n, 0, ...) the left comb.
        const auto r = tree_of_k(Composition(n, 1));
        CHECK(r.root() == 1);
        Composition left(n, 0);
        left[0] = n;
        CHECK(tree_of_k(left).root() == n);
        std::set<Composition> seen;
        for (const auto& t : enumerate_trees(n)) seen.insert(k_of_tree(t));
        const auto kn = enumerate_K(n);
        CHECK(seen == std::set<Composition>(kn.begin(), kn.end()));
    }
    CHECK_THROWS_AS(tree_of_k(std::vector<unsigned>{0, 2}), DomainError);
}

TEST_CASE("fan inequalities and point location") {
    for (const auto& iq : fan_inequalities(tree_of_k(Composition(4, 1)))) CHECK(iq.upper);
    const auto t = PlaneBinaryTree::from_dyck("(()())()");
    CHECK(t.to_string() == "3(1(.,2),4)");
    std::vector<std::string> text;
    for (const auto& iq : fan_inequalities(t)) text.push_back(iq.to_string());
    std::sort(text.begin(), text.end());
    CHECK(text == std::vector<std::string>{"y2 + y3 >= 0", "y2 <= 0", "y4 <= 0"});

    const auto loc = locate_in_fan(ints({-1, 2, -1}));
    CHECK(loc.tree == t);
    CHECK_FALSE(loc.boundary);
    CHECK(locate_in_fan(ints({0, 0})).boundary);
    CHECK(open_chambers_containing(ints({-1, 2, -1})) == std::vector<PlaneBinaryTree>{t});
    CHECK(open_chambers_containing(ints({0, 1})).empty());
}

TEST_CASE("triangulations") {
    const auto t = tree_of_k(std::vector<unsigned>{2, 0, 1});
    const auto d = tree_triangulation(t);
    CHECK(d.size() == 2);
    CHECK(tree_from_triangulation(3, d) == t);
    CHECK(crossing({0, 2}, {1, 3}));
    CHECK_FALSE(crossing({0, 2}, {2, 4}));
    CHECK_FALSE(crossing({0, 3}, {1, 2}));
    const std::vector<Diagonal> bad{{0, 2}, {1, 3}};
    CHECK_THROWS(tree_from_triangulation(3, bad));
    for (unsigned n = 1; n <= 6; ++n)
        for (const auto& tr : enumerate_trees(n)) CHECK(tree_from_triangulation(n, tree_triangulation(tr)) == tr);
}

TEST_CASE("chamber rays") {
    const auto two = enumerate_trees(2);
    std::vector<std::vector<IntRay>> rays;
    for (const auto& t : two) rays.push_back(chamber_rays(t));
    std::sort(rays.begin(), rays.end());
    CHECK(rays == std::vector<std::vector<IntRay>>{{IntRay{-1}}, {IntRay{1}}});
    CHECK(p_of_diagonal({0, 2}, 3) == IntRay{1, 0});
    CHECK(p_of_diagonal({1, 4}, 3) == IntRay{-1, 0});
    CHECK(p_of_diagonal({1, 3}, 3) == IntRay{-1, 1});
    for (unsigned n = 2; n <= 5; ++n)
        for (const auto& t : enumerate_trees(n)) {
            std::vector<IntRay> expect;
            for (const auto& dg : tree_triangulation(t)) expect.push_back(p_of_diagonal(dg, n));
            std::sort(expect.begin(), expect.end());
            CHECK(chamber_rays(t) == expect);
        }
}

TEST_CASE("face poset of the fan is the associahedron's") {
    for (unsigned n = 2; n <= 4; ++n) CHECK(assoc_face_poset_check(n).isomorphic);
    const auto a = assoc_face_poset_check(4);
    CHECK(a.chambers == 14);
    CHECK(a.rays == 9);
}

TEST_CASE("contour-walk tree") {
    const auto phi = build_tree_phi(ints({6, 2, 7}), ints({1, 4, 3}), q(16));
    REQUIRE_FALSE(phi.degenerate);
    REQUIRE(phi.binary.has_value());
    CHECK(phi.binary->to_string() == "2(1,3)");
    const auto pj = phi.to_json();
    CHECK(pj["tree"] == phi.binary->to_json());
    CHECK(pj["valleys"].size() == 3);
    CHECK(build_tree_phi(ints({0}), ints({0}), q(1)).degenerate);

    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> frac(1, 96);
    int generic = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const unsigned n = 1 + rep % 5;
        std::vector<Rational> x(n), y(n);
        Rational sx = 0, sy = 0;
        for (unsigned i = 0; i < n; ++i) {
            x[i] = testutil::random_rational(rng, 1, 30, 7);
            sx += x[i];
            y[i] = q(frac(rng), 97) * (sx - sy);
            sy += y[i];
        }
        const auto t = build_tree_phi(x, y, sx + 1);
        if (t.degenerate) continue;
        ++generic;
        CHECK(delta_membership(*t.binary, x, y));
    }
    CHECK(generic > 100);
}

TEST_CASE("the cells Delta_T") {
    const auto x = ints({1, 1, 1});
    Rational sum = 0;
    for (const auto& t : enumerate_trees(3)) {
        CHECK(delta_membership(t, x, x));
        sum += delta_volume(t, x);
    }
    CHECK(sum == q(8, 3));
    CHECK(sum == volume_at(x));
    const auto t = tree_of_k(std::vector<unsigned>{2, 1, 0, 3, 0, 0});
    const auto xs = ints({2, 3, 5, 7, 11, 13});
    CHECK(delta_volume(t, xs) == Rational(4 * 3 * 343) / 12);
    CHECK(in_polytope(x, ints({1, 1, 1})));
    CHECK_FALSE(in_polytope(x, ints({2, 0, 0})));
}

TEST_CASE("rejection sampling of a cell") {
    const auto x = std::vector<Rational>{q(1), q(1, 2), q(1)};
    const auto t = enumerate_trees(3)[1];
    const auto serial = mc_delta_volume(t, x, 20000, 99, Exec::serial);
    const auto par = mc_delta_volume(t, x, 20000, 99, Exec::parallel);
    CHECK(serial.hits.estimate == par.hits.estimate);
    CHECK(std::fabs(serial.estimate() - delta_volume(t, x).get_d()) <= 4 * serial.std_error());
}

TEST_CASE("faces and vertices") {
    CHECK(polytope_vertices(ints({1, 1})).size() == 4);
    CHECK(polytope_vertices(ints({1, 0})).size() == 3);
    CHECK(face_structure(ints({1, 1, 1})).vertex_count == 8);
    CHECK(face_structure(ints({1, 0, 0})).vertex_count == 4);
    CHECK(face_structure(ints({2, 1, 3})).blocks == std::vector<unsigned>{1, 1, 1});
    CHECK_THROWS(face_structure(ints({0, 1})));
    for (const auto& tr : enumerate_trees(3))
        CHECK(vertices_of(delta_halfspaces(tr, ints({1, 2, 1})), 3).size() >= 4);
}

TEST_CASE("subdivision output") {
    const auto j = subdivision_json(ints({1, 1}));
    CHECK(j["chambers"].size() == 2);
    const auto svg = subdivision_svg(ints({1, 1}));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 2);
    const auto obj = subdivision_obj(ints({1, 1, 1}));
    CHECK(obj.find("\nv ") != std::string::npos);
    CHECK_THROWS(subdivision_svg(ints({1, 1, 1})));
    CHECK_THROWS(subdivision_obj(ints({1, 1})));
}
