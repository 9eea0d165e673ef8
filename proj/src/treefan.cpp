#include "prefixpoly/treefan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "prefixpoly/volume.hpp"

namespace prefixpoly {

namespace {

// Shape built with arbitrary node ids; relabeled in symmetric order on finish.
struct TreeBuilder {
    std::vector<int> left, right, parent;
    int add(int par, bool as_left) {
        const int id = static_cast<int>(left.size());
        left.push_back(-1);
        right.push_back(-1);
        parent.push_back(par);
        if (par >= 0) (as_left ? left[par] : right[par]) = id;
        return id;
    }
    PlaneBinaryTree finish(int root) const {
        const auto n = left.size();
        std::vector<unsigned> label(n, 0);
        unsigned next = 1;
        std::function<void(int)> visit = [&](int v) {
            if (v < 0) return;
            visit(left[v]);
            label[v] = next++;
            visit(right[v]);
        };
        visit(root);
        std::vector<unsigned> l(n + 1, 0), r(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) {
            if (left[v] >= 0) l[label[v]] = label[left[v]];
            if (right[v] >= 0) r[label[v]] = label[right[v]];
        }
        return PlaneBinaryTree::from_children(std::move(l), std::move(r));
    }
};

}  // namespace

PlaneBinaryTree PlaneBinaryTree::from_children(std::vector<unsigned> left, std::vector<unsigned> right) {
    if (left.size() != right.size() || left.empty()) throw DimensionError("tree: child arrays must have length n+1");
    PlaneBinaryTree t;
    t.n_ = static_cast<unsigned>(left.size() - 1);
    t.left_ = std::move(left);
    t.right_ = std::move(right);
    t.parent_.assign(t.n_ + 1, 0);
    for (unsigned v = 1; v <= t.n_; ++v)
        for (unsigned c : {t.left_[v], t.right_[v]}) {
            if (c == 0) continue;
            if (c > t.n_ || t.parent_[c] != 0 || c == v) throw DomainError("tree: malformed child arrays");
            t.parent_[c] = v;
        }
    for (unsigned v = 1; v <= t.n_; ++v)
        if (t.parent_[v] == 0) {
            if (t.root_ != 0) throw DomainError("tree: more than one root");
            t.root_ = v;
        }
    if (t.n_ > 0 && t.root_ == 0) throw DomainError("tree: no root");
    // Every subtree must occupy a contiguous label range around its root.
    std::function<std::pair<unsigned, unsigned>(unsigned)> check = [&](unsigned v) -> std::pair<unsigned, unsigned> {
        unsigned lo = v, hi = v;
        if (t.left_[v]) {
            auto [a, b] = check(t.left_[v]);
            if (b + 1 != v) throw DomainError("tree: labels are not the binary search labeling");
            lo = a;
        }
        if (t.right_[v]) {
            auto [a, b] = check(t.right_[v]);
            if (a != v + 1) throw DomainError("tree: labels are not the binary search labeling");
            hi = b;
        }
        return {lo, hi};
    };
    if (t.n_ > 0) {
        auto [lo, hi] = check(t.root_);
        if (lo != 1 || hi != t.n_) throw DomainError("tree: disconnected child arrays");
    }
    return t;
}

PlaneBinaryTree PlaneBinaryTree::from_dyck(std::string_view word) {
    TreeBuilder b;
    std::size_t pos = 0;
    std::function<int(int, bool)> parse = [&](int par, bool as_left) -> int {
        if (pos == word.size() || word[pos] == ')') return -1;
        if (word[pos] != '(') throw DomainError("tree: unexpected character in Dyck word");
        ++pos;
        const int v = b.add(par, as_left);
        parse(v, true);
        if (pos == word.size() || word[pos] != ')') throw DomainError("tree: unbalanced Dyck word");
        ++pos;
        parse(v, false);
        return v;
    };
    const int root = parse(-1, true);
    if (pos != word.size()) throw DomainError("tree: unbalanced Dyck word");
    if (root < 0) return PlaneBinaryTree();
    return b.finish(root);
}

std::pair<unsigned, unsigned> PlaneBinaryTree::span_of(unsigned v) const {
    unsigned lo = v, hi = v;
    while (left_[lo]) lo = left_[lo];
    while (right_[hi]) hi = right_[hi];
    return {lo, hi};
}

std::string PlaneBinaryTree::dyck() const {
    std::string out;
    std::function<void(unsigned)> emit = [&](unsigned v) {
        if (v == 0) return;
        out += '(';
        emit(left_[v]);
        out += ')';
        emit(right_[v]);
    };
    emit(root_);
    return out;
}

std::string PlaneBinaryTree::to_string() const {
    std::function<std::string(unsigned)> emit = [&](unsigned v) -> std::string {
        if (v == 0) return ".";
        if (!left_[v] && !right_[v]) return std::to_string(v);
        return std::to_string(v) + "(" + emit(left_[v]) + "," + emit(right_[v]) + ")";
    };
    return emit(root_);
}

nlohmann::json PlaneBinaryTree::to_json() const {
    std::vector<unsigned> pre;
    std::function<void(unsigned)> walk = [&](unsigned v) {
        if (!v) return;
        pre.push_back(v);
        walk(left_[v]);
        walk(right_[v]);
    };
    walk(root_);
    return {{"dyck", dyck()}, {"preorder_labels", pre}, {"text", to_string()}};
}

std::vector<PlaneBinaryTree> enumerate_trees(unsigned n) {
    if (n > 10) throw ResourceError("enumerate_trees: n > 10");
    std::vector<PlaneBinaryTree> out;
    std::string w;
    std::function<void(unsigned, unsigned)> gen = [&](unsigned open, unsigned close) {
        if (open == n && close == n) {
            out.push_back(PlaneBinaryTree::from_dyck(w));
            return;
        }
        if (open < n) {
            w.push_back('(');
            gen(open + 1, close);
            w.pop_back();
        }
        if (close < open) {
            w.push_back(')');
            gen(open, close + 1);
            w.pop_back();
        }
    };
    gen(0, 0);
    return out;
}

Composition k_of_tree(const PlaneBinaryTree& t) {
    Composition k(t.size(), 0);
    for (unsigned i = 1; i <= t.size(); ++i) {
        if (t.left(i) != 0) continue;
        unsigned r = 1;
        for (unsigned j = i; t.parent(j) != 0 && t.left(t.parent(j)) == j; j = t.parent(j)) ++r;
        k[i - 1] = r;
    }
    return k;
}

PlaneBinaryTree tree_of_k(std::span<const unsigned> k) {
    if (!in_K(k)) throw DomainError("tree_of_k: composition is not in K_n");
    TreeBuilder b;
    const int root = b.add(-1, true);
    int cur = root;
    for (unsigned s = 1; s < k[0]; ++s) cur = b.add(cur, true);
    for (std::size_t i = 1; i < k.size(); ++i) {
        if (k[i] > 0) {
            if (b.right[cur] >= 0) throw DomainError("tree_of_k: walk revisits a right child");
            cur = b.add(cur, false);
            for (unsigned s = 1; s < k[i]; ++s) cur = b.add(cur, true);
        } else {
            // Go toward the root until one edge has been taken down from a left child.
            while (true) {
                const int p = b.parent[cur];
                if (p < 0) throw DomainError("tree_of_k: walk falls off the root");
                const bool from_left = b.left[p] == cur;
                cur = p;
                if (from_left) break;
            }
        }
    }
    auto t = b.finish(root);
    const auto back = k_of_tree(t);
    if (!std::equal(back.begin(), back.end(), k.begin(), k.end()))
        throw DomainError("tree_of_k: construction does not invert k_of_tree");
    return t;
}

std::string SignedInterval::to_string(const char* var) const {
    std::string s;
    for (unsigned h = lo; h <= hi; ++h) s += (h > lo ? " + " : "") + std::string(var) + std::to_string(h);
    return s + (upper ? " <= 0" : " >= 0");
}

std::vector<SignedInterval> fan_inequalities(const PlaneBinaryTree& t) {
    std::vector<SignedInterval> out;
    for (unsigned c = 1; c <= t.size(); ++c) {
        const unsigned p = t.parent(c);
        if (p == 0) continue;
        if (p < c)
            out.push_back({p + 1, c, true});
        else
            out.push_back({c + 1, p, false});
    }
    return out;
}

namespace {

// point holds y_2..y_n.
Rational interval_sum(const SignedInterval& q, std::span<const Rational> point) {
    Rational s = 0;
    for (unsigned h = q.lo; h <= q.hi; ++h) s += point[h - 2];
    return s;
}

bool strictly_inside(const PlaneBinaryTree& t, std::span<const Rational> point) {
    for (const auto& q : fan_inequalities(t)) {
        const auto s = interval_sum(q, point);
        if (q.upper ? s >= 0 : s <= 0) return false;
    }
    return true;
}

}  // namespace

FanLocation locate_in_fan(std::span<const Rational> point) {
    const auto n = static_cast<unsigned>(point.size() + 1);
    // H_1 = 0, H_i = -(y_2 + ... + y_i); the chamber is the min-rooted
    // Cartesian tree of H, leftmost minimum first.
    std::vector<Rational> h(n + 1, 0);
    for (unsigned i = 2; i <= n; ++i) h[i] = h[i - 1] - point[i - 2];
    std::vector<unsigned> l(n + 1, 0), r(n + 1, 0);
    std::function<unsigned(unsigned, unsigned)> build = [&](unsigned lo, unsigned hi) -> unsigned {
        if (lo > hi) return 0;
        unsigned m = lo;
        for (unsigned i = lo + 1; i <= hi; ++i)
            if (h[i] < h[m]) m = i;
        l[m] = build(lo, m - 1);
        r[m] = build(m + 1, hi);
        return m;
    };
    build(1, n);
    FanLocation loc{PlaneBinaryTree::from_children(l, r), false};
    for (const auto& q : fan_inequalities(loc.tree))
        if (interval_sum(q, point) == 0) loc.boundary = true;
    return loc;
}

std::vector<PlaneBinaryTree> open_chambers_containing(std::span<const Rational> point) {
    std::vector<PlaneBinaryTree> out;
    for (auto& t : enumerate_trees(static_cast<unsigned>(point.size() + 1)))
        if (strictly_inside(t, point)) out.push_back(std::move(t));
    return out;
}

std::vector<Diagonal> tree_triangulation(const PlaneBinaryTree& t) {
    std::vector<Diagonal> out;
    for (unsigned v = 1; v <= t.size(); ++v) {
        if (v == t.root()) continue;
        auto [lo, hi] = t.span_of(v);
        out.emplace_back(lo - 1, hi + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool crossing(const Diagonal& a, const Diagonal& b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}

PlaneBinaryTree tree_from_triangulation(unsigned n, std::span<const Diagonal> diagonals) {
    if (diagonals.size() + 1 != n && !(n == 0 && diagonals.empty()))
        throw DomainError("triangulation: an (n+2)-gon triangulation has n-1 diagonals");
    std::set<Diagonal> edges;
    for (auto d : diagonals) {
        if (d.first > d.second) std::swap(d.first, d.second);
        if (d.second > n + 1 || d.second - d.first < 2 || (d.first == 0 && d.second == n + 1))
            throw DomainError("triangulation: (" + std::to_string(d.first) + "," + std::to_string(d.second) +
                              ") is not a diagonal");
        if (!edges.insert(d).second) throw DomainError("triangulation: repeated diagonal");
    }
    for (auto a = edges.begin(); a != edges.end(); ++a)
        for (auto b = std::next(a); b != edges.end(); ++b)
            if (crossing(*a, *b)) throw DomainError("triangulation: diagonals cross");
    for (unsigned i = 0; i <= n; ++i) edges.emplace(i, i + 1);
    edges.emplace(0, n + 1);
    std::vector<unsigned> l(n + 1, 0), r(n + 1, 0);
    std::function<unsigned(unsigned, unsigned)> build = [&](unsigned a, unsigned b) -> unsigned {
        if (b - a < 2) return 0;
        unsigned apex = 0;
        for (unsigned k = a + 1; k < b; ++k)
            if (edges.count({a, k}) && edges.count({k, b})) {
                if (apex) throw DomainError("triangulation: region is not a triangle");
                apex = k;
            }
        if (!apex) throw DomainError("triangulation: region is not triangulated");
        l[apex] = build(a, apex);
        r[apex] = build(apex, b);
        return apex;
    };
    if (n == 0) return PlaneBinaryTree();
    build(0, n + 1);
    return PlaneBinaryTree::from_children(l, r);
}

namespace {

// Solves M z = rhs exactly; returns nullopt when M is singular.
std::optional<std::vector<Rational>> solve(RationalMatrix m, std::vector<Rational> rhs) {
    const std::size_t d = m.rows();
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && m(piv, col) == 0) ++piv;
        if (piv == d) return std::nullopt;
        if (piv != col) {
            for (std::size_t j = 0; j < d; ++j) std::swap(m(piv, j), m(col, j));
            std::swap(rhs[piv], rhs[col]);
        }
        const Rational inv = 1 / m(col, col);
        for (std::size_t j = col; j < d; ++j) m(col, j) *= inv;
        rhs[col] *= inv;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == col || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < d; ++j) m(i, j) -= f * m(col, j);
            rhs[i] -= f * rhs[col];
        }
    }
    return rhs;
}

IntRay primitive(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z;
    Integer g = 0;
    for (const auto& c : v) {
        z.push_back(c.get_num() * (l / c.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    IntRay out;
    for (auto& c : z) out.push_back((g == 0 ? c : Integer(c / g)).get_si());
    return out;
}

}  // namespace

std::vector<IntRay> chamber_rays(const PlaneBinaryTree& t) {
    const unsigned n = t.size();
    if (n < 2) return {};
    const auto ineq = fan_inequalities(t);
    const std::size_t d = n - 1;
    RationalMatrix g(d, d, Rational(0));
    for (std::size_t e = 0; e < d; ++e)
        for (unsigned h = ineq[e].lo; h <= ineq[e].hi; ++h) g(e, h - 2) = ineq[e].upper ? -1 : 1;
    std::vector<IntRay> rays;
    for (std::size_t e = 0; e < d; ++e) {
        std::vector<Rational> rhs(d, Rational(0));
        rhs[e] = 1;
        auto sol = solve(g, rhs);
        if (!sol) throw DomainError("chamber_rays: chamber is not simplicial");
        rays.push_back(primitive(*sol));
    }
    std::sort(rays.begin(), rays.end());
    return rays;
}

IntRay p_of_diagonal(const Diagonal& d, unsigned n) {
    auto [i, j] = d;
    if (i > j) std::swap(i, j);
    if (j > n + 1 || j - i < 2 || (i == 0 && j == n + 1)) throw DomainError("p_of_diagonal: not a diagonal");
    IntRay p(n - 1, 0);
    if (i == 0) {
        p[j - 2] = 1;
    } else if (j == n + 1) {
        p[i + 1 - 2] = -1;
    } else {
        p[j - 2] += 1;
        p[i + 1 - 2] -= 1;
    }
    return p;
}

AssocCheck assoc_face_poset_check(unsigned n) {
    if (n < 2 || n > 5) throw ResourceError("assoc_face_poset_check: 2 <= n <= 5");
    AssocCheck res;
    // Fan side: atoms are rays, facets are the ray sets of chambers.
    std::map<IntRay, unsigned> ray_id;
    std::vector<std::uint32_t> chamber_masks;
    for (const auto& t : enumerate_trees(n)) {
        std::uint32_t mask = 0;
        for (const auto& r : chamber_rays(t)) {
            auto [it, fresh] = ray_id.try_emplace(r, static_cast<unsigned>(ray_id.size()));
            mask |= 1u << it->second;
        }
        chamber_masks.push_back(mask);
    }
    std::set<std::uint32_t> fan_faces;
    for (auto m : chamber_masks)
        for (std::uint32_t s = m;; s = (s - 1) & m) {
            fan_faces.insert(s);
            if (s == 0) break;
        }
    // Polygon side: atoms are diagonals, faces are noncrossing sets.
    std::vector<Diagonal> diags;
    for (unsigned i = 0; i <= n + 1; ++i)
        for (unsigned j = i + 2; j <= n + 1; ++j)
            if (!(i == 0 && j == n + 1)) diags.emplace_back(i, j);
    const std::size_t nd = diags.size();
    std::vector<std::uint32_t> conflicts(nd, 0);
    for (std::size_t a = 0; a < nd; ++a)
        for (std::size_t b = 0; b < nd; ++b)
            if (crossing(diags[a], diags[b])) conflicts[a] |= 1u << b;
    std::set<std::uint32_t> decs;
    for (std::uint32_t s = 0; s < (1u << nd); ++s) {
        bool ok = true;
        for (std::size_t a = 0; a < nd && ok; ++a)
            if ((s >> a & 1u) && (conflicts[a] & s)) ok = false;
        if (ok) decs.insert(s);
    }
    res.chambers = chamber_masks.size();
    res.rays = ray_id.size();
    res.faces = fan_faces.size() + 1;  // with the top adjoined
    res.decompositions = decs.size() + 1;
    if (res.rays != nd || fan_faces.size() != decs.size()) return res;

    // Search for an atom bijection carrying faces onto noncrossing sets.
    const std::size_t na = res.rays;
    std::vector<int> image(na, -1);
    std::vector<bool> used(nd, false);
    auto map_mask = [&](std::uint32_t m) {
        std::uint32_t out = 0;
        for (std::size_t a = 0; a < na; ++a)
            if (m >> a & 1u) out |= 1u << image[a];
        return out;
    };
    std::function<bool(std::size_t)> assign = [&](std::size_t a) -> bool {
        if (a == na) {
            for (auto f : fan_faces)
                if (!decs.count(map_mask(f))) return false;
            return true;
        }
        for (std::size_t d = 0; d < nd; ++d) {
            if (used[d]) continue;
            bool ok = true;
            for (std::size_t b = 0; b < a && ok; ++b) {
                const bool fan_edge = fan_faces.count((1u << a) | (1u << b)) > 0;
                const bool dec_edge = !(conflicts[d] >> image[b] & 1u);
                ok = fan_edge == dec_edge;
            }
            if (!ok) continue;
            image[a] = static_cast<int>(d);
            used[d] = true;
            if (assign(a + 1)) return true;
            used[d] = false;
        }
        image[a] = -1;
        return false;
    };
    res.isomorphic = assign(0);
    return res;
}

bool in_polytope(std::span<const Rational> x, std::span<const Rational> y) {
    if (x.size() != y.size()) throw DimensionError("polytope membership: x and y lengths differ");
    Rational sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (y[i] < 0) return false;
        sx += x[i];
        sy += y[i];
        if (sy > sx) return false;
    }
    return true;
}

nlohmann::json PlantedTree::to_json() const {
    nlohmann::json verts = nlohmann::json::array();
    for (std::size_t v = 0; v < parent.size(); ++v)
        verts.push_back({{"id", v},
                         {"parent", parent[v]},
                         {"height", prefixpoly::to_string(height[v])},
                         {"length", prefixpoly::to_string(length[v])},
                         {"children", children[v]}});
    nlohmann::json j{{"vertices", verts},
                     {"valleys", std::vector<unsigned>(valley.begin() + 1, valley.end())},
                     {"degenerate", degenerate}};
    if (binary) j["tree"] = binary->to_json();
    return j;
}

PlantedTree build_tree_phi(std::span<const Rational> x, std::span<const Rational> y, const Rational& s) {
    if (x.size() != y.size() || x.empty()) throw DimensionError("build_tree_phi: x and y must have equal positive length");
    require_nonnegative(x, "build_tree_phi x");
    if (!in_polytope(x, y)) throw DomainError("build_tree_phi: y is not in Pi_n(x)");
    const std::size_t n = x.size();
    Rational sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    if (!(sx < s) || !(sy < s)) throw DomainError("build_tree_phi: s must exceed the sums of x and y");

    PlantedTree t;
    t.parent.push_back(-1);
    t.children.emplace_back();
    t.height.emplace_back(0);
    t.length.emplace_back(0);
    t.valley.push_back(0);
    unsigned cur = 0;
    for (std::size_t step = 0; step <= n; ++step) {
        const Rational up = step < n ? x[step] : s - sx;
        const Rational down = step < n ? y[step] : s - sy;
        if (up == 0) t.degenerate = true;
        const auto peak = static_cast<unsigned>(t.parent.size());
        t.parent.push_back(static_cast<int>(cur));
        t.children.emplace_back();
        t.children[cur].push_back(peak);
        t.height.push_back(t.height[cur] + up);
        t.length.push_back(up);
        cur = peak;
        if (down == 0) {
            t.degenerate = true;
        } else {
            const Rational target = t.height[cur] - down;
            while (t.height[t.parent[cur]] > target) cur = static_cast<unsigned>(t.parent[cur]);
            const auto below = static_cast<unsigned>(t.parent[cur]);
            if (t.height[below] == target) {
                if (step < n) t.degenerate = true;  // landing on an existing vertex
                cur = below;
            } else {
                // Split the edge below cur at the target height.
                const auto w = static_cast<unsigned>(t.parent.size());
                t.parent.push_back(static_cast<int>(below));
                t.children.push_back({cur});
                t.height.push_back(target);
                t.length.push_back(target - t.height[below]);
                std::replace(t.children[below].begin(), t.children[below].end(), cur, w);
                t.parent[cur] = static_cast<int>(w);
                t.length[cur] = t.height[cur] - target;
                cur = w;
            }
        }
        if (step < n) t.valley.push_back(cur);
    }
    if (cur != 0) t.degenerate = true;
    if (t.children[0].size() != 1) t.degenerate = true;
    for (std::size_t i = 1; i <= n && !t.degenerate; ++i)
        if (t.children[t.valley[i]].size() != 2) t.degenerate = true;

    if (!t.degenerate) {
        std::map<unsigned, unsigned> label;
        for (unsigned i = 1; i <= n; ++i) label[t.valley[i]] = i;
        std::vector<unsigned> l(n + 1, 0), r(n + 1, 0);
        for (unsigned i = 1; i <= n; ++i) {
            const auto& ch = t.children[t.valley[i]];
            if (auto it = label.find(ch[0]); it != label.end()) l[i] = it->second;
            if (auto it = label.find(ch[1]); it != label.end()) r[i] = it->second;
        }
        t.binary = PlaneBinaryTree::from_children(l, r);
    }
    return t;
}

namespace {

Rational shifted_sum(const SignedInterval& q, std::span<const Rational> x, std::span<const Rational> y) {
    Rational s = 0;
    for (unsigned h = q.lo; h <= q.hi; ++h) s += y[h - 1] - x[h - 1];
    return s;
}

void require_tree_point(const PlaneBinaryTree& t, std::span<const Rational> x, std::span<const Rational> y) {
    if (x.size() != t.size() || y.size() != t.size()) throw DimensionError("delta_membership: sizes differ");
    if (!in_polytope(x, y)) throw DomainError("delta_membership: y is not in Pi_n(x)");
}

}  // namespace

bool delta_membership(const PlaneBinaryTree& t, std::span<const Rational> x, std::span<const Rational> y) {
    require_tree_point(t, x, y);
    for (const auto& q : fan_inequalities(t)) {
        const auto s = shifted_sum(q, x, y);
        if (q.upper ? s > 0 : s < 0) return false;
    }
    return true;
}

bool delta_membership_strict(const PlaneBinaryTree& t, std::span<const Rational> x, std::span<const Rational> y) {
    require_tree_point(t, x, y);
    for (const auto& q : fan_inequalities(t)) {
        const auto s = shifted_sum(q, x, y);
        if (q.upper ? s >= 0 : s <= 0) return false;
    }
    return true;
}

Rational delta_volume(const PlaneBinaryTree& t, std::span<const Rational> x) {
    if (x.size() != t.size()) throw DimensionError("delta_volume: sizes differ");
    const auto k = k_of_tree(t);
    Rational v = 1;
    for (std::size_t i = 0; i < k.size(); ++i) v *= pow(x[i], k[i]) / Rational(factorial(k[i]));
    return v;
}

FaceStructure face_structure(std::span<const Rational> x) {
    require_nonnegative(x, "face_structure");
    if (x[0] == 0) throw DomainError("face_structure: x_1 must be positive");
    FaceStructure fs;
    fs.blocks.push_back(1);
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i] == 0)
            ++fs.blocks.back();
        else
            fs.blocks.push_back(1);
    }
    fs.vertex_count = 1;
    for (auto b : fs.blocks) fs.vertex_count *= b + 1;
    return fs;
}

std::vector<std::vector<Rational>> vertices_of(std::span<const HalfSpace> constraints, std::size_t dim) {
    const std::size_t m = constraints.size();
    if (dim == 0 || m < dim) return {};
    {
        // Guard the number of d-subsets.
        Integer subsets = binomial(Integer(static_cast<unsigned long>(m)), static_cast<unsigned>(dim));
        if (subsets > 5'000'000) throw ResourceError("vertices_of: too many constraint subsets");
    }
    std::set<std::vector<Rational>> found;
    std::vector<std::size_t> pick(dim);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        RationalMatrix a(dim, dim);
        std::vector<Rational> rhs(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) a(r, c) = constraints[pick[r]].a[c];
            rhs[r] = constraints[pick[r]].b;
        }
        if (auto sol = solve(a, rhs)) {
            bool feasible = true;
            for (const auto& h : constraints) {
                Rational dot = 0;
                for (std::size_t c = 0; c < dim; ++c) dot += h.a[c] * (*sol)[c];
                if (dot > h.b) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) found.insert(*sol);
        }
        std::size_t i = dim;
        while (i > 0 && pick[i - 1] == m - dim + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < dim; ++j) pick[j] = pick[j - 1] + 1;
    }
    return {found.begin(), found.end()};
}

std::vector<HalfSpace> polytope_halfspaces(std::span<const Rational> x) {
    const std::size_t n = x.size();
    const auto u = prefix_sums(x);
    std::vector<HalfSpace> hs;
    for (std::size_t i = 0; i < n; ++i) {
        HalfSpace nonneg{std::vector<Rational>(n, 0), 0};
        nonneg.a[i] = -1;
        hs.push_back(std::move(nonneg));
    }
    for (std::size_t i = 0; i < n; ++i) {
        HalfSpace prefix{std::vector<Rational>(n, 0), u[i]};
        for (std::size_t h = 0; h <= i; ++h) prefix.a[h] = 1;
        hs.push_back(std::move(prefix));
    }
    return hs;
}

std::vector<HalfSpace> delta_halfspaces(const PlaneBinaryTree& t, std::span<const Rational> x) {
    if (x.size() != t.size()) throw DimensionError("delta_halfspaces: sizes differ");
    auto hs = polytope_halfspaces(x);
    for (const auto& q : fan_inequalities(t)) {
        HalfSpace h{std::vector<Rational>(x.size(), 0), 0};
        const Rational sign = q.upper ? 1 : -1;
        for (unsigned i = q.lo; i <= q.hi; ++i) {
            h.a[i - 1] = sign;
            h.b += sign * x[i - 1];
        }
        hs.push_back(std::move(h));
    }
    return hs;
}

std::vector<std::vector<Rational>> polytope_vertices(std::span<const Rational> x) {
    require_nonnegative(x, "polytope_vertices");
    const auto hs = polytope_halfspaces(x);
    return vertices_of(hs, x.size());
}

nlohmann::json subdivision_json(std::span<const Rational> x) {
    require_nonnegative(x, "subdivide");
    const auto n = static_cast<unsigned>(x.size());
    nlohmann::json xs = nlohmann::json::array();
    for (const auto& v : x) xs.push_back(to_string(v));
    nlohmann::json chambers = nlohmann::json::array();
    for (const auto& t : enumerate_trees(n)) {
        nlohmann::json ineqs = nlohmann::json::array();
        for (const auto& q : fan_inequalities(t)) {
            Rational rhs = 0;
            std::string lhs;
            for (unsigned h = q.lo; h <= q.hi; ++h) {
                lhs += (h > q.lo ? " + y" : "y") + std::to_string(h);
                rhs += x[h - 1];
            }
            ineqs.push_back(lhs + (q.upper ? " <= " : " >= ") + to_string(rhs));
        }
        nlohmann::json verts = nlohmann::json::array();
        for (const auto& v : vertices_of(delta_halfspaces(t, x), n)) {
            nlohmann::json p = nlohmann::json::array();
            for (const auto& c : v) p.push_back(to_string(c));
            verts.push_back(p);
        }
        chambers.push_back({{"tree", t.to_json()},
                            {"k", k_of_tree(t)},
                            {"inequalities", ineqs},
                            {"vertices", verts},
                            {"volume", to_string(delta_volume(t, x))}});
    }
    return {{"x", xs}, {"volume", to_string(volume_at(x))}, {"chambers", chambers}};
}

namespace {

// Orders coplanar points around their centroid inside the plane with normal `normal`.
std::vector<std::size_t> cyclic_order(const std::vector<std::vector<double>>& pts, const std::vector<double>& normal) {
    const std::size_t d = normal.size();
    std::vector<double> c(d, 0.0);
    for (const auto& p : pts)
        for (std::size_t i = 0; i < d; ++i) c[i] += p[i] / static_cast<double>(pts.size());
    std::vector<double> e1(d, 0.0), e2(d, 0.0);
    if (d == 2) {
        e1 = {1.0, 0.0};
        e2 = {0.0, 1.0};
    } else {
        // Any vector not parallel to the normal, orthogonalized; e2 = normal x e1.
        std::vector<double> seed{1.0, 0.0, 0.0};
        if (std::fabs(normal[0]) > std::fabs(normal[1]) && std::fabs(normal[0]) > std::fabs(normal[2])) seed = {0.0, 1.0, 0.0};
        const double nn = normal[0] * normal[0] + normal[1] * normal[1] + normal[2] * normal[2];
        const double proj = (seed[0] * normal[0] + seed[1] * normal[1] + seed[2] * normal[2]) / nn;
        for (int i = 0; i < 3; ++i) e1[i] = seed[i] - proj * normal[i];
        e2 = {normal[1] * e1[2] - normal[2] * e1[1], normal[2] * e1[0] - normal[0] * e1[2],
              normal[0] * e1[1] - normal[1] * e1[0]};
    }
    std::vector<std::pair<double, std::size_t>> ang;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        double a = 0, b = 0;
        for (std::size_t i = 0; i < d; ++i) {
            a += (pts[k][i] - c[i]) * e1[i];
            b += (pts[k][i] - c[i]) * e2[i];
        }
        ang.emplace_back(std::atan2(b, a), k);
    }
    std::sort(ang.begin(), ang.end());
    std::vector<std::size_t> order;
    for (auto& [a, k] : ang) order.push_back(k);
    return order;
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
    std::vector<double> out;
    for (const auto& c : v) out.push_back(c.get_d());
    return out;
}

}  // namespace

std::string subdivision_svg(std::span<const Rational> x) {
    if (x.size() != 2) throw DimensionError("subdivision_svg: only n = 2");
    require_nonnegative(x, "subdivide");
    const double extent = std::max(1e-9, Rational(x[0] + x[1]).get_d());
    const double size = 400.0, pad = 20.0, scale = (size - 2 * pad) / extent;
    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
    const char* fills[] = {"#9ecae1", "#fdae6b"};
    int idx = 0;
    for (const auto& t : enumerate_trees(2)) {
        const auto verts = vertices_of(delta_halfspaces(t, x), 2);
        std::vector<std::vector<double>> pts;
        for (const auto& v : verts) pts.push_back(to_doubles(v));
        out << "  <polygon fill=\"" << fills[idx++ % 2] << "\" stroke=\"black\" points=\"";
        if (pts.size() >= 3) {
            for (auto k : cyclic_order(pts, {0.0, 0.0})) {
                out << pad + pts[k][0] * scale << "," << size - pad - pts[k][1] * scale << " ";
            }
        }
        out << "\"><title>" << t.to_string() << "</title></polygon>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string subdivision_obj(std::span<const Rational> x) {
    if (x.size() != 3) throw DimensionError("subdivision_obj: only n = 3");
    require_nonnegative(x, "subdivide");
    std::ostringstream out;
    out << std::setprecision(10);
    std::size_t base = 1;
    for (const auto& t : enumerate_trees(3)) {
        const auto hs = delta_halfspaces(t, x);
        const auto verts = vertices_of(hs, 3);
        out << "o chamber_" << t.dyck() << "\n";
        for (const auto& v : verts) out << "v " << v[0].get_d() << " " << v[1].get_d() << " " << v[2].get_d() << "\n";
        std::set<std::vector<std::size_t>> faces;
        for (const auto& h : hs) {
            std::vector<std::size_t> on;
            for (std::size_t k = 0; k < verts.size(); ++k) {
                Rational dot = 0;
                for (std::size_t i = 0; i < 3; ++i) dot += h.a[i] * verts[k][i];
                if (dot == h.b) on.push_back(k);
            }
            if (on.size() < 3) continue;
            std::vector<std::vector<double>> pts;
            for (auto k : on) pts.push_back(to_doubles(verts[k]));
            std::vector<std::size_t> face;
            for (auto k : cyclic_order(pts, to_doubles(h.a))) face.push_back(on[k]);
            auto key = face;
            std::sort(key.begin(), key.end());
            if (!faces.insert(key).second) continue;
            out << "f";
            for (auto k : face) out << " " << base + k;
            out << "\n";
        }
        base += verts.size();
    }
    return out.str();
}

}  // namespace prefixpoly
