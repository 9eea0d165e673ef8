#include "prefixpoly/lattice.hpp"

#include <algorithm>
#include <functional>

#include "prefixpoly/ballot.hpp"
#include "prefixpoly/posets.hpp"

namespace prefixpoly {

IntVector to_natural_vector(std::span<const Rational> x, const char* what) {
    IntVector out;
    for (const auto& v : x) {
        if (!is_integer(v) || v < 0)
            throw DomainError(std::string(what) + ": entries must be nonnegative integers, got " + to_string(v));
        if (!v.get_num().fits_slong_p()) throw ResourceError(std::string(what) + ": entry too large");
        out.push_back(v.get_num().get_si());
    }
    return out;
}

IntVector integer_prefix_sums(std::span<const std::int64_t> x) {
    IntVector u(x.size());
    std::int64_t run = 0;
    for (std::size_t i = 0; i < x.size(); ++i) u[i] = run += x[i];
    return u;
}

namespace {

void require_naturals(std::span<const std::int64_t> x, const char* what) {
    if (x.empty()) throw EmptyInputError(std::string(what) + ": empty vector");
    for (auto v : x)
        if (v < 0) throw DomainError(std::string(what) + ": negative entry");
}

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

}  // namespace

Integer count_points(std::span<const std::int64_t> x) {
    require_naturals(x, "count_points");
    const auto n = static_cast<unsigned>(x.size());
    Integer total = 0;
    for (const auto& k : enumerate_K(n)) {
        Integer term = multichoose(big(x[0]) + 1, k[0]);
        for (unsigned i = 1; i < n && term != 0; ++i) term *= multichoose(big(x[i]), k[i]);
        total += term;
    }
    return total;
}

Polynomial lattice_poly(unsigned n) {
    Polynomial total(n);
    for (const auto& k : enumerate_K(n)) {
        Polynomial term = multichoose(Polynomial::variable(n, 0) + Polynomial::constant(n, 1), k[0]);
        for (unsigned i = 1; i < n; ++i) term *= multichoose(Polynomial::variable(n, i), k[i]);
        total += term;
    }
    return total;
}

Integer count_points_brute(std::span<const std::int64_t> x, Exec exec, std::uint64_t limit) {
    require_naturals(x, "count_points_brute");
    const auto u = integer_prefix_sums(x);
    auto pred = [&](const Point& y) {
        std::int64_t run = 0;
        for (std::size_t i = 0; i < y.size(); ++i)
            if ((run += y[i]) > u[i]) return false;
        return true;
    };
    return Integer(static_cast<unsigned long>(count_box(exec, u, pred, limit, "count_points_brute")));
}

Polynomial ehrhart_ab(unsigned n, const Integer& a, const Integer& b) {
    if (n == 0) throw EmptyInputError("ehrhart_ab: n must be at least 1");
    const auto r = Polynomial::variable(1, 0);
    Polynomial p = r * Rational(a) + Polynomial::constant(1, 1);
    const Rational slope(a + n * b);
    for (unsigned k = 2; k <= n; ++k) p *= r * slope + Polynomial::constant(1, Rational(k));
    return p * make_rational(1, factorial(n));
}

bool shifted_nonneg_check(unsigned n) {
    const auto shifted = lattice_poly(n).substitute(0, Polynomial::variable(n, 0) - Polynomial::constant(n, 1));
    return std::all_of(shifted.terms().begin(), shifted.terms().end(), [](const auto& t) { return t.second >= 0; });
}

Shape shape_of(std::span<const std::int64_t> x) {
    auto u = integer_prefix_sums(x);
    std::reverse(u.begin(), u.end());
    return u;
}

namespace {

Shape checked_shape(std::span<const std::int64_t> shape) {
    Shape s;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] < 0) throw DomainError("shape: negative part");
        if (i > 0 && shape[i] > shape[i - 1]) throw DomainError("shape: parts must be weakly decreasing");
        if (shape[i] > 0) s.push_back(shape[i]);
    }
    return s;
}

struct PlaneFiller {
    const Shape& shape;
    std::vector<std::vector<unsigned>> cells;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    Integer count = 0;

    void fill(std::size_t i, std::size_t j, unsigned maxpart) {
        if (++nodes > budget) throw ResourceError("plane_partitions: node budget exhausted");
        if (j == static_cast<std::size_t>(shape[i])) {
            ++i;
            j = 0;
        }
        const unsigned above = i > 0 ? cells[i - 1][j] : maxpart;
        const unsigned left = j > 0 ? cells[i][j - 1] : maxpart;
        const unsigned bound = std::min(above, left);
        const bool last = i + 1 == shape.size() && j + 1 == static_cast<std::size_t>(shape[i]);
        if (last) {
            count += bound;
            return;
        }
        for (unsigned v = 1; v <= bound; ++v) {
            cells[i][j] = v;
            fill(i, j + 1, maxpart);
        }
    }
};

}  // namespace

Integer plane_partitions(std::span<const std::int64_t> shape, unsigned maxpart, std::uint64_t node_budget) {
    const auto s = checked_shape(shape);
    if (s.empty()) return 1;
    if (maxpart == 0) return 0;
    PlaneFiller filler{s, {}, node_budget};
    for (auto len : s) filler.cells.emplace_back(static_cast<std::size_t>(len), 0u);
    filler.fill(0, 0, maxpart);
    return filler.count;
}

Integer plane_partitions_transfer(std::span<const std::int64_t> shape, unsigned maxpart) {
    const auto s = checked_shape(shape);
    if (s.empty()) return 1;
    if (maxpart == 0) return 0;
    if (maxpart == 1) return 1;
    // A row is encoded by A_t = #entries >= t for t = 2..maxpart, a weakly
    // decreasing tuple bounded by the row length.  Row i+1 fits under row i
    // exactly when its tuple is componentwise <= the tuple of row i.
    const unsigned dims = maxpart - 1;
    const auto side = static_cast<std::size_t>(s[0]) + 1;
    std::size_t total = 1;
    for (unsigned d = 0; d < dims; ++d) {
        if (total > 50'000'000 / side) throw ResourceError("plane_partitions_transfer: state space too large");
        total *= side;
    }
    std::vector<std::size_t> coord(dims);
    auto decode = [&](std::size_t idx) {
        for (unsigned d = 0; d < dims; ++d) {
            coord[d] = idx % side;
            idx /= side;
        }
    };
    auto valid = [&](std::size_t len) {
        if (coord[0] > len) return false;
        for (unsigned d = 1; d < dims; ++d)
            if (coord[d] > coord[d - 1]) return false;
        return true;
    };
    std::vector<Integer> f(total, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        decode(idx);
        if (valid(static_cast<std::size_t>(s[0]))) f[idx] = 1;
    }
    for (std::size_t row = 1; row < s.size(); ++row) {
        // Suffix sums along every axis give sum over A >= B of f(A).
        std::size_t stride = 1;
        for (unsigned d = 0; d < dims; ++d) {
            for (std::size_t idx = total; idx-- > 0;) {
                const auto c = (idx / stride) % side;
                if (c + 1 < side) f[idx] += f[idx + stride];
            }
            stride *= side;
        }
        for (std::size_t idx = 0; idx < total; ++idx) {
            decode(idx);
            if (!valid(static_cast<std::size_t>(s[row]))) f[idx] = 0;
        }
    }
    Integer sum = 0;
    for (const auto& v : f) sum += v;
    return sum;
}

Integer count_points_nm(std::span<const std::int64_t> x, unsigned m, Exec exec, std::uint64_t limit) {
    require_naturals(x, "count_points_nm");
    if (m == 0) throw DomainError("count_points_nm: m must be at least 1");
    const auto u = integer_prefix_sums(x);
    const std::size_t n = x.size();
    IntVector bounds;
    for (std::size_t i = 0; i < n; ++i) bounds.insert(bounds.end(), m, u[i]);
    auto pred = [&, n, m](const Point& y) {
        std::int64_t col[16] = {};
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t prev = 0;
            for (unsigned j = 0; j < m; ++j) {
                col[j] += y[i * m + j];
                if (col[j] < prev) return false;
                prev = col[j];
            }
            if (prev > u[i]) return false;
        }
        return true;
    };
    if (m > 16) throw ResourceError("count_points_nm: m > 16");
    return Integer(static_cast<unsigned long>(count_box(exec, bounds, pred, limit, "count_points_nm")));
}

Rational volume_nm_formula(unsigned n, unsigned m, const Integer&, const Integer&) {
    if (n == 0 || m == 0) throw DomainError("volume_nm_formula: n and m must be positive");
    Rational value(hook_count_rectangular(m, n));
    for (unsigned i = 1; i <= m; ++i) value *= Rational(factorial(i));
    for (unsigned t = 1; t <= m; ++t) {
        const long e = static_cast<long>(n) - static_cast<long>(m) + static_cast<long>(t) - 1;
        const Rational base(n + t);
        value *= e >= 0 ? pow(base, static_cast<unsigned>(e)) : 1 / pow(base, static_cast<unsigned>(-e));
    }
    return value / Rational(factorial(n * m));
}

Rational volume_nm_interpolated(unsigned n, unsigned m, const Integer& a, const Integer& b) {
    if (n == 0 || m == 0) throw DomainError("volume_nm_interpolated: n and m must be positive");
    if (a < 0 || b < 0) throw DomainError("volume_nm_interpolated: a, b must be nonnegative");
    IntVector x(n, b.get_si());
    x[0] = a.get_si();
    const auto base = shape_of(x);
    std::vector<Rational> values;
    for (unsigned r = 0; r <= n * m; ++r) {
        Shape scaled = base;
        for (auto& part : scaled) part *= r;
        values.emplace_back(plane_partitions_transfer(scaled, m + 1));
    }
    const auto p = interpolate_at_naturals(values);
    return p.coefficient({n * m});
}

Integer steck_count(std::span<const std::int64_t> b, std::span<const std::int64_t> c) {
    if (b.size() != c.size()) throw DimensionError("steck_count: b and c lengths differ");
    const std::size_t n = b.size();
    if (n == 0) return 1;
    RationalMatrix mat(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j + 1 < i) continue;
            const std::int64_t gap = c[i] - b[j];
            if (gap <= 1) continue;
            const auto k = static_cast<unsigned>(j + 1 - i);
            const std::int64_t top = gap + static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i) - 1;
            mat(i, j) = top < static_cast<std::int64_t>(k) ? Integer(0) : binomial(big(top), k);
        }
    return determinant(mat).get_num();
}

Integer steck_count_brute(std::span<const std::int64_t> b, std::span<const std::int64_t> c) {
    if (b.size() != c.size()) throw DimensionError("steck_count: b and c lengths differ");
    const std::size_t n = b.size();
    if (n == 0) return 1;
    const std::int64_t lo = *std::min_element(b.begin(), b.end()) + 1;
    const std::int64_t hi = *std::max_element(c.begin(), c.end()) - 1;
    if (hi < lo) return 0;
    if (hi - lo > 10'000'000) throw ResourceError("steck_count_brute: value range too large");
    const auto width = static_cast<std::size_t>(hi - lo + 1);
    // ways[v]: sequences so far ending exactly at value lo + v.
    std::vector<Integer> ways(width, 0);
    for (std::size_t v = 0; v < width; ++v) {
        const auto val = lo + static_cast<std::int64_t>(v);
        if (b[0] < val && val < c[0]) ways[v] = 1;
    }
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<Integer> next(width, 0);
        Integer below = 0;
        for (std::size_t v = 0; v < width; ++v) {
            const auto val = lo + static_cast<std::int64_t>(v);
            if (b[i] < val && val < c[i]) next[v] = below;
            below += ways[v];
        }
        ways = std::move(next);
    }
    Integer total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

namespace {

void require_two_sided(std::span<const std::int64_t> z, std::span<const std::int64_t> x) {
    if (z.size() != x.size()) throw DimensionError("two-sided: z and x lengths differ");
    require_naturals(z, "two-sided z");
    require_naturals(x, "two-sided x");
    const auto v = integer_prefix_sums(z);
    const auto u = integer_prefix_sums(x);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > u[i]) throw DomainError("two-sided: prefix sums of z must not exceed those of x");
}

}  // namespace

Integer two_sided_count(std::span<const std::int64_t> z, std::span<const std::int64_t> x, Exec exec,
                        std::uint64_t limit) {
    require_two_sided(z, x);
    const auto v = integer_prefix_sums(z);
    const auto u = integer_prefix_sums(x);
    auto pred = [&](const Point& y) {
        std::int64_t run = 0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            run += y[i];
            if (run < v[i] || run > u[i]) return false;
        }
        return true;
    };
    return Integer(static_cast<unsigned long>(count_box(exec, u, pred, limit, "two_sided_count")));
}

Integer two_sided_closed_form(std::span<const std::int64_t> z, std::span<const std::int64_t> x) {
    require_two_sided(z, x);
    if (x.size() != 2) throw DimensionError("two_sided_closed_form: only n = 2");
    const Integer x1 = big(x[0]), x2 = big(x[1]), z1 = big(z[0]), z2 = big(z[1]);
    if (x1 >= z1 + z2) {
        const Integer g = x1 - z1 - z2 + 1;
        return multichoose(g, 2) + multichoose(g, 1) * multichoose(x2, 1) +
               multichoose(z2, 1) * multichoose(g, 1) + multichoose(z2, 1) * multichoose(x2, 1);
    }
    return multichoose(x1 - z1 + 1, 1) * multichoose(x1 + x2 - z1 - z2 + 1, 1);
}

namespace {

std::string cell_token(unsigned label, unsigned n) {
    if (label <= n) return "v" + std::to_string(label);
    if (label <= 2 * n) {
        std::string s;
        for (unsigned i = 1; i <= label - n; ++i) s += (i > 1 ? "+y" : "y") + std::to_string(i);
        return s;
    }
    return "u" + std::to_string(label - 2 * n);
}

}  // namespace

std::vector<TwoSidedCell> two_sided_cells(unsigned n) {
    if (n == 0) throw EmptyInputError("two_sided_cells: n must be at least 1");
    if (n > 4) throw ResourceError("two_sided_cells: n > 4");
    std::vector<TwoSidedCell> cells;
    for (auto& w : linear_extensions(grid_poset(3, n))) {
        std::string text = "0 <= " + cell_token(w[0], n);
        for (std::size_t j = 1; j < w.size(); ++j)
            text += (w[j - 1] > w[j] ? " < " : " <= ") + cell_token(w[j], n);
        cells.push_back({std::move(w), std::move(text)});
    }
    return cells;
}

Integer two_sided_cell_count(const TwoSidedCell& cell, std::span<const std::int64_t> z,
                             std::span<const std::int64_t> x) {
    require_two_sided(z, x);
    const auto n = static_cast<unsigned>(x.size());
    if (cell.word.size() != 3 * n) throw DimensionError("two_sided_cell_count: cell and data sizes differ");
    const auto v = integer_prefix_sums(z);
    const auto u = integer_prefix_sums(x);
    auto constant = [&](unsigned label) { return label <= n ? v[label - 1] : u[label - 2 * n - 1]; };
    // Walk the chain; variables between two constants L and U with s strict
    // signs among the m + 1 relations contribute mc(U - L - s + 1, m).
    Integer count = 1;
    std::int64_t low = 0;
    unsigned vars = 0, strict = 0;
    unsigned prev = 0;
    for (unsigned label : cell.word) {
        if (prev > label) ++strict;
        prev = label;
        if (label > n && label <= 2 * n) {
            ++vars;
            continue;
        }
        const std::int64_t high = constant(label);
        const std::int64_t room = high - low - static_cast<std::int64_t>(strict);
        if (room < 0) return 0;
        count *= multichoose(big(room) + 1, vars);
        low = high;
        vars = strict = 0;
    }
    return count;
}

Integer two_sided_cell_sum(std::span<const std::int64_t> z, std::span<const std::int64_t> x) {
    Integer total = 0;
    for (const auto& cell : two_sided_cells(static_cast<unsigned>(x.size()))) total += two_sided_cell_count(cell, z, x);
    return total;
}

}  // namespace prefixpoly
