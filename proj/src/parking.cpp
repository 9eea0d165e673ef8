#include "prefixpoly/parking.hpp"

#include <algorithm>
#include <functional>

#include "prefixpoly/lattice.hpp"

namespace prefixpoly {

bool is_x_parking(std::span<const std::int64_t> a, std::span<const std::int64_t> x) {
    if (a.size() != x.size()) throw DimensionError("is_x_parking: a and x lengths differ");
    std::vector<std::int64_t> b(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::int64_t u = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        u += x[i];
        if (b[i] < 1 || b[i] > u) return false;
    }
    return true;
}

Integer count_x_parking(std::span<const std::int64_t> x, Exec exec, std::uint64_t limit) {
    if (x.empty()) throw EmptyInputError("count_x_parking: empty x");
    const auto u = integer_prefix_sums(x);
    if (std::any_of(x.begin(), x.end(), [](auto v) { return v < 0; }))
        throw DomainError("count_x_parking: x must be nonnegative");
    if (u.back() == 0) return 0;
    // Scan coordinates are a_i - 1 in [0, u_n - 1].
    const std::vector<std::int64_t> bounds(x.size(), u.back() - 1);
    auto pred = [&](const Point& p) {
        Point b(p);
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] + 1 > u[i]) return false;
        return true;
    };
    return Integer(static_cast<unsigned long>(count_box(exec, bounds, pred, limit, "count_x_parking")));
}

std::vector<ParkingSequence> enumerate_parking(unsigned n) {
    if (n == 0) throw EmptyInputError("enumerate_parking: n = 0");
    if (n > 7) throw ResourceError("enumerate_parking: n > 7");
    std::vector<ParkingSequence> out;
    ParkingSequence a(n);
    std::vector<unsigned> hist(n + 2, 0);
    // a is parking iff #{i : a_i <= j} >= j for all j; prune on the values still available.
    std::function<void(unsigned)> rec = [&](unsigned pos) {
        if (pos == n) {
            unsigned cum = 0;
            for (unsigned j = 1; j <= n; ++j) {
                cum += hist[j];
                if (cum < j) return;
            }
            out.push_back(a);
            return;
        }
        for (unsigned v = 1; v <= n; ++v) {
            a[pos] = v;
            ++hist[v];
            rec(pos + 1);
            --hist[v];
        }
    };
    rec(0);
    return out;
}

Rational weighted_parking_sum(std::span<const Rational> x) {
    Rational total = 0;
    for (const auto& a : enumerate_parking(static_cast<unsigned>(x.size()))) {
        Rational term = 1;
        for (auto v : a) term *= x[v - 1];
        total += term;
    }
    return total;
}

}  // namespace prefixpoly
