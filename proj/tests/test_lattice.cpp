#include <doctest.h>

#include "helpers.hpp"
#include "prefixpoly/ballot.hpp"
#include "prefixpoly/lattice.hpp"
#include "prefixpoly/volume.hpp"

using namespace prefixpoly;
using testutil::q;

namespace {

IntVector random_naturals(std::mt19937_64& rng, std::size_t n, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(0, hi);
    IntVector x(n);
    for (auto& v : x) v = d(rng);
    return x;
}

IntVector increasing(std::mt19937_64& rng, std::size_t n, std::int64_t start) {
    std::uniform_int_distribution<std::int64_t> step(0, 3);
    IntVector v(n);
    std::int64_t cur = start;
    for (auto& e : v) e = (cur += step(rng));
    return v;
}

}  // namespace

TEST_CASE("lattice point counts") {
    CHECK(count_points(IntVector{1, 1, 1}) == 14);
    CHECK(count_points(IntVector{0, 0}) == 1);
    CHECK(count_points(IntVector{3}) == 4);
    // (n+1)-th Catalan number at the all-ones vector.
    for (unsigned n = 1; n <= 7; ++n) CHECK(count_points(IntVector(n, 1)) == catalan(n + 1));
    CHECK_THROWS_AS(to_natural_vector(std::vector<Rational>{q(1, 2)}, "x"), DomainError);
    CHECK_THROWS_AS(count_points(IntVector{-1, 2}), DomainError);
}

TEST_CASE("formula, polynomial and scan agree") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 40; ++rep) {
        const auto x = random_naturals(rng, 1 + rep % 4, 3);
        const auto n = count_points(x);
        CHECK(count_points_brute(x, Exec::serial) == n);
        CHECK(count_points_brute(x, Exec::parallel) == n);
        std::vector<Rational> xr(x.begin(), x.end());
        CHECK(lattice_poly(static_cast<unsigned>(x.size())).evaluate(xr) == Rational(n));
    }
    CHECK_THROWS_AS(count_points_brute(IntVector{50, 50, 50, 50}, Exec::serial, 1000), ResourceError);
}

TEST_CASE("top-degree part of the lattice polynomial is the volume") {
    for (unsigned n = 1; n <= 5; ++n) CHECK(lattice_poly(n).homogeneous_part(n) == volume_poly(n));
}

TEST_CASE("Ehrhart polynomial of the (a, b, ..., b) polytope") {
    CHECK(ehrhart_ab(2, 1, 1).to_string({std::vector<std::string>{"r"}}) == "3/2 r^2 + 5/2 r + 1");
    for (unsigned n = 1; n <= 4; ++n)
        for (long a = 0; a <= 2; ++a)
            for (long b = 0; b <= 2; ++b) {
                const auto e = ehrhart_ab(n, a, b);
                CHECK(e.coefficient({n}) == special_ab(n, Rational(a), Rational(b)) / Rational(factorial(n)));
                for (long r = 0; r <= 3; ++r) {
                    IntVector x(n, r * b);
                    x[0] = r * a;
                    CHECK(e.evaluate(std::vector<Rational>{Rational(r)}) == Rational(count_points(x)));
                }
            }
}

TEST_CASE("shifted lattice polynomial has nonnegative coefficients") {
    for (unsigned n = 1; n <= 5; ++n) CHECK(shifted_nonneg_check(n));
}

TEST_CASE("plane partitions") {
    CHECK(plane_partitions(Shape{}, 3) == 1);
    CHECK(plane_partitions(Shape{1}, 3) == 3);
    // 2 x 2 x 2 box.
    CHECK(plane_partitions(Shape{2, 2}, 3) == 20);
    CHECK(plane_partitions_transfer(Shape{2, 2}, 3) == 20);
    CHECK_THROWS_AS(plane_partitions(Shape{1, 2}, 2), DomainError);
    CHECK_THROWS_AS(plane_partitions(Shape{6, 6, 6}, 9, 100), ResourceError);
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 25; ++rep) {
        const auto x = random_naturals(rng, 1 + rep % 3, 2);
        const auto shape = shape_of(x);
        const unsigned maxpart = 1 + rep % 3;
        CHECK(plane_partitions(shape, maxpart) == plane_partitions_transfer(shape, maxpart));
        CHECK(plane_partitions(shape, 2) == count_points(x));
    }
}

TEST_CASE("m-fold polytope") {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 20; ++rep) {
        const auto x = random_naturals(rng, 1 + rep % 3, 2);
        CHECK(count_points_nm(x, 1) == count_points(x));
        for (unsigned m = 1; m <= 2; ++m) {
            const auto c = count_points_nm(x, m, Exec::serial);
            CHECK(count_points_nm(x, m, Exec::parallel) == c);
            CHECK(plane_partitions_transfer(shape_of(x), m + 1) == c);
        }
    }
    CHECK_THROWS_AS(count_points_nm(IntVector{1}, 0), DomainError);
}

TEST_CASE("m-fold volume: interpolation and closed form") {
    for (unsigned n = 1; n <= 4; ++n)
        for (long a = 0; a <= 2; ++a)
            for (long b = 0; b <= 2; ++b)
                CHECK(volume_nm_interpolated(n, 1, a, b) == special_ab(n, Rational(a), Rational(b)) / Rational(factorial(n)));
    CHECK(volume_nm_formula(2, 2, 1, 1) == volume_nm_interpolated(2, 2, 1, 1));
    // The closed form ignores a and b; the interpolated leading term does not.
    CHECK(volume_nm_formula(2, 2, 2, 2) == volume_nm_formula(2, 2, 1, 1));
    CHECK(volume_nm_interpolated(2, 2, 2, 2) == q(32, 3));
    CHECK_THROWS_AS(volume_nm_formula(0, 1, 1, 1), DomainError);
}

TEST_CASE("Steck's count of separated increasing sequences") {
    CHECK(steck_count(IntVector{}, IntVector{}) == 1);
    CHECK(steck_count(IntVector{0}, IntVector{5}) == 4);
    CHECK(steck_count(IntVector{0, 0}, IntVector{4, 4}) == 3);
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 1 + rep % 5;
        const auto b = increasing(rng, n, 0);
        auto c = increasing(rng, n, 1);
        for (std::size_t i = 0; i < n; ++i) c[i] += b[i];
        CHECK(steck_count(b, c) == steck_count_brute(b, c));
    }
    CHECK_THROWS_AS(steck_count(IntVector{0}, IntVector{1, 2}), DimensionError);
}

TEST_CASE("two-sided polytope") {
    CHECK(two_sided_count(IntVector{0, 0}, IntVector{1, 1}) == count_points(IntVector{1, 1}));
    CHECK(two_sided_count(IntVector{1, 0}, IntVector{1, 0}) == 1);
    CHECK_THROWS_AS(two_sided_count(IntVector{2, 0}, IntVector{1, 0}), DomainError);
    CHECK_THROWS_AS(two_sided_count(IntVector{0}, IntVector{1, 0}), DimensionError);
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 1 + rep % 3;
        auto z = random_naturals(rng, n, 2);
        auto x = random_naturals(rng, n, 2);
        const auto zu = integer_prefix_sums(z);
        const auto xu = integer_prefix_sums(x);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) ok = ok && zu[i] <= xu[i];
        if (!ok) continue;
        const auto c = two_sided_count(z, x, Exec::serial);
        CHECK(two_sided_count(z, x, Exec::parallel) == c);
        CHECK(two_sided_cell_sum(z, x) == c);
        if (n == 2) CHECK(two_sided_closed_form(z, x) == c);
    }
}
