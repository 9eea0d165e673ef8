#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "prefixpoly/exactmath.hpp"

using namespace prefixpoly;
using testutil::q;

TEST_CASE("multichoose on integers") {
    CHECK(multichoose(Integer(3), 2) == 6);
    CHECK(multichoose(Integer(-7), 0) == 1);
    CHECK(multichoose(Integer(0), 2) == 0);
    CHECK(multichoose(Integer(-1), 2) == 0);
    // As a polynomial in k: k(k+1)/2 at k = -2.
    CHECK(multichoose(Integer(-2), 2) == 1);
    for (long k = 1; k <= 10; ++k)
        for (unsigned j = 0; j <= 8; ++j) {
            Integer rising = 1;
            for (unsigned i = 0; i < j; ++i) rising *= k + static_cast<long>(i);
            CHECK(multichoose(Integer(k), j) == rising / factorial(j));
            CHECK(multichoose(Integer(k), j) == binomial(Integer(k + j - 1), j));
        }
}

TEST_CASE("multichoose on polynomials agrees with integer values") {
    const Polynomial k = Polynomial::variable(1, 0);
    for (unsigned j = 0; j <= 5; ++j) {
        const auto p = multichoose(k, j);
        for (long v = -4; v <= 6; ++v)
            CHECK(p.evaluate(std::vector<Rational>{Rational(v)}) == Rational(multichoose(Integer(v), j)));
    }
}

TEST_CASE("rational determinants") {
    RationalMatrix id(3, 3, Rational(0));
    for (int i = 0; i < 3; ++i) id(i, i) = 1;
    CHECK(determinant(id) == 1);

    RationalMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 3;
    m(1, 0) = 1;
    m(1, 1) = 4;
    CHECK(determinant(m) == 5);

    // Steck matrix for x = (1, 2): [[u1, u1^2/2], [1, u2]] with u = (1, 3).
    RationalMatrix s(2, 2);
    s(0, 0) = 1;
    s(0, 1) = q(1, 2);
    s(1, 0) = 1;
    s(1, 1) = 3;
    CHECK(determinant(s) == q(5, 2));

    CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), DimensionError);
}

TEST_CASE("determinant is multiplicative and matches cofactor expansion") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 1 + rep % 5;
        RationalMatrix a(n, n), b(n, n), ab(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = testutil::random_rational(rng, -5, 5);
                b(i, j) = testutil::random_rational(rng, -5, 5);
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) ab(i, j) += a(i, k) * b(k, j);
        CHECK(determinant(ab) == determinant(a) * determinant(b));
        CHECK(determinant(a) == determinant_by_expansion(a, Rational(0), Rational(1)));
    }
}

TEST_CASE("polynomial determinant") {
    // [[x1, 1], [x2, x1]] -> x1^2 - x2
    PolynomialMatrix m(2, 2);
    m(0, 0) = Polynomial::variable(2, 0);
    m(0, 1) = Polynomial::constant(2, 1);
    m(1, 0) = Polynomial::variable(2, 1);
    m(1, 1) = Polynomial::variable(2, 0);
    const auto d = determinant(m);
    CHECK(d.to_string() == "x1^2 - x2");
    CHECK_THROWS_AS(determinant(PolynomialMatrix(1, 2)), DimensionError);
}

TEST_CASE("hook-length count of rectangles") {
    // Standard fillings counted by removing corners recursively.
    std::function<Integer(std::vector<unsigned>)> syt = [&](std::vector<unsigned> rows) -> Integer {
        unsigned cells = 0;
        for (auto r : rows) cells += r;
        if (cells == 0) return 1;
        Integer total = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] == 0) continue;
            if (i + 1 < rows.size() && rows[i + 1] == rows[i]) continue;
            --rows[i];
            total += syt(rows);
            ++rows[i];
        }
        return total;
    };
    CHECK(hook_count_rectangular(1, 5) == 1);
    CHECK(hook_count_rectangular(4, 1) == 1);
    CHECK(hook_count_rectangular(2, 2) == 2);
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 1; n <= 4; ++n) CHECK(hook_count_rectangular(m, n) == syt(std::vector<unsigned>(n, m)));
}

TEST_CASE("polynomial evaluation and text form") {
    Polynomial v2(2);
    v2 += Polynomial::monomial({1, 1}, 1);
    v2 += Polynomial::monomial({2, 0}, q(1, 2));
    CHECK(v2.evaluate(testutil::ints({1, 2})) == q(5, 2));
    CHECK(v2.to_string() == "1/2 x1^2 + x1 x2");
    CHECK(Polynomial(3).evaluate(testutil::ints({4, 5, 6})) == 0);
    CHECK_THROWS_AS(v2.evaluate(testutil::ints({1})), DimensionError);
    CHECK(Polynomial::from_json(v2.to_json()) == v2);
    const Polynomial neg = -v2 + Polynomial::constant(2, 3);
    CHECK(neg.to_string() == "-1/2 x1^2 - x1 x2 + 3");
}

TEST_CASE("polynomial ring laws") {
    std::mt19937_64 rng(11);
    auto random_poly = [&] {
        Polynomial p(3);
        std::uniform_int_distribution<unsigned> e(0, 3);
        for (int t = 0; t < 4; ++t) p += Polynomial::monomial({e(rng), e(rng), e(rng)}, testutil::random_rational(rng, -4, 4));
        return p;
    };
    for (int rep = 0; rep < 30; ++rep) {
        const auto a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        const auto pt = testutil::random_vector(rng, 3);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK(a.pow(3) == a * a * a);
    }
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-2/4") == q(-1, 2));
    CHECK(parse_rational("0.3") == q(3, 10));
    CHECK(to_string(q(6, 4)) == "3/2");
    CHECK(to_string(Rational(-5)) == "-5");
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("interpolation at the naturals") {
    // 2 r^3 - r + 5
    std::vector<Rational> values;
    for (long r = 0; r <= 3; ++r) values.emplace_back(2 * r * r * r - r + 5);
    const auto p = interpolate_at_naturals(values);
    CHECK(p.coefficient({3}) == 2);
    CHECK(p.coefficient({2}) == 0);
    CHECK(p.coefficient({1}) == -1);
    CHECK(p.coefficient({0}) == 5);
}
