#include <doctest.h>

#include <thread>

#include "helpers.hpp"
#include "prefixpoly/ballot.hpp"
#include "prefixpoly/probability.hpp"
#include "prefixpoly/volume.hpp"

using namespace prefixpoly;
using testutil::ints;
using testutil::q;

TEST_CASE("low-dimensional volumes") {
    CHECK(volume_poly(1).to_string() == "x1");
    CHECK(volume_poly(2).to_string() == "1/2 x1^2 + x1 x2");
    CHECK(volume_poly(3).to_string() == "1/6 x1^3 + 1/2 x1^2 x2 + 1/2 x1^2 x3 + 1/2 x1 x2^2 + x1 x2 x3");
    CHECK(volume_at(ints({1, 2})) == q(5, 2));
    CHECK(volume_at(ints({0, 5, 5})) == 0);
    CHECK_THROWS_AS(volume_poly(0), EmptyInputError);
    CHECK_THROWS_AS(volume_at(std::vector<Rational>{q(-1)}), DomainError);
}

TEST_CASE("coefficients are 1 / prod k_i! over K_n") {
    for (unsigned n = 1; n <= 6; ++n) {
        const auto& v = volume_poly(n);
        CHECK(v.size() == static_cast<std::size_t>(catalan(n).get_ui()));
        CHECK(v.is_homogeneous());
        CHECK(v.total_degree() == n);
        for (const auto& k : enumerate_K(n)) {
            Integer denom = 1;
            for (auto ki : k) denom *= factorial(ki);
            CHECK(v.coefficient(k) == Rational(1) / Rational(denom));
        }
    }
}

TEST_CASE("Steck determinant agrees with the K_n sum") {
    for (unsigned n = 1; n <= 6; ++n) CHECK(volume_steck(n) == volume_poly(n));
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 60; ++rep) {
        const auto x = testutil::random_vector(rng, 1 + rep % 8);
        const auto v = volume_at(x);
        CHECK(volume_steck_at(x) == v);
        CHECK(volume_band_route(x) == v);
    }
}

TEST_CASE("volume is monotone in each coordinate") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 40; ++rep) {
        auto x = testutil::random_vector(rng, 4);
        const auto before = volume_at(x);
        x[rep % 4] += q(1, 3);
        CHECK(volume_at(x) >= before);
    }
}

TEST_CASE("specializations") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 30; ++rep) {
        const unsigned n = 3 + rep % 4;
        const auto a = testutil::random_rational(rng, 0, 5), b = testutil::random_rational(rng, 0, 5),
                   c = testutil::random_rational(rng, 0, 5);
        const Rational nf(factorial(n));
        std::vector<Rational> x(n, b);
        x[0] = a;
        CHECK(special_ab(n, a, b) == nf * volume_at(x));
        x[n - 1] = c;
        CHECK(special_abc(n, a, b, c) == nf * volume_at(x));
        for (unsigned m = 1; m + 2 <= n; ++m) {
            const auto args = abcm_arguments(n, m, a, b, c);
            CHECK(args.size() == n);
            CHECK(special_abcm(n, m, a, b, c) == nf * volume_at(args));
        }
    }
    CHECK(special_ab(1, q(3), q(7)) == 3);
    CHECK_THROWS_AS(special_abc(2, q(1), q(1), q(1)), DomainError);
    CHECK_THROWS_AS(special_abcm(5, 4, q(1), q(1), q(1)), DomainError);
    CHECK_THROWS_AS(special_abcm(5, 0, q(1), q(1), q(1)), DomainError);
}

TEST_CASE("q-specialization and the inversion enumerator") {
    for (unsigned n = 1; n <= 6; ++n) {
        Integer trees;
        mpz_ui_pow_ui(trees.get_mpz_t(), n + 1, n - 1);
        CHECK(q_specialization(n, q(1)) == Rational(trees));
    }
    CHECK(q_specialization(2, q(2)) == 5);
    CHECK(inversion_oracle(1).to_string() == "1");
    // Trees on {0,1,2} rooted at 0: two without inversions and the path 0-2-1.
    const auto i2 = inversion_oracle(2);
    CHECK(i2.evaluate(ints({0})) == 2);
    CHECK(i2.evaluate(ints({1})) == 3);
    for (unsigned n = 1; n <= 5; ++n)
        for (const auto& qq : {q(2), q(1, 3), q(3, 2)})
            CHECK(q_specialization(n, qq) == pow(qq, n * (n - 1) / 2) * inversion_oracle(n).evaluate(std::vector<Rational>{1 / qq}));
    CHECK_THROWS_AS(inversion_oracle(7), ResourceError);
    CHECK_THROWS_AS(q_specialization(3, q(0)), DomainError);
}

TEST_CASE("volume_poly memo is safe under concurrent first use") {
    std::vector<std::thread> pool;
    std::vector<std::string> out(4);
    for (int t = 0; t < 4; ++t) pool.emplace_back([&, t] { out[t] = volume_poly(9).to_string(); });
    for (auto& th : pool) th.join();
    for (int t = 1; t < 4; ++t) CHECK(out[t] == out[0]);
}
