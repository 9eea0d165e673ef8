#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "prefixpoly/probability.hpp"
#include "prefixpoly/volume.hpp"

using namespace prefixpoly;
using testutil::ints;
using testutil::q;

TEST_CASE("upper and lower bands") {
    CHECK(upper_band_prob(std::vector<Rational>{q(1, 2), q(1)}) == q(3, 4));
    CHECK(upper_band_prob(std::vector<Rational>{q(1), q(1), q(1)}) == 1);
    CHECK(lower_band_prob(std::vector<Rational>{q(0), q(0)}) == 1);
    // A single uniform exceeds r with probability 1 - r.
    CHECK(lower_band_prob(std::vector<Rational>{q(1, 3)}) == q(2, 3));
    CHECK_THROWS_AS(upper_band_prob(std::vector<Rational>{q(1, 2), q(1, 3)}), DomainError);
    CHECK_THROWS_AS(upper_band_prob(std::vector<Rational>{q(3, 2)}), DomainError);
}

TEST_CASE("two-sided band determinant") {
    std::mt19937_64 rng(41);
    auto sorted_unit = [&](std::size_t n) {
        std::vector<Rational> v(n);
        for (auto& e : v) e = testutil::random_rational(rng, 0, 12) / 12;
        for (auto& e : v)
            if (e > 1) e = 1;
        std::sort(v.begin(), v.end());
        return v;
    };
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 1 + rep % 5;
        const auto s = sorted_unit(n);
        auto r = sorted_unit(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = std::min(r[i], s[i]);
        CHECK(band_prob(std::vector<Rational>(n, Rational(0)), s) == upper_band_prob(s));
        CHECK(band_prob(r, std::vector<Rational>(n, Rational(1))) == lower_band_prob(r));
        const auto p = band_prob(r, s);
        CHECK(p >= 0);
        CHECK(p <= upper_band_prob(s));
        CHECK(p <= lower_band_prob(r));
    }
    // One uniform in [1/4, 3/4].
    CHECK(band_prob(std::vector<Rational>{q(1, 4)}, std::vector<Rational>{q(3, 4)}) == q(1, 2));
    CHECK_THROWS_AS(band_prob(std::vector<Rational>{q(0)}, std::vector<Rational>{q(1), q(1)}), DimensionError);
}

TEST_CASE("Daniels' formula") {
    const auto p = Polynomial::variable(1, 0);
    for (unsigned n = 1; n <= 6; ++n) CHECK(daniels_poly(n) == Polynomial::constant(1, 1) - p);
    CHECK(daniels_prob(4, q(3, 10)) == q(7, 10));
    std::vector<Rational> r(4);
    for (unsigned j = 1; j <= 4; ++j) r[j - 1] = q(3, 10) * q(j, 4);
    CHECK(lower_band_prob(r) == q(7, 10));
}

TEST_CASE("multinomial ballot pair") {
    // n = 1: N_1 >= 1 with probability p_1.
    const auto [up1, down1] = multinomial_ballot(std::vector<Rational>{q(1, 3), q(2, 3)});
    CHECK(up1 == q(1, 3));
    CHECK(down1 == q(2, 3));
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 1 + rep % 5;
        std::vector<Rational> p(n + 1);
        Rational total = 0;
        for (auto& e : p) total += (e = testutil::random_rational(rng, 1, 9, 1));
        for (auto& e : p) e /= total;
        const auto [up, down] = multinomial_ballot(p);
        const auto [oup, odown, neither] = multinomial_ballot_oracle(p);
        CHECK(up == oup);
        CHECK(down == odown);
        CHECK(up + down + neither == 1);
    }
    CHECK_THROWS_AS(multinomial_ballot(std::vector<Rational>{q(1, 2), q(1, 3)}), DomainError);
    CHECK_THROWS_AS(multinomial_ballot(std::vector<Rational>{q(1)}), DimensionError);
}

TEST_CASE("Pyke's formula") {
    CHECK(pyke_formula(3, q(1, 3), q(1, 2)) == q(5, 6));
    CHECK(Rational(factorial(3)) * volume_at(pyke_vector(3, q(1, 3), q(1, 2))) == q(5, 6));
    // With x < b only j = 0 survives, which is a (a + n b)^{n-1} at a = 1 + x - nb.
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 30; ++rep) {
        const unsigned n = 2 + rep % 4;
        const Rational b = q(1 + rep % 5, 6 * n);
        const Rational x = b * q(rep % 7, 7);
        if (n * b - x > 1) continue;
        CHECK(pyke_formula(n, b, x) == special_ab(n, 1 + x - n * b, b));
    }
    CHECK_THROWS_AS(pyke_formula(3, q(0), q(0)), DomainError);
    CHECK_THROWS_AS(pyke_formula(3, q(1, 2), q(-1)), DomainError);
    CHECK_THROWS_AS(pyke_formula(3, q(1), q(1, 2)), DomainError);
}

TEST_CASE("Monte Carlo bands") {
    const auto all = mc_band({}, ints({1, 1, 1}), 5000, 1);
    CHECK(all.estimate == 1.0);
    CHECK(all.std_error == 0.0);
    CHECK(all.trials == 5000);

    std::vector<Rational> r(5), s(5, Rational(1));
    for (unsigned j = 1; j <= 5; ++j) r[j - 1] = q(3, 10) * q(j, 5);
    const auto serial = mc_band(r, s, 30000, 7, Exec::serial);
    const auto par = mc_band(r, s, 30000, 7, Exec::parallel);
    CHECK(serial.estimate == par.estimate);
    CHECK(std::fabs(serial.estimate - 0.7) <= 4 * serial.std_error);
    CHECK(mc_band(r, s, 30000, 8).estimate != serial.estimate);

    const auto j = serial.to_json();
    CHECK(j["monte_carlo"] == true);
    CHECK(j["seed"] == 7);
    CHECK(j["trials"] == 30000);
}
