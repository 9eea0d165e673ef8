#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "prefixpoly/parking.hpp"
#include "prefixpoly/volume.hpp"

using namespace prefixpoly;

TEST_CASE("x-parking membership") {
    CHECK(is_x_parking(ParkingSequence{1, 1}, ParkingSequence{1, 1}));
    CHECK(is_x_parking(ParkingSequence{2, 1}, ParkingSequence{1, 1}));
    CHECK_FALSE(is_x_parking(ParkingSequence{2, 2}, ParkingSequence{1, 1}));
    CHECK(is_x_parking(ParkingSequence{3, 2}, ParkingSequence{2, 1}));
    // Nothing parks when the first spot has no room.
    CHECK_FALSE(is_x_parking(ParkingSequence{1, 1}, ParkingSequence{0, 5}));
    CHECK_THROWS_AS(is_x_parking(ParkingSequence{1}, ParkingSequence{1, 1}), DimensionError);
}

TEST_CASE("membership is invariant under permutation and monotone in x") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::int64_t> d(1, 6), xs(0, 2);
    for (int rep = 0; rep < 200; ++rep) {
        ParkingSequence a(4), x(4);
        for (auto& v : a) v = d(rng);
        for (auto& v : x) v = xs(rng);
        const bool in = is_x_parking(a, x);
        std::shuffle(a.begin(), a.end(), rng);
        CHECK(is_x_parking(a, x) == in);
        x[rep % 4] += 1;
        if (in) CHECK(is_x_parking(a, x));
    }
}

TEST_CASE("ordinary parking functions") {
    CHECK(enumerate_parking(1) == std::vector<ParkingSequence>{{1}});
    CHECK(enumerate_parking(2) == std::vector<ParkingSequence>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(enumerate_parking(4).size() == 125);
    const auto five = enumerate_parking(5);
    CHECK(five.size() == 1296);
    CHECK(std::is_sorted(five.begin(), five.end()));
    CHECK_THROWS_AS(enumerate_parking(0), EmptyInputError);
    CHECK_THROWS_AS(enumerate_parking(8), ResourceError);
}

TEST_CASE("counts equal n! V_n(x) by three routes") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::int64_t> d(0, 3);
    for (int rep = 0; rep < 30; ++rep) {
        ParkingSequence x(1 + rep % 4);
        for (auto& v : x) v = d(rng);
        std::vector<Rational> xr(x.begin(), x.end());
        const Rational target = Rational(factorial(static_cast<unsigned>(x.size()))) * volume_at(xr);
        const auto serial = count_x_parking(x, Exec::serial);
        CHECK(Rational(serial) == target);
        CHECK(count_x_parking(x, Exec::parallel) == serial);
        CHECK(weighted_parking_sum(xr) == target);
    }
    const auto w = weighted_parking_sum(testutil::ints({2, 1}));
    CHECK(w == 8);
}
