#pragma once

// Parking functions and x-parking functions.

#include <cstdint>
#include <span>
#include <vector>

#include "prefixpoly/exactmath.hpp"
#include "prefixpoly/kernels.hpp"

namespace prefixpoly {

using ParkingSequence = std::vector<std::int64_t>;

/// Sorted a satisfies b_i <= u_i with u the prefix sums of x.
bool is_x_parking(std::span<const std::int64_t> a, std::span<const std::int64_t> x);
/// Scan of {1..u_n}^n.
Integer count_x_parking(std::span<const std::int64_t> x, Exec exec = Exec::parallel,
                        std::uint64_t limit = kDefaultScanLimit);
/// Ordinary parking functions of length n in lexicographic order, n <= 7.
std::vector<ParkingSequence> enumerate_parking(unsigned n);
/// Sum over parking functions a of x_{a_1} ... x_{a_n}.
Rational weighted_parking_sum(std::span<const Rational> x);

}  // namespace prefixpoly
