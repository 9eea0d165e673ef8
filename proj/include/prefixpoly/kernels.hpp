#pragma once

// Exhaustive box scans.  The OpenMP kernel splits the mixed-radix index
// range into contiguous chunks; the serial kernel is kept as the reference
// and both must return identical counts.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <omp.h>

#include "prefixpoly/errors.hpp"

namespace prefixpoly {

enum class Exec { serial, parallel };

using Point = std::vector<std::int64_t>;

inline constexpr std::uint64_t kDefaultScanLimit = 10'000'000;

/// Number of points of prod [0, bounds_i]; throws ResourceError past limit.
inline std::uint64_t box_size(std::span<const std::int64_t> bounds, std::uint64_t limit,
                              const std::string& what) {
    std::uint64_t total = 1;
    for (auto b : bounds) {
        if (b < 0) return 0;
        const auto side = static_cast<std::uint64_t>(b) + 1;
        if (total > limit / side) throw ResourceError(what + ": scan exceeds " + std::to_string(limit) + " points");
        total *= side;
    }
    if (total > limit) throw ResourceError(what + ": scan exceeds " + std::to_string(limit) + " points");
    return total;
}

namespace detail {

inline void decode(std::uint64_t index, std::span<const std::int64_t> bounds, Point& p) {
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        const auto side = static_cast<std::uint64_t>(bounds[i]) + 1;
        p[i] = static_cast<std::int64_t>(index % side);
        index /= side;
    }
}

inline void advance(std::span<const std::int64_t> bounds, Point& p) {
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (p[i] < bounds[i]) {
            ++p[i];
            return;
        }
        p[i] = 0;
    }
}

}  // namespace detail

template <class Pred>
std::uint64_t count_box_serial(std::span<const std::int64_t> bounds, Pred&& pred,
                               std::uint64_t limit = kDefaultScanLimit, const std::string& what = "scan") {
    const auto total = box_size(bounds, limit, what);
    Point p(bounds.size(), 0);
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (pred(static_cast<const Point&>(p))) ++count;
        detail::advance(bounds, p);
    }
    return count;
}

template <class Pred>
std::uint64_t count_box_parallel(std::span<const std::int64_t> bounds, Pred&& pred,
                                 std::uint64_t limit = kDefaultScanLimit, const std::string& what = "scan") {
    const auto total = box_size(bounds, limit, what);
    constexpr std::uint64_t chunk = 4096;
    const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
    std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : count)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const auto begin = static_cast<std::uint64_t>(c) * chunk;
        const auto end = std::min(total, begin + chunk);
        Point p(bounds.size(), 0);
        detail::decode(begin, bounds, p);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            if (pred(static_cast<const Point&>(p))) ++count;
            detail::advance(bounds, p);
        }
    }
    return count;
}

template <class Pred>
std::uint64_t count_box(Exec exec, std::span<const std::int64_t> bounds, Pred&& pred,
                        std::uint64_t limit = kDefaultScanLimit, const std::string& what = "scan") {
    return exec == Exec::serial ? count_box_serial(bounds, pred, limit, what)
                                : count_box_parallel(bounds, pred, limit, what);
}

}  // namespace prefixpoly
