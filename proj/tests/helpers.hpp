#pragma once

#include <random>
#include <vector>

#include "prefixpoly/exactmath.hpp"

namespace testutil {

using prefixpoly::Integer;
using prefixpoly::Rational;

inline Rational q(long num, unsigned long den = 1) { return prefixpoly::make_rational(Integer(num), Integer(den)); }

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, unsigned long max_den = 6) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<unsigned long> den(1, max_den);
    return q(num(rng), den(rng));
}

inline std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t n, long hi = 5) {
    std::vector<Rational> v(n);
    for (auto& c : v) c = random_rational(rng, 0, hi);
    return v;
}

inline std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (auto c : v) out.emplace_back(c);
    return out;
}

}  // namespace testutil
