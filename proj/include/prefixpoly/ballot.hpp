#pragma once

// The index set K_n: compositions k of n (zero parts allowed) whose prefix
// sums satisfy k_1 + ... + k_j >= j for every j < n.

#include <span>
#include <vector>

#include "prefixpoly/exactmath.hpp"

namespace prefixpoly {

using Composition = std::vector<unsigned>;

/// All of K_n, lexicographically increasing.
std::vector<Composition> enumerate_K(unsigned n);
bool in_K(std::span<const unsigned> k);
Integer catalan(unsigned n);

}  // namespace prefixpoly
