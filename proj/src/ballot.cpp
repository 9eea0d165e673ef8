#include "prefixpoly/ballot.hpp"

namespace prefixpoly {

namespace {

void extend(unsigned n, unsigned pos, unsigned sum, Composition& k, std::vector<Composition>& out) {
    if (pos == n) {
        if (sum == n) out.push_back(k);
        return;
    }
    // The prefix through pos must reach pos + 1 unless pos is the last slot.
    const bool last = pos + 1 == n;
    const unsigned low = last ? n - sum : (sum < pos + 1 ? pos + 1 - sum : 0);
    for (unsigned v = low; v <= n - sum; ++v) {
        k[pos] = v;
        extend(n, pos + 1, sum + v, k, out);
    }
}

}  // namespace

std::vector<Composition> enumerate_K(unsigned n) {
    if (n == 0) throw EmptyInputError("enumerate_K: n must be at least 1");
    std::vector<Composition> out;
    Composition k(n, 0);
    extend(n, 0, 0, k, out);
    return out;
}

bool in_K(std::span<const unsigned> k) {
    const auto n = static_cast<unsigned>(k.size());
    if (n == 0) return false;
    unsigned sum = 0;
    for (unsigned j = 0; j < n; ++j) {
        sum += k[j];
        if (j + 1 < n && sum < j + 1) return false;
    }
    return sum == n;
}

Integer catalan(unsigned n) { return binomial(Integer(2 * n), n) / (n + 1); }

}  // namespace prefixpoly
