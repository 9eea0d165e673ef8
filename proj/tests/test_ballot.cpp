#include <doctest.h>

#include <functional>

#include "prefixpoly/ballot.hpp"

using namespace prefixpoly;

TEST_CASE("small K_n") {
    CHECK(enumerate_K(1) == std::vector<Composition>{{1}});
    CHECK(enumerate_K(2) == std::vector<Composition>{{1, 1}, {2, 0}});
    CHECK_THROWS_AS(enumerate_K(0), EmptyInputError);
}

TEST_CASE("sizes of K_n are Catalan numbers") {
    const long first[] = {1, 2, 5, 14, 42, 132};
    for (unsigned n = 1; n <= 6; ++n) CHECK(enumerate_K(n).size() == static_cast<std::size_t>(first[n - 1]));
    // Catalan recurrence as the oracle.
    std::vector<Integer> c{1};
    for (unsigned n = 0; n < 12; ++n) {
        Integer next = 0;
        for (unsigned i = 0; i <= n; ++i) next += c[i] * c[n - i];
        c.push_back(next);
    }
    for (unsigned n = 0; n <= 12; ++n) CHECK(catalan(n) == c[n]);
    CHECK(catalan(10) == 16796);
    for (unsigned n = 1; n <= 12; ++n) CHECK(Integer(static_cast<unsigned long>(enumerate_K(n).size())) == c[n]);
}

TEST_CASE("K_n equals filtered weak compositions, in lexicographic order") {
    for (unsigned n = 1; n <= 7; ++n) {
        std::vector<Composition> naive;
        Composition k(n);
        std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
            if (pos + 1 == n) {
                k[pos] = left;
                unsigned s = 0;
                bool ok = true;
                for (unsigned j = 0; j + 1 < n; ++j) {
                    s += k[j];
                    ok = ok && s >= j + 1;
                }
                if (ok) naive.push_back(k);
                CHECK(in_K(k) == ok);
                return;
            }
            for (unsigned v = 0; v <= left; ++v) {
                k[pos] = v;
                rec(pos + 1, left - v);
            }
        };
        rec(0, n);
        CHECK(enumerate_K(n) == naive);
    }
}
