#include <doctest.h>

#include "helpers.hpp"
#include "prefixpoly/ballot.hpp"
#include "prefixpoly/lattice.hpp"
#include "prefixpoly/posets.hpp"
#include "prefixpoly/volume.hpp"

using namespace prefixpoly;

namespace {

FinitePoset six_element() {
    const FinitePoset::Relation rel[] = {{1, 3}, {3, 5}, {2, 4}, {4, 6}, {3, 4}, {5, 6}};
    return FinitePoset(6, rel);
}

// Random naturally labeled poset on p elements with a top.
FinitePoset random_poset(std::mt19937_64& rng, unsigned p) {
    std::vector<FinitePoset::Relation> rel;
    std::bernoulli_distribution coin(0.35);
    for (unsigned a = 1; a < p; ++a)
        for (unsigned b = a + 1; b < p; ++b)
            if (coin(rng)) rel.emplace_back(a, b);
    return with_top(FinitePoset(p - 1, rel));
}

std::vector<unsigned> random_chain(std::mt19937_64& rng, const FinitePoset& p) {
    std::vector<unsigned> chain{p.top()};
    std::bernoulli_distribution coin(0.5);
    for (unsigned e = p.size() - 1; e >= 1; --e)
        if (p.less(e, chain.front()) && coin(rng)) chain.insert(chain.begin(), e);
    return chain;
}

}  // namespace

TEST_CASE("poset construction") {
    const auto p = six_element();
    CHECK(p.top() == 6);
    CHECK(p.less(1, 6));
    CHECK_FALSE(p.less(2, 3));
    CHECK(p.covers().size() == 6);
    CHECK(antichain_poset(3).top() == 0);
    CHECK(with_top(antichain_poset(3)).top() == 4);
    const FinitePoset::Relation bad[] = {{3, 1}};
    CHECK_THROWS_AS(FinitePoset(3, bad), DomainError);
    const FinitePoset::Relation out[] = {{1, 9}};
    CHECK_THROWS_AS(FinitePoset(3, out), DimensionError);
    CHECK(FinitePoset::from_json(p.to_json()).covers() == p.covers());
}

TEST_CASE("linear extensions") {
    CHECK(linear_extensions(chain_poset(4)).size() == 1);
    CHECK(linear_extensions(antichain_poset(4)).size() == 24);
    CHECK(linear_extensions(six_element()).size() == 7);
    const auto q3 = linear_extensions(q_poset(3));
    CHECK(q3.size() == 5);
    CHECK(q3.front() == Word{1, 2, 3, 4, 5, 6});
    CHECK(q3.back() == Word{1, 4, 2, 5, 3, 6});
    for (unsigned n = 1; n <= 6; ++n)
        CHECK(Integer(static_cast<unsigned long>(linear_extensions(q_poset(n)).size())) == catalan(n));
    CHECK_THROWS_AS(linear_extensions(antichain_poset(13)), ResourceError);
}

TEST_CASE("heights of the chain in a word") {
    const auto hd = heights_descents(Word{1, 4, 2, 5, 3, 6}, q_chain(3));
    CHECK(hd.h == std::vector<unsigned>{2, 4, 6});
    CHECK_THROWS_AS(heights_descents(Word{4, 1, 2}, std::vector<unsigned>{1, 4}), DomainError);
}

TEST_CASE("chain validation") {
    const auto p = six_element();
    CHECK_NOTHROW(validate_chain(p, std::vector<unsigned>{1, 3, 6}));
    CHECK_THROWS_AS(validate_chain(p, std::vector<unsigned>{1, 3}), DomainError);
    CHECK_THROWS_AS(validate_chain(p, std::vector<unsigned>{2, 3, 6}), DomainError);
    CHECK_THROWS_AS(validate_chain(p, std::vector<unsigned>{}), EmptyInputError);
}

TEST_CASE("the grid section is Pi_n(x)") {
    CHECK(q_chain(3) == std::vector<unsigned>{4, 5, 6});
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(section_volume(q_poset(n), q_chain(n)) == volume_poly(n));
        CHECK(section_count_symbolic(q_poset(n), q_chain(n)) == lattice_poly(n));
    }
}

TEST_CASE("six-element example") {
    const auto p = six_element();
    const std::vector<unsigned> chain{1, 3, 6};
    const auto sym = section_count_symbolic(p, chain);
    CHECK(section_volume(p, chain) == sym.homogeneous_part(3));
    for (std::int64_t a = 0; a <= 2; ++a)
        for (std::int64_t b = 0; b <= 2; ++b)
            for (std::int64_t c = 0; c <= 2; ++c) {
                const IntVector x{a, b, c};
                const auto n = section_count(p, chain, x);
                CHECK(section_count_oracle(p, chain, x, Exec::serial) == n);
                CHECK(sym.evaluate(std::vector<Rational>{Rational(a), Rational(b), Rational(c)}) == Rational(n));
            }
}

TEST_CASE("random posets: extension sum, scan and polynomial agree") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 30; ++rep) {
        const auto p = random_poset(rng, 3 + rep % 4);
        const auto chain = random_chain(rng, p);
        const auto sym = section_count_symbolic(p, chain);
        CHECK(section_volume(p, chain) == sym.homogeneous_part(p.size() - static_cast<unsigned>(chain.size())));
        std::uniform_int_distribution<std::int64_t> d(0, 2);
        IntVector x(chain.size());
        for (auto& v : x) v = d(rng);
        const auto n = section_count(p, chain, x);
        CHECK(section_count_oracle(p, chain, x, Exec::serial) == n);
        CHECK(section_count_oracle(p, chain, x, Exec::parallel) == n);
        std::vector<Rational> xr(x.begin(), x.end());
        CHECK(sym.evaluate(xr) == Rational(n));
    }
}

TEST_CASE("order ideals") {
    CHECK(ideal_lattice(antichain_poset(2)).ideals.size() == 4);
    CHECK(ideal_lattice(antichain_poset(2)).covers.size() == 4);
    CHECK(ideal_lattice(chain_poset(5)).ideals.size() == 6);
    CHECK(ideal_lattice(q_poset(3)).ideals.size() == 10);
    const auto j = ideal_lattice(six_element());
    CHECK(j.ideals.front() == 0u);
    CHECK(j.ideals.back() == 0x3fu);
}

TEST_CASE("Loewy chains of the 2 x 3 grid") {
    const auto s = loewy_interior_stats(q_poset(3));
    CHECK(s.by_dimension == std::map<int, Integer>{{2, 5}, {1, 5}, {0, 1}});
}

TEST_CASE("support function of Pi_n(x)") {
    std::mt19937_64 rng(2);
    for (unsigned n = 1; n <= 4; ++n) CHECK(minkowski_support_check(testutil::random_vector(rng, n), 100, rng()));
}
