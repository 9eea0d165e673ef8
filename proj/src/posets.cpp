#include "prefixpoly/posets.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "prefixpoly/treefan.hpp"

namespace prefixpoly {

namespace {

std::uint32_t bit(unsigned e) { return std::uint32_t{1} << (e - 1); }

}  // namespace

FinitePoset::FinitePoset(unsigned size, std::span<const Relation> relations) : size_(size) {
    if (size > 32) throw ResourceError("poset: at most 32 elements supported");
    below_.assign(size, 0);
    above_.assign(size, 0);
    for (auto [a, b] : relations) {
        if (a < 1 || b < 1 || a > size || b > size)
            throw DimensionError("poset: relation (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") outside 1.." + std::to_string(size));
        if (a >= b)
            throw DomainError("poset: relation (" + std::to_string(a) + "," + std::to_string(b) +
                              ") violates the natural labeling");
        below_[b - 1] |= bit(a);
    }
    // Natural labeling makes increasing label order a topological order.
    for (unsigned e = 1; e <= size; ++e) {
        std::uint32_t closure = below_[e - 1];
        for (unsigned a = 1; a < e; ++a)
            if (below_[e - 1] & bit(a)) closure |= below_[a - 1];
        below_[e - 1] = closure;
    }
    for (unsigned b = 1; b <= size; ++b)
        for (unsigned a = 1; a < b; ++a)
            if (below_[b - 1] & bit(a)) above_[a - 1] |= bit(b);
    for (unsigned b = 1; b <= size; ++b)
        for (unsigned a = 1; a < b; ++a) {
            if (!(below_[b - 1] & bit(a))) continue;
            // a < b is a cover unless some c sits strictly between them.
            if ((above_[a - 1] & below_[b - 1]) == 0) covers_.emplace_back(a, b);
        }
}

bool FinitePoset::less(unsigned a, unsigned b) const {
    if (a < 1 || b < 1 || a > size_ || b > size_) throw DimensionError("poset: label out of range");
    return (below_[b - 1] & bit(a)) != 0;
}

unsigned FinitePoset::top() const {
    unsigned found = 0;
    for (unsigned e = 1; e <= size_; ++e)
        if (above_[e - 1] == 0) {
            if (found) return 0;
            found = e;
        }
    return found;
}

nlohmann::json FinitePoset::to_json() const {
    nlohmann::json covers = nlohmann::json::array();
    for (auto [a, b] : covers_) covers.push_back({a, b});
    return {{"size", size_}, {"covers", covers}};
}

FinitePoset FinitePoset::from_json(const nlohmann::json& j) {
    std::vector<Relation> rel;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw DomainError("poset JSON: each cover must be a pair");
        rel.emplace_back(c[0].get<unsigned>(), c[1].get<unsigned>());
    }
    return FinitePoset(j.at("size").get<unsigned>(), rel);
}

FinitePoset chain_poset(unsigned p) {
    std::vector<FinitePoset::Relation> rel;
    for (unsigned i = 1; i < p; ++i) rel.emplace_back(i, i + 1);
    return FinitePoset(p, rel);
}

FinitePoset antichain_poset(unsigned p) { return FinitePoset(p, {}); }

FinitePoset grid_poset(unsigned rows, unsigned n) {
    std::vector<FinitePoset::Relation> rel;
    for (unsigned r = 0; r < rows; ++r)
        for (unsigned i = 1; i <= n; ++i) {
            const unsigned e = r * n + i;
            if (i < n) rel.emplace_back(e, e + 1);
            if (r + 1 < rows) rel.emplace_back(e, e + n);
        }
    return FinitePoset(rows * n, rel);
}

FinitePoset q_poset(unsigned n) { return grid_poset(2, n); }

std::vector<unsigned> q_chain(unsigned n) {
    std::vector<unsigned> c(n);
    for (unsigned i = 0; i < n; ++i) c[i] = n + i + 1;
    return c;
}

FinitePoset with_top(const FinitePoset& p) {
    if (p.size() > 0 && p.top() != 0) return p;
    std::vector<FinitePoset::Relation> rel(p.covers());
    for (unsigned e = 1; e <= p.size(); ++e) rel.emplace_back(e, p.size() + 1);
    return FinitePoset(p.size() + 1, rel);
}

namespace {

void extend_word(const FinitePoset& p, std::uint32_t placed, Word& word, std::vector<Word>& out) {
    if (word.size() == p.size()) {
        out.push_back(word);
        return;
    }
    for (unsigned e = 1; e <= p.size(); ++e) {
        if (placed & bit(e)) continue;
        if ((p.below(e) & ~placed) != 0) continue;
        word.push_back(e);
        extend_word(p, placed | bit(e), word, out);
        word.pop_back();
    }
}

}  // namespace

std::vector<Word> linear_extensions(const FinitePoset& p) {
    if (p.size() > kMaxExtensionPoset)
        throw ResourceError("linear_extensions: poset larger than " + std::to_string(kMaxExtensionPoset));
    std::vector<Word> out;
    Word word;
    extend_word(p, 0, word, out);
    return out;
}

void validate_chain(const FinitePoset& p, std::span<const unsigned> chain) {
    if (chain.empty()) throw EmptyInputError("chain: empty");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!p.less(chain[i], chain[i + 1])) throw DomainError("chain: elements are not a strictly increasing chain");
    if (p.top() == 0 || chain.back() != p.top())
        throw DomainError("chain: last element must be the unique maximal element");
}

HeightsDescents heights_descents(std::span<const unsigned> word, std::span<const unsigned> chain) {
    const std::size_t p = word.size();
    std::vector<unsigned> pos(p + 1, 0);
    for (std::size_t j = 0; j < p; ++j) {
        if (word[j] < 1 || word[j] > p) throw DomainError("word: not a permutation");
        pos[word[j]] = static_cast<unsigned>(j + 1);
    }
    HeightsDescents out;
    unsigned prev = 0;
    for (unsigned t : chain) {
        const unsigned h = pos.at(t);
        if (h <= prev) throw DomainError("heights: chain is not increasing in the word");
        unsigned d = 0;
        // Descent at position j compares a_j with a_{j+1}; a_0 = 0 never descends.
        for (unsigned j = std::max(prev, 1u); j < h; ++j)
            if (word[j - 1] > word[j]) ++d;
        out.h.push_back(h);
        out.d.push_back(d);
        prev = h;
    }
    return out;
}

Integer section_count(const FinitePoset& p, std::span<const unsigned> chain, std::span<const std::int64_t> x) {
    validate_chain(p, chain);
    if (x.size() != chain.size()) throw DimensionError("section_count: x and chain lengths differ");
    for (auto v : x)
        if (v < 0) throw DomainError("section_count: negative x");
    Integer total = 0;
    for (const auto& w : linear_extensions(p)) {
        const auto hd = heights_descents(w, chain);
        Integer term = 1;
        unsigned prev = 0;
        for (std::size_t i = 0; i < chain.size() && term != 0; ++i) {
            const Integer top = Integer(static_cast<long>(x[i])) - hd.d[i] + 1;
            term *= multichoose(top, hd.h[i] - prev - 1);
            prev = hd.h[i];
        }
        total += term;
    }
    return total;
}

Integer section_count_oracle(const FinitePoset& p, std::span<const unsigned> chain,
                             std::span<const std::int64_t> x, Exec exec) {
    validate_chain(p, chain);
    if (x.size() != chain.size()) throw DimensionError("section_count: x and chain lengths differ");
    std::vector<std::int64_t> fixed(p.size() + 1, -1);
    std::int64_t u = 0;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (x[i] < 0) throw DomainError("section_count: negative x");
        fixed[chain[i]] = u += x[i];
    }
    std::vector<unsigned> free;
    for (unsigned e = 1; e <= p.size(); ++e)
        if (fixed[e] < 0) free.push_back(e);
    std::vector<int> slot(p.size() + 1, -1);
    for (std::size_t k = 0; k < free.size(); ++k) slot[free[k]] = static_cast<int>(k);
    const std::vector<std::int64_t> bounds(free.size(), u);
    const auto& covers = p.covers();
    auto pred = [&](const Point& f) {
        for (auto [a, b] : covers) {
            const auto fa = slot[a] < 0 ? fixed[a] : f[slot[a]];
            const auto fb = slot[b] < 0 ? fixed[b] : f[slot[b]];
            if (fa > fb) return false;
        }
        return true;
    };
    return Integer(static_cast<unsigned long>(count_box(exec, bounds, pred, kDefaultScanLimit, "section oracle")));
}

Polynomial section_count_symbolic(const FinitePoset& p, std::span<const unsigned> chain) {
    validate_chain(p, chain);
    const std::size_t n = chain.size();
    Polynomial total(n);
    for (const auto& w : linear_extensions(p)) {
        const auto hd = heights_descents(w, chain);
        Polynomial term = Polynomial::constant(n, 1);
        unsigned prev = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto top = Polynomial::variable(n, i) + Polynomial::constant(n, Rational(1 - static_cast<long>(hd.d[i])));
            term *= multichoose(top, hd.h[i] - prev - 1);
            prev = hd.h[i];
        }
        total += term;
    }
    return total;
}

Polynomial section_volume(const FinitePoset& p, std::span<const unsigned> chain) {
    validate_chain(p, chain);
    const std::size_t n = chain.size();
    Polynomial total(n);
    for (const auto& w : linear_extensions(p)) {
        const auto hd = heights_descents(w, chain);
        Exponents e(n);
        Integer denom = 1;
        unsigned prev = 0;
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = hd.h[i] - prev - 1;  // t_i itself is fixed
            denom *= factorial(e[i]);
            prev = hd.h[i];
        }
        total += Polynomial::monomial(e, make_rational(1, denom));
    }
    return total;
}

namespace {

// Minimal elements of the complement of `ideal`.
std::uint32_t minimal_outside(const FinitePoset& p, std::uint32_t ideal) {
    std::uint32_t m = 0;
    for (unsigned e = 1; e <= p.size(); ++e)
        if (!(ideal & bit(e)) && (p.below(e) & ~ideal) == 0) m |= bit(e);
    return m;
}

constexpr unsigned kMaxIdealPoset = 16;

}  // namespace

IdealLattice ideal_lattice(const FinitePoset& p) {
    if (p.size() > kMaxIdealPoset) throw ResourceError("ideal_lattice: poset larger than 16");
    std::set<std::uint32_t> seen{0};
    std::vector<std::uint32_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (auto ideal : frontier) {
            const auto m = minimal_outside(p, ideal);
            for (unsigned e = 1; e <= p.size(); ++e)
                if ((m & bit(e)) && seen.insert(ideal | bit(e)).second) next.push_back(ideal | bit(e));
        }
        frontier = std::move(next);
    }
    IdealLattice out;
    out.ideals.assign(seen.begin(), seen.end());
    std::stable_sort(out.ideals.begin(), out.ideals.end(), [](auto a, auto b) {
        const auto pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::map<std::uint32_t, std::size_t> index;
    for (std::size_t i = 0; i < out.ideals.size(); ++i) index[out.ideals[i]] = i;
    for (std::size_t i = 0; i < out.ideals.size(); ++i) {
        const auto m = minimal_outside(p, out.ideals[i]);
        for (unsigned e = 1; e <= p.size(); ++e)
            if (m & bit(e)) out.covers.emplace_back(i, index.at(out.ideals[i] | bit(e)));
    }
    return out;
}

LoewyStats loewy_interior_stats(const FinitePoset& p) {
    const auto lattice = ideal_lattice(p);
    const auto& ideals = lattice.ideals;
    std::map<std::uint32_t, std::size_t> index;
    for (std::size_t i = 0; i < ideals.size(); ++i) index[ideals[i]] = i;
    const std::size_t count = ideals.size();
    const unsigned p_size = p.size();

    // Every Loewy step adds a nonempty subset of the minimal elements outside.
    auto steps = [&](std::uint32_t ideal) {
        std::vector<std::uint32_t> out;
        const auto m = minimal_outside(p, ideal);
        for (std::uint32_t s = m; s != 0; s = (s - 1) & m) out.push_back(ideal | s);
        return out;
    };

    // forward[i][k]: Loewy chains from the empty ideal to ideals[i] in k steps.
    std::vector<std::vector<Integer>> forward(count, std::vector<Integer>(p_size + 1, 0));
    forward[0][0] = 1;
    for (std::size_t i = 0; i < count; ++i)
        for (auto next : steps(ideals[i])) {
            auto& dst = forward[index.at(next)];
            for (unsigned k = 0; k < p_size; ++k) dst[k + 1] += forward[i][k];
        }
    // backward[i]: Loewy chains from ideals[i] up to P, any length.
    std::vector<Integer> backward(count, 0);
    backward[count - 1] = 1;
    for (std::size_t i = count; i-- > 0;)
        for (auto next : steps(ideals[i])) backward[i] += backward[index.at(next)];

    LoewyStats stats;
    Integer total = 0;
    for (unsigned k = 0; k <= p_size; ++k)
        if (forward[count - 1][k] != 0) {
            stats.by_length[k] = forward[count - 1][k];
            total += forward[count - 1][k];
        }
    for (std::size_t i = 0; i < count; ++i) {
        Integer through = 0;
        for (const auto& v : forward[i]) through += v;
        if (through * backward[i] == total) ++stats.common_ideals;
    }
    // A chain with k steps has k+1 ideals; dropping the shared ones leaves a
    // simplex of dimension k + 1 - common - 1.
    for (const auto& [k, c] : stats.by_length)
        stats.by_dimension[static_cast<int>(k) - static_cast<int>(stats.common_ideals)] = c;
    return stats;
}

bool minkowski_support_check(std::span<const Rational> x, unsigned trials, std::uint64_t seed) {
    const auto verts = polytope_vertices(x);
    const std::size_t n = x.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (unsigned t = 0; t < trials; ++t) {
        std::vector<Rational> w(n);
        for (auto& wi : w) wi = coord(rng);
        Rational best;
        bool first = true;
        for (const auto& v : verts) {
            Rational dot = 0;
            for (std::size_t i = 0; i < n; ++i) dot += w[i] * v[i];
            if (first || dot > best) best = dot;
            first = false;
        }
        Rational formula = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Rational m = 0;
            for (std::size_t j = i; j < n; ++j) m = std::max(m, w[j]);
            formula += x[i] * m;
        }
        if (best != formula) return false;
    }
    return true;
}

}  // namespace prefixpoly
