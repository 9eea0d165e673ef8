#pragma once

// Finite naturally labeled posets, linear extensions, and sections of the
// order cone along a chain ending at the top element.

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prefixpoly/exactmath.hpp"
#include "prefixpoly/kernels.hpp"

namespace prefixpoly {

/// Elements are 1..p; every relation a < b has a < b as integers.
/// At most 32 elements.
class FinitePoset {
public:
    using Relation = std::pair<unsigned, unsigned>;

    FinitePoset() = default;
    /// `relations` may be any generating set; covers are derived from it.
    FinitePoset(unsigned size, std::span<const Relation> relations);

    unsigned size() const { return size_; }
    /// Strict order on 1-based labels.
    bool less(unsigned a, unsigned b) const;
    /// Bitmask (bit i-1 for element i) of elements strictly below element e.
    std::uint32_t below(unsigned e) const { return below_[e - 1]; }
    std::uint32_t above(unsigned e) const { return above_[e - 1]; }
    const std::vector<Relation>& covers() const { return covers_; }
    /// The unique maximal element, or 0 if there is none.
    unsigned top() const;

    nlohmann::json to_json() const;
    static FinitePoset from_json(const nlohmann::json& j);

private:
    unsigned size_ = 0;
    std::vector<std::uint32_t> below_;
    std::vector<std::uint32_t> above_;
    std::vector<Relation> covers_;
};

FinitePoset chain_poset(unsigned p);
FinitePoset antichain_poset(unsigned p);
/// Product of chains rows x n: element (r, i) has label r*n + i (r = 0..rows-1,
/// i = 1..n); (r, i) < (r, i+1) and (r, i) < (r+1, i).
FinitePoset grid_poset(unsigned rows, unsigned n);
/// The 2 x n grid.  Its top row alpha_{n+1} < ... < alpha_{2n} is the marked chain.
FinitePoset q_poset(unsigned n);
std::vector<unsigned> q_chain(unsigned n);
/// Adds an element p+1 above everything when P has no unique maximum.
FinitePoset with_top(const FinitePoset& p);

using Word = std::vector<unsigned>;
inline constexpr unsigned kMaxExtensionPoset = 12;

/// Lexicographically ordered; throws ResourceError when size > 12.
std::vector<Word> linear_extensions(const FinitePoset& p);

/// Throws DomainError unless chain is a strictly increasing chain of P ending at its top.
void validate_chain(const FinitePoset& p, std::span<const unsigned> chain);

struct HeightsDescents {
    std::vector<unsigned> h;  ///< h_i = position of t_i in the word, 1-based
    std::vector<unsigned> d;  ///< descents at positions j with h_{i-1} <= j < h_i
};
HeightsDescents heights_descents(std::span<const unsigned> word, std::span<const unsigned> chain);

/// Number of integer points of the section, from linear extensions.
Integer section_count(const FinitePoset& p, std::span<const unsigned> chain,
                      std::span<const std::int64_t> x);
/// Same count by scanning all maps P - C -> {0..u_n}.
Integer section_count_oracle(const FinitePoset& p, std::span<const unsigned> chain,
                             std::span<const std::int64_t> x, Exec exec = Exec::parallel);
/// The count as a polynomial in x_1..x_n.
Polynomial section_count_symbolic(const FinitePoset& p, std::span<const unsigned> chain);
/// Volume of the section: sum over extensions of prod x_i^{g_i} / g_i!, g_i = h_i - h_{i-1} - 1.
Polynomial section_volume(const FinitePoset& p, std::span<const unsigned> chain);

struct IdealLattice {
    std::vector<std::uint32_t> ideals;  ///< sorted by size, then value
    std::vector<std::pair<std::size_t, std::size_t>> covers;  ///< indices into ideals
};
IdealLattice ideal_lattice(const FinitePoset& p);

struct LoewyStats {
    /// Keyed by dimension of the chain as a face of the order complex of J(P)
    /// once the ideals shared by every Loewy chain are removed.
    std::map<int, Integer> by_dimension;
    /// Keyed by the number of steps k of the chain.
    std::map<unsigned, Integer> by_length;
    unsigned common_ideals = 0;
};
LoewyStats loewy_interior_stats(const FinitePoset& p);

/// Support function of Pi_n(x) computed from its vertices, compared against
/// sum_i x_i max(0, w_i, ..., w_n) for random integer directions w.
bool minkowski_support_check(std::span<const Rational> x, unsigned trials, std::uint64_t seed);

}  // namespace prefixpoly
