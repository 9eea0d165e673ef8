#pragma once

// Order-statistic band probabilities through V_n, the multinomial ballot
// pair, Daniels' and Pyke's formulas, and a seeded Monte Carlo validator.
//
// Monte Carlo trials are split into shards of kShardTrials.  Shard k draws
// from mt19937_64 seeded with seed_seq{lo32(seed), hi32(seed), lo32(k), hi32(k)}, so the
// serial and OpenMP runs see the same streams and return the same counts.

#include <cstdint>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prefixpoly/exactmath.hpp"
#include "prefixpoly/kernels.hpp"
#include "prefixpoly/treefan.hpp"

namespace prefixpoly {

/// Throws DomainError unless 0 <= v_1 <= ... <= v_n <= 1.
void require_simplex(std::span<const Rational> v, const char* what);

/// P(U_{n,j} <= s_j for all j) = n! V_n(s_1, s_2 - s_1, ...).
Rational upper_band_prob(std::span<const Rational> s);
/// P(U_{n,j} >= r_j for all j) = n! V_n(1 - r_n, r_n - r_{n-1}, ..., r_2 - r_1).
Rational lower_band_prob(std::span<const Rational> r);
/// P(r_j <= U_{n,j} <= s_j) by the determinant
/// n! det[ (s_i - r_j)_+^{j-i+1} / (j-i+1)! ], entries zero for j < i - 1.
Rational band_prob(std::span<const Rational> r, std::span<const Rational> s);
/// V_n(x) for any x >= 0 from band_prob after scaling by sigma = x_1 + ... + x_n.
Rational volume_band_route(std::span<const Rational> x);

/// (P(N_1 + ... + N_i >= i for all i <= n), P(N_1 + ... + N_i < i for all i <= n))
/// for a multinomial(n; p_1..p_{n+1}) vector, via V_n.
std::pair<Rational, Rational> multinomial_ballot(std::span<const Rational> p);
/// The same two events plus "neither", summed over every outcome.
std::tuple<Rational, Rational, Rational> multinomial_ballot_oracle(std::span<const Rational> p);

/// n! V_n(1 - p, p/n, ..., p/n) as a polynomial in p.
Polynomial daniels_poly(unsigned n);
/// lower_band_prob with r_j = j p / n.
Rational daniels_prob(unsigned n, const Rational& p);

/// (1+x-nb) sum_{j=0}^{floor(x/b)} binom(n,j) (jb-x)^j (1+x-jb)^{n-j-1};
/// requires 0 < b <= 1, x >= 0 and 0 <= nb - x <= 1.
Rational pyke_formula(unsigned n, const Rational& b, const Rational& x);
/// Argument vector at which n! V_n equals the same probability.
std::vector<Rational> pyke_vector(unsigned n, const Rational& b, const Rational& x);

struct MonteCarloResult {
    double estimate = 0;
    double std_error = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    nlohmann::json to_json() const;
};

inline constexpr std::uint64_t kShardTrials = 4096;

/// Frequency of r_j <= U_{n,j} <= s_j.  An empty r means no lower band.
MonteCarloResult mc_band(std::span<const Rational> r, std::span<const Rational> s, std::uint64_t trials,
                         std::uint64_t seed, Exec exec = Exec::parallel);

/// Rejection sampling of Delta_T inside the box prod [0, u_i].
struct MonteCarloVolume {
    MonteCarloResult hits;  ///< fraction of box samples inside the cell
    double box_volume = 0;
    double estimate() const { return hits.estimate * box_volume; }
    double std_error() const { return hits.std_error * box_volume; }
};
MonteCarloVolume mc_delta_volume(const PlaneBinaryTree& t, std::span<const Rational> x, std::uint64_t trials,
                                 std::uint64_t seed, Exec exec = Exec::parallel);

}  // namespace prefixpoly
