#include "prefixpoly/probability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "prefixpoly/volume.hpp"

namespace prefixpoly {

void require_simplex(std::span<const Rational> v, const char* what) {
    if (v.empty()) throw EmptyInputError(std::string(what) + ": empty vector");
    Rational prev = 0;
    for (const auto& c : v) {
        if (c < prev || c > 1) throw DomainError(std::string(what) + ": entries must satisfy 0 <= v_1 <= ... <= v_n <= 1");
        prev = c;
    }
}

Rational upper_band_prob(std::span<const Rational> s) {
    require_simplex(s, "upper_band_prob");
    std::vector<Rational> x(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) x[j] = s[j] - (j ? s[j - 1] : Rational(0));
    return Rational(factorial(static_cast<unsigned>(s.size()))) * volume_at(x);
}

Rational lower_band_prob(std::span<const Rational> r) {
    require_simplex(r, "lower_band_prob");
    const std::size_t n = r.size();
    // x_j = r_{n+2-j} - r_{n+1-j} with r_{n+1} = 1 (1-based).
    auto at = [&](std::size_t i) { return i == n + 1 ? Rational(1) : r[i - 1]; };
    std::vector<Rational> x(n);
    for (std::size_t j = 1; j <= n; ++j) x[j - 1] = at(n + 2 - j) - at(n + 1 - j);
    return Rational(factorial(static_cast<unsigned>(n))) * volume_at(x);
}

Rational band_prob(std::span<const Rational> r, std::span<const Rational> s) {
    require_simplex(r, "band_prob r");
    require_simplex(s, "band_prob s");
    if (r.size() != s.size()) throw DimensionError("band_prob: r and s lengths differ");
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i)
        if (r[i] > s[i]) throw DomainError("band_prob: need r_i <= s_i");
    RationalMatrix m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i == 0 ? 0 : i - 1; j < n; ++j) {
            const unsigned e = static_cast<unsigned>(j + 1 - i);
            const Rational d = s[i] - r[j];
            if (e == 0)
                m(i, j) = 1;
            else if (d > 0)
                m(i, j) = pow(d, e) / Rational(factorial(e));
        }
    return Rational(factorial(static_cast<unsigned>(n))) * determinant(m);
}

Rational volume_band_route(std::span<const Rational> x) {
    require_nonnegative(x, "volume_band_route");
    const auto u = prefix_sums(x);
    const Rational sigma = u.back();
    const auto n = static_cast<unsigned>(x.size());
    if (sigma == 0) return 0;
    std::vector<Rational> s(n), r(n, Rational(0));
    for (unsigned i = 0; i < n; ++i) s[i] = u[i] / sigma;
    return band_prob(r, s) * pow(sigma, n) / Rational(factorial(n));
}

namespace {

void require_distribution(std::span<const Rational> p) {
    if (p.size() < 2) throw DimensionError("multinomial_ballot: need n+1 >= 2 cell probabilities");
    Rational total = 0;
    for (const auto& c : p) {
        if (c < 0) throw DomainError("multinomial_ballot: negative probability");
        total += c;
    }
    if (total != 1) throw DomainError("multinomial_ballot: probabilities must sum to 1");
}

}  // namespace

std::pair<Rational, Rational> multinomial_ballot(std::span<const Rational> p) {
    require_distribution(p);
    const std::size_t n = p.size() - 1;
    const Rational nf(factorial(static_cast<unsigned>(n)));
    std::vector<Rational> first(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<Rational> second;
    for (std::size_t i = n + 1; i >= 2; --i) second.push_back(p[i - 1]);
    return {nf * volume_at(first), nf * volume_at(second)};
}

std::tuple<Rational, Rational, Rational> multinomial_ballot_oracle(std::span<const Rational> p) {
    require_distribution(p);
    const std::size_t n = p.size() - 1;
    if (n > 8) throw ResourceError("multinomial_ballot_oracle: n > 8");
    Rational up = 0, down = 0, neither = 0;
    std::vector<unsigned> cnt(n + 1, 0);
    const Integer nf = factorial(static_cast<unsigned>(n));
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t cell, unsigned left) {
        if (cell == n) {
            cnt[n] = left;
            Rational prob(nf);
            for (std::size_t i = 0; i <= n; ++i) prob *= pow(p[i], cnt[i]) / Rational(factorial(cnt[i]));
            bool all_ge = true, all_lt = true;
            unsigned prefix = 0;
            for (std::size_t i = 1; i <= n; ++i) {
                prefix += cnt[i - 1];
                if (prefix < i) all_ge = false;
                if (prefix >= i) all_lt = false;
            }
            (all_ge ? up : all_lt ? down : neither) += prob;
            return;
        }
        for (unsigned c = 0; c <= left; ++c) {
            cnt[cell] = c;
            rec(cell + 1, left - c);
        }
    };
    rec(0, static_cast<unsigned>(n));
    return {up, down, neither};
}

Polynomial daniels_poly(unsigned n) {
    // Evaluate V_n at polynomial arguments by substituting into a copy over n+1 variables.
    Polynomial v = volume_poly(n);
    Polynomial lifted(n + 1);
    for (const auto& [e, c] : v.terms()) {
        Exponents ext(e.begin(), e.end());
        ext.push_back(0);
        lifted += Polynomial::monomial(ext, c);
    }
    const Polynomial pv = Polynomial::variable(n + 1, n);
    lifted = lifted.substitute(0, Polynomial::constant(n + 1, 1) - pv);
    for (unsigned i = 1; i < n; ++i) lifted = lifted.substitute(i, pv * make_rational(1, n));
    Polynomial out(1);
    for (const auto& [e, c] : lifted.terms()) out += Polynomial::monomial(Exponents{e[n]}, c);
    return out * Rational(factorial(n));
}

Rational daniels_prob(unsigned n, const Rational& p) {
    if (p < 0 || p > 1) throw DomainError("daniels_prob: need 0 <= p <= 1");
    std::vector<Rational> r(n);
    for (unsigned j = 1; j <= n; ++j) r[j - 1] = p * make_rational(j, n);
    return lower_band_prob(r);
}

namespace {

Integer floor_div(const Rational& x, const Rational& b) {
    const Rational q = x / b;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

void require_pyke(unsigned n, const Rational& b, const Rational& x) {
    if (n == 0) throw EmptyInputError("pyke: n = 0");
    if (!(b > 0) || b > 1) throw DomainError("pyke: need 0 < b <= 1");
    if (x < 0) throw DomainError("pyke: need x >= 0");
    const Rational gap = n * b - x;
    if (gap < 0 || gap > 1) throw DomainError("pyke: need 0 <= n b - x <= 1");
}

}  // namespace

Rational pyke_formula(unsigned n, const Rational& b, const Rational& x) {
    require_pyke(n, b, x);
    const Integer top = floor_div(x, b);
    const unsigned jmax = static_cast<unsigned>(std::min<long>(top.get_si(), n));
    Rational sum = 0;
    for (unsigned j = 0; j <= jmax; ++j) {
        const Rational base = 1 + x - j * b;
        Rational term = Rational(binomial(Integer(n), j)) * pow(Rational(j * b - x), j);
        if (j + 1 <= n)
            term *= pow(base, n - j - 1);
        else
            term /= base;  // j = n happens only when x = nb, where the factor (nb - x)^n is already 0
        sum += term;
    }
    return (1 + x - n * b) * sum;
}

std::vector<Rational> pyke_vector(unsigned n, const Rational& b, const Rational& x) {
    require_pyke(n, b, x);
    const auto m = static_cast<unsigned>(std::min<long>(floor_div(x, b).get_si(), n));
    std::vector<Rational> v(n, Rational(0));
    v[0] = 1 + x - n * b;
    const unsigned cut = n - m + 1;  // 1-based index of the partial entry
    for (unsigned i = 2; i <= n; ++i) {
        if (i < cut)
            v[i - 1] = b;
        else if (i == cut)
            v[i - 1] = (n - i + 2) * b - x;
    }
    return v;
}

nlohmann::json MonteCarloResult::to_json() const {
    return {{"estimate", estimate}, {"std_error", std_error}, {"trials", trials}, {"seed", seed}, {"monte_carlo", true}};
}

namespace {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::mt19937_64 shard_rng(std::uint64_t seed, std::uint64_t shard) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(shard & 0xffffffffu), static_cast<std::uint32_t>(shard >> 32)};
    return std::mt19937_64(seq);
}

// Counts successful trials; `trial` draws from the shard generator.
template <class Trial>
std::uint64_t sharded_hits(std::uint64_t trials, std::uint64_t seed, Exec exec, Trial&& trial) {
    const auto shards = static_cast<std::int64_t>((trials + kShardTrials - 1) / kShardTrials);
    auto run_shard = [&](std::int64_t k) {
        auto rng = shard_rng(seed, static_cast<std::uint64_t>(k));
        const auto begin = static_cast<std::uint64_t>(k) * kShardTrials;
        const auto end = std::min(trials, begin + kShardTrials);
        std::uint64_t h = 0;
        for (auto t = begin; t < end; ++t)
            if (trial(rng)) ++h;
        return h;
    };
    std::uint64_t hits = 0;
    if (exec == Exec::serial) {
        for (std::int64_t k = 0; k < shards; ++k) hits += run_shard(k);
    } else {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : hits)
        for (std::int64_t k = 0; k < shards; ++k) hits += run_shard(k);
    }
    return hits;
}

MonteCarloResult finish(std::uint64_t hits, std::uint64_t trials, std::uint64_t seed) {
    MonteCarloResult res;
    res.trials = trials;
    res.seed = seed;
    res.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    res.std_error = std::sqrt(res.estimate * (1 - res.estimate) / static_cast<double>(trials));
    return res;
}

}  // namespace

MonteCarloResult mc_band(std::span<const Rational> r, std::span<const Rational> s, std::uint64_t trials,
                         std::uint64_t seed, Exec exec) {
    if (trials == 0) throw DomainError("mc_band: trials must be positive");
    require_simplex(s, "mc_band s");
    if (!r.empty()) {
        require_simplex(r, "mc_band r");
        if (r.size() != s.size()) throw DimensionError("mc_band: r and s lengths differ");
    }
    const std::size_t n = s.size();
    std::vector<double> lo(n, 0.0), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        hi[i] = s[i].get_d();
        if (!r.empty()) lo[i] = r[i].get_d();
    }
    const auto hits = sharded_hits(trials, seed, exec, [&](std::mt19937_64& rng) {
        std::vector<double> u(n);
        for (auto& v : u) v = uniform01(rng);
        std::sort(u.begin(), u.end());
        for (std::size_t i = 0; i < n; ++i)
            if (u[i] < lo[i] || u[i] > hi[i]) return false;
        return true;
    });
    return finish(hits, trials, seed);
}

MonteCarloVolume mc_delta_volume(const PlaneBinaryTree& t, std::span<const Rational> x, std::uint64_t trials,
                                 std::uint64_t seed, Exec exec) {
    if (trials == 0) throw DomainError("mc_delta_volume: trials must be positive");
    if (x.size() != t.size()) throw DimensionError("mc_delta_volume: sizes differ");
    require_nonnegative(x, "mc_delta_volume");
    const std::size_t n = x.size();
    const auto u = prefix_sums(x);
    std::vector<double> xd(n), ud(n);
    double box = 1;
    for (std::size_t i = 0; i < n; ++i) {
        xd[i] = x[i].get_d();
        ud[i] = u[i].get_d();
        box *= ud[i];
    }
    const auto ineq = fan_inequalities(t);
    const auto hits = sharded_hits(trials, seed, exec, [&](std::mt19937_64& rng) {
        std::vector<double> y(n);
        double acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = uniform01(rng) * ud[i];
            acc += y[i];
            if (acc > ud[i]) return false;
        }
        for (const auto& q : ineq) {
            double sum = 0;
            for (unsigned h = q.lo; h <= q.hi; ++h) sum += y[h - 1] - xd[h - 1];
            if (q.upper ? sum > 0 : sum < 0) return false;
        }
        return true;
    });
    return {finish(hits, trials, seed), box};
}

}  // namespace prefixpoly
