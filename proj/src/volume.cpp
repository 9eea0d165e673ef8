#include "prefixpoly/volume.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "prefixpoly/ballot.hpp"

namespace prefixpoly {

std::vector<Rational> prefix_sums(std::span<const Rational> x) {
    std::vector<Rational> u(x.size());
    Rational run = 0;
    for (std::size_t i = 0; i < x.size(); ++i) u[i] = run += x[i];
    return u;
}

void require_nonnegative(std::span<const Rational> x, const char* what) {
    if (x.empty()) throw EmptyInputError(std::string(what) + ": empty vector");
    for (const auto& v : x)
        if (v < 0) throw DomainError(std::string(what) + ": negative entry " + to_string(v));
}

namespace {

Polynomial build_volume_poly(unsigned n) {
    Polynomial v(n);
    for (const auto& k : enumerate_K(n)) {
        Integer denom = 1;
        for (unsigned ki : k) denom *= factorial(ki);
        v += Polynomial::monomial(k, make_rational(1, denom));
    }
    return v;
}

std::mutex memo_mutex;
std::map<unsigned, std::unique_ptr<const Polynomial>> memo;

}  // namespace

const Polynomial& volume_poly(unsigned n) {
    if (n == 0) throw EmptyInputError("volume_poly: n must be at least 1");
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = memo.find(n); it != memo.end()) return *it->second;
    }
    auto built = std::make_unique<const Polynomial>(build_volume_poly(n));
    std::lock_guard lock(memo_mutex);
    auto [it, inserted] = memo.try_emplace(n, std::move(built));
    return *it->second;
}

Polynomial volume_steck(unsigned n) {
    if (n == 0) throw EmptyInputError("volume_steck: n must be at least 1");
    std::vector<Polynomial> u;
    Polynomial run(n);
    for (unsigned i = 0; i < n; ++i) u.push_back(run += Polynomial::variable(n, i));
    PolynomialMatrix m(n, n, Polynomial(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (j + 1 < i) continue;
            const unsigned e = j + 1 - i;
            m(i, j) = u[i].pow(e) * make_rational(1, factorial(e));
        }
    return determinant(m);
}

Rational volume_at(std::span<const Rational> x) {
    require_nonnegative(x, "volume");
    return volume_poly(static_cast<unsigned>(x.size())).evaluate(x);
}

Rational volume_steck_at(std::span<const Rational> x) {
    require_nonnegative(x, "volume");
    const auto n = x.size();
    const auto u = prefix_sums(x);
    RationalMatrix m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j + 1 < i) continue;
            const auto e = static_cast<unsigned>(j + 1 - i);
            m(i, j) = pow(u[i], e) / Rational(factorial(e));
        }
    return determinant(m);
}

Rational special_ab(unsigned n, const Rational& a, const Rational& b) {
    if (n == 0) throw EmptyInputError("special_ab: n must be at least 1");
    return a * pow(a + n * b, n - 1);
}

Rational special_abc(unsigned n, const Rational& a, const Rational& b, const Rational& c) {
    if (n < 3) throw DomainError("special_abc: n must be at least 3");
    return a * pow(a + n * b, n - 1) + n * a * (c - b) * pow(a + (n - 1) * b, n - 2);
}

std::vector<Rational> abcm_arguments(unsigned n, unsigned m, const Rational& a, const Rational& b,
                                     const Rational& c) {
    if (n < 3 || m < 1 || m + 2 > n)
        throw DomainError("special_abcm: need n >= 3 and 1 <= m <= n-2");
    std::vector<Rational> x{a};
    x.insert(x.end(), n - m - 1, b);
    x.push_back(c);
    x.insert(x.end(), m - 1, Rational(0));
    return x;
}

Rational special_abcm(unsigned n, unsigned m, const Rational& a, const Rational& b, const Rational& c) {
    abcm_arguments(n, m, a, b, c);  // range check only
    Rational sum = 0;
    for (unsigned j = 0; j <= m; ++j)
        sum += Rational(binomial(Integer(n), j)) * pow(c - (m + 1 - j) * b, j) *
               pow(a + (n - j) * b, n - j - 1);
    return a * sum;
}

Rational q_specialization(unsigned n, const Rational& q) {
    if (q <= 0) throw DomainError("q_specialization: q must be positive");
    std::vector<Rational> x(n);
    Rational p = 1;
    for (auto& xi : x) {
        xi = p;
        p *= q;
    }
    return Rational(factorial(n)) * volume_at(x);
}

Polynomial inversion_oracle(unsigned n) {
    if (n == 0) throw EmptyInputError("inversion_oracle: n must be at least 1");
    if (n > 6) throw ResourceError("inversion_oracle: n > 6 exceeds the enumeration bound");
    const unsigned vertices = n + 1;
    const unsigned len = n - 1;
    std::vector<Integer> by_inversions(n * (n - 1) / 2 + 1, 0);
    std::vector<unsigned> code(len, 0);
    std::vector<unsigned> degree(vertices);
    std::vector<std::vector<unsigned>> adj(vertices);
    std::vector<int> parent(vertices);
    while (true) {
        // Decode the Pruefer code into an edge list.
        for (auto& a : adj) a.clear();
        std::fill(degree.begin(), degree.end(), 1u);
        for (unsigned c : code) ++degree[c];
        for (unsigned c : code) {
            unsigned leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            adj[leaf].push_back(c);
            adj[c].push_back(leaf);
            --degree[leaf];
            --degree[c];
        }
        unsigned a = vertices, b = vertices;
        for (unsigned v = 0; v < vertices; ++v)
            if (degree[v] == 1) (a == vertices ? a : b) = v;
        adj[a].push_back(b);
        adj[b].push_back(a);

        // Root at 0 and count pairs (i, j), i > j, with j an ancestor of i.
        std::vector<unsigned> stack{0};
        std::fill(parent.begin(), parent.end(), -1);
        parent[0] = 0;
        unsigned inversions = 0;
        while (!stack.empty()) {
            const unsigned v = stack.back();
            stack.pop_back();
            for (int w = parent[v]; v != 0; w = parent[w]) {
                if (static_cast<unsigned>(w) > v) ++inversions;
                if (w == 0) break;
            }
            for (unsigned w : adj[v])
                if (parent[w] < 0) {
                    parent[w] = static_cast<int>(v);
                    stack.push_back(w);
                }
        }
        ++by_inversions[inversions];

        unsigned pos = 0;
        while (pos < len && ++code[pos] == vertices) code[pos++] = 0;
        if (pos == len) break;
    }
    std::vector<Rational> coeffs(by_inversions.begin(), by_inversions.end());
    return univariate(coeffs);
}

}  // namespace prefixpoly
