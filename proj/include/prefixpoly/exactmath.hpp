#pragma once

// Exact scalars, sparse multivariate polynomials and determinants.
//
// Rationals are GMP mpq_class values.  Every gmpxx arithmetic result is kept
// in canonical form (positive denominator, reduced), so field-wise equality is
// value equality; values built from a numerator/denominator pair must go
// through make_rational().

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "prefixpoly/errors.hpp"

namespace prefixpoly {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
/// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
bool is_integer(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

Integer factorial(unsigned n);
/// binom(top, k) for any integer top, as the polynomial top(top-1)...(top-k+1)/k!.
Integer binomial(const Integer& top, unsigned k);

/// k(k+1)...(k+j-1)/j!, i.e. the number of j-multisets from a k-set.
Integer multichoose(const Integer& k, unsigned j);

/// Standard Young tableaux of the rectangle with n rows of length m.
Integer hook_count_rectangular(unsigned m, unsigned n);

using Exponents = std::vector<unsigned>;

/// Canonical term order: higher total degree first, then lexicographically
/// larger exponent vectors first.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

    /// Zero polynomial over zero variables; promotes to any arity in arithmetic.
    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    /// x_{index+1} over nvars variables.
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(Exponents exps, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Exponents& exps) const;
    unsigned total_degree() const;
    bool is_homogeneous() const;
    Polynomial homogeneous_part(unsigned degree) const;

    Rational evaluate(std::span<const Rational> point) const;
    /// Replaces variable `var` by `value` (a polynomial over the same variables).
    Polynomial substitute(std::size_t var, const Polynomial& value) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const;

    Polynomial pow(unsigned exponent) const;

    bool operator==(const Polynomial& other) const;

    /// Terms in canonical order, e.g. "1/6 x1^3 + 1/2 x1^2 x2 + x1 x2 x3".
    /// Default variable names are x1..xn.
    std::string to_string(std::span<const std::string> names = {}) const;
    nlohmann::json to_json() const;
    static Polynomial from_json(const nlohmann::json& j);

private:
    void add_term(const Exponents& exps, const Rational& c);
    std::size_t nvars_ = 0;
    TermMap terms_;
};

Polynomial multichoose(const Polynomial& k, unsigned j);

/// Univariate helper: the polynomial in one variable with the given
/// coefficients, coeffs[i] multiplying t^i.
Polynomial univariate(std::span<const Rational> coeffs);

/// The polynomial p of degree <= d in one variable with p(r) = values[r],
/// r = 0..d, by Newton forward differences.
Polynomial interpolate_at_naturals(std::span<const Rational> values);

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
        Matrix out(a.rows_, b.cols_, T());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolynomialMatrix = Matrix<Polynomial>;

/// Fraction-free Gaussian elimination on the integer matrix obtained by
/// clearing row denominators.
Rational determinant(const RationalMatrix& m);
/// Division-free expansion over column subsets; exact in any commutative ring.
Polynomial determinant(const PolynomialMatrix& m);

/// Expansion over column subsets, usable for any commutative ring type.
template <class T>
T determinant_by_expansion(const Matrix<T>& m, const T& zero, const T& one) {
    if (m.rows() != m.cols()) throw DimensionError("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return one;
    if (n > 24) throw ResourceError("determinant: expansion limited to 24x24");
    // partial[mask]: signed sum over injections of the first popcount(mask) rows onto mask.
    std::vector<T> partial(std::size_t{1} << n, zero);
    partial[0] = one;
    for (std::size_t mask = 0; mask + 1 < partial.size(); ++mask) {
        if (partial[mask] == zero) continue;
        const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
        for (std::size_t c = 0; c < n; ++c) {
            if (mask & (std::size_t{1} << c)) continue;
            if (m(row, c) == zero) continue;
            const auto above = static_cast<unsigned>(__builtin_popcountll(mask >> (c + 1)));
            T term = partial[mask] * m(row, c);
            if (above % 2 == 0)
                partial[mask | (std::size_t{1} << c)] += term;
            else
                partial[mask | (std::size_t{1} << c)] -= term;
        }
    }
    return partial.back();
}

}  // namespace prefixpoly
