#pragma once

// The volume polynomial V_n(x) of Pi_n(x) = { y >= 0 : y_1 + ... + y_i <= x_1 + ... + x_i }.

#include <span>
#include <vector>

#include "prefixpoly/exactmath.hpp"

namespace prefixpoly {

/// u_i = x_1 + ... + x_i.
std::vector<Rational> prefix_sums(std::span<const Rational> x);
/// Throws DomainError unless every entry is >= 0 and the vector is nonempty.
void require_nonnegative(std::span<const Rational> x, const char* what);

/// Sum over K_n of prod x_i^{k_i} / k_i!.  Memoized; safe to call concurrently.
const Polynomial& volume_poly(unsigned n);
/// Determinant of [u_i^{j-i+1} / (j-i+1)!] (zero below the subdiagonal), expanded in x.
Polynomial volume_steck(unsigned n);

/// V_n(x) from volume_poly.
Rational volume_at(std::span<const Rational> x);
/// V_n(x) from the numeric Steck determinant.
Rational volume_steck_at(std::span<const Rational> x);

/// a (a + n b)^{n-1}, which is n! V_n(a, b, ..., b).
Rational special_ab(unsigned n, const Rational& a, const Rational& b);
/// n! V_n(a, b, ..., b, c); n >= 3.
Rational special_abc(unsigned n, const Rational& a, const Rational& b, const Rational& c);
/// n! V_n(a, b (n-m-1 times), c, 0 (m-1 times)); 1 <= m <= n-2.
Rational special_abcm(unsigned n, unsigned m, const Rational& a, const Rational& b, const Rational& c);
std::vector<Rational> abcm_arguments(unsigned n, unsigned m, const Rational& a, const Rational& b,
                                     const Rational& c);

/// n! V_n(1, q, q^2, ..., q^{n-1}).
Rational q_specialization(unsigned n, const Rational& q);
/// Inversion enumerator of labeled trees on {0, ..., n} rooted at 0, as a
/// polynomial in one variable.  Brute force over Pruefer codes; n <= 6.
Polynomial inversion_oracle(unsigned n);

}  // namespace prefixpoly
