#pragma once

// Lattice points of Pi_n(x), its Ehrhart polynomial, plane partitions, the
// m-fold generalization Pi_n^m, Steck's monotone-sequence count and the
// two-sided polytope Pi_n(z, x).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prefixpoly/exactmath.hpp"
#include "prefixpoly/kernels.hpp"

namespace prefixpoly {

using IntVector = std::vector<std::int64_t>;

/// Throws DomainError for non-integer or negative entries.
IntVector to_natural_vector(std::span<const Rational> x, const char* what);
IntVector integer_prefix_sums(std::span<const std::int64_t> x);

/// Sum over K_n of mc(x_1 + 1, k_1) prod_{i >= 2} mc(x_i, k_i).
Integer count_points(std::span<const std::int64_t> x);
/// The same sum as a polynomial in x_1..x_n.
Polynomial lattice_poly(unsigned n);
/// Scan of the box 0 <= y_i <= u_i.
Integer count_points_brute(std::span<const std::int64_t> x, Exec exec = Exec::parallel,
                           std::uint64_t limit = kDefaultScanLimit);

/// (1/n!)(r a + 1) prod_{k=2}^n (r(a + n b) + k), as a polynomial in r.
Polynomial ehrhart_ab(unsigned n, const Integer& a, const Integer& b);
/// lattice_poly(n) with x_1 replaced by x_1 - 1 has no negative coefficient.
bool shifted_nonneg_check(unsigned n);

using Shape = std::vector<std::int64_t>;
/// (u_n, ..., u_1).
Shape shape_of(std::span<const std::int64_t> x);
/// Fillings of the shape with entries in 1..maxpart, weakly decreasing along
/// rows and columns.  Backtracking; throws ResourceError after node_budget nodes.
Integer plane_partitions(std::span<const std::int64_t> shape, unsigned maxpart,
                         std::uint64_t node_budget = 200'000'000);
/// Same count by a row-to-row transfer over weakly decreasing rows.
Integer plane_partitions_transfer(std::span<const std::int64_t> shape, unsigned maxpart);

/// Integer n x m matrices y >= 0 with v_{i1} <= ... <= v_{im} <= u_i where
/// v_{ij} = y_{1j} + ... + y_{ij}.
Integer count_points_nm(std::span<const std::int64_t> x, unsigned m, Exec exec = Exec::parallel,
                        std::uint64_t limit = kDefaultScanLimit);
/// [1! 2! ... m! f^{<m^n>} (n+m)^{n-1} (n+m-1)^{n-2} ... (n+1)^{n-m}] / (nm)!,
/// the stated volume of Pi_n^m(a, b, ..., b).  a and b do not enter.
Rational volume_nm_formula(unsigned n, unsigned m, const Integer& a, const Integer& b);
/// Leading coefficient of r -> N(Pi_n^m(r x)), x = (a, b, ..., b), interpolated
/// from plane-partition counts at r = 0..nm.
Rational volume_nm_interpolated(unsigned n, unsigned m, const Integer& a, const Integer& b);

/// det[ 1(j-i+1 >= 0, c_i - b_j > 1) binom(c_i - b_j + j - i - 1, j - i + 1) ].
Integer steck_count(std::span<const std::int64_t> b, std::span<const std::int64_t> c);
/// Tuples j_1 < ... < j_n with b_i < j_i < c_i, counted directly.
Integer steck_count_brute(std::span<const std::int64_t> b, std::span<const std::int64_t> c);

/// Points of { y >= 0 : v_i <= y_1 + ... + y_i <= u_i } by scanning.
Integer two_sided_count(std::span<const std::int64_t> z, std::span<const std::int64_t> x,
                        Exec exec = Exec::parallel, std::uint64_t limit = kDefaultScanLimit);
/// Closed form for n = 2.
Integer two_sided_closed_form(std::span<const std::int64_t> z, std::span<const std::int64_t> x);

struct TwoSidedCell {
    std::vector<unsigned> word;  ///< linear extension of the 3 x n grid
    std::string text;            ///< e.g. "0 <= v1 <= y1 < v2 <= u1 <= y1+y2 <= u2"
};
std::vector<TwoSidedCell> two_sided_cells(unsigned n);
/// Integer points of one cell; 0 when its chain of constants is inconsistent.
Integer two_sided_cell_count(const TwoSidedCell& cell, std::span<const std::int64_t> z,
                             std::span<const std::int64_t> x);
Integer two_sided_cell_sum(std::span<const std::int64_t> z, std::span<const std::int64_t> x);

}  // namespace prefixpoly
