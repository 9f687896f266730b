#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "embedcheck/linalg/matrix.hpp"
#include "embedcheck/rings/laurent_poly.hpp"

namespace embedcheck {

namespace detail {

// Bareiss elimination in place; returns (rank, sign of the row permutation).
// After processing, entry (r-1, c) of pivot r-1 is an r x r minor of the input.
template <class Ring>
std::pair<std::size_t, int> bareiss(Matrix<LaurentPoly<Ring>>& M, bool skip_columns)
{
    using P = LaurentPoly<Ring>;
    const std::size_t m = M.rows(), n = M.cols();
    P prev = P::one(M.zero().ring(), M.zero().nvars());
    std::size_t r = 0;
    int sign = 1;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::optional<std::size_t> piv;
        for (std::size_t i = r; i < m; ++i)
            if (!M(i, c).is_zero() && (!piv || M(i, c).term_count() < M(*piv, c).term_count()))
                piv = i;
        if (!piv) {
            if (!skip_columns)
                return {r, 0};
            continue;
        }
        if (*piv != r) {
            M.swap_rows(*piv, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                P num = M(r, c) * M(i, j) - M(i, c) * M(r, j);
                auto q = num.exact_divide(prev);
                if (!q)
                    throw std::logic_error("Bareiss: inexact division");
                M(i, j) = std::move(*q);
            }
            M(i, c) = M.zero();
        }
        prev = M(r, c);
        ++r;
    }
    return {r, sign};
}

} // namespace detail

/// Rank over the fraction field Frac(Ring[x_1^+-1..x_k^+-1]); exact.
template <class Ring>
std::size_t rank_over_function_field(Matrix<LaurentPoly<Ring>> A)
{
    return detail::bareiss(A, true).first;
}

/// Determinant of a square matrix (fraction-free).
template <class Ring>
LaurentPoly<Ring> determinant(Matrix<LaurentPoly<Ring>> A)
{
    if (A.rows() != A.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = A.rows();
    if (n == 0)
        return LaurentPoly<Ring>::one(A.zero().ring(), A.zero().nvars());
    auto [r, sign] = detail::bareiss(A, false);
    if (r < n)
        return A.zero();
    return sign > 0 ? A(n - 1, n - 1) : -A(n - 1, n - 1);
}

/// Calls visit(minor) for every maximal (cols x cols) minor, rows = relations.
/// Stops early if visit returns false. No minors when rows < cols.
template <class Ring>
void for_each_maximal_minor(const Matrix<LaurentPoly<Ring>>& A,
                            const std::function<bool(const LaurentPoly<Ring>&, const std::vector<std::size_t>&)>& visit)
{
    const std::size_t m = A.rows(), n = A.cols();
    if (m < n)
        return;
    std::vector<std::size_t> cols(n), sel(n);
    for (std::size_t j = 0; j < n; ++j)
        cols[j] = j;
    for (std::size_t j = 0; j < n; ++j)
        sel[j] = j;
    for (;;) {
        if (!visit(determinant(A.submatrix(sel, cols)), sel))
            return;
        // next combination
        std::size_t k = n;
        while (k > 0 && sel[k - 1] == m - n + k - 1)
            --k;
        if (k == 0)
            return;
        ++sel[k - 1];
        for (std::size_t j = k; j < n; ++j)
            sel[j] = sel[j - 1] + 1;
    }
}

} // namespace embedcheck
