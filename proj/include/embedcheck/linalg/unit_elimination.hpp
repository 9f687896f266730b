#pragma once

#include <optional>
#include <vector>

#include "embedcheck/linalg/matrix.hpp"
#include "embedcheck/rings/laurent_poly.hpp"

namespace embedcheck {

/// Inverse of a unit c * x^e of a Laurent ring (c a unit of the coefficients).
template <class Ring>
LaurentPoly<Ring> laurent_unit_inverse(const LaurentPoly<Ring>& u)
{
    auto [e, c] = u.leading_term();
    for (auto& v : e)
        v = -v;
    if constexpr (Ring::is_field)
        return LaurentPoly<Ring>::monomial(u.ring(), e, u.ring().inverse(c));
    else
        return LaurentPoly<Ring>::monomial(u.ring(), e, c); // +-1
}

/// Repeatedly pivot on unit entries of a presentation matrix (rows =
/// relations, columns = generators), deleting the pivot row and column, and
/// drop zero rows. The cokernel and its Fitting ideals are unchanged.
template <class Ring>
Matrix<LaurentPoly<Ring>> eliminate_units(Matrix<LaurentPoly<Ring>> M)
{
    using P = LaurentPoly<Ring>;
    for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> piv;
        // prefer the pivot row with fewest nonzero entries
        std::size_t best_fill = 0;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            std::size_t fill = 0;
            std::optional<std::size_t> unit_col;
            for (std::size_t j = 0; j < M.cols(); ++j) {
                if (M(i, j).is_zero())
                    continue;
                ++fill;
                if (!unit_col && M(i, j).is_unit())
                    unit_col = j;
            }
            if (unit_col && (!piv || fill < best_fill)) {
                piv = {i, *unit_col};
                best_fill = fill;
            }
        }
        if (!piv)
            break;
        auto [pi, pj] = *piv;
        const P inv = laurent_unit_inverse(M(pi, pj));
        for (std::size_t r = 0; r < M.rows(); ++r) {
            if (r == pi || M(r, pj).is_zero())
                continue;
            P q = -(M(r, pj) * inv);
            M.add_row_multiple(r, pi, q);
        }
        std::vector<std::size_t> rs, cs;
        for (std::size_t r = 0; r < M.rows(); ++r)
            if (r != pi)
                rs.push_back(r);
        for (std::size_t c = 0; c < M.cols(); ++c)
            if (c != pj)
                cs.push_back(c);
        M = M.submatrix(rs, cs);
    }
    std::vector<std::size_t> rs, cs;
    for (std::size_t r = 0; r < M.rows(); ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < M.cols() && zero; ++c)
            zero = M(r, c).is_zero();
        if (!zero)
            rs.push_back(r);
    }
    for (std::size_t c = 0; c < M.cols(); ++c)
        cs.push_back(c);
    return M.submatrix(rs, cs);
}

} // namespace embedcheck
