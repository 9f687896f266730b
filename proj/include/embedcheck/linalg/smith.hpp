#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "embedcheck/linalg/matrix.hpp"
#include "embedcheck/rings/coefficients.hpp"
#include "embedcheck/rings/laurent_upoly.hpp"

namespace embedcheck {

// Euclidean-domain policies for smith_normal_form. Each provides zero/one,
// a norm that strictly drops under divmod, and unit normalization.

struct IntegerEuclid {
    using T = Integer;
    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(const T& a) const { return sgn(a) == 0; }
    Integer norm(const T& a) const { return abs(a); }
    std::pair<T, T> divmod(const T& a, const T& b) const
    {
        T q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return {q, r};
    }
    bool divides(const T& a, const T& b) const { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }
    T normalizing_unit(const T& a) const { return sgn(a) < 0 ? T(-1) : T(1); }
    T unit_inverse(const T& u) const { return u; }
    std::string to_string(const T& a) const { return a.get_str(); }
};

template <class Field>
struct UPolyEuclid {
    using T = LaurentUPoly<Field>;
    Field field{};
    T zero() const { return T(field); }
    T one() const { return T::constant(field, field.one()); }
    bool is_zero(const T& a) const { return a.is_zero(); }
    std::int64_t norm(const T& a) const { return a.span(); }
    std::pair<T, T> divmod(const T& a, const T& b) const { return a.divmod(b); }
    bool divides(const T& a, const T& b) const { return b.divmod(a).second.is_zero(); }
    T normalizing_unit(const T& a) const { return a.normalizing_unit(); }
    T unit_inverse(const T& u) const { return u.unit_inverse(); }
    std::string to_string(const T& a) const { return a.to_string(); }
};

/// U * A * V = S with S diagonal, d_1 | d_2 | ... and U, V invertible.
/// Uinv, Vinv are the inverses, maintained alongside (used to pull back
/// coordinates: coker(A) has basis given by the columns of V^-1's rows).
template <class T>
struct SmithForm {
    Matrix<T> S, U, V, Uinv, Vinv;
    std::vector<T> diagonal; // min(rows, cols) entries, trailing zeros allowed
    std::size_t rank = 0;
};

/// Smith normal form over a Euclidean domain. Pivot = smallest norm, ties
/// broken by lowest (row, col); pivots are unit-normalized at the end.
template <class E>
SmithForm<typename E::T> smith_normal_form(const Matrix<typename E::T>& A, const E& ed)
{
    using T = typename E::T;
    const std::size_t m = A.rows(), n = A.cols();
    SmithForm<T> f;
    f.S = A;
    f.U = Matrix<T>::identity(m, ed.zero(), ed.one());
    f.Uinv = f.U;
    f.V = Matrix<T>::identity(n, ed.zero(), ed.one());
    f.Vinv = f.V;
    auto& S = f.S;

    // Elementary operations, mirrored on the transforms.
    auto row_swap = [&](std::size_t a, std::size_t b) {
        S.swap_rows(a, b);
        f.U.swap_rows(a, b);
        f.Uinv.swap_cols(a, b);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        S.swap_cols(a, b);
        f.V.swap_cols(a, b);
        f.Vinv.swap_rows(a, b);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, const T& q) { // row_dst += q row_src
        S.add_row_multiple(dst, src, q);
        f.U.add_row_multiple(dst, src, q);
        f.Uinv.add_col_multiple(src, dst, T(-q));
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const T& q) { // col_dst += col_src q
        S.add_col_multiple(dst, src, q);
        f.V.add_col_multiple(dst, src, q);
        f.Vinv.add_row_multiple(src, dst, T(-q));
    };

    const std::size_t lim = std::min(m, n);
    std::size_t t = 0;
    for (; t < lim; ++t) {
        // global pivot choice over the remaining block
        std::optional<std::pair<std::size_t, std::size_t>> piv;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (!ed.is_zero(S(i, j)) &&
                    (!piv || ed.norm(S(i, j)) < ed.norm(S(piv->first, piv->second))))
                    piv = {i, j};
        if (!piv)
            break;
        row_swap(t, piv->first);
        col_swap(t, piv->second);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (ed.is_zero(S(i, t)))
                    continue;
                T q = ed.divmod(S(i, t), S(t, t)).first;
                if (!ed.is_zero(q))
                    row_add(i, t, T(-q));
                if (!ed.is_zero(S(i, t)))
                    dirty = true;
            }
            if (dirty) {
                std::size_t best = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (!ed.is_zero(S(i, t)) && ed.norm(S(i, t)) < ed.norm(S(best, t)))
                        best = i;
                row_swap(t, best);
                continue;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (ed.is_zero(S(t, j)))
                    continue;
                T q = ed.divmod(S(t, j), S(t, t)).first;
                if (!ed.is_zero(q))
                    col_add(j, t, T(-q));
                if (!ed.is_zero(S(t, j)))
                    dirty = true;
            }
            if (dirty) {
                std::size_t best = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!ed.is_zero(S(t, j)) && ed.norm(S(t, j)) < ed.norm(S(t, best)))
                        best = j;
                col_swap(t, best);
                continue;
            }
            // Row and column are clear; enforce divisibility on the rest.
            std::optional<std::size_t> bad;
            for (std::size_t i = t + 1; i < m && !bad; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!ed.is_zero(S(i, j)) && !ed.divides(S(t, t), S(i, j))) {
                        bad = i;
                        break;
                    }
            if (!bad)
                break;
            row_add(t, *bad, ed.one());
        }
        T u = ed.normalizing_unit(S(t, t));
        if (!(u == ed.one())) {
            S.scale_row(t, u);
            f.U.scale_row(t, u);
            f.Uinv.scale_col(t, ed.unit_inverse(u));
        }
    }
    f.rank = t;
    for (std::size_t i = 0; i < lim; ++i)
        f.diagonal.push_back(S(i, i));
    return f;
}

/// Exact re-verification of a SmithForm: U A V = S, U Uinv = I, V Vinv = I,
/// S diagonal and the divisibility chain.
template <class E>
bool verify_smith(const Matrix<typename E::T>& A, const SmithForm<typename E::T>& f, const E& ed)
{
    using T = typename E::T;
    if (!(f.U * A * f.V == f.S))
        return false;
    if (!(f.U * f.Uinv == Matrix<T>::identity(A.rows(), ed.zero(), ed.one())))
        return false;
    if (!(f.V * f.Vinv == Matrix<T>::identity(A.cols(), ed.zero(), ed.one())))
        return false;
    for (std::size_t i = 0; i < f.S.rows(); ++i)
        for (std::size_t j = 0; j < f.S.cols(); ++j)
            if (i != j && !ed.is_zero(f.S(i, j)))
                return false;
    for (std::size_t i = 0; i + 1 < f.diagonal.size(); ++i) {
        if (ed.is_zero(f.diagonal[i]))
            return std::all_of(f.diagonal.begin() + static_cast<std::ptrdiff_t>(i), f.diagonal.end(),
                               [&](const T& d) { return ed.is_zero(d); });
        if (!ed.divides(f.diagonal[i], f.diagonal[i + 1]))
            return false;
    }
    for (const auto& d : f.diagonal)
        if (!ed.is_zero(d) && !(ed.normalizing_unit(d) == ed.one()))
            return false;
    return true;
}

using IntMatrix = Matrix<Integer>;

SmithForm<Integer> smith_normal_form_Z(const IntMatrix& A);
template <class Field>
SmithForm<LaurentUPoly<Field>> smith_normal_form_laurent(const Matrix<LaurentUPoly<Field>>& A)
{
    Field f = A.zero().field();
    return smith_normal_form(A, UPolyEuclid<Field>{f});
}

} // namespace embedcheck
