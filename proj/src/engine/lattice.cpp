#include "embedcheck/engine/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "embedcheck/linalg/smith.hpp"

namespace embedcheck {

namespace {

IntMatrix to_int_matrix(const IMat& M, std::size_t cols)
{
    IntMatrix A(M.size(), cols, Integer(0));
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            A(i, j) = Integer(static_cast<long>(M[i][j]));
    return A;
}

IMat from_int_matrix(const IntMatrix& A)
{
    IMat M(A.rows(), IVec(A.cols()));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (!A(i, j).fits_slong_p())
                throw std::overflow_error("lattice: entry does not fit in 64 bits");
            M[i][j] = A(i, j).get_si();
        }
    return M;
}

} // namespace

std::int64_t det_small(const IMat& M)
{
    const std::size_t n = M.size();
    if (n == 0)
        return 1;
    // fraction-free elimination over Integer
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Integer(static_cast<long>(M[i][j]));
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    Integer d = a[n - 1][n - 1] * sign;
    return d.get_si();
}

bool is_primitive(const IVec& v)
{
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x);
    return g == 1;
}

IVec sign_normalized(IVec v)
{
    for (auto x : v) {
        if (x == 0)
            continue;
        if (x < 0)
            for (auto& y : v)
                y = -y;
        break;
    }
    return v;
}

std::vector<IVec> primitive_vectors(std::size_t n, std::int64_t bound)
{
    std::vector<IVec> out;
    IVec v(n, -bound);
    if (n == 0)
        return out;
    for (;;) {
        if (is_primitive(v) && sign_normalized(v) == v)
            out.push_back(v);
        std::size_t i = n;
        while (i > 0 && v[i - 1] == bound) {
            v[i - 1] = -bound;
            --i;
        }
        if (i == 0)
            break;
        ++v[i - 1];
    }
    return out;
}

std::vector<IMat> bases_up_to_symmetry_2(std::int64_t bound)
{
    auto vs = primitive_vectors(2, bound);
    std::vector<IMat> out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            IMat m{vs[i], vs[j]};
            auto d = det_small(m);
            if (d == 1 || d == -1)
                out.push_back(m);
        }
    return out;
}

IMat inverse_unimodular(const IMat& M)
{
    const std::size_t n = M.size();
    if (n == 0)
        return {};
    auto d = det_small(M);
    if (d != 1 && d != -1)
        throw std::invalid_argument("inverse_unimodular: determinant is not a unit");
    auto f = smith_normal_form_Z(to_int_matrix(M, n));
    // U M V = S with S = diag(+-1) after normalization, so M^-1 = V S U
    return from_int_matrix(f.V * f.S * f.U);
}

IMat complete_to_basis(const IMat& rows, std::size_t n)
{
    const std::size_t k = rows.size();
    if (k == 0) {
        IMat I(n, IVec(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            I[i][i] = 1;
        return I;
    }
    auto f = smith_normal_form_Z(to_int_matrix(rows, n));
    if (f.rank != k)
        throw std::invalid_argument("complete_to_basis: rows are dependent");
    for (std::size_t i = 0; i < k; ++i)
        if (f.diagonal[i] != 1 && f.diagonal[i] != -1)
            throw std::invalid_argument("complete_to_basis: rows do not span a direct summand");
    // R = U^-1 [S 0] V^-1: complete with the last n-k rows of V^-1
    IMat W = rows;
    auto Vinv = from_int_matrix(f.Vinv);
    for (std::size_t i = k; i < n; ++i)
        W.push_back(Vinv[i]);
    auto d = det_small(W);
    if (d != 1 && d != -1)
        throw std::logic_error("complete_to_basis: completion is not unimodular");
    return W;
}

IVec plucker_key(const IMat& rows)
{
    const std::size_t k = rows.size();
    const std::size_t n = k ? rows[0].size() : 0;
    IVec key;
    std::vector<std::size_t> sel(k);
    std::iota(sel.begin(), sel.end(), 0);
    if (k == 0 || k > n)
        return key;
    for (;;) {
        IMat sub(k, IVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                sub[i][j] = rows[i][sel[j]];
        key.push_back(det_small(sub));
        std::size_t i = k;
        while (i > 0 && sel[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++sel[i - 1];
        for (std::size_t j = i; j < k; ++j)
            sel[j] = sel[j - 1] + 1;
    }
    return sign_normalized(key);
}

} // namespace embedcheck
