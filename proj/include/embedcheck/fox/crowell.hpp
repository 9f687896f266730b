#pragma once

#include <cstdint>
#include <vector>

#include "embedcheck/fox/fox.hpp"
#include "embedcheck/linalg/module.hpp"

namespace embedcheck {

/// Homology of the infinite cyclic cover M_f for f: pi -> Z, over F[t^+-1].
template <class Field>
struct CyclicCoverHomology {
    ModuleStructure<LaurentUPoly<Field>> h1;        // H_1(M_f; F)
    ModuleStructure<LaurentUPoly<Field>> alexander; // A_f = coker(Jacobian)
    Matrix<LaurentUPoly<Field>> presentation;       // relations presenting h1
};

/// Values of f on generators -> surjective? (gcd of values is 1)
bool is_epimorphism_to_Z(const std::vector<std::int64_t>& f);

Matrix<ZPoly> cyclic_jacobian(const GroupPresentation& P, const std::vector<std::int64_t>& f);

template <class Field>
Matrix<LaurentUPoly<Field>> to_upoly_matrix(const Matrix<ZPoly>& M, const Field& F)
{
    return M.map(LaurentUPoly<Field>(F), [&](const ZPoly& p) {
        return LaurentUPoly<Field>::from_sparse(p.map_coefficients(F, [&](const Integer& c) { return F.from_integer(c); }));
    });
}

/// H_1(M_f; F) as the kernel of A_f -> F[t^+-1], g_j -> t^{f(g_j)} - 1.
/// The map's column is diagonalized by a Smith form, the relations are
/// pulled back into the kernel coordinates and the resulting cokernel is
/// decomposed again.
template <class Field>
CyclicCoverHomology<Field> infinite_cyclic_cover_homology(const GroupPresentation& P, const std::vector<std::int64_t>& f,
                                                          const Field& F)
{
    using UP = LaurentUPoly<Field>;
    Matrix<UP> J = to_upoly_matrix(cyclic_jacobian(P, f), F);
    const std::size_t g = P.generator_count();
    Matrix<UP> c(g, 1, UP(F));
    for (std::size_t j = 0; j < g; ++j)
        c(j, 0) = UP::t_power_minus_one(F, f[j]);
    UPolyEuclid<Field> ed{F};
    auto sf = smith_normal_form(c, ed);
    Matrix<UP> pulled = J * sf.Uinv;
    for (std::size_t i = 0; i < pulled.rows(); ++i)
        if (!pulled(i, 0).is_zero())
            throw std::logic_error("Crowell map does not vanish on relations");
    CyclicCoverHomology<Field> out;
    out.presentation = pulled.without_col(0);
    out.h1 = cokernel_module(out.presentation, ed);
    out.alexander = cokernel_module(J, ed);
    return out;
}

/// Presentation over Z[Z^k] = Z[x_1^+-1..x_k^+-1] of H_1 of the Z^k cover
/// for h: pi -> Z^k, i.e. of ker(A(pi) -> augmentation ideal).
///
/// `images` gives h on generators; `lifts` are words with h(lifts[i]) = e_i.
/// Generators of the result: one per group generator, then one Koszul
/// generator K_pq per pair p < q.
ModulePresentation crowell_kernel_presentation(const GroupPresentation& P, const std::vector<Exponents>& images,
                                               const std::vector<Word>& lifts);

/// Same when a generator m_i maps to e_i: lifts are the generators themselves.
ModulePresentation crowell_kernel_presentation(const GroupPresentation& P, const std::vector<Exponents>& images);

/// Koszul decomposition: given z in Lambda_k^k with sum z_i (x_i - 1) = 0,
/// coefficients c_pq (p < q, lexicographic) with z = sum c_pq d(K_pq), where
/// d(K_pq) = (x_p - 1) e_q - (x_q - 1) e_p.
std::vector<ZPoly> koszul_coordinates(const std::vector<ZPoly>& z);
std::vector<ZPoly> koszul_boundary(std::size_t k, std::size_t p, std::size_t q);

/// Rank over Q(x_1..x_k) of the Z^k-cover homology, via rank(A) - 1.
std::size_t completion_rank(const GroupPresentation& P, const std::vector<Exponents>& images);

} // namespace embedcheck
