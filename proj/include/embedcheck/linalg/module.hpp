#pragma once

#include <string>
#include <vector>

#include "embedcheck/linalg/smith.hpp"

namespace embedcheck {

/// Structure of a finitely generated module over a PID: R^free_rank plus
/// the cyclic factors R/(d_i) with d_i nonzero non-units, d_1 | d_2 | ...
template <class T>
struct ModuleStructure {
    std::size_t free_rank = 0;
    std::vector<T> factors;

    /// Minimal number of generators.
    std::size_t generator_count() const { return free_rank + factors.size(); }
    bool is_zero() const { return generator_count() == 0; }
    bool is_cyclic() const { return generator_count() <= 1; }
};

/// coker(A) where rows of A are relations on cols(A) generators.
template <class E>
ModuleStructure<typename E::T> cokernel_module(const Matrix<typename E::T>& A, const E& ed)
{
    auto f = smith_normal_form(A, ed);
    ModuleStructure<typename E::T> m;
    m.free_rank = A.cols() - f.rank;
    for (std::size_t i = 0; i < f.rank; ++i) {
        const auto& d = f.diagonal[i];
        if (!(d == ed.one()))
            m.factors.push_back(d);
    }
    return m;
}

inline ModuleStructure<Integer> cokernel_Z(const IntMatrix& A) { return cokernel_module(A, IntegerEuclid{}); }

template <class Field>
ModuleStructure<LaurentUPoly<Field>> cokernel_laurent(const Matrix<LaurentUPoly<Field>>& A)
{
    return cokernel_module(A, UPolyEuclid<Field>{A.zero().field()});
}

} // namespace embedcheck
