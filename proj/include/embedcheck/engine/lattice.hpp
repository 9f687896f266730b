#pragma once

#include <cstdint>
#include <vector>

namespace embedcheck {

// Small integer vectors and matrices for basis enumeration (entries are
// bounded by the search bound, so 64-bit arithmetic is enough; determinants
// are computed with GMP anyway).
using IVec = std::vector<std::int64_t>;
using IMat = std::vector<IVec>;

std::int64_t det_small(const IMat& M);
bool is_primitive(const IVec& v);
/// First nonzero entry made positive.
IVec sign_normalized(IVec v);

/// Primitive vectors of Z^n with entries in [-bound, bound], one per sign
/// class, in lexicographic order.
std::vector<IVec> primitive_vectors(std::size_t n, std::int64_t bound);

/// Unimodular 2x2 matrices with entries in [-bound, bound], up to row signs
/// and row order (rows sign-normalized and sorted).
std::vector<IMat> bases_up_to_symmetry_2(std::int64_t bound);

/// Inverse of a unimodular matrix.
IMat inverse_unimodular(const IMat& M);

/// A unimodular n x n matrix whose first rows are `rows` (which must span a
/// direct summand); throws std::invalid_argument otherwise.
IMat complete_to_basis(const IMat& rows, std::size_t n);

/// Maximal minors of a k x n matrix, lexicographic column subsets, sign-normalized
/// as a vector: a canonical key for the row span when it is a summand.
IVec plucker_key(const IMat& rows);

} // namespace embedcheck
