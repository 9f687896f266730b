#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "embedcheck/group/presentation.hpp"
#include "embedcheck/linalg/smith.hpp"

namespace embedcheck {

/// G/G' = Z^free_rank + Z/d_1 + ... + Z/d_s with d_1 | ... | d_s, d_i >= 2.
///
/// Coordinates are ordered free first, then torsion. generator_images has one
/// row per generator (its coordinates, torsion entries reduced mod d_i);
/// basis_words has one row per coordinate, giving the exponent vector of a
/// word in the generators that maps to that basis element.
struct AbelianStructure {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    IntMatrix generator_images;
    IntMatrix basis_words;

    std::size_t coordinate_count() const { return free_rank + torsion.size(); }
    bool is_trivial() const { return coordinate_count() == 0; }
    /// e.g. "Z^2 + Z/4 + Z/4", "0"
    std::string to_string() const;
    bool same_group(const AbelianStructure& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
};

IntMatrix exponent_sum_matrix(const GroupPresentation& P);

/// Abelianization from an integer relation matrix (rows = relations).
AbelianStructure abelian_structure(const IntMatrix& relations);
AbelianStructure abelianize(const GroupPresentation& P);

} // namespace embedcheck
