#pragma once

#include <cstdint>
#include <vector>

#include "embedcheck/group/abelian.hpp"

namespace embedcheck {

/// Homomorphism pi -> Z/modulus (modulus 0 means Z), stored by its values on
/// the generators of the presentation and on the abelian coordinates.
struct CyclicMap {
    std::int64_t modulus = 0;
    std::vector<std::int64_t> on_generators;
    std::vector<std::int64_t> on_coordinates;
    bool operator==(const CyclicMap&) const = default;
};

/// All surjections onto Z/l (l > 0), or for l = 0 all primitive covectors on
/// the free part with entries in [-bound, bound], one per sign class (first
/// nonzero entry positive). Ordered lexicographically by coordinate values.
std::vector<CyclicMap> epimorphisms_to_cyclic(const AbelianStructure& A, std::int64_t l, std::int64_t bound = 1);
std::vector<CyclicMap> epimorphisms_to_cyclic(const GroupPresentation& P, std::int64_t l, std::int64_t bound = 1);

/// Map given by values on the abelian coordinates (must respect torsion).
CyclicMap cyclic_map_from_coordinates(const AbelianStructure& A, std::int64_t l, std::vector<std::int64_t> coords);
bool is_surjective(const CyclicMap& f);

} // namespace embedcheck
