#pragma once

#include <cstdint>
#include <vector>

#include "embedcheck/group/abelian.hpp"
#include "embedcheck/group/epimorphism.hpp"

namespace embedcheck {

/// Presentation of ker(f) for f: pi -> Z/l, with the deck transformation
/// (conjugation by a lift tau of 1) recorded on the Schreier generators.
struct CoverPresentation {
    GroupPresentation group;
    std::int64_t index = 0;
    CyclicMap map;
    /// slot[c * g + j]: Schreier generator index of s_{c, j}, or -1 on the tree.
    std::vector<std::int64_t> slot;
    /// Schreier generator i is s_{coset, gen} = rep(coset) gen rep(coset + f(gen))^-1.
    std::vector<std::pair<std::int64_t, std::size_t>> labels;
    /// tau s_i tau^-1 written in the Schreier generators.
    std::vector<Word> deck;
    /// Coset representatives (words in the base generators), rep(0) = 1.
    std::vector<Word> representatives;
};

/// Reidemeister-Schreier with cosets 0..l-1 and a breadth-first Schreier tree.
CoverPresentation rs_cover(const GroupPresentation& P, const CyclicMap& f);

/// Rewrite a word of the base group lying in ker f into Schreier generators.
Word rs_rewrite(const CoverPresentation& C, const Word& w, std::int64_t start_coset = 0);

struct CoverHomology {
    AbelianStructure h1;
    /// Row i = coordinates of the deck image of canonical basis element i.
    IntMatrix deck_action;
};

CoverHomology cover_h1(const CoverPresentation& C);

} // namespace embedcheck
