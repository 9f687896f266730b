#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "embedcheck/group/abelian.hpp"
#include "embedcheck/group/presentation.hpp"

namespace embedcheck {

enum class EntryKind { link, direct };

/// What is known about abelian embeddings of the manifold (catalog metadata,
/// used by the consistency sweep; never consulted by the batteries).
enum class KnownStatus { unknown, embeds_abelian, no_abelian_embedding };

/// A 3-manifold either as integer surgery on a link (link group, meridians,
/// Seifert longitudes, framings) or directly by pi_1(M) with a designated
/// basis of the free part of H_1.
struct SurgeryDescription {
    std::string name;
    EntryKind kind = EntryKind::link;
    GroupPresentation group;
    std::vector<Word> meridians;
    std::vector<Word> longitudes;
    std::vector<std::int64_t> framings;
    std::vector<Word> basis; // direct entries only
    KnownStatus known = KnownStatus::unknown;
    std::string note;

    std::size_t components() const { return meridians.size(); }
    bool operator==(const SurgeryDescription&) const = default;
};

class SurgeryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// List of violated invariants; empty when the entry is well formed.
std::vector<std::string> validate_entry(const SurgeryDescription& S);

/// Link group plus m_i^{f_i} lambda_i per component; direct entries unchanged.
GroupPresentation surgered_group(const SurgeryDescription& S);

/// Coordinates of a word of the link group in the meridian basis of
/// H_1(S^3 - L) = Z^c. Throws SurgeryError if meridians are not a basis.
std::vector<Integer> meridian_coordinates(const SurgeryDescription& S, const Word& w);

/// Framings on the diagonal, linking numbers off it. Link entries only.
IntMatrix linking_matrix(const SurgeryDescription& S);

/// abelianize(surgered_group(S)); for link entries cross-checked against
/// coker(linking_matrix(S)), SurgeryError on disagreement.
AbelianStructure h1_of_surgery(const SurgeryDescription& S);

/// Words whose images are a basis of the free part of H_1(M): the meridians
/// when the linking matrix vanishes, the basis words of a direct entry, or
/// else the canonical basis of the abelianization.
std::vector<Word> designated_basis(const SurgeryDescription& S);

/// Row j = coordinates of generator j in the given basis of the free part of
/// H_1 (torsion dropped). A map pi -> Z^k with basis word i -> column i of C
/// is then images * C. Throws SurgeryError if the words are not a basis.
std::vector<std::vector<std::int64_t>> coordinates_in_basis(const GroupPresentation& P, const std::vector<Word>& basis);

std::string to_string(EntryKind k);
std::string to_string(KnownStatus k);

} // namespace embedcheck
