#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "embedcheck/engine/lattice.hpp"
#include "embedcheck/engine/report.hpp"
#include "embedcheck/fox/crowell.hpp"
#include "embedcheck/fox/reidemeister_schreier.hpp"
#include "embedcheck/surgery/surgery.hpp"

namespace embedcheck {

/// Everything the batteries need about one manifold: pi_1(M), H_1(M), a
/// designated basis of the free part and the coordinates of each generator
/// in that basis.
struct EntryContext {
    std::string name;
    GroupPresentation group;
    AbelianStructure h1;
    std::vector<Word> basis;
    std::vector<std::vector<std::int64_t>> coords; // generator x beta

    static EntryContext from(const SurgeryDescription& S);
    std::size_t beta() const { return h1.free_rank; }
    /// values on the generators of the map pi -> Z given by a covector
    std::vector<std::int64_t> values(const IVec& covector) const;
    /// images of the generators under pi -> Z^k given by k covectors
    std::vector<Exponents> images(const IMat& covectors) const;
    /// a word representing the homology class with these basis coordinates
    Word word_for(const IVec& cls) const;
};

struct BatteryResult {
    std::vector<CriterionRecord> records;
    Overall overall = Overall::not_applicable;
    std::string explanation;
};

BatteryResult check_beta1(const EntryContext& ctx, const ReportConfig& cfg);
BatteryResult check_beta2(const EntryContext& ctx, const ReportConfig& cfg);
BatteryResult check_beta3plus(const EntryContext& ctx, const ReportConfig& cfg);
BatteryResult check_torsion_case(const EntryContext& ctx, const ReportConfig& cfg);

/// One beta = 2 basis (rows = basis classes in designated coordinates).
CriterionRecord beta2_basis_record(const EntryContext& ctx, const IMat& basis);

/// Rank over Q(x_1..x_k) of H_1 of the Z^k cover for the map given by k
/// covectors. Throws std::invalid_argument unless the map is onto Z^k.
std::size_t completion_rank(const EntryContext& ctx, const IMat& covectors);

/// Crowell presentation over Z[Z^beta] of pi'/pi'' in the designated basis.
Matrix<ZPoly> alexander_presentation(const EntryContext& ctx);

/// Rank over the fraction field of coker(M).
std::size_t module_rank(const Matrix<ZPoly>& M);
/// dim_Q of coker(M) with every variable set to 1.
std::size_t augmentation_dimension(const Matrix<ZPoly>& M);

enum class TriState { yes, no, unknown };
std::string to_string(TriState t);
/// Is coker(M) tensor Q zero? "yes" from a unit maximal minor, "no" from a
/// nonzero specialization, else unknown.
TriState rationally_zero(const Matrix<ZPoly>& M);

/// All maximal minors lie in the ideal (m, c) (variable xvar carries m).
/// False also when there are no maximal minors (rows < cols).
bool maximal_minors_in_ideal(const Matrix<ZPoly>& M, const ZPoly& m, const Integer& c, std::size_t xvar);

/// dim over F_p (p = 0: over Q) of coker(M) with every variable except
/// `keep` set to 1, then reduced modulo m (a polynomial in variable `keep`).
std::size_t specialized_quotient_dimension(const Matrix<ZPoly>& M, std::size_t keep, const ZPoly& m, std::uint64_t p);

/// Summary of the Alexander module for beta >= 2 (reported alongside the batteries).
Json module_summary(const EntryContext& ctx);

/// Exhaustive cyclic-vector search for the deck action on H tensor F_p.
/// nullopt when p^dim exceeds the limit.
struct CyclicSearch {
    std::size_t dimension = 0;
    std::optional<bool> cyclic;
};
CyclicSearch fp_cyclic_search(const CoverHomology& ch, std::uint64_t p, std::uint64_t limit);

} // namespace embedcheck
