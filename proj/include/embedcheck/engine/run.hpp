#pragma once

#include "embedcheck/engine/batteries.hpp"
#include "embedcheck/engine/report.hpp"
#include "embedcheck/surgery/surgery.hpp"

namespace embedcheck {

/// Dispatch on the shape of H_1(M): beta = 1, 2, 3, 4, 6 torsion-free, or
/// (Z/l)^2; a homology sphere is trivially consistent; anything else is
/// NOT_APPLICABLE.
ObstructionReport run_report(const SurgeryDescription& S, const ReportConfig& cfg = {});
ObstructionReport run_report(const EntryContext& ctx, const ReportConfig& cfg = {});

} // namespace embedcheck
