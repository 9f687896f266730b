#include "embedcheck/engine/run.hpp"

namespace embedcheck {

ObstructionReport run_report(const SurgeryDescription& S, const ReportConfig& cfg)
{
    return run_report(EntryContext::from(S), cfg);
}

ObstructionReport run_report(const EntryContext& ctx, const ReportConfig& cfg)
{
    ObstructionReport r;
    r.manifold = ctx.name;
    r.beta = ctx.beta();
    r.torsion = ctx.h1.torsion;
    r.h1 = ctx.h1.to_string();
    r.config = cfg;
    const auto& tor = ctx.h1.torsion;
    const std::size_t b = ctx.beta();

    BatteryResult res;
    if (b == 0 && tor.empty()) {
        r.battery = "none";
        r.overall = Overall::consistent_within_bound;
        r.explanation = "homology sphere: bounds a contractible 4-manifold, so an abelian embedding exists";
        return r;
    }
    if (b == 0 && tor.size() == 2 && tor[0] == tor[1]) {
        r.battery = "torsion";
        res = check_torsion_case(ctx, cfg);
    } else if (!tor.empty()) {
        r.battery = "none";
        r.overall = Overall::not_applicable;
        r.explanation = "H_1 = " + r.h1 + " is outside the classification (torsion must be (Z/l)^2 with beta = 0)";
        return r;
    } else if (b == 1) {
        r.battery = "beta1";
        res = check_beta1(ctx, cfg);
    } else if (b == 2) {
        r.battery = "beta2";
        r.module = module_summary(ctx);
        res = check_beta2(ctx, cfg);
    } else if (b == 3 || b == 4 || b == 6) {
        r.battery = "beta" + std::to_string(b);
        if (b == 3)
            r.module = module_summary(ctx);
        res = check_beta3plus(ctx, cfg);
    } else {
        r.battery = "none";
        r.overall = Overall::not_applicable;
        r.explanation = "beta = " + std::to_string(b) + " admits no abelian embedding pattern";
        return r;
    }
    r.records = std::move(res.records);
    r.overall = res.overall;
    r.explanation = std::move(res.explanation);
    return r;
}

} // namespace embedcheck
