#include "embedcheck/engine/report.hpp"

#include <sstream>

namespace embedcheck {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "PASS";
    case Verdict::fail:
        return "FAIL";
    case Verdict::obstructed:
        return "OBSTRUCTED";
    case Verdict::not_applicable:
        return "NOT_APPLICABLE";
    }
    return "?";
}

std::string to_string(Overall v)
{
    switch (v) {
    case Overall::obstructed:
        return "OBSTRUCTED";
    case Overall::consistent_within_bound:
        return "CONSISTENT_WITHIN_BOUND";
    case Overall::fails_all_bases_within_bound:
        return "FAILS_ALL_BASES_WITHIN_BOUND";
    case Overall::not_applicable:
        return "NOT_APPLICABLE";
    }
    return "?";
}

Json to_json(const CriterionRecord& r)
{
    Json j;
    j["criterion"] = r.id;
    j["tested"] = r.tested;
    j["invariants"] = r.invariants;
    j["verdict"] = to_string(r.verdict);
    return j;
}

Json to_json(const ObstructionReport& r)
{
    Json j;
    j["schema"] = report_schema;
    j["manifold"] = r.manifold;
    Json h;
    h["group"] = r.h1;
    h["free_rank"] = r.beta;
    h["torsion"] = Json::array();
    for (const auto& d : r.torsion)
        h["torsion"].push_back(d.get_str());
    j["h1"] = h;
    j["beta"] = r.beta;
    j["battery"] = r.battery;
    Json b;
    b["basis_bound"] = r.config.basis_bound;
    b["prime_bound"] = r.config.prime_bound;
    b["split_bound"] = r.config.split_bound;
    b["max_summands"] = r.config.max_summands;
    b["cyclic_search_limit"] = r.config.cyclic_search_limit;
    j["bounds"] = b;
    if (r.module)
        j["module"] = *r.module;
    j["records"] = Json::array();
    for (const auto& rec : r.records)
        j["records"].push_back(to_json(rec));
    j["overall"] = to_string(r.overall);
    j["explanation"] = r.explanation;
    return j;
}

std::string to_text(const ObstructionReport& r)
{
    std::ostringstream o;
    o << "manifold: " << r.manifold << "\n";
    o << "H_1: " << r.h1 << "  (beta = " << r.beta << ")\n";
    o << "battery: " << r.battery << "  (basis bound " << r.config.basis_bound << ", prime bound "
      << r.config.prime_bound << ")\n";
    if (r.module) {
        o << "module:\n";
        for (const auto& [k, v] : r.module->items())
            o << "  " << k << ": " << v.dump() << "\n";
    }
    for (const auto& rec : r.records) {
        o << "[" << to_string(rec.verdict) << "] " << rec.id << " " << rec.tested.dump() << "\n";
        for (const auto& [k, v] : rec.invariants.items())
            o << "    " << k << ": " << v.dump() << "\n";
    }
    o << "overall: " << to_string(r.overall) << "\n";
    if (!r.explanation.empty())
        o << "  " << r.explanation << "\n";
    return o.str();
}

} // namespace embedcheck
