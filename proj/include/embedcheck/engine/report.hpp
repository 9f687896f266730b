#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "embedcheck/group/abelian.hpp"

namespace embedcheck {

using Json = nlohmann::ordered_json;

/// Per-record outcome. FAIL is a single basis / epimorphism / split failing;
/// OBSTRUCTED only comes out of complete finite checks.
enum class Verdict { pass, fail, obstructed, not_applicable };

enum class Overall { obstructed, consistent_within_bound, fails_all_bases_within_bound, not_applicable };

std::string to_string(Verdict v);
std::string to_string(Overall v);

struct CriterionRecord {
    std::string id;   // e.g. "beta2.basis"
    Json tested;      // basis / covector / epimorphism / parameters
    Json invariants;  // the certificate
    Verdict verdict = Verdict::not_applicable;
};

struct ReportConfig {
    std::int64_t basis_bound = 3;
    std::uint64_t prime_bound = 97;
    /// entry bound for the summands enumerated when beta = 4, 6
    std::int64_t split_bound = 1;
    std::size_t max_summands = 64;
    /// F_p[Z/l] cyclic-vector search is skipped above this many vectors
    std::uint64_t cyclic_search_limit = 1000000;
    /// worker threads, 0 = hardware concurrency; never affects output
    unsigned threads = 0;
};

struct ObstructionReport {
    std::string manifold;
    std::size_t beta = 0;
    std::vector<Integer> torsion;
    std::string h1;
    std::string battery; // beta1, beta2, beta3, beta4, beta6, torsion, none
    ReportConfig config;
    std::optional<Json> module;
    std::vector<CriterionRecord> records;
    Overall overall = Overall::not_applicable;
    std::string explanation;
};

constexpr const char* report_schema = "embedcheck.report/1";

Json to_json(const CriterionRecord& r);
Json to_json(const ObstructionReport& r);
std::string to_text(const ObstructionReport& r);

} // namespace embedcheck
