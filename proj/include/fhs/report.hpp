#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fhs/bounds.hpp"
#include "fhs/correlation.hpp"
#include "fhs/equivalence.hpp"

namespace fhs {

inline constexpr const char* kReportSchema = "fhs-report/1";

struct AnalyzeOptions {
    bool profiles = false;
    // Witness/profile entries listed in the report; checks always cover
    // every pair regardless.
    std::size_t pair_list_cap = 2016;
};

struct PairRecord {
    std::size_t i = 0, j = 0;
    long long cross = 0;
    long long peak = 0;  // pair peak incl. both autos; -1 when n < 2
    std::optional<EquivWitness> witness;
    bool witness_valid = false;
};

struct FamilyReport {
    Predicted predicted;
    FamilyStats stats;
    std::vector<long long> zero_counts;
    std::vector<long long> image_sizes;
    bool image_matches_l = true;  // distinct-symbol count == l for every member

    std::optional<long long> lg_floor;  // absent when n < 2
    long long lg_sharp = 0;
    std::optional<PengFanResult> peng_fan;
    Rational lemma3{0, 1};
    std::optional<bool> lg_optimal, pf_optimal, lg_pair_optimal;

    long long coset = 0;
    std::vector<PairRecord> pairs;  // capped listing
    bool pairs_truncated = false;
    bool all_pairs_equivalent = true;

    // Keys T2..T7; only checks applicable to the parameter set appear.
    std::map<std::string, bool> theorems;
    std::vector<std::string> failures;
    bool all_pass = true;

    std::vector<CorrProfile> auto_profiles;                          // when requested
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, CorrProfile>> cross_profiles;
};

FamilyReport analyze_family(const FhsParams& params, const Family& fam, const AnalyzeOptions& opts);

nlohmann::json report_json(const FhsParams& params, const FamilyReport& rep, bool include_profiles);
nlohmann::json params_json(const FhsParams& params);

}  // namespace fhs
