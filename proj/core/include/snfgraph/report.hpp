#pragma once

#include <nlohmann/json.hpp>

#include <ostream>
#include <span>
#include <string>

#include "snfgraph/analysis.hpp"
#include "snfgraph/enumerate.hpp"

namespace snfgraph {

/// Big integers are written as decimal strings throughout.
nlohmann::json to_json(const InvariantProfile& profile);
nlohmann::json to_json(const ClassificationReport& report, const std::string& graph6);
nlohmann::json to_json(const ViolationRecord& violation);
nlohmann::json to_json(const EnumerationSummary& summary,
                       std::span<const ViolationRecord> side_violations);

inline constexpr const char* kClassificationCsvHeader =
    "source,graph6,n,factors,s3_class,matched_family,tree_count,structural_check_passed";

std::string classification_csv_row(const ClassificationReport& report,
                                   const std::string& source, const std::string& graph6);

/// One row per histogram bucket: n,s3,count.
void write_histogram_csv(std::ostream& out, std::span<const EnumerationSummary> summaries);

std::string join_factors(std::span<const BigInt> factors, const char* sep = " ");

}  // namespace snfgraph
