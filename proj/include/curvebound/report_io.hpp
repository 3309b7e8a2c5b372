#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "curvebound/classify.hpp"
#include "curvebound/obstruct.hpp"

namespace curvebound {

// Serialization is bit-exact: fixed key order, integers or "num/den" strings
// only (never floats), newline-terminated output.

inline constexpr const char* kSchemaVersion = "1";

nlohmann::ordered_json report_to_json(const ObstructionReport& r);
std::string emit_report_json(const ObstructionReport& r);
ObstructionReport parse_report_json(const std::string& text);

std::string emit_report_csv(const ObstructionReport& r);
std::string emit_report_table(const ObstructionReport& r);

/// Survivor rows as CSV with the fixed schema
/// d,p,q,genus,theorem_main,bmy,multiplicity,spectrum,verdict
std::string emit_rows_csv(const std::vector<SearchRow>& rows);
std::vector<SearchRow> parse_rows_csv(const std::string& text);

std::string emit_rows_json(const std::vector<SearchRow>& rows, long long d_min, long long d_max,
                           long long g, const std::vector<std::string>& filters);
std::string emit_rows_table(const std::vector<SearchRow>& rows);

std::string emit_classification_json(const ClassificationResult& c);
std::string emit_classification_csv(const ClassificationResult& c);
std::string emit_classification_table(const ClassificationResult& c);

}  // namespace curvebound
