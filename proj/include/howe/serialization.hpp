#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "howe/howe_curve.hpp"

namespace howe {

/// Column layout of the parameter tables.
inline constexpr std::string_view kCsvHeader = "p,alpha1,alpha2,a1,a2,a3,a4,a5,a6,b5,b6";

/// Parses one data line. Throws HoweError(ParseError) naming `line_no`.
HoweParams::Row parse_csv_row(std::string_view line, std::size_t line_no);

/// Reads a table: optional header, blank lines and '#' comments skipped.
std::vector<HoweParams::Row> parse_csv_table(std::istream& in);
std::vector<HoweParams::Row> parse_csv_table(std::string_view text);

std::string format_csv_row(const HoweParams::Row& row);

using Json = nlohmann::ordered_json;

/// {p, alpha1, alpha2, a[6], b[2]}
Json params_to_json(const HoweParams& params);

/// Accepts any object carrying p, alpha1, alpha2, a[6], b[2] (so a full
/// report round-trips). Throws HoweError(ParseError) on missing fields.
HoweParams params_from_json(const Json& j);

Json verdicts_to_json(const SerreVerdicts& v);

/// p, alpha1, alpha2, a, b, factors [{theta, lambda}], split, counts,
/// verdicts, squareness.
Json report_to_json(const DecompositionReport& report);

}  // namespace howe
