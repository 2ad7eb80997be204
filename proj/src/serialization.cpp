#include "howe/serialization.hpp"

#include <charconv>
#include <sstream>

namespace howe {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw HoweError(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

HoweParams::Row parse_csv_row(std::string_view line, std::size_t line_no) {
  HoweParams::Row row{};
  std::size_t field = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::string_view cell =
        trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                : comma - start));
    if (field >= row.size()) parse_fail(line_no, "more than 11 columns");
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
      parse_fail(line_no, "column " + std::to_string(field + 1) + " is not an integer: '" +
                              std::string(cell) + "'");
    }
    row[field++] = value;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (field != row.size()) {
    parse_fail(line_no, "expected 11 columns, got " + std::to_string(field));
  }
  return row;
}

std::vector<HoweParams::Row> parse_csv_table(std::istream& in) {
  std::vector<HoweParams::Row> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (body.front() == 'p') {
      if (body != kCsvHeader) parse_fail(line_no, "unexpected header '" + std::string(body) + "'");
      continue;
    }
    rows.push_back(parse_csv_row(body, line_no));
  }
  return rows;
}

std::vector<HoweParams::Row> parse_csv_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_csv_table(in);
}

std::string format_csv_row(const HoweParams::Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(row[i]);
  }
  return out;
}

Json params_to_json(const HoweParams& params) {
  const auto row = params.to_row();
  Json j;
  j["p"] = row[0];
  j["alpha1"] = row[1];
  j["alpha2"] = row[2];
  j["a"] = Json::array();
  for (int i = 3; i < 9; ++i) j["a"].push_back(row[i]);
  j["b"] = Json::array({row[9], row[10]});
  return j;
}

HoweParams params_from_json(const Json& j) {
  try {
    HoweParams::Row row{};
    row[0] = j.at("p").get<std::int64_t>();
    row[1] = j.at("alpha1").get<std::int64_t>();
    row[2] = j.at("alpha2").get<std::int64_t>();
    const auto& a = j.at("a");
    const auto& b = j.at("b");
    if (a.size() != 6 || b.size() != 2) {
      throw HoweError(ErrorKind::ParseError, "expected a[6] and b[2]");
    }
    for (int i = 0; i < 6; ++i) row[3 + i] = a.at(i).get<std::int64_t>();
    row[9] = b.at(0).get<std::int64_t>();
    row[10] = b.at(1).get<std::int64_t>();
    return HoweParams::from_row(row);
  } catch (const nlohmann::json::exception& e) {
    throw HoweError(ErrorKind::ParseError, std::string("bad parameter JSON: ") + e.what());
  }
}

namespace {

Json optional_bool(const std::optional<bool>& v) {
  return v ? Json(*v) : Json("not applicable");
}

Json count_to_json(const PointCount& c) {
  Json j;
  j["q"] = c.q;
  j["count"] = c.count;
  j["method"] = std::string(to_string(c.method));
  return j;
}

}  // namespace

Json verdicts_to_json(const SerreVerdicts& v) {
  Json j;
  j["serre_fp"] = optional_bool(v.serre_fp);
  j["maximal_fp2"] = v.maximal_fp2;
  j["serre_fp3"] = optional_bool(v.serre_fp3);
  j["count_mod4"] = v.count_mod4;
  j["hasse_values"] = v.hasse_values;
  j["traces"] = v.traces;
  return j;
}

Json report_to_json(const DecompositionReport& report) {
  Json j = params_to_json(report.params);
  j["factors"] = Json::array();
  for (const auto& e : report.decomposition.factors) {
    Json f;
    f["theta"] = e.theta().value();
    f["lambda"] = e.lambda().value();
    j["factors"].push_back(f);
  }
  const SplitData& s = report.decomposition.split;
  j["split"] = {{"a", s.a.value()},
                {"b", s.b.value()},
                {"c", s.c.value()},
                {"beta1", s.beta1.value()},
                {"beta2", s.beta2.value()}};
  j["counts"] = Json::array();
  for (const auto& c : report.counts) {
    Json entry = count_to_json(c.total);
    if (c.quotients) {
      entry["quotients"] = Json::array();
      for (const auto& qc : *c.quotients) entry["quotients"].push_back(qc.count);
    }
    entry["factors"] = Json::array();
    for (const auto& fc : c.factors) entry["factors"].push_back(fc.count);
    j["counts"].push_back(entry);
  }
  j["verdicts"] = verdicts_to_json(report.verdicts);
  const SquarenessReport& sq = report.squareness;
  j["squareness"] = {{"product_a4_a5", sq.product_a4_a5},
                     {"product_a4_b5", sq.product_a4_b5},
                     {"product_a5_b5", sq.product_a5_b5},
                     {"a_ab", sq.a_ab},
                     {"a_ac", sq.a_ac},
                     {"b5_variants_disagree", sq.b5_variants_disagree()}};
  return j;
}

}  // namespace howe
