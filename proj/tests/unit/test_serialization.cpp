#include <doctest.h>

#include <sstream>

#include "howe/errors.hpp"
#include "howe/serialization.hpp"
#include "howe/tables.hpp"

using namespace howe;

TEST_CASE("csv rows") {
  const auto row = parse_csv_row("11,4,6,5,3,10,7,6,8,9,2", 1);
  CHECK(row == HoweParams::Row{11, 4, 6, 5, 3, 10, 7, 6, 8, 9, 2});
  CHECK(format_csv_row(row) == "11,4,6,5,3,10,7,6,8,9,2");
  CHECK(parse_csv_row(" 11, 4,6,5,3,10,7,6,8,9,2 ", 1) == row);
}

TEST_CASE("csv errors name the line") {
  auto message = [](std::string_view text) -> std::string {
    try {
      (void)parse_csv_table(text);
    } catch (const HoweError& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      return e.what();
    }
    return "";
  };
  CHECK(message("p,alpha1,alpha2,a1,a2,a3,a4,a5,a6,b5,b6\n11,4,6\n").find("line 2") != std::string::npos);
  CHECK(message("11,4,6,5,3,10,7,6,8,9,2\n\n11,4,x,5,3,10,7,6,8,9,2\n").find("line 3") !=
        std::string::npos);
  CHECK(message("1,2,3,4,5,6,7,8,9,10,11,12\n").find("line 1") != std::string::npos);
}

TEST_CASE("csv tables skip comments and blanks") {
  std::istringstream in("# comment\np,alpha1,alpha2,a1,a2,a3,a4,a5,a6,b5,b6\n\n37,17,6,0,1,3,31,34,13,29,30\n");
  const auto rows = parse_csv_table(in);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][0] == 37);
}

TEST_CASE("bundled tables") {
  CHECK(bundled_table(1).size() == 3);
  CHECK(bundled_table(2).size() == 19);
  CHECK(bundled_table(3).size() == 3);
  CHECK(bundled_table(2).front() == HoweParams::Row{11, 4, 6, 5, 3, 10, 7, 6, 8, 9, 2});
  CHECK_THROWS_AS(bundled_table(4), HoweError);
}

TEST_CASE("json round trip") {
  for (int t = 1; t <= 3; ++t) {
    for (const auto& row : bundled_table(t)) {
      const auto params = HoweParams::from_row(row);
      CHECK(params_from_json(params_to_json(params)) == params);
      CHECK(params_from_json(Json::parse(params_to_json(params).dump())) == params);
    }
  }
  const auto params = HoweParams::from_row(bundled_table(2).front());
  const Json report = report_to_json(make_report(params, {1, 2}));
  CHECK(params_from_json(report) == params);
  CHECK(report.at("counts").at(1).at("count") == 232);
  CHECK(report.at("verdicts").at("serre_fp") == "not applicable");
  CHECK(report.at("factors").size() == 5);
  CHECK_THROWS_AS(params_from_json(Json::parse(R"({"p": 11})")), HoweError);
  CHECK_THROWS_AS(params_from_json(Json::parse(R"({"p":11,"alpha1":1,"alpha2":1,"a":[1,2],"b":[1,2]})")),
                  HoweError);
}
