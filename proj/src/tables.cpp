#include "howe/tables.hpp"

#include <string>

#include "howe/serialization.hpp"
#include "howe_tables_data.hpp"

namespace howe {

std::string_view bundled_table_csv(int table) {
  switch (table) {
    case 1: return kTable1Csv;
    case 2: return kTable2Csv;
    case 3: return kTable3Csv;
    default:
      throw HoweError(ErrorKind::InvalidArgument,
                      "no bundled table " + std::to_string(table) + " (expected 1, 2 or 3)");
  }
}

std::vector<HoweParams::Row> bundled_table(int table) {
  return parse_csv_table(bundled_table_csv(table));
}

}  // namespace howe
