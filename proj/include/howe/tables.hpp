#pragma once

#include <string_view>
#include <vector>

#include "howe/howe_curve.hpp"

namespace howe {

/// Which genus-5 property a published table certifies.
enum class TableKind { SerreFp = 1, MaximalFp2 = 2, SerreFp3 = 3 };

/// CSV text of bundled table 1, 2 or 3 (data/table{n}.csv at build time).
/// Throws HoweError(InvalidArgument) for other numbers.
std::string_view bundled_table_csv(int table);

std::vector<HoweParams::Row> bundled_table(int table);

}  // namespace howe
