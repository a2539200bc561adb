#pragma once

#include <string>

namespace popuc::cli {

/// Static scatter plot built only from CSV text. Uses re/im columns on a
/// unit-circle frame when present, otherwise the first two numeric columns
/// after `series` as x/y. Markers are grouped by the `series` (or `t`) column.
std::string svg_from_csv(const std::string& csv, const std::string& title);

}  // namespace popuc::cli
