#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace invcompact::cli {

/// Scientific notation with 17 significant digits, '.' decimal, no locale.
std::string format_real(double value);

/// Writes one comma-separated row followed by '\n'.
void write_row(std::ostream& out, const std::vector<std::string>& cells);

/// Parses a CSV body produced by write_row: returns the header and rows.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};
CsvTable parse_csv(std::string_view text);

/// Exact inverse of format_real.  Throws std::invalid_argument.
double parse_real(std::string_view cell);

} // namespace invcompact::cli
