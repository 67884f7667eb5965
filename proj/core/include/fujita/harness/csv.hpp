#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fujita::harness {

// Shortest round-trip text for a double ("inf", "-inf", "nan" for non-finite).
std::string format_number(double v);
double parse_number(const std::string& s);

// RFC 4180: fields with comma, quote or line break are quoted.
std::string csv_escape(const std::string& field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);
// Throws fujita::Error(IoError) on unterminated quotes.
std::vector<std::vector<std::string>> read_csv(std::istream& in);

}  // namespace fujita::harness
