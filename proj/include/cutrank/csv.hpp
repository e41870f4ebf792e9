#pragma once

#include <string>
#include <vector>

namespace cutrank {

/// RFC-style CSV: fields containing comma, quote or newline are quoted,
/// embedded quotes doubled.
std::string csv_quote(const std::string& field);

/// Splits one CSV line honouring quoted fields.
std::vector<std::string> split_csv_line(const std::string& line);

} // namespace cutrank
