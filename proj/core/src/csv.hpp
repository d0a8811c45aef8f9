#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stegolab::detail {

/// Quotes a CSV field when it contains a comma, quote, or newline.
std::string csv_escape(std::string_view field);

/// Splits one CSV line into fields, honoring quoted fields with doubled
/// quotes. Throws InvalidArgument on malformed quoting.
std::vector<std::string> csv_split(std::string_view line);

std::string csv_join(const std::vector<std::string>& fields);

}  // namespace stegolab::detail
