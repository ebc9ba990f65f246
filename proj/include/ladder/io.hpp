#pragma once

#include <string>
#include <string_view>

#include "ladder/partition.hpp"

namespace ladder {

// Accepts "3,2^2,1^5" style input (caret exponents optional) and the token
// "empty". Throws parse_error on anything else, including non-decreasing parts.
Partition parse_partition(std::string_view text);

// Canonical text: "3,2,2,1", or "empty". Never uses exponents.
std::string to_string(const Partition& lambda);

std::string to_string(BoxPos b);

} // namespace ladder
