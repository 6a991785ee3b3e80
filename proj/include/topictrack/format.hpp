#pragma once

#include <string>

namespace topictrack {

/// Shortest decimal that reads back to exactly `value` ("0.75", "1", "0.1").
std::string format_shortest(double value);

/// Fixed-point with at most `digits` decimals, trailing zeros trimmed.
std::string format_fixed(double value, int digits = 2);

}  // namespace topictrack
