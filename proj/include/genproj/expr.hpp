#pragma once

#include <functional>
#include <string>

namespace genproj {

// Compiles an expression over {t, +, -, *, /, ^, pow, sin, cos, exp, abs}
// into a callable. Throws std::invalid_argument on parse failure.
std::function<double(double)> parse_expression(const std::string& text);

}  // namespace genproj
