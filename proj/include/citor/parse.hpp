#pragma once

#include <string>

#include "citor/polynomial.hpp"

namespace citor {

// Syntax: 3*x^2*y - z*u, 1/2*x. Throws parse_error with line and column.
Polynomial parse_polynomial(const std::string& text, const SpacePtr& space);

}  // namespace citor
