#pragma once

#include <string>

#include "henselab/elem.hpp"

namespace henselab {

/// Parses a symbolic element from the canonical expression grammar:
/// rationals ("3", "-5/2"), t, e1..em, + - * / ^ and parentheses.
FieldElem parse_elem(const std::string& text);

}  // namespace henselab
