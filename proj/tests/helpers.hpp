#pragma once

#include "henselab/expr_io.hpp"
#include "henselab/registry.hpp"

namespace henselab::testing {

/// Scenario-style ambient setup for a test case.
inline void reset_lab(int generators = 4) {
  GeneratorRegistry::instance().reset(generators);
}

inline FieldElem E(const std::string& text) { return parse_elem(text); }

}  // namespace henselab::testing
