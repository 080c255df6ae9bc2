#pragma once

#include <string>

#include "henselab/elem.hpp"

namespace henselab {

/// Valuation ball {x : v(x - center) >= radius}. Radii are integers; the value
/// group is Z, so ball algebra is exact.
struct Ball {
  FieldElem center;
  long radius = 0;

  Ball() = default;
  Ball(FieldElem c, long r) : center(std::move(c)), radius(r) {}
  static Ball around_zero(long r) { return Ball(FieldElem(), r); }

  std::string str() const;
};

inline bool ball_contains(const Ball& b, const FieldElem& a) {
  return val_at_least(a - b.center, b.radius);
}

}  // namespace henselab
