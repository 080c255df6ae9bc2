#pragma once

#include <cstdint>
#include <random>

#include "henselab/elem.hpp"

namespace henselab {

/// Deterministic seeded element source. Elements are sampled as
/// c + t^r * (random polynomial in t, e1..em with small rational coefficients),
/// so the draw sequence is fixed per seed.
class Sampler {
 public:
  Sampler(std::uint64_t seed, int num_generators);

  long integer_in(long lo, long hi);  // inclusive
  Rat small_rational();               // nonzero, numerator/denominator in [-9,9]/[1,9]
  /// Random polynomial in t, e1..em, total degree <= max_degree, with a
  /// nonzero constant term so its valuation is 0.
  RatFunc unit_poly(int terms = 3, unsigned max_degree = 2);
  /// center + t^r * unit polynomial.
  FieldElem around(const FieldElem& center, long r);
  /// Nonzero symbolic element with valuation >= r (valuation exactly r).
  FieldElem small(long r) { return around(FieldElem(), r); }

 private:
  std::mt19937_64 rng_;
  int m_;
};

}  // namespace henselab
