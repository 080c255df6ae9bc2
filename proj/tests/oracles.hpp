#pragma once

#include "henselab/series.hpp"

namespace henselab::testing {

// Test-side oracles, independent of the library paths they check.

/// exp(t^i) modulo t^prec by direct factorial summation.
inline TruncSeries exp_series_oracle(int i, long prec) {
  std::vector<Rat> coeffs(static_cast<size_t>(prec), Rat(0));
  Rat term(1);
  for (long k = 0; i * k < prec; ++k) {
    if (k > 0) term = term / Rat(k);
    coeffs[static_cast<size_t>(i * k)] = term;
  }
  return TruncSeries(0, coeffs, prec);
}

/// Generalized binomial coefficient C(1/2, k).
inline Rat half_binomial(long k) {
  Rat c(1);
  Rat top(1, 2);
  for (long j = 0; j < k; ++j) {
    c = c * (top - Rat(j)) / Rat(j + 1);
  }
  return c;
}

/// sqrt(1 + u) for v(u) >= 1, via the binomial series (test-side route).
inline TruncSeries sqrt_one_plus(const TruncSeries& u, long prec) {
  if (!u.known_zero() && u.offset() < 1)
    throw std::logic_error("sqrt oracle needs v(u) >= 1");
  TruncSeries acc = TruncSeries::constant(Rat(1), prec);
  TruncSeries upow = TruncSeries::constant(Rat(1), prec);
  for (long k = 1; k < prec; ++k) {
    upow = upow * u;
    if (upow.known_zero()) break;
    acc = acc + upow.scale(half_binomial(k));
  }
  return acc.truncate(prec);
}

/// The root of x^2 + x + a near -1, from the closed form (-1 - sqrt(1-4a))/2.
inline TruncSeries quadratic_root_oracle(const TruncSeries& a, long prec) {
  TruncSeries s = sqrt_one_plus(a.scale(Rat(-4)), prec);
  TruncSeries num = TruncSeries::constant(Rat(-1), prec) - s;
  return num.scale(Rat(1, 2)).truncate(prec);
}

}  // namespace henselab::testing
