#pragma once

#include <optional>
#include <string>
#include <vector>

#include "henselab/rat.hpp"

namespace henselab {

/// Laurent series over Rat known modulo t^precision. The stored coefficients
/// cover exponents [offset, offset + coeffs.size()); every unstored exponent
/// below `precision` is zero. Canonical: first and last stored coefficients
/// are nonzero, and a series with no known nonzero part has offset == precision.
class TruncSeries {
 public:
  TruncSeries() : offset_(0), prec_(0) {}
  TruncSeries(long offset, std::vector<Rat> coeffs, long prec);

  static TruncSeries zero(long prec) { return TruncSeries(prec, {}, prec); }
  static TruncSeries constant(const Rat& c, long prec);
  static TruncSeries t(long prec);                 // the series "t"
  static TruncSeries monomial(const Rat& c, long exponent, long prec);

  long offset() const { return offset_; }
  long precision() const { return prec_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool known_zero() const { return coeffs_.empty(); }

  Rat coeff_at(long exponent) const;

  /// Exact valuation of the known part; nullopt when nothing nonzero is known.
  std::optional<long> valuation_known() const {
    if (coeffs_.empty()) return std::nullopt;
    return offset_;
  }
  /// Certified lower bound on the valuation.
  long valuation_lower_bound() const { return coeffs_.empty() ? prec_ : offset_; }

  TruncSeries operator-() const;
  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scale(const Rat& c) const;
  TruncSeries shift(long k) const;  // multiply by t^k

  /// Multiplicative inverse. Requires a known nonzero part; the result is
  /// known modulo t^(precision - 2*offset).
  TruncSeries inverse() const;
  TruncSeries operator/(const TruncSeries& o) const { return *this * o.inverse(); }

  TruncSeries pow(unsigned k) const;
  TruncSeries truncate(long prec) const;

  /// Equality of the known parts below min(precision, o.precision).
  bool agrees_with(const TruncSeries& o) const;

  std::string str() const;

 private:
  void canonicalize();

  long offset_;
  std::vector<Rat> coeffs_;
  long prec_;
};

}  // namespace henselab
