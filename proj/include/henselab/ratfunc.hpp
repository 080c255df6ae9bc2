#pragma once

#include <string>

#include "henselab/mpoly.hpp"

namespace henselab {

/// Reduced rational function num/den over t, e1, e2, ...
/// Canonical form: gcd(num, den) = 1 and den has leading coefficient 1 under
/// the graded lex order, so structural equality is semantic equality.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rat(1)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT
  RatFunc(MPoly num, MPoly den);
  explicit RatFunc(const MPoly& num) : num_(num), den_(Rat(1)) {}

  static RatFunc t() { return RatFunc(MPoly::var(0)); }
  static RatFunc gen(int i) { return RatFunc(MPoly::var(i)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == MPoly(Rat(1)); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  RatFunc pow(long k) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Quotient-rule partial derivative with respect to variable `index`.
  RatFunc partial(int index) const;

  /// Highest variable index occurring, or -1 if none.
  int top_variable() const;

  std::string str() const;

 private:
  struct AlreadyReduced {};
  RatFunc(MPoly num, MPoly den, AlreadyReduced) : num_(std::move(num)), den_(std::move(den)) {}

  MPoly num_;
  MPoly den_;
};

}  // namespace henselab
