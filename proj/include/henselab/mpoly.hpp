#pragma once

#include <map>
#include <string>
#include <vector>

#include "henselab/rat.hpp"

namespace henselab {

/// Monomial over the variables t, e1, e2, ... (index 0 is t, index k is e_k).
/// Exponent vectors are stored with trailing zeros trimmed.
struct Monomial {
  std::vector<unsigned> exp;

  static Monomial one() { return Monomial{}; }
  static Monomial var(int index, unsigned power = 1);

  unsigned degree_of(int index) const {
    return index < static_cast<int>(exp.size()) ? exp[index] : 0;
  }
  unsigned total_degree() const;
  bool is_one() const { return exp.empty(); }

  Monomial operator*(const Monomial& o) const;
  // Componentwise quotient; caller must ensure divisibility.
  bool divides(const Monomial& o) const;
  Monomial divide(const Monomial& o) const;

  void trim();
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

/// Graded lexicographic order with t < e1 < ... < em: total degree first,
/// ties broken by the highest-index variable.
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial over Rat with no stored zero coefficients.
class MPoly {
 public:
  using TermMap = std::map<Monomial, Rat, MonoLess>;

  MPoly() = default;
  explicit MPoly(const Rat& c);
  static MPoly constant(const Rat& c) { return MPoly(c); }
  static MPoly var(int index) { return monomial_term(Rat(1), Monomial::var(index)); }
  static MPoly monomial_term(const Rat& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term as rational; requires is_constant().
  Rat constant_value() const;
  const TermMap& terms() const { return terms_; }
  unsigned total_degree() const;
  // Highest variable index occurring, or -1 for constants.
  int top_variable() const;

  const Monomial& leading_monomial() const;
  const Rat& leading_coeff() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rat& c) const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Exact division; throws std::domain_error if the division is not exact.
  MPoly divide_exact(const MPoly& divisor) const;

  /// Positive rational c such that (1/c)*this has coprime integer
  /// coefficients; 1 for the zero polynomial.
  Rat rational_content() const;

  /// Termwise partial derivative with respect to variable `index`.
  MPoly partial(int index) const;

  /// Substitute t -> t * scale? Not needed; kept minimal.

  // --- univariate view in the variable `v` (coefficients in the other vars)
  unsigned degree_in(int v) const;
  MPoly coeff_in(int v, unsigned k) const;  // coefficient of v^k
  static MPoly from_coeffs_in(int v, const std::vector<MPoly>& coeffs);

  void add_term(const Monomial& m, const Rat& c);  // merges, drops zeros

  std::string str() const;

 private:
  TermMap terms_;
};

/// Polynomial gcd over Rat coefficients, normalized so the leading coefficient
/// (graded lex) is 1. gcd(0,0) = 0.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

}  // namespace henselab
