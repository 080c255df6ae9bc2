#pragma once

#include <map>
#include <string>
#include <vector>

#include "henselab/ball.hpp"
#include "henselab/elem.hpp"

namespace henselab {

/// A derivation of the working field, determined by its values on the
/// transcendence-basis generators (key 0 is t, key i >= 1 is e_i; absent keys
/// mean value zero). Vanishes on the rationals.
class Derivation {
 public:
  Derivation(int id, std::string label, std::map<int, FieldElem> values);

  /// The canonical family: value 1 on e_i, zero elsewhere (in particular on t).
  static Derivation canonical(int i);
  static Derivation zero();
  /// Value 1 on t, zero on every generator.
  static Derivation dt();

  int id() const { return id_; }
  const std::string& label() const { return label_; }
  const std::map<int, FieldElem>& values() const { return values_; }
  FieldElem value_on(int var_index) const;
  bool is_zero() const;

 private:
  int id_;
  std::string label_;
  std::map<int, FieldElem> values_;
};

/// Fresh derivation from generator values; validates that every referenced
/// generator is registered.
Derivation make_derivation(const std::map<int, FieldElem>& values);
void reset_custom_derivation_ids();

/// Chain-rule extension of D through the expression: the unique derivation
/// agreeing with the basis values. Root nodes use the simple-root formula.
FieldElem apply_derivation(const Derivation& D, const FieldElem& a);

struct IndependenceResult {
  bool independent = false;
  /// When dependent: nonzero coefficients with sum_i certificate[i] * row_i = 0.
  std::vector<RatFunc> certificate;
};

/// Exact rank decision over K of the derivations' value matrix.
IndependenceResult linear_independence(const std::vector<Derivation>& ds);

/// True iff D(a) vanishes symbolically; a must be symbolic-tier.
bool constant_field_contains(const Derivation& D, const FieldElem& a);

/// An element a with v(a) >= N and v(D(a)) <= 0, witnessing that D is not
/// continuous. Searches scaled generator-minus-truncation candidates.
FieldElem continuity_refutation(const Derivation& D, long N);

/// An element of `target` algebraically independent over Q(t) from every
/// avoid element, built from the ball-truncated center plus a fresh generator.
FieldElem dense_independent_enumerator(const Ball& target, const std::vector<FieldElem>& avoid);

}  // namespace henselab
