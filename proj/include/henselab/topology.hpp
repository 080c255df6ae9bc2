#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "henselab/ball.hpp"
#include "henselab/derivation.hpp"
#include "henselab/report.hpp"
#include "henselab/sampler.hpp"

namespace henselab {

/// Basic open of a derivation-refined topology:
/// base ∩ D1^-1(B1) ∩ ... ∩ Dn^-1(Bn). Derivations must be pairwise distinct.
struct BasicOpen {
  Ball base;
  std::vector<std::pair<Derivation, Ball>> constraints;

  BasicOpen() = default;
  explicit BasicOpen(Ball b) : base(std::move(b)) {}
  BasicOpen(Ball b, std::vector<std::pair<Derivation, Ball>> cs);

  std::string str() const;
};

bool contains(const BasicOpen& open, const FieldElem& a);
inline bool contains(const Ball& b, const FieldElem& a) { return ball_contains(b, a); }

/// The element's image under a |-> (a, (D(a))_D): the tuple whose componentwise
/// ball membership defines basic-open membership.
std::vector<FieldElem> sigma_tuple(const std::vector<Derivation>& ds, const FieldElem& a);

/// Weight bookkeeping tag for topology descriptions.
struct WeightBound {
  bool finite = false;
  long n = 0;
  static WeightBound countable() { return WeightBound{false, 0}; }
  static WeightBound of(long size) { return WeightBound{true, size}; }
  std::string str() const;
};

/// Description of a topology: the base valuation topology, optionally refined
/// by a finite or lazily indexed family of derivations.
struct TopologyDesc {
  enum class Kind { BaseValuation, DerivationRefined };
  Kind kind = Kind::BaseValuation;
  std::vector<Derivation> derivations;
  /// Lazily indexed family (1-based); finite prefixes are materialized per use.
  std::function<Derivation(int)> lazy_family;
  WeightBound weight_bound = WeightBound::countable();

  static TopologyDesc base_valuation();
  static TopologyDesc refined(std::vector<Derivation> ds);
  static TopologyDesc lazy_canonical();

  bool is_lazy() const { return static_cast<bool>(lazy_family); }
  std::vector<Derivation> finite_prefix(int k) const;
  std::string str() const;
};

// --- ball algebra witnesses -------------------------------------------------

/// U centered at 0 with U-U, U*U inside V and (1+U)^-1 inside (1+V)^-1.
Ball shrink_for_group_axioms(const Ball& v);

/// U with lambda*U inside V, exactly: radius V.radius - v(lambda).
Ball shrink_for_scaling(const FieldElem& lambda, const Ball& v);

/// lambda with lambda*X inside U (U centered at 0).
FieldElem boundedness_witness(const Ball& x, const Ball& u);

/// A ball containing (K \ U)^-1 for U = Ball(0, r): Ball(0, 1 - r).
Ball v_topology_witness(const Ball& u);

/// Nonzero element of U ∩ D1^-1(U) ∩ ... ∩ Dn^-1(U) (U centered at 0).
FieldElem nondiscreteness_witness(const std::vector<Derivation>& ds, const Ball& u);

/// lambda != 0 with lambda * (U ∩ D^-1(U)) inside Pstar ∩ D^-1(Pstar);
/// both balls centered at 0.
FieldElem local_boundedness_witness(const Ball& u, const Derivation& d, const Ball& pstar);

// --- continuity witnesses (neighborhood arithmetic) --------------------------

/// Neighborhoods A of a and B of b with A + B inside `target` (a+b in target).
std::pair<BasicOpen, BasicOpen> continuity_add_witness(const FieldElem& a, const FieldElem& b,
                                                       const BasicOpen& target);
/// Neighborhoods with A * B inside `target` (a*b in target).
std::pair<BasicOpen, BasicOpen> continuity_mul_witness(const FieldElem& a, const FieldElem& b,
                                                       const BasicOpen& target);
/// Neighborhood A of a (nonzero) with A^-1 inside `target` (1/a in target).
BasicOpen continuity_inv_witness(const FieldElem& a, const BasicOpen& target);

/// Samples an element of the basic open (retry-gated, membership-verified).
FieldElem sample_in_basic_open(Sampler& sampler, const BasicOpen& open);

// --- neighborhood-basis axiom checker ----------------------------------------

/// Parametrized family descriptor for the axiom checker.
struct BasisFamily {
  enum class Kind {
    TAdicBalls,        // { Ball(0, r) : r >= 0 }
    TauBasicOpens,     // { Ball(0,r) ∩ D^-1(Ball(0,r)) : r >= 0 }
    SingletonBall,     // { Ball(0, 1) } alone — breaks the scaling axiom
    WithZeroSingleton  // t-adic balls plus the forbidden member {0}
  };
  Kind kind = Kind::TAdicBalls;
  std::vector<Derivation> derivations;

  BasicOpen member(long r) const;
  std::string str() const;
};

/// Checks the five neighborhood-basis axioms on the family; failures are
/// verdicts with counterexamples, not errors.
Report check_basis_axioms(const BasisFamily& basis, int samples, std::uint64_t seed);

}  // namespace henselab
