#include <doctest.h>

#include "henselab/derivation.hpp"
#include "henselab/hensel.hpp"
#include "henselab/registry.hpp"
#include "henselab/sampler.hpp"
#include "henselab/topology.hpp"
#include "helpers.hpp"

using namespace henselab;
using henselab::testing::E;
using henselab::testing::reset_lab;

namespace {

bool sym_zero(const FieldElem& a) { return a.symbolic() && a.is_zero_symbolic(); }
bool sym_eq(const FieldElem& a, const FieldElem& b) { return sym_zero(a - b); }

}  // namespace

TEST_SUITE("field-model") {

TEST_CASE("derivations from generator values") {
  reset_lab(2);
  Derivation d1 = Derivation::canonical(1);
  CHECK(sym_eq(d1.value_on(1), E("1")));
  CHECK(sym_zero(d1.value_on(0)));
  CHECK(sym_zero(d1.value_on(2)));

  Derivation z = Derivation::zero();
  CHECK(z.is_zero());
  CHECK(sym_zero(apply_derivation(z, E("e1*t + 7"))));

  Derivation ddt = Derivation::dt();
  CHECK(sym_eq(apply_derivation(ddt, E("t^3 + e2")), E("3*t^2")));

  std::map<int, FieldElem> vals;
  vals.emplace(5, FieldElem::integer(1));
  CHECK_THROWS_AS(make_derivation(vals), std::invalid_argument);
}

TEST_CASE("apply_derivation on the examples") {
  reset_lab(2);
  Derivation d1 = Derivation::canonical(1);
  CHECK(sym_eq(apply_derivation(d1, E("e1^3")), E("3*e1^2")));
  CHECK(sym_zero(apply_derivation(d1, E("t^5 + e2"))));
  // the inverse rule display: d(1/a) = -d(a)/a^2
  CHECK(sym_eq(apply_derivation(d1, E("1/e1")), E("-1/e1^2")));
}

TEST_CASE("uniqueness: equal generator values give equal derivations") {
  reset_lab(3);
  Derivation d2 = Derivation::canonical(2);
  std::map<int, FieldElem> vals;
  vals.emplace(2, FieldElem::integer(1));
  Derivation copy = make_derivation(vals);
  Sampler sampler(23, 3);
  for (int k = 0; k < 100; ++k) {
    FieldElem a = sampler.around(FieldElem(), sampler.integer_in(-1, 2));
    CHECK(sym_eq(apply_derivation(d2, a), apply_derivation(copy, a)));
  }
}

TEST_CASE("Leibniz, additivity, and the inverse rule on samples") {
  reset_lab(3);
  Sampler sampler(31, 3);
  Derivation ds[] = {Derivation::canonical(1), Derivation::canonical(3), Derivation::dt()};
  for (int k = 0; k < 25; ++k) {
    const Derivation& d = ds[k % 3];
    FieldElem a = sampler.around(FieldElem(), sampler.integer_in(-1, 2));
    FieldElem b = sampler.around(FieldElem(), sampler.integer_in(-1, 2));
    CHECK(sym_zero(apply_derivation(d, a * b) - a * apply_derivation(d, b) -
                   b * apply_derivation(d, a)));
    CHECK(sym_zero(apply_derivation(d, a + b) - apply_derivation(d, a) -
                   apply_derivation(d, b)));
    // inverse rule: D(1/a) a^2 + D(a) = 0
    CHECK(sym_zero(apply_derivation(d, FieldElem::integer(1) / a) * a * a +
                   apply_derivation(d, a)));
  }
}

TEST_CASE("linear independence decisions with certificates") {
  reset_lab(3);
  Derivation d1 = Derivation::canonical(1), d2 = Derivation::canonical(2);

  CHECK(linear_independence({d1, d2}).independent);

  std::map<int, FieldElem> twice;
  twice.emplace(1, FieldElem::integer(2));
  Derivation d1x2 = make_derivation(twice);
  auto dep = linear_independence({d1, d1x2});
  REQUIRE_FALSE(dep.independent);
  REQUIRE(dep.certificate.size() == 2);
  bool nonzero = !dep.certificate[0].is_zero() || !dep.certificate[1].is_zero();
  CHECK(nonzero);
  // the combination annihilates the value rows: c0 * d1(e1) + c1 * d1x2(e1) = 0
  RatFunc combo = dep.certificate[0] * d1.value_on(1).ratfunc() +
                  dep.certificate[1] * d1x2.value_on(1).ratfunc();
  CHECK(combo.is_zero());

  std::map<int, FieldElem> sum, diff;
  sum.emplace(1, FieldElem::integer(1));
  sum.emplace(2, FieldElem::integer(1));
  diff.emplace(1, FieldElem::integer(1));
  diff.emplace(2, FieldElem::integer(-1));
  CHECK(linear_independence({make_derivation(sum), make_derivation(diff)}).independent);

  CHECK_FALSE(linear_independence({Derivation::zero()}).independent);
  CHECK_THROWS_AS(linear_independence(std::vector<Derivation>{}), std::invalid_argument);
}

TEST_CASE("constant subfield membership") {
  reset_lab(2);
  Derivation d1 = Derivation::canonical(1);
  CHECK(constant_field_contains(d1, E("t^7/(1+t)")));
  CHECK_FALSE(constant_field_contains(d1, E("e1")));
  CHECK(constant_field_contains(d1, E("e2*t")));

  auto root = hensel_root(GtPoly(0, {FieldElem::t()}), 8);
  CHECK_THROWS_AS(constant_field_contains(d1, FieldElem::from_root(root)), UnsupportedTier);
}

TEST_CASE("continuity refutations") {
  reset_lab(2);
  Derivation d1 = Derivation::canonical(1);

  FieldElem a5 = continuity_refutation(d1, 5);
  CHECK(sym_eq(a5, E("e1 - 1 - t - t^2/2 - t^3/6 - t^4/24")));
  CHECK(*valuation(a5) == 5);
  CHECK(sym_eq(apply_derivation(d1, a5), E("1")));

  FieldElem a1 = continuity_refutation(d1, 1);
  CHECK(sym_eq(a1, E("e1 - 1")));
  CHECK(*valuation(a1) == 1);

  CHECK_THROWS_AS(continuity_refutation(Derivation::zero(), 3), NoWitnessFound);

  // derivative-in-t style derivations are caught by the scaled candidates
  FieldElem b = continuity_refutation(Derivation::dt(), 6);
  CHECK(val_at_least(b, 6));
  CHECK(*valuation(apply_derivation(Derivation::dt(), b)) <= 0);

  // a derivation with a high-valuation value needs the t-power scaling
  std::map<int, FieldElem> vals;
  vals.emplace(2, E("t^3"));
  Derivation high = make_derivation(vals);
  FieldElem c = continuity_refutation(high, 4);
  CHECK(val_at_least(c, 4));
  CHECK(*valuation(apply_derivation(high, c)) <= 0);
}

TEST_CASE("dense independent enumerator") {
  reset_lab(1);
  FieldElem first = dense_independent_enumerator(Ball::around_zero(3), {E("e1")});
  CHECK(GeneratorRegistry::instance().count() == 2);
  CHECK(sym_eq(first, E("t^3*e2")));
  CHECK(ball_contains(Ball::around_zero(3), first));

  FieldElem second = dense_independent_enumerator(Ball(E("e1"), 2), {});
  CHECK(sym_eq(second, E("1 + t + t^2*e3")));
  CHECK(ball_contains(Ball(E("e1"), 2), second));

  // successive calls on the same ball mint distinct generators
  Ball target = Ball::around_zero(1);
  FieldElem x = dense_independent_enumerator(target, {E("e1")});
  FieldElem y = dense_independent_enumerator(target, {E("e1"), x});
  CHECK_FALSE(sym_zero(x - y));

  // no bounded-degree relation among (x, y) and the avoid element holds
  std::vector<FieldElem> rel;
  FieldElem e1 = E("e1");
  rel.push_back(x - y);
  rel.push_back(x + y - e1);
  rel.push_back(x * y - FieldElem::integer(1));
  rel.push_back(x * x - y);
  rel.push_back(x * x * y - e1);
  rel.push_back(x * x * x - y * y);
  rel.push_back(x * y - x - y);
  rel.push_back(x * x - x * y + y * y - e1);
  for (const auto& r : rel) CHECK_FALSE(sym_zero(r));

  CHECK_THROWS_AS(
      dense_independent_enumerator(target, {FieldElem::from_root(hensel_root(
                                       GtPoly(0, {FieldElem::t()}), 8))}),
      UnsupportedTier);
}

TEST_CASE("sigma tuple matches componentwise membership") {
  reset_lab(2);
  std::vector<Derivation> ds = {Derivation::canonical(1), Derivation::canonical(2)};
  FieldElem a = E("t*e1");
  auto tuple = sigma_tuple(ds, a);
  REQUIRE(tuple.size() == 3);
  BasicOpen open(Ball::around_zero(1), {{ds[0], Ball::around_zero(1)},
                                        {ds[1], Ball::around_zero(1)}});
  bool componentwise = ball_contains(open.base, tuple[0]) &&
                       ball_contains(open.constraints[0].second, tuple[1]) &&
                       ball_contains(open.constraints[1].second, tuple[2]);
  CHECK(contains(open, a) == componentwise);
}

}  // TEST_SUITE
