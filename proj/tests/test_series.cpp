#include <doctest.h>

#include "henselab/elem.hpp"
#include "henselab/registry.hpp"
#include "henselab/sampler.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace henselab;
using henselab::testing::E;
using henselab::testing::exp_series_oracle;
using henselab::testing::reset_lab;

namespace {

struct CapGuard {
  long saved;
  explicit CapGuard(long cap) : saved(precision_cap()) { set_precision_cap(cap); }
  ~CapGuard() { set_precision_cap(saved); }
};

}  // namespace

TEST_SUITE("series-engine") {

TEST_CASE("truncated series arithmetic tracks precision") {
  TruncSeries a(2, {Rat(1)}, 10);  // t^2 + O(t^10)
  TruncSeries b(3, {Rat(1)}, 7);   // t^3 + O(t^7)
  TruncSeries p = a * b;
  CHECK(p.offset() == 5);
  CHECK(p.precision() == 9);  // min(2+7, 3+10)
  TruncSeries s = a + b;
  CHECK(s.precision() == 7);
  CHECK(s.coeff_at(2) == Rat(1));
  CHECK(s.coeff_at(3) == Rat(1));
  CHECK(s.coeff_at(4) == Rat(0));
}

TEST_CASE("series inverse") {
  // 1/(1 - t) = 1 + t + t^2 + ...
  TruncSeries one_minus_t(0, {Rat(1), Rat(-1)}, 8);
  TruncSeries inv = one_minus_t.inverse();
  for (long k = 0; k < inv.precision(); ++k) CHECK(inv.coeff_at(k) == Rat(1));
  // inverting t^d u loses 2d of precision
  TruncSeries tsq(2, {Rat(1), Rat(1)}, 10);
  TruncSeries itsq = tsq.inverse();
  CHECK(itsq.offset() == -2);
  CHECK(itsq.precision() == 6);
  CHECK((tsq * itsq).coeff_at(0) == Rat(1));
}

TEST_CASE("registry produces the default exponential family") {
  reset_lab(3);
  auto& reg = GeneratorRegistry::instance();
  CHECK(reg.count() == 3);
  CHECK(reg.series(1, 6).agrees_with(exp_series_oracle(1, 6)));
  CHECK(reg.series(2, 9).agrees_with(exp_series_oracle(2, 9)));
  CHECK(reg.series(3, 9).agrees_with(exp_series_oracle(3, 9)));
  // deterministic across calls
  CHECK(reg.series(2, 9).agrees_with(reg.series(2, 9)));
  CHECK_THROWS_AS(reg.series(4, 4), std::invalid_argument);
  CHECK(reg.mint() == 4);
  CHECK_NOTHROW(reg.series(4, 4));
}

TEST_CASE("eval_series on the examples") {
  reset_lab(2);
  TruncSeries e1 = eval_series(E("e1"), 4);
  CHECK(e1.agrees_with(TruncSeries(0, {Rat(1), Rat(1), Rat(1, 2), Rat(1, 6)}, 4)));

  TruncSeries geom = eval_series(E("1/(1-t)"), 3);
  CHECK(geom.agrees_with(TruncSeries(0, {Rat(1), Rat(1), Rat(1)}, 3)));

  TruncSeries tail = eval_series(E("e1 - 1 - t"), 3);
  CHECK(tail.agrees_with(TruncSeries(2, {Rat(1, 2)}, 3)));

  CHECK_THROWS_AS(eval_series(E("e1"), 0), std::invalid_argument);
}

TEST_CASE("eval_series handles negative valuations") {
  reset_lab(1);
  TruncSeries s = eval_series(E("1/t^2"), 3);
  CHECK(s.offset() == -2);
  CHECK(s.coeff_at(-2) == Rat(1));
  TruncSeries u = eval_series(E("(1+t)/t"), 2);
  CHECK(u.coeff_at(-1) == Rat(1));
  CHECK(u.coeff_at(0) == Rat(1));
  CHECK(u.coeff_at(1) == Rat(0));
}

TEST_CASE("valuation on the examples") {
  reset_lab(2);
  CHECK(valuation(E("t^3*(1+t)/(2+t)")) == 3);
  CHECK(valuation(E("e1 - 1")) == 1);
  CHECK(valuation(FieldElem()) == std::nullopt);  // +infinity
  CHECK(valuation(E("1/t^4")) == -4);
}

TEST_CASE("valuation fails loudly at the cap") {
  reset_lab(1);
  CapGuard guard(32);
  // symbolically nonzero, but indistinguishable from zero below t^64
  FieldElem a = E("e1") - laurent_truncation(E("e1"), 64);
  CHECK_FALSE(a.is_zero_symbolic());
  CHECK_THROWS_AS(valuation(a), PrecisionExhausted);
  // a certified lower bound is still available
  CHECK(val_at_least(a, 16));
}

TEST_CASE("valuation is stable under a larger cap") {
  reset_lab(2);
  FieldElem a = E("e2 - 1 - t^2");
  long v1 = *valuation(a);
  CapGuard guard(precision_cap() * 2);
  CHECK(*valuation(a) == v1);
  CHECK(v1 == 4);
}

TEST_CASE("eval_series is a ring homomorphism on samples") {
  reset_lab(3);
  Sampler sampler(11, 3);
  for (int k = 0; k < 12; ++k) {
    FieldElem a = sampler.around(FieldElem(), sampler.integer_in(-2, 2));
    FieldElem b = sampler.around(FieldElem(), sampler.integer_in(-2, 2));
    long prec = 10;
    CHECK(eval_series(a + b, prec).agrees_with(eval_series(a, prec) + eval_series(b, prec)));
    CHECK(eval_series(a * b, prec).agrees_with(eval_series(a, prec) * eval_series(b, prec)));
  }
}

TEST_CASE("valuation is multiplicative and ultrametric on samples") {
  reset_lab(3);
  Sampler sampler(17, 3);
  for (int k = 0; k < 15; ++k) {
    FieldElem a = sampler.small(sampler.integer_in(-3, 3));
    FieldElem b = sampler.small(sampler.integer_in(-3, 3));
    long va = *valuation(a), vb = *valuation(b);
    CHECK(*valuation(a * b) == va + vb);
    FieldElem sum = a + b;
    if (sum.is_zero_symbolic()) continue;
    long vs = *valuation(sum);
    CHECK(vs >= std::min(va, vb));
    if (va != vb) CHECK(vs == std::min(va, vb));
  }
}

TEST_CASE("precision cap configuration") {
  CHECK_THROWS_AS(set_precision_cap(8), std::invalid_argument);
  CapGuard guard(128);
  CHECK(precision_cap() == 128);
}

}  // TEST_SUITE
