#include <doctest.h>

#include <random>

#include "henselab/ratfunc.hpp"

using namespace henselab;

namespace {

RatFunc T() { return RatFunc::t(); }
RatFunc E(int i) { return RatFunc::gen(i); }
RatFunc C(long n, long d = 1) { return RatFunc(Rat(n, d)); }

// seeded rational-function sampler for the property checks
struct PolySampler {
  std::mt19937_64 rng;
  explicit PolySampler(std::uint64_t seed) : rng(seed) {}
  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  }
  RatFunc poly() {
    RatFunc p = C(pick(-4, 4));
    for (int k = 0; k < 3; ++k) {
      Monomial m;
      for (long s = pick(1, 3); s > 0; --s) m = m * Monomial::var(static_cast<int>(pick(0, 2)));
      p = p + RatFunc(MPoly::monomial_term(Rat(pick(-5, 5), pick(1, 3)), m));
    }
    return p;
  }
  RatFunc nonzero_poly() {
    while (true) {
      RatFunc p = poly();
      if (!p.is_zero()) return p;
    }
  }
  RatFunc ratfunc() { return poly() / nonzero_poly(); }
};

}  // namespace

TEST_SUITE("core-arith") {

TEST_CASE("field operations reduce to canonical form") {
  // t/(1+t) + t^2/(1+t) = t
  RatFunc one_plus_t = C(1) + T();
  CHECK(T() / one_plus_t + (T() * T()) / one_plus_t == T());
  // (1/e1) * e1 = 1
  CHECK(E(1).inverse() * E(1) == C(1));
  // (t^2 - 1)/(t - 1) = t + 1
  CHECK((T() * T() - C(1)) / (T() - C(1)) == T() + C(1));
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(C(1) / RatFunc(), std::domain_error);
  CHECK_THROWS_AS(RatFunc().inverse(), std::domain_error);
}

TEST_CASE("symbolic zero test") {
  CHECK((E(1) * E(1) - E(1).pow(2)).is_zero());
  CHECK(((C(1) + T()) * (C(1) - T()) - (C(1) - T() * T())).is_zero());
  CHECK_FALSE((E(1) - C(1) - T()).is_zero());
}

TEST_CASE("formal partial derivatives") {
  // d/de1 (e1^2 t) = 2 e1 t
  CHECK((E(1) * E(1) * T()).partial(1) == C(2) * E(1) * T());
  // d/dt t^3 = 3 t^2
  CHECK(T().pow(3).partial(0) == C(3) * T() * T());
  // d/de1 (1/e1) = -1/e1^2
  CHECK(E(1).inverse().partial(1) == -(E(1) * E(1)).inverse());
}

TEST_CASE("field laws on sampled elements") {
  PolySampler s(20260810);
  for (int k = 0; k < 30; ++k) {
    RatFunc a = s.ratfunc(), b = s.ratfunc(), c = s.ratfunc();
    CHECK((a * (b + c) - (a * b + a * c)).is_zero());
    if (!b.is_zero()) CHECK(((a * b) / b - a).is_zero());
    CHECK(((a + b) + c - (a + (b + c))).is_zero());
  }
}

TEST_CASE("partials are additive and satisfy Leibniz") {
  PolySampler s(7);
  for (int k = 0; k < 30; ++k) {
    RatFunc a = s.ratfunc(), b = s.ratfunc();
    for (int var : {0, 1, 2}) {
      CHECK(((a + b).partial(var) - a.partial(var) - b.partial(var)).is_zero());
      CHECK(((a * b).partial(var) - a * b.partial(var) - b * a.partial(var)).is_zero());
    }
  }
}

TEST_CASE("canonical form is idempotent and denominator monic") {
  PolySampler s(99);
  for (int k = 0; k < 30; ++k) {
    RatFunc a = s.ratfunc();
    RatFunc again(a.num(), a.den());
    CHECK(a == again);
    if (!a.den().is_zero()) CHECK(a.den().leading_coeff().is_one());
    CHECK(mpoly_gcd(a.num(), a.den()).is_constant());
  }
}

TEST_CASE("multivariate gcd at desk scale") {
  // gcd((1+t)^2 e1, (1+t) e1 e2) = (1+t) e1 up to the monic normalization
  MPoly f = ((C(1) + T()) * (C(1) + T()) * E(1)).num();
  MPoly g = ((C(1) + T()) * E(1) * E(2)).num();
  MPoly h = mpoly_gcd(f, g);
  CHECK(h == ((C(1) + T()) * E(1)).num());
}

}  // TEST_SUITE
