#include <doctest.h>

#include "henselab/registry.hpp"
#include "henselab/witness.hpp"
#include "helpers.hpp"

using namespace henselab;
using henselab::testing::E;
using henselab::testing::reset_lab;

namespace {

bool sym_eq(const FieldElem& a, const FieldElem& b) {
  return (a - b).is_zero_symbolic();
}

std::map<int, FieldElem> values(std::initializer_list<std::pair<int, long>> kv) {
  std::map<int, FieldElem> m;
  for (auto [k, v] : kv) m.emplace(k, FieldElem::integer(v));
  return m;
}

}  // namespace

TEST_SUITE("witness-lab") {

TEST_CASE("independent point search") {
  reset_lab(2);
  Derivation d1 = Derivation::canonical(1), d2 = Derivation::canonical(2);
  std::vector<FieldElem> pool = {E("e1"), E("e2"), E("t")};

  auto pts = independent_points({as_map(d1), as_map(d2)}, pool);
  REQUIRE(pts.size() == 2);
  CHECK(sym_eq(pts[0], E("e1")));
  CHECK(sym_eq(pts[1], E("e2")));

  CHECK_THROWS_AS(independent_points({as_map(d1), as_map(d1)}, pool), NoWitnessFound);

  Derivation dsum = make_derivation(values({{1, 1}, {2, 1}}));
  auto pts2 = independent_points({as_map(dsum), as_map(d2)}, {E("e1"), E("e2")});
  REQUIRE(pts2.size() == 2);
  CHECK(sym_eq(pts2[0], E("e1")));
  CHECK(sym_eq(pts2[1], E("e2")));
}

TEST_CASE("graph-map matrix and its determinant reduction") {
  reset_lab(2);
  Derivation d1 = Derivation::canonical(1), d2 = Derivation::canonical(2);

  TMatrix t1 = build_T({d1}, {E("e1")});
  CHECK(t1.det == RatFunc(Rat(1)));
  CHECK(t1.minor_det == RatFunc(Rat(1)));

  TMatrix t2 = build_T({d1, d2}, {E("e1"), E("e2")});
  CHECK(t2.det == RatFunc(Rat(1)));

  TMatrix t3 = build_T({d1, d2}, {E("e1+e2"), E("e1")});
  CHECK(t3.det == RatFunc(Rat(-1)));
  CHECK(t3.minor_det == RatFunc(Rat(-1)));

  CHECK_THROWS_AS(build_T({d1, d2}, {E("e1"), E("2*e1")}), BadBasisChoice);
}

TEST_CASE("determinant equals the derivation-value minor on random bases") {
  reset_lab(3);
  Sampler sampler(79, 3);
  std::vector<Derivation> ds = {Derivation::canonical(1), Derivation::canonical(2),
                                Derivation::canonical(3)};
  int built = 0;
  while (built < 20) {
    std::vector<FieldElem> ts;
    for (int j = 0; j < 3; ++j) ts.push_back(sampler.around(FieldElem(), 0));
    try {
      TMatrix t = build_T(ds, ts);
      CHECK(t.det == t.minor_det);
      ++built;
    } catch (const BadBasisChoice&) {
      // singular draw; spend another sample
    }
  }
}

TEST_CASE("dense tuples hit the requested targets") {
  reset_lab(2);
  Derivation d1 = Derivation::canonical(1), d2 = Derivation::canonical(2);

  // already-dense center: the solver returns the exact rational point
  FieldElem a = dense_tuple({d1}, {Ball(E("1"), 2), Ball::around_zero(2)});
  CHECK(sym_eq(a, E("1")));

  FieldElem b = dense_tuple({d1}, {Ball(E("e1"), 3), Ball(E("1"), 3)});
  CHECK(ball_contains(Ball(E("e1"), 3), b));
  CHECK(ball_contains(Ball(E("1"), 3), apply_derivation(d1, b)));

  FieldElem c = dense_tuple({d1, d2},
                            {Ball::around_zero(1), Ball(E("1"), 1), Ball(E("1"), 1)});
  CHECK(ball_contains(Ball::around_zero(1), c));
  CHECK(ball_contains(Ball(E("1"), 1), apply_derivation(d1, c)));
  CHECK(ball_contains(Ball(E("1"), 1), apply_derivation(d2, c)));

  CHECK_THROWS_AS(dense_tuple({d1}, {Ball::around_zero(1)}), std::invalid_argument);
}

TEST_CASE("the graph-map column identity holds exactly") {
  reset_lab(2);
  // for x in Q(t)^{n+1}, a = x0 + x1 t1 + ... has D_j(a) = sum_i x_i D_j(t_i)
  Derivation d1 = Derivation::canonical(1), d2 = Derivation::canonical(2);
  std::vector<FieldElem> ts = {E("e1"), E("e1*e2")};
  std::vector<FieldElem> x = {E("t^2"), E("1/(1-t)"), E("3+t")};
  FieldElem a = x[0] + x[1] * ts[0] + x[2] * ts[1];
  for (const Derivation& d : {d1, d2}) {
    FieldElem expect = x[1] * apply_derivation(d, ts[0]) + x[2] * apply_derivation(d, ts[1]);
    CHECK(sym_eq(apply_derivation(d, a), expect));
  }
}

TEST_CASE("refinement refutations match the truncation picture") {
  reset_lab(2);
  Derivation d1 = Derivation::canonical(1), d2 = Derivation::canonical(2);
  long k = 3;

  BasicOpen query(Ball(E("e1"), k), {{d2, Ball::around_zero(k)}});
  FieldElem a = refinement_refutation({d1}, {d2}, query);
  CHECK(sym_eq(a, E("1 + t + t^2/2")));  // the degree-<3 truncation of e1
  CHECK(contains(query, a));
  CHECK(ball_contains(Ball::around_zero(1), apply_derivation(d1, a)));

  BasicOpen query2(Ball(E("e1"), 2), {});
  FieldElem b = refinement_refutation({d1}, {}, query2);
  CHECK(sym_eq(b, E("1 + t")));

  // the relabeled symmetric case
  BasicOpen query3(Ball(E("e2"), k), {{d1, Ball::around_zero(k)}});
  FieldElem c = refinement_refutation({d2}, {d1}, query3);
  CHECK(contains(query3, c));
  CHECK(ball_contains(Ball(apply_derivation(d2, E("e2")) - E("1"), 1),
                      apply_derivation(d2, c)));

  CHECK_THROWS_AS(refinement_refutation({d1}, {d1, d2}, query), std::invalid_argument);
}

TEST_CASE("antichain construction") {
  Antichain middle4 = antichain(4, AntichainStyle::MiddleLayer);
  CHECK(middle4.members.size() == 6);
  CHECK(is_antichain(middle4));

  Antichain graphs4 = antichain(4, AntichainStyle::FunctionGraphs);
  CHECK(graphs4.members.size() == 4);
  CHECK(is_antichain(graphs4));
  for (const auto& member : graphs4.members) CHECK(member.size() == 2);

  Antichain middle2 = antichain(2, AntichainStyle::MiddleLayer);
  REQUIRE(middle2.members.size() == 2);
  CHECK(middle2.members[0] == std::vector<int>{1});
  CHECK(middle2.members[1] == std::vector<int>{2});

  CHECK_THROWS_AS(antichain(1, AntichainStyle::MiddleLayer), std::invalid_argument);
  CHECK_THROWS_AS(antichain(3, AntichainStyle::FunctionGraphs), std::invalid_argument);

  // not an antichain: nested subsets
  Antichain nested{2, AntichainStyle::MiddleLayer, {{1}, {1, 2}}};
  CHECK_FALSE(is_antichain(nested));
}

TEST_CASE("incomparable topologies, small instance") {
  reset_lab(2);
  IncomparableOptions opts;
  opts.query_radii = {1, 2};
  opts.base_points = 2;
  opts.d_max = 1;
  opts.gt.radii = {{1, 1}};
  Report r = incomparable_topologies(2, TopologyDesc::base_valuation(), 5, 7, opts);
  CHECK(r.all_pass());
  // 1 antichain verdict + 2 pairs x 2 points x 2 radii refutations
  // + per-member gt verdicts and strict-refinement verdicts
  int refutations = 0, strict = 0;
  for (const auto& v : r.verdicts) {
    if (v.id.rfind("refute", 0) == 0) ++refutations;
    if (v.id.rfind("strict-refinement", 0) == 0) ++strict;
  }
  CHECK(refutations == 8);
  CHECK(strict == 2);
}

TEST_CASE("degenerate single-member report") {
  reset_lab(1);
  IncomparableOptions opts;
  opts.query_radii = {1};
  opts.base_points = 1;
  opts.d_max = 0;
  opts.gt.radii = {{1, 1}};
  Report r = incomparable_topologies(1, TopologyDesc::base_valuation(), 3, 7, opts);
  CHECK(r.all_pass());
  for (const auto& v : r.verdicts) CHECK(v.id.rfind("refute", 0) != 0);
}

TEST_CASE("local boundedness dichotomy over the lazy family") {
  reset_lab(1);
  Report r = local_boundedness_dichotomy(TopologyDesc::lazy_canonical(), 2, 7);
  CHECK(r.all_pass());
  CHECK(r.verdicts.size() == 4);  // per k: one finite-side, one separation
  CHECK_THROWS_AS(local_boundedness_dichotomy(TopologyDesc::base_valuation(), 2, 7),
                  std::invalid_argument);
}

}  // TEST_SUITE
