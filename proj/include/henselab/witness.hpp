#pragma once

#include <functional>
#include <string>
#include <vector>

#include "henselab/gt_verify.hpp"
#include "henselab/linalg.hpp"
#include "henselab/topology.hpp"

namespace henselab {

/// Named evaluable map into the field, as used by the point search.
struct LabeledMap {
  std::string label;
  std::function<FieldElem(const FieldElem&)> fn;
};

LabeledMap as_map(const Derivation& d);

/// Points a_1..a_n from the pool (searched in pool order, first success wins)
/// whose evaluation matrix [f_j(a_i)] has symbolically nonzero determinant.
std::vector<FieldElem> independent_points(const std::vector<LabeledMap>& fs,
                                          const std::vector<FieldElem>& pool);

/// The (n+1)x(n+1) graph-map matrix: first row (1, t_1, ..., t_n), row i+1 =
/// (0, D_i(t_1), ..., D_i(t_n)). Acceptance requires nonzero determinant,
/// which equals the determinant of the derivation-value minor.
struct TMatrix {
  int n = 0;
  std::vector<Derivation> ds;
  std::vector<FieldElem> ts;
  Matrix entries;
  RatFunc det;
  RatFunc minor_det;
};

TMatrix build_T(const std::vector<Derivation>& ds, const std::vector<FieldElem>& ts);

/// An element a with (a, D_1(a), ..., D_n(a)) in targets[0] x ... x targets[n],
/// built by solving the graph-map system over the dense subfield Q(t) and
/// truncating. The postcondition is always re-verified before returning.
FieldElem dense_tuple(const std::vector<Derivation>& ds, const std::vector<Ball>& targets);

/// A point of the queried basic open (over J2, around its base center q) whose
/// image under the first derivation of J1 \ J2 lands in a ball disjoint from
/// Ball(D(q), 1) — certifying that the D-preimage is not a J2-neighborhood of q.
FieldElem refinement_refutation(const std::vector<Derivation>& j1,
                                const std::vector<Derivation>& j2, const BasicOpen& query);

enum class AntichainStyle { MiddleLayer, FunctionGraphs };

struct Antichain {
  int ground_size = 0;
  AntichainStyle style = AntichainStyle::MiddleLayer;
  std::vector<std::vector<int>> members;  // sorted 1-based index subsets
};

Antichain antichain(int ground_size, AntichainStyle style);
bool is_antichain(const Antichain& a);

struct IncomparableOptions {
  AntichainStyle style = AntichainStyle::MiddleLayer;
  std::vector<long> query_radii = {1, 2, 3, 4, 5, 6, 7, 8};
  int base_points = 3;
  int d_max = 3;
  GtVerifyOptions gt;
};

/// Builds the antichain of refined topologies over the canonical derivations,
/// certifies every ordered-pair refutation over the query family, and runs the
/// gt-henselianity and strict-refinement checks on every member.
Report incomparable_topologies(int m, const TopologyDesc& base, int samples, std::uint64_t seed,
                               const IncomparableOptions& opts = {});

/// The finite/infinite dichotomy report for a lazily indexed family: each
/// finite prefix J gets iterated local-boundedness witnesses, and a derivation
/// outside J refutes that the full family's topology equals tau_J.
Report local_boundedness_dichotomy(const TopologyDesc& lazy, int max_k, std::uint64_t seed);

}  // namespace henselab
