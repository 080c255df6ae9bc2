#include "henselab/witness.hpp"

#include <algorithm>
#include <sstream>

#include "henselab/registry.hpp"

namespace henselab {

LabeledMap as_map(const Derivation& d) {
  return LabeledMap{d.label(), [d](const FieldElem& a) { return apply_derivation(d, a); }};
}

namespace {

RatFunc sym(const FieldElem& e, const char* who) {
  if (!e.symbolic()) throw UnsupportedTier(std::string(who) + ": symbolic element required");
  return e.ratfunc();
}

std::string subset_str(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

std::vector<FieldElem> independent_points(const std::vector<LabeledMap>& fs,
                                          const std::vector<FieldElem>& pool) {
  if (fs.empty()) throw std::invalid_argument("independent_points: no maps");
  size_t n = fs.size();
  if (pool.size() < n) throw NoWitnessFound("independent_points: pool smaller than map count");

  // combinations of pool indices in lexicographic order; first success wins
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    Matrix m(n, std::vector<RatFunc>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        m[i][j] = sym(fs[j].fn(pool[idx[i]]), "independent_points");
    if (!determinant(m).is_zero()) {
      std::vector<FieldElem> out;
      for (size_t i = 0; i < n; ++i) out.push_back(pool[idx[i]]);
      return out;
    }
    // next combination
    size_t k = n;
    while (k > 0) {
      --k;
      if (idx[k] + (n - k) < pool.size()) {
        ++idx[k];
        for (size_t j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (k == 0) throw NoWitnessFound("independent_points: pool exhausted");
    }
  }
}

TMatrix build_T(const std::vector<Derivation>& ds, const std::vector<FieldElem>& ts) {
  if (ds.size() != ts.size() || ds.empty())
    throw std::invalid_argument("build_T: need equally many derivations and points");
  if (!linear_independence(ds).independent)
    throw std::invalid_argument("build_T: derivations must be linearly independent");
  size_t n = ds.size();

  TMatrix t;
  t.n = static_cast<int>(n);
  t.ds = ds;
  t.ts = ts;
  t.entries.assign(n + 1, std::vector<RatFunc>(n + 1));
  t.entries[0][0] = RatFunc(Rat(1));
  for (size_t j = 0; j < n; ++j) t.entries[0][j + 1] = sym(ts[j], "build_T");
  Matrix minor(n, std::vector<RatFunc>(n));
  for (size_t i = 0; i < n; ++i) {
    t.entries[i + 1][0] = RatFunc();
    for (size_t j = 0; j < n; ++j) {
      RatFunc v = sym(apply_derivation(ds[i], ts[j]), "build_T");
      t.entries[i + 1][j + 1] = v;
      minor[i][j] = v;
    }
  }
  t.det = determinant(t.entries);
  t.minor_det = determinant(minor);
  if (t.det.is_zero())
    throw BadBasisChoice("build_T: singular matrix for points — rerun the point search");
  return t;
}

FieldElem dense_tuple(const std::vector<Derivation>& ds, const std::vector<Ball>& targets) {
  size_t n = ds.size();
  if (targets.size() != n + 1)
    throw std::invalid_argument("dense_tuple: need n+1 targets for n derivations");
  if (n == 0) {
    // no derivations: approximate the single target center inside the ball
    FieldElem a = laurent_truncation(targets[0].center, targets[0].radius);
    if (!ball_contains(targets[0], a)) throw NoWitnessFound("dense_tuple: truncation escaped");
    return a;
  }

  // choose t_1..t_n from the generator pool, then solve T x = centers
  std::vector<FieldElem> pool;
  for (int i = 1; i <= GeneratorRegistry::instance().count(); ++i)
    pool.push_back(FieldElem::gen(i));
  pool.push_back(FieldElem::t());
  std::vector<LabeledMap> maps;
  for (const auto& d : ds) maps.push_back(as_map(d));
  std::vector<FieldElem> ts = independent_points(maps, pool);
  TMatrix t = build_T(ds, ts);

  std::vector<RatFunc> rhs;
  for (const auto& ball : targets) rhs.push_back(sym(ball.center, "dense_tuple"));
  auto x = solve_linear(t.entries, rhs);
  if (!x) throw BadBasisChoice("dense_tuple: graph-map system singular");

  // truncation margin: valuations of the matrix entries shift the error
  long mu = 0;
  for (const auto& row : t.entries)
    for (const auto& entry : row)
      if (!entry.is_zero()) mu = std::min(mu, *valuation(FieldElem::from_ratfunc(entry)));
  long rmax = targets[0].radius;
  for (const auto& ball : targets) rmax = std::max(rmax, ball.radius);

  for (int attempt = 0; attempt < 4; ++attempt) {
    long bound = rmax - mu + 4 * attempt;
    std::vector<FieldElem> approx;
    for (size_t i = 0; i <= n; ++i)
      approx.push_back(laurent_truncation(FieldElem::from_ratfunc((*x)[i]), bound));
    FieldElem a = approx[0];
    for (size_t i = 0; i < n; ++i) a = a + approx[i + 1] * ts[i];

    bool ok = ball_contains(targets[0], a);
    for (size_t i = 0; i < n && ok; ++i)
      ok = ball_contains(targets[i + 1], apply_derivation(ds[i], a));
    if (ok) return a;
  }
  throw NoWitnessFound("dense_tuple: truncated solution escaped the targets");
}

FieldElem refinement_refutation(const std::vector<Derivation>& j1,
                                const std::vector<Derivation>& j2, const BasicOpen& query) {
  const Derivation* outside = nullptr;
  for (const auto& d : j1) {
    bool in_j2 = false;
    for (const auto& d2 : j2)
      if (d2.id() == d.id()) in_j2 = true;
    if (!in_j2) {
      outside = &d;
      break;
    }
  }
  if (!outside)
    throw std::invalid_argument("refinement_refutation: J1 is contained in J2");

  // target tuple: the queried basic open plus a ball disjoint from
  // Ball(D(q), 1) for the outside derivation D
  FieldElem dq = apply_derivation(*outside, query.base.center);
  Ball ustar(dq - FieldElem::integer(1), 1);

  std::vector<Derivation> ds;
  std::vector<Ball> targets;
  targets.push_back(query.base);
  for (const auto& [d, ball] : query.constraints) {
    ds.push_back(d);
    targets.push_back(ball);
  }
  ds.push_back(*outside);
  targets.push_back(ustar);

  FieldElem a = dense_tuple(ds, targets);
  if (!contains(query, a) || !ball_contains(ustar, apply_derivation(*outside, a)))
    throw NoWitnessFound("refinement_refutation: verification failed");
  return a;
}

Antichain antichain(int ground_size, AntichainStyle style) {
  if (ground_size < 2) throw std::invalid_argument("antichain: ground size must be >= 2");
  Antichain a;
  a.ground_size = ground_size;
  a.style = style;
  if (style == AntichainStyle::MiddleLayer) {
    int k = ground_size / 2;
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i + 1;
    while (true) {
      a.members.push_back(subset);
      int pos = k;
      while (pos > 0) {
        --pos;
        if (subset[pos] + (k - pos) <= ground_size) {
          ++subset[pos];
          for (int j = pos + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
          break;
        }
        if (pos == 0) return a;
      }
      if (k == 0) return a;
    }
  }
  // function graphs: ground re-indexed as X x {0,1}, |X| = ground/2;
  // pair (x, b) is index 2(x-1) + b + 1
  if (ground_size % 2 != 0)
    throw std::invalid_argument("antichain: function-graphs style needs an even ground size");
  int xsize = ground_size / 2;
  for (unsigned f = 0; f < (1u << xsize); ++f) {
    std::vector<int> graph;
    for (int x = 0; x < xsize; ++x) {
      int b = (f >> x) & 1u;
      graph.push_back(2 * x + b + 1);
    }
    a.members.push_back(graph);
  }
  return a;
}

bool is_antichain(const Antichain& a) {
  auto subset_of = [](const std::vector<int>& s, const std::vector<int>& t) {
    return std::includes(t.begin(), t.end(), s.begin(), s.end());
  };
  for (size_t i = 0; i < a.members.size(); ++i)
    for (size_t j = 0; j < a.members.size(); ++j)
      if (i != j && subset_of(a.members[i], a.members[j])) return false;
  return true;
}

Report incomparable_topologies(int m, const TopologyDesc& base, int samples, std::uint64_t seed,
                               const IncomparableOptions& opts) {
  if (base.kind != TopologyDesc::Kind::BaseValuation)
    throw std::invalid_argument("incomparable_topologies: base must be the valuation topology");
  if (GeneratorRegistry::instance().count() < m)
    throw std::invalid_argument("incomparable_topologies: fewer than m generators registered");

  Report report;
  report.kind = "incomparable";
  report.seed = seed;
  report.precision_cap = precision_cap();
  report.generators = GeneratorRegistry::instance().count();
  Sampler sampler(seed, report.generators);

  Antichain chain = m >= 2 ? antichain(m, opts.style)
                           : Antichain{1, opts.style, {{1}}};
  report.add("antichain m=" + std::to_string(m),
             is_antichain(chain) ? VerdictStatus::Pass : VerdictStatus::Fail,
             std::to_string(chain.members.size()) + " members, pairwise incomparable");

  auto derivs_of = [](const std::vector<int>& subset) {
    std::vector<Derivation> ds;
    for (int i : subset) ds.push_back(Derivation::canonical(i));
    return ds;
  };

  // sampled base points for the refutation queries
  std::vector<FieldElem> points;
  points.push_back(FieldElem());
  for (int p = 1; p < opts.base_points; ++p)
    points.push_back(FieldElem::from_ratfunc(sampler.unit_poly()));

  // ordered-pair refutations across the query family
  for (size_t i = 0; i < chain.members.size(); ++i) {
    for (size_t j = 0; j < chain.members.size(); ++j) {
      if (i == j) continue;
      std::vector<Derivation> j1 = derivs_of(chain.members[i]);
      std::vector<Derivation> j2 = derivs_of(chain.members[j]);
      std::string pair_id = "refute " + subset_str(chain.members[i]) + ">" +
                            subset_str(chain.members[j]);
      for (size_t p = 0; p < points.size(); ++p) {
        for (long r : opts.query_radii) {
          std::vector<std::pair<Derivation, Ball>> cs;
          for (const auto& d : j2) cs.emplace_back(d, Ball(apply_derivation(d, points[p]), r));
          BasicOpen query(Ball(points[p], r), std::move(cs));
          std::string id = pair_id + " q#" + std::to_string(p) + " r=" + std::to_string(r);
          try {
            FieldElem a = refinement_refutation(j1, j2, query);
            report.add(id, VerdictStatus::Pass, a.str());
          } catch (const std::exception& e) {
            report.add(id, VerdictStatus::Fail, e.what());
          }
        }
      }
    }
  }

  // every member topology is gt-henselian and strictly refines the base
  for (size_t i = 0; i < chain.members.size(); ++i) {
    std::vector<Derivation> ds = derivs_of(chain.members[i]);
    TopologyDesc tau = TopologyDesc::refined(ds);
    Report gt = verify_gt_henselian(tau, opts.d_max, samples, seed + i + 1, opts.gt);
    report.append(gt, "J=" + subset_str(chain.members[i]) + " ");

    std::string id = "strict-refinement J=" + subset_str(chain.members[i]);
    try {
      FieldElem a = continuity_refutation(ds.front(), 4);
      bool ok = val_at_least(a, 4) && *valuation(apply_derivation(ds.front(), a)) <= 0;
      report.add(id, ok ? VerdictStatus::Pass : VerdictStatus::Fail, a.str());
    } catch (const std::exception& e) {
      report.add(id, VerdictStatus::Fail, e.what());
    }
  }

  return report;
}

Report local_boundedness_dichotomy(const TopologyDesc& lazy, int max_k, std::uint64_t seed) {
  if (!lazy.is_lazy())
    throw std::invalid_argument("local_boundedness_dichotomy: needs a lazily indexed family");
  Report report;
  report.kind = "witness";
  report.seed = seed;
  report.precision_cap = precision_cap();
  Sampler sampler(seed, GeneratorRegistry::instance().count());

  for (int k = 1; k <= max_k; ++k) {
    std::vector<Derivation> prefix = lazy.finite_prefix(k);
    Derivation outside = lazy.lazy_family(k + 1);
    report.generators = GeneratorRegistry::instance().count();

    // finite side: iterate the singleton local-boundedness recipe over J
    bool ok = true;
    std::string witness;
    for (const auto& d : prefix) {
      Ball u = Ball::around_zero(1), pstar = Ball::around_zero(5);
      FieldElem lambda = local_boundedness_witness(u, d, pstar);
      FieldElem a = sampler.small(1);
      if (!(ball_contains(pstar, lambda * a) &&
            ball_contains(pstar, apply_derivation(d, lambda * a)))) {
        ok = false;
        witness = "lambda=" + lambda.str() + " fails on a=" + a.str();
      } else {
        witness = "lambda=" + lambda.str();
      }
    }
    report.add("loc-bounded J=prefix(" + std::to_string(k) + ")",
               ok ? VerdictStatus::Pass : VerdictStatus::Fail, witness);

    // infinite side: some derivation outside J separates tau_I from tau_J
    std::vector<std::pair<Derivation, Ball>> cs;
    for (const auto& d : prefix) cs.emplace_back(d, Ball::around_zero(2));
    BasicOpen query(Ball::around_zero(2), std::move(cs));
    std::string id = "tau_I!=tau_J k=" + std::to_string(k);
    try {
      FieldElem a = refinement_refutation({outside}, prefix, query);
      report.add(id, VerdictStatus::Pass,
                 outside.label() + " escapes via a=" + a.str());
    } catch (const std::exception& e) {
      report.add(id, VerdictStatus::Fail, e.what());
    }
  }
  return report;
}

}  // namespace henselab
