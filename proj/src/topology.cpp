#include "henselab/topology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "henselab/gt_verify.hpp"
#include "henselab/registry.hpp"

namespace henselab {

BasicOpen::BasicOpen(Ball b, std::vector<std::pair<Derivation, Ball>> cs)
    : base(std::move(b)), constraints(std::move(cs)) {
  std::set<int> ids;
  for (const auto& [d, ball] : constraints)
    if (!ids.insert(d.id()).second)
      throw std::invalid_argument("BasicOpen: duplicate derivation " + d.label());
}

bool contains(const BasicOpen& open, const FieldElem& a) {
  if (!ball_contains(open.base, a)) return false;
  for (const auto& [d, ball] : open.constraints)
    if (!ball_contains(ball, apply_derivation(d, a))) return false;
  return true;
}

std::vector<FieldElem> sigma_tuple(const std::vector<Derivation>& ds, const FieldElem& a) {
  std::vector<FieldElem> out;
  out.reserve(ds.size() + 1);
  out.push_back(a);
  for (const auto& d : ds) out.push_back(apply_derivation(d, a));
  return out;
}

std::string WeightBound::str() const {
  return finite ? "finite(" + std::to_string(n) + ")" : "countable";
}

TopologyDesc TopologyDesc::base_valuation() { return TopologyDesc{}; }

TopologyDesc TopologyDesc::refined(std::vector<Derivation> ds) {
  TopologyDesc t;
  if (ds.empty()) return t;  // refining by nothing is the base topology
  t.kind = Kind::DerivationRefined;
  t.derivations = std::move(ds);
  return t;
}

TopologyDesc TopologyDesc::lazy_canonical() {
  TopologyDesc t;
  t.kind = Kind::DerivationRefined;
  t.lazy_family = [](int i) {
    auto& reg = GeneratorRegistry::instance();
    while (reg.count() < i) reg.mint();
    return Derivation::canonical(i);
  };
  return t;
}

std::vector<Derivation> TopologyDesc::finite_prefix(int k) const {
  if (!is_lazy()) {
    std::vector<Derivation> out = derivations;
    if (k < static_cast<int>(out.size()))
      out.erase(out.begin() + k, out.end());
    return out;
  }
  std::vector<Derivation> out;
  for (int i = 1; i <= k; ++i) out.push_back(lazy_family(i));
  return out;
}

std::string TopologyDesc::str() const {
  if (kind == Kind::BaseValuation) return "tau";
  std::ostringstream s;
  s << "tau_{";
  if (is_lazy()) {
    s << "lazy";
  } else {
    for (size_t i = 0; i < derivations.size(); ++i)
      s << (i ? "," : "") << derivations[i].label();
  }
  s << "}";
  return s.str();
}

namespace {

void require_centered_at_zero(const Ball& b, const char* who) {
  if (!(b.center.symbolic() && b.center.is_zero_symbolic()))
    throw std::invalid_argument(std::string(who) + ": ball must be centered at 0");
}

long exact_valuation_nonzero(const FieldElem& a, const char* who) {
  if (a.symbolic() && a.is_zero_symbolic())
    throw std::invalid_argument(std::string(who) + ": element must be nonzero");
  return *valuation(a);
}

}  // namespace

Ball shrink_for_group_axioms(const Ball& v) {
  require_centered_at_zero(v, "shrink_for_group_axioms");
  // radius s = max(r,1): differences stay at >= s >= r, products at >= 2s >= r,
  // and (1+u)^-1 = 1 - u/(1+u) with v(u/(1+u)) = v(u) >= s >= r.
  return Ball::around_zero(std::max<long>(v.radius, 1));
}

Ball shrink_for_scaling(const FieldElem& lambda, const Ball& v) {
  require_centered_at_zero(v, "shrink_for_scaling");
  long vl = exact_valuation_nonzero(lambda, "shrink_for_scaling");
  return Ball::around_zero(v.radius - vl);
}

FieldElem boundedness_witness(const Ball& x, const Ball& u) {
  require_centered_at_zero(u, "boundedness_witness");
  // every element of X has valuation >= min(v(center), radius)
  long margin = x.radius;
  if (!(x.center.symbolic() && x.center.is_zero_symbolic()))
    margin = std::min(margin, *valuation(x.center));
  long k = std::max<long>(0, u.radius - margin);
  return FieldElem::t().pow(k);
}

Ball v_topology_witness(const Ball& u) {
  require_centered_at_zero(u, "v_topology_witness");
  // v(x) < r implies v(1/x) >= 1 - r
  return Ball::around_zero(1 - u.radius);
}

FieldElem nondiscreteness_witness(const std::vector<Derivation>& ds, const Ball& u) {
  require_centered_at_zero(u, "nondiscreteness_witness");
  long k0 = std::max<long>(u.radius, 0);
  for (long k = k0; k <= k0 + 64; ++k) {
    FieldElem a = FieldElem::t().pow(k);
    if (!ball_contains(u, a)) continue;
    bool ok = true;
    for (const auto& d : ds)
      if (!ball_contains(u, apply_derivation(d, a))) {
        ok = false;
        break;
      }
    if (ok) return a;
  }
  throw NoWitnessFound("nondiscreteness: no power of t below the search bound");
}

FieldElem local_boundedness_witness(const Ball& u, const Derivation& d, const Ball& pstar) {
  require_centered_at_zero(u, "local_boundedness_witness");
  require_centered_at_zero(pstar, "local_boundedness_witness");
  // Q = Ball(0, pstar.radius) absorbs Q + Q; V with V*U inside Q has radius
  // pstar.radius - u.radius; then any nonzero lambda in V with D(lambda) in V
  // scales P = U ∩ D^-1(U) into Pstar ∩ D^-1(Pstar).
  long s = std::max<long>(0, pstar.radius - u.radius);
  Ball v = Ball::around_zero(s);
  for (long k = s; k <= s + 64; ++k) {
    FieldElem lambda = FieldElem::t().pow(k);
    if (!ball_contains(v, lambda)) continue;
    if (!ball_contains(v, apply_derivation(d, lambda))) continue;
    return lambda;
  }
  throw NoWitnessFound("local boundedness: no scaling power of t below the search bound");
}

namespace {

long max_target_radius(const BasicOpen& target) {
  long r = target.base.radius;
  for (const auto& [d, ball] : target.constraints) r = std::max(r, ball.radius);
  return r;
}

BasicOpen neighborhood_at(const FieldElem& center, const BasicOpen& shape, long radius) {
  std::vector<std::pair<Derivation, Ball>> cs;
  for (const auto& [d, ball] : shape.constraints)
    cs.emplace_back(d, Ball(apply_derivation(d, center), radius));
  return BasicOpen(Ball(center, radius), std::move(cs));
}

// min(0, v(x), v(D_1 x), ..., v(D_n x)), skipping exact zeros
long valuation_floor(const FieldElem& x, const BasicOpen& shape) {
  long mu = 0;
  auto fold = [&mu](const FieldElem& e) {
    if (e.symbolic() && e.is_zero_symbolic()) return;
    mu = std::min(mu, *valuation(e));
  };
  fold(x);
  for (const auto& [d, ball] : shape.constraints) fold(apply_derivation(d, x));
  return mu;
}

}  // namespace

std::pair<BasicOpen, BasicOpen> continuity_add_witness(const FieldElem& a, const FieldElem& b,
                                                       const BasicOpen& target) {
  if (!contains(target, a + b))
    throw std::invalid_argument("continuity_add_witness: target must contain a+b");
  // addition is exact componentwise: (x+y)-(a+b) = (x-a)+(y-b) and D is additive
  std::vector<std::pair<Derivation, Ball>> ca, cb;
  for (const auto& [d, ball] : target.constraints) {
    ca.emplace_back(d, Ball(apply_derivation(d, a), ball.radius));
    cb.emplace_back(d, Ball(apply_derivation(d, b), ball.radius));
  }
  return {BasicOpen(Ball(a, target.base.radius), std::move(ca)),
          BasicOpen(Ball(b, target.base.radius), std::move(cb))};
}

std::pair<BasicOpen, BasicOpen> continuity_mul_witness(const FieldElem& a, const FieldElem& b,
                                                       const BasicOpen& target) {
  if (!contains(target, a * b))
    throw std::invalid_argument("continuity_mul_witness: target must contain a*b");
  long rmax = max_target_radius(target);
  long mu = std::min(valuation_floor(a, target), valuation_floor(b, target));
  long s = std::max<long>(rmax - mu, 0);
  return {neighborhood_at(a, target, s), neighborhood_at(b, target, s)};
}

BasicOpen continuity_inv_witness(const FieldElem& a, const BasicOpen& target) {
  long va = exact_valuation_nonzero(a, "continuity_inv_witness");
  if (!contains(target, FieldElem::integer(1) / a))
    throw std::invalid_argument("continuity_inv_witness: target must contain 1/a");
  long rmax = max_target_radius(target);
  long s = std::max(va + 1, rmax + 2 * va);
  for (const auto& [d, ball] : target.constraints) {
    FieldElem da = apply_derivation(d, a);
    if (da.symbolic() && da.is_zero_symbolic()) continue;
    s = std::max(s, rmax + 3 * va - *valuation(da));
  }
  return neighborhood_at(a, target, s);
}

FieldElem sample_in_basic_open(Sampler& sampler, const BasicOpen& open) {
  long s = max_target_radius(open);
  for (int attempt = 0; attempt < 8; ++attempt) {
    FieldElem x = sampler.around(open.base.center, s + attempt);
    if (contains(open, x)) return x;
  }
  throw NoWitnessFound("sample_in_basic_open: " + open.str());
}

// ---------------------------------------------------------------------------
// neighborhood-basis axiom checker

BasicOpen BasisFamily::member(long r) const {
  switch (kind) {
    case Kind::TAdicBalls:
    case Kind::WithZeroSingleton:
      return BasicOpen(Ball::around_zero(std::max<long>(r, 0)));
    case Kind::TauBasicOpens: {
      long rr = std::max<long>(r, 0);
      std::vector<std::pair<Derivation, Ball>> cs;
      for (const auto& d : derivations) cs.emplace_back(d, Ball::around_zero(rr));
      return BasicOpen(Ball::around_zero(rr), std::move(cs));
    }
    case Kind::SingletonBall:
      return BasicOpen(Ball::around_zero(1));
  }
  throw std::logic_error("BasisFamily: unknown kind");
}

std::string BasisFamily::str() const {
  switch (kind) {
    case Kind::TAdicBalls: return "t-adic-balls";
    case Kind::TauBasicOpens: {
      std::string s = "tau-basic-opens(";
      for (size_t i = 0; i < derivations.size(); ++i)
        s += (i ? "," : "") + derivations[i].label();
      return s + ")";
    }
    case Kind::SingletonBall: return "singleton-ball";
    case Kind::WithZeroSingleton: return "with-zero-singleton";
  }
  return "?";
}

namespace {

std::vector<long> family_radii(const BasisFamily& basis) {
  if (basis.kind == BasisFamily::Kind::SingletonBall) return {1};
  return {0, 1, 2, 3, 5, 8};
}

// smallest family radius s with lambda * member(s) inside member(r),
// accounting for the derivation constraints of the family shape
std::optional<long> scaling_radius(const BasisFamily& basis, const FieldElem& lambda, long r) {
  long vl = *valuation(lambda);
  long need = r - vl;
  for (const auto& d : basis.derivations) {
    FieldElem dl = apply_derivation(d, lambda);
    if (dl.symbolic() && dl.is_zero_symbolic()) continue;
    need = std::max(need, r - std::min(vl, *valuation(dl)));
  }
  need = std::max<long>(need, 0);
  if (basis.kind == BasisFamily::Kind::SingletonBall && need > 1) return std::nullopt;
  return need;
}

}  // namespace

Report check_basis_axioms(const BasisFamily& basis, int samples, std::uint64_t seed) {
  Report report;
  report.kind = "axioms";
  report.seed = seed;
  report.precision_cap = precision_cap();
  report.generators = GeneratorRegistry::instance().count();
  Sampler sampler(seed, report.generators);
  const std::vector<long> radii = family_radii(basis);
  const FieldElem zero, one = FieldElem::integer(1);

  // (1) every member contains 0; {0} is not a member; some member omits 1
  {
    bool ok = true;
    std::string witness;
    for (long r : radii)
      if (!contains(basis.member(r), zero)) {
        ok = false;
        witness = "member r=" + std::to_string(r) + " misses 0";
      }
    if (basis.kind == BasisFamily::Kind::WithZeroSingleton) {
      ok = false;
      witness = "{0} is a member of the family";
    }
    if (ok) {
      bool omits_one = false;
      for (long r : radii)
        if (!contains(basis.member(r), one)) omits_one = true;
      if (!omits_one) {
        ok = false;
        witness = "every sampled member contains 1";
      }
    }
    report.add("axiom-1", ok ? VerdictStatus::Pass : VerdictStatus::Fail,
               ok ? "0 in every member; {0} excluded; member(1) omits 1" : witness);
  }

  // (2) pairwise intersections contain a member: member(max(r, r'))
  {
    bool ok = true;
    std::string witness = "member(max(r,r')) lies in both";
    for (long r : radii) {
      for (long r2 : radii) {
        BasicOpen inter = basis.member(std::max(r, r2));
        FieldElem x = sample_in_basic_open(sampler, inter);
        if (!(contains(basis.member(r), x) && contains(basis.member(r2), x))) {
          ok = false;
          witness = "x=" + x.str() + " escapes r=" + std::to_string(r) + ",r'=" + std::to_string(r2);
        }
      }
    }
    report.add("axiom-2", ok ? VerdictStatus::Pass : VerdictStatus::Fail, witness);
  }

  // (3) U - U, U*U inside V; (1+U)^{-1} inside (1+V)^{-1}
  {
    bool ok = true;
    std::string witness;
    for (long r : radii) {
      BasicOpen v = basis.member(r);
      Ball u_ball = shrink_for_group_axioms(Ball::around_zero(v.base.radius));
      BasicOpen u = basis.member(u_ball.radius);
      for (int k = 0; k < samples && ok; ++k) {
        FieldElem x = sample_in_basic_open(sampler, u);
        FieldElem y = sample_in_basic_open(sampler, u);
        FieldElem w = -(x / (one + x));  // (1+x)^{-1} = 1 + w
        if (!contains(v, x - y) || !contains(v, x * y) || !contains(v, w)) {
          ok = false;
          witness = "r=" + std::to_string(r) + " u=" + x.str() + " u'=" + y.str();
        }
      }
      if (!ok) break;
    }
    report.add("axiom-3", ok ? VerdictStatus::Pass : VerdictStatus::Fail,
               ok ? "shrunk member certified on samples" : witness);
  }

  // (4) for every lambda there is U with lambda*U inside V
  {
    bool ok = true;
    std::string witness;
    std::vector<FieldElem> lambdas = {
        FieldElem::t(),
        one / FieldElem::t(),
        FieldElem::t().pow(3),
        one / FieldElem::t().pow(3),
        FieldElem::integer(7),
    };
    lambdas.push_back(FieldElem::from_ratfunc(RatFunc::t().pow(sampler.integer_in(-3, 3)) *
                                              sampler.unit_poly()));
    for (long r : radii) {
      for (const auto& lambda : lambdas) {
        auto s = scaling_radius(basis, lambda, r);
        if (!s) {
          ok = false;
          FieldElem u = FieldElem::t();  // t is in Ball(0,1)
          witness = "lambda=" + lambda.str() + " V=member(" + std::to_string(r) +
                    "): no family member scales in; u=" + u.str() +
                    " gives lambda*u=" + (lambda * u).str();
          break;
        }
        BasicOpen u_open = basis.member(*s);
        for (int k = 0; k < std::max(3, samples / 8); ++k) {
          FieldElem x = sample_in_basic_open(sampler, u_open);
          if (!contains(basis.member(r), lambda * x)) {
            ok = false;
            witness = "lambda=" + lambda.str() + " x=" + x.str();
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    report.add("axiom-4", ok ? VerdictStatus::Pass : VerdictStatus::Fail,
               ok ? "scaling witness certified on samples" : witness);
  }

  // (5) the root axiom, via the synthesized coefficient threshold
  {
    bool ok = true;
    std::string witness;
    int per_case = std::max(3, std::min(samples, 20));
    for (long r : {1L, 2L, 3L}) {
      for (int d = 0; d <= 2 && ok; ++d) {
        long s = gt_threshold(d, Ball(FieldElem::integer(-1), r), Ball::around_zero(r),
                              basis.derivations);
        if (basis.kind == BasisFamily::Kind::SingletonBall && s > 1) {
          ok = false;
          witness = "threshold " + std::to_string(s) + " exceeds the only member";
          break;
        }
        BasicOpen u_open = basis.member(s);
        for (int k = 0; k < per_case; ++k) {
          std::vector<FieldElem> alpha;
          for (int i = 0; i <= d; ++i) alpha.push_back(sample_in_basic_open(sampler, u_open));
          auto root = hensel_root(GtPoly(d, alpha), std::max<long>(16, r + 1));
          FieldElem beta = FieldElem::from_root(root);
          bool member = val_at_least(beta + one, r);
          for (const auto& dd : basis.derivations)
            member = member && val_at_least(apply_derivation(dd, beta), r);
          if (!member) {
            ok = false;
            witness = "d=" + std::to_string(d) + " r=" + std::to_string(r) +
                      " alpha0=" + alpha[0].str();
            break;
          }
        }
      }
      if (!ok) break;
    }
    report.add("axiom-5", ok ? VerdictStatus::Pass : VerdictStatus::Fail,
               ok ? "simple roots found in V-1 at the synthesized threshold" : witness);
  }

  return report;
}

}  // namespace henselab
