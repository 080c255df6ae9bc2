#include <map>
#include <vector>

#include "henselab/elem.hpp"
#include "henselab/hensel.hpp"
#include "henselab/registry.hpp"

namespace henselab {

namespace {

// Internal signal: a denominator had no known nonzero coefficient at the
// current working precision; the adaptive loop retries with more.
struct NeedMorePrecision {};

using Memo = std::map<const FieldElem::Node*, TruncSeries>;

TruncSeries eval_mpoly(const MPoly& p, long W, std::map<int, std::vector<TruncSeries>>& powers) {
  TruncSeries acc = TruncSeries::zero(W);
  for (const auto& [m, c] : p.terms()) {
    TruncSeries term = TruncSeries::constant(c, W);
    for (size_t v = 0; v < m.exp.size(); ++v) {
      unsigned e = m.exp[v];
      if (e == 0) continue;
      auto& cache = powers[static_cast<int>(v)];
      if (cache.empty()) {
        TruncSeries base = v == 0 ? TruncSeries::t(W)
                                  : GeneratorRegistry::instance().series(static_cast<int>(v), W);
        cache.push_back(TruncSeries::constant(Rat(1), W));
        cache.push_back(base);
      }
      while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
      term = term * cache[e];
    }
    acc = acc + term;
  }
  return acc;
}

TruncSeries eval_node(const FieldElem::Node& n, long W, Memo& memo,
                      std::map<int, std::vector<TruncSeries>>& powers) {
  auto it = memo.find(&n);
  if (it != memo.end()) return it->second;

  TruncSeries result;
  switch (n.kind) {
    case FieldElem::Kind::Sym: {
      TruncSeries num = eval_mpoly(n.sym.num(), W, powers);
      if (n.sym.is_polynomial()) {
        result = num;
      } else {
        TruncSeries den = eval_mpoly(n.sym.den(), W, powers);
        if (den.known_zero()) throw NeedMorePrecision{};
        result = num / den;
      }
      break;
    }
    case FieldElem::Kind::Root:
      result = n.root->series(W);
      break;
    case FieldElem::Kind::Add:
      result = eval_node(*n.a, W, memo, powers) + eval_node(*n.b, W, memo, powers);
      break;
    case FieldElem::Kind::Sub:
      result = eval_node(*n.a, W, memo, powers) - eval_node(*n.b, W, memo, powers);
      break;
    case FieldElem::Kind::Mul:
      result = eval_node(*n.a, W, memo, powers) * eval_node(*n.b, W, memo, powers);
      break;
    case FieldElem::Kind::Div: {
      TruncSeries den = eval_node(*n.b, W, memo, powers);
      if (den.known_zero()) throw NeedMorePrecision{};
      result = eval_node(*n.a, W, memo, powers) / den;
      break;
    }
  }
  memo.emplace(&n, result);
  return result;
}

// Evaluates with working precision doubling until the tracked precision of
// the result reaches `prec`.
TruncSeries eval_adaptive(const FieldElem& a, long prec) {
  long cap = precision_cap();
  long W = std::max<long>(16, prec);
  while (true) {
    try {
      Memo memo;
      std::map<int, std::vector<TruncSeries>> powers;
      TruncSeries s = eval_node(a.node(), W, memo, powers);
      if (s.precision() >= prec) return s;
    } catch (const NeedMorePrecision&) {
      // fall through to doubling
    }
    if (W >= cap)
      throw PrecisionExhausted("series evaluation stalled below t^" + std::to_string(prec) +
                               " at cap " + std::to_string(cap));
    W = std::min(cap, W * 2);
  }
}

}  // namespace

TruncSeries eval_series(const FieldElem& a, long prec) {
  if (prec < 1) throw std::invalid_argument("eval_series: precision must be >= 1");
  return eval_adaptive(a, prec).truncate(prec);
}

std::optional<long> valuation(const FieldElem& a) {
  if (a.symbolic() && a.is_zero_symbolic()) return std::nullopt;  // +infinity
  long cap = precision_cap();
  long W = 16;
  while (true) {
    TruncSeries s = eval_adaptive(a, W);
    if (auto v = s.valuation_known()) return *v;
    if (W >= cap)
      throw PrecisionExhausted("valuation of a nonzero element not visible below t^" +
                               std::to_string(cap));
    W = std::min(cap, W * 2);
  }
}

bool val_at_least(const FieldElem& a, long r) {
  if (a.symbolic() && a.is_zero_symbolic()) return true;
  TruncSeries s = eval_adaptive(a, r);
  return s.valuation_lower_bound() >= r;
}

CompareResult compare_at_precision(const FieldElem& a, const FieldElem& b, long prec) {
  try {
    TruncSeries s = eval_adaptive(a - b, prec);
    return s.truncate(prec).known_zero() ? CompareResult::EqualToPrecision
                                         : CompareResult::Distinct;
  } catch (const PrecisionExhausted&) {
    return CompareResult::Unknown;
  }
}

FieldElem laurent_truncation(const FieldElem& a, long bound) {
  if (a.symbolic() && a.is_zero_symbolic()) return FieldElem();
  TruncSeries s = eval_adaptive(a, std::max<long>(bound, 1));
  RatFunc poly;
  for (size_t k = 0; k < s.coeffs().size(); ++k) {
    long e = s.offset() + static_cast<long>(k);
    if (e >= bound) break;
    poly = poly + RatFunc(s.coeffs()[k]) * RatFunc::t().pow(e);
  }
  return FieldElem::from_ratfunc(poly);
}

}  // namespace henselab
