#pragma once

#include <memory>
#include <optional>
#include <string>

#include "henselab/errors.hpp"
#include "henselab/ratfunc.hpp"
#include "henselab/series.hpp"

namespace henselab {

class HenselRoot;

/// Element of the working field: either a canonical rational expression over
/// t, e1..em (symbolic tier) or an expression DAG involving lifted roots
/// (analytic tier). Immutable; arithmetic on two symbolic elements folds back
/// into canonical RatFunc form.
class FieldElem {
 public:
  enum class Kind { Sym, Root, Add, Sub, Mul, Div };

  struct Node {
    Kind kind = Kind::Sym;
    RatFunc sym;
    std::shared_ptr<HenselRoot> root;
    std::shared_ptr<const Node> a, b;
    bool symbolic = true;
  };

  FieldElem();  // zero
  static FieldElem rational(const Rat& c);
  static FieldElem integer(long n) { return rational(Rat(n)); }
  static FieldElem t();
  /// e_index; the generator must be registered.
  static FieldElem gen(int index);
  static FieldElem from_ratfunc(RatFunc f);
  static FieldElem from_root(std::shared_ptr<HenselRoot> r);

  bool symbolic() const { return node_->symbolic; }
  /// Canonical form; throws UnsupportedTier on analytic elements.
  const RatFunc& ratfunc() const;
  bool is_zero_symbolic() const { return ratfunc().is_zero(); }

  FieldElem operator-() const;
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  /// Division; the divisor must be symbolically nonzero (symbolic tier) or
  /// have a certifiable finite valuation (analytic tier).
  FieldElem operator/(const FieldElem& o) const;
  FieldElem pow(long k) const;

  const Node& node() const { return *node_; }
  std::shared_ptr<const Node> node_ptr() const { return node_; }
  /// Rewraps an existing DAG node (internal traversals).
  static FieldElem wrap(std::shared_ptr<const Node> n) { return FieldElem(std::move(n)); }

  std::string str() const;

 private:
  explicit FieldElem(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static FieldElem make_binary(Kind k, const FieldElem& a, const FieldElem& b);
  std::shared_ptr<const Node> node_;
};

/// Laurent expansion of `a` modulo t^prec, by adaptive precision doubling up
/// to the ambient cap. Exact rational coefficients.
TruncSeries eval_series(const FieldElem& a, long prec);

/// t-adic valuation. nullopt encodes +infinity (symbolic zero only); a
/// symbolically nonzero element whose valuation is not found below the cap
/// raises PrecisionExhausted rather than returning +infinity.
std::optional<long> valuation(const FieldElem& a);

/// Certified check v(a) >= r. Total for well-formed elements: an exact zero
/// passes at every r without needing an exact valuation.
bool val_at_least(const FieldElem& a, long r);

enum class CompareResult { EqualToPrecision, Distinct, Unknown };

/// Precision-bounded comparison of two elements modulo t^prec.
CompareResult compare_at_precision(const FieldElem& a, const FieldElem& b, long prec);

/// Laurent-polynomial part of `a` below t^bound, as a symbolic element of Q(t).
FieldElem laurent_truncation(const FieldElem& a, long bound);

}  // namespace henselab
