#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "henselab/elem.hpp"

namespace henselab {

class Derivation;

/// Monic polynomial x^(d+2) + x^(d+1) + alpha_d x^d + ... + alpha_1 x + alpha_0.
struct GtPoly {
  int d = 0;
  std::vector<FieldElem> alpha;  // size d+1, index i holds the coefficient of x^i

  GtPoly() : alpha(1) {}
  GtPoly(int degree_d, std::vector<FieldElem> coeffs);

  std::string str() const;
};

/// A simple root near -1, produced by Newton iteration in the series model.
/// The series cache extends monotonically on demand; extension recomputes
/// deterministically and must agree with the cached prefix.
class HenselRoot {
 public:
  HenselRoot(GtPoly poly, TruncSeries series, std::optional<long> min_alpha_val);

  const GtPoly& poly() const { return poly_; }
  long certified_precision() const;
  /// v(p'(beta)); recorded at lift time, always 0 for accepted roots.
  long simplicity_valuation() const { return 0; }
  /// min_i v(alpha_i); nullopt when every coefficient is zero (beta = -1).
  std::optional<long> min_alpha_valuation() const { return min_alpha_val_; }

  /// Root series modulo t^prec, extending the cache if needed.
  TruncSeries series(long prec);

 private:
  GtPoly poly_;
  TruncSeries cache_;
  std::optional<long> min_alpha_val_;
  mutable std::mutex mutex_;
};

using HenselRootPtr = std::shared_ptr<HenselRoot>;

/// Lifts the simple root of p near -1 to v(p(beta)) >= prec. Requires
/// v(alpha_i) >= 1 for every coefficient (OutsideHenselDomain otherwise).
HenselRootPtr hensel_root(const GtPoly& p, long prec);

/// Valuations of successive Newton corrections, for convergence diagnostics.
std::vector<long> hensel_root_trace(const GtPoly& p, long prec);

/// The derivation value at the root: -(D p)(beta) / p'(beta), where D p applies
/// D to each coefficient. Returns the exact zero element when every D(alpha_i)
/// vanishes symbolically.
FieldElem root_derivative(const Derivation& D, const HenselRootPtr& root);

/// Evaluates p at a series point with all operands at the argument precision.
TruncSeries gtpoly_eval_series(const GtPoly& p, const TruncSeries& x, long prec);
TruncSeries gtpoly_eval_derivative_series(const GtPoly& p, const TruncSeries& x, long prec);

}  // namespace henselab
