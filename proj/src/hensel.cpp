#include "henselab/hensel.hpp"

#include <sstream>

#include "henselab/derivation.hpp"
#include "henselab/registry.hpp"

namespace henselab {

GtPoly::GtPoly(int degree_d, std::vector<FieldElem> coeffs) : d(degree_d), alpha(std::move(coeffs)) {
  if (d < 0) throw std::invalid_argument("GtPoly: d must be >= 0");
  if (alpha.size() != static_cast<size_t>(d) + 1)
    throw std::invalid_argument("GtPoly: expected d+1 coefficients");
}

std::string GtPoly::str() const {
  std::ostringstream out;
  out << "x^" << (d + 2) << " + x^" << (d + 1);
  for (int i = d; i >= 0; --i) out << " + (" << alpha[static_cast<size_t>(i)].str() << ")*x^" << i;
  return out.str();
}

TruncSeries gtpoly_eval_series(const GtPoly& p, const TruncSeries& x, long prec) {
  // Horner over x^(d+2) + x^(d+1) + sum alpha_i x^i
  TruncSeries acc = TruncSeries::constant(Rat(1), prec);  // coefficient of x^(d+2)
  acc = acc * x + TruncSeries::constant(Rat(1), prec);    // + x^(d+1) coefficient
  for (int i = p.d; i >= 0; --i)
    acc = acc * x + eval_series(p.alpha[static_cast<size_t>(i)], prec);
  return acc;
}

TruncSeries gtpoly_eval_derivative_series(const GtPoly& p, const TruncSeries& x, long prec) {
  TruncSeries acc = TruncSeries::constant(Rat(p.d + 2), prec);
  acc = acc * x + TruncSeries::constant(Rat(p.d + 1), prec);
  for (int i = p.d; i >= 1; --i)
    acc = acc * x + eval_series(p.alpha[static_cast<size_t>(i)], prec).scale(Rat(i));
  return acc;
}

namespace {

struct LiftResult {
  TruncSeries beta;
  std::vector<long> correction_valuations;
};

LiftResult newton_lift(const GtPoly& p, long prec) {
  LiftResult out{TruncSeries::constant(Rat(-1), prec), {}};
  // v(p(-1)) >= 1 on the lifting domain and v(p'(-1)) = 0, so the iteration
  // contracts; correction valuations double until everything known vanishes.
  for (int iter = 0; iter < 80; ++iter) {
    TruncSeries f = gtpoly_eval_series(p, out.beta, prec);
    if (f.valuation_lower_bound() >= prec) return out;
    TruncSeries fp = gtpoly_eval_derivative_series(p, out.beta, prec);
    if (!fp.valuation_known() || *fp.valuation_known() != 0)
      throw std::logic_error("newton_lift: derivative is not a unit");
    TruncSeries correction = f / fp;
    out.correction_valuations.push_back(correction.valuation_lower_bound());
    out.beta = out.beta - correction;
  }
  throw std::logic_error("newton_lift: failed to converge");
}

std::optional<long> check_domain_and_min_valuation(const GtPoly& p) {
  std::optional<long> min_val;
  for (int i = 0; i <= p.d; ++i) {
    const FieldElem& a = p.alpha[static_cast<size_t>(i)];
    if (a.symbolic() && a.is_zero_symbolic()) continue;
    if (!val_at_least(a, 1))
      throw OutsideHenselDomain("coefficient alpha_" + std::to_string(i) +
                                " has valuation < 1");
    long v = *valuation(a);
    if (!min_val || v < *min_val) min_val = v;
  }
  return min_val;
}

}  // namespace

HenselRoot::HenselRoot(GtPoly poly, TruncSeries series, std::optional<long> min_alpha_val)
    : poly_(std::move(poly)), cache_(std::move(series)), min_alpha_val_(min_alpha_val) {}

long HenselRoot::certified_precision() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.precision();
}

TruncSeries HenselRoot::series(long prec) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (prec > cache_.precision()) {
    TruncSeries extended = newton_lift(poly_, prec).beta;
    if (!extended.agrees_with(cache_))
      throw std::logic_error("HenselRoot: extension disagrees with cached prefix");
    cache_ = extended;
  }
  return cache_.truncate(prec);
}

HenselRootPtr hensel_root(const GtPoly& p, long prec) {
  if (prec < 1) throw std::invalid_argument("hensel_root: precision must be >= 1");
  std::optional<long> min_val = check_domain_and_min_valuation(p);
  LiftResult lifted = newton_lift(p, prec);
  return std::make_shared<HenselRoot>(p, lifted.beta, min_val);
}

std::vector<long> hensel_root_trace(const GtPoly& p, long prec) {
  check_domain_and_min_valuation(p);
  return newton_lift(p, prec).correction_valuations;
}

FieldElem root_derivative(const Derivation& D, const HenselRootPtr& root) {
  const GtPoly& p = root->poly();
  FieldElem beta = FieldElem::from_root(root);

  FieldElem num;  // (D p)(beta) = sum D(alpha_i) beta^i; top coefficients are constants
  bool num_symbolically_zero = true;
  for (int i = 0; i <= p.d; ++i) {
    FieldElem da = apply_derivation(D, p.alpha[static_cast<size_t>(i)]);
    if (da.symbolic() && da.is_zero_symbolic()) continue;
    num_symbolically_zero = false;
    num = num + da * beta.pow(i);
  }
  if (num_symbolically_zero) return FieldElem();

  FieldElem den = FieldElem::integer(p.d + 2) * beta.pow(p.d + 1) +
                  FieldElem::integer(p.d + 1) * beta.pow(p.d);
  for (int i = 1; i <= p.d; ++i)
    den = den + FieldElem::integer(i) * p.alpha[static_cast<size_t>(i)] * beta.pow(i - 1);

  return -(num / den);
}

}  // namespace henselab
