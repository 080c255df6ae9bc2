#include "henselab/gt_verify.hpp"

#include <sstream>

#include "henselab/registry.hpp"

namespace henselab {

long gt_threshold(int d, const Ball& u, const Ball& v, const std::vector<Derivation>& ds) {
  if (d < 0) throw std::invalid_argument("gt_threshold: d must be >= 0");
  if (!(u.center + FieldElem::integer(1)).is_zero_symbolic())
    throw std::invalid_argument("gt_threshold: U must be centered at -1");
  if (!(v.center.symbolic() && v.center.is_zero_symbolic()))
    throw std::invalid_argument("gt_threshold: V must be centered at 0");
  (void)ds;  // the bound already dominates every derivation constraint
  return std::max<long>({1, u.radius, v.radius});
}

namespace {

std::string tuple_str(const std::vector<FieldElem>& alpha) {
  std::ostringstream s;
  s << "(";
  for (size_t i = 0; i < alpha.size(); ++i) s << (i ? "; " : "") << alpha[i].str();
  s << ")";
  return s.str();
}

}  // namespace

Report verify_gt_henselian(const TopologyDesc& top, int d_max, int samples, std::uint64_t seed,
                           const GtVerifyOptions& opts) {
  if (d_max < 0) throw std::invalid_argument("verify_gt_henselian: d_max must be >= 0");
  if (samples < 1) throw std::invalid_argument("verify_gt_henselian: samples must be >= 1");

  Report report;
  report.kind = "gt-verify";
  report.seed = seed;
  report.precision_cap = precision_cap();
  report.generators = GeneratorRegistry::instance().count();
  Sampler sampler(seed, report.generators);

  std::vector<Derivation> ds =
      top.is_lazy() ? top.finite_prefix(2) : top.derivations;

  for (int d = 0; d <= d_max; ++d) {
    bool ok = true;
    std::string witness;
    std::string thresholds;
    for (const auto& [ur, vr] : opts.radii) {
      Ball u(FieldElem::integer(-1), ur);
      Ball v = Ball::around_zero(vr);
      long s = gt_threshold(d, u, v, ds);
      thresholds += (thresholds.empty() ? "s=" : ",") + std::to_string(s);
      for (int k = 0; k < samples && ok; ++k) {
        std::vector<FieldElem> alpha;
        for (int i = 0; i <= d; ++i) alpha.push_back(sampler.small(s));
        auto root = hensel_root(GtPoly(d, alpha), opts.residual_prec);
        FieldElem beta = FieldElem::from_root(root);

        TruncSeries beta_series = root->series(opts.residual_prec);
        TruncSeries residual = gtpoly_eval_series(root->poly(), beta_series, opts.residual_prec);
        bool residual_ok = residual.valuation_lower_bound() >= opts.residual_prec;
        TruncSeries deriv = gtpoly_eval_derivative_series(root->poly(), beta_series, 4);
        bool simple_ok = deriv.valuation_known() && *deriv.valuation_known() == 0;
        bool u_ok = ball_contains(u, beta);
        bool v_ok = true;
        for (const auto& dd : ds)
          v_ok = v_ok && ball_contains(v, apply_derivation(dd, beta));

        if (!(residual_ok && simple_ok && u_ok && v_ok)) {
          ok = false;
          witness = "U=Ball(-1," + std::to_string(ur) + ") V=Ball(0," + std::to_string(vr) +
                    ") alpha=" + tuple_str(alpha) +
                    (residual_ok ? "" : " residual-short") + (simple_ok ? "" : " not-simple") +
                    (u_ok ? "" : " beta-outside-U") + (v_ok ? "" : " D(beta)-outside-V");
        }
      }
      if (!ok) break;
    }
    report.add("gt d=" + std::to_string(d), ok ? VerdictStatus::Pass : VerdictStatus::Fail,
               ok ? thresholds + "; " + std::to_string(samples) +
                        " lifted roots certified per ball pair"
                  : witness);
  }

  if (opts.inject_outside_domain) {
    // a unit coefficient leaves the lifting domain; recorded, not failed
    std::vector<FieldElem> alpha = {FieldElem::integer(1)};
    std::string id = "gt d=0 outside-domain-probe";
    try {
      hensel_root(GtPoly(0, alpha), opts.residual_prec);
      report.add(id, VerdictStatus::Fail, "lift accepted a unit coefficient");
    } catch (const OutsideHenselDomain& e) {
      report.add(id, VerdictStatus::OutsideDomain, e.what());
    }
  }

  return report;
}

}  // namespace henselab
