#include "henselab/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "henselab/expr_io.hpp"
#include "henselab/registry.hpp"
#include "henselab/witness.hpp"

namespace henselab {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw ScenarioError("scenario field '" + field + "': " + why);
}

long get_long(const json& j, const std::string& field, long fallback, long lo, long hi) {
  if (!j.contains(field)) return fallback;
  if (!j[field].is_number_integer()) bad_field(field, "expected an integer");
  long v = j[field].get<long>();
  if (v < lo || v > hi)
    bad_field(field, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  return v;
}

std::string get_string(const json& j, const std::string& field, const std::string& fallback) {
  if (!j.contains(field)) return fallback;
  if (!j[field].is_string()) bad_field(field, "expected a string");
  return j[field].get<std::string>();
}

std::vector<int> get_indices(const json& j, const std::string& field,
                             const std::vector<int>& fallback) {
  if (!j.contains(field)) return fallback;
  if (!j[field].is_array()) bad_field(field, "expected an array of generator indices");
  std::vector<int> out;
  for (const auto& item : j[field]) {
    if (!item.is_number_integer()) bad_field(field, "expected integer entries");
    int v = item.get<int>();
    if (v < 1 || v > 16) bad_field(field, "derivation index must be in [1, 16]");
    out.push_back(v);
  }
  return out;
}

FieldElem parse_center(const std::string& field, const std::string& text) {
  try {
    return parse_elem(text);
  } catch (const std::exception& e) {
    bad_field(field, e.what());
  }
}

std::vector<Derivation> canonical_family(const std::vector<int>& indices) {
  std::vector<Derivation> ds;
  for (int i : indices) ds.push_back(Derivation::canonical(i));
  return ds;
}

int required_generators(const json& j, const std::vector<int>& derivation_indices) {
  int m = static_cast<int>(get_long(j, "generators", 4, 1, 16));
  for (int i : derivation_indices) m = std::max(m, i);
  m = std::max<int>(m, static_cast<int>(get_long(j, "m", 1, 1, 16)));
  return m;
}

Report run_gt_verify(const json& j, std::uint64_t seed) {
  auto indices = get_indices(j, "derivations", {});
  int d_max = static_cast<int>(get_long(j, "d_max", 3, 0, 8));
  int samples = static_cast<int>(get_long(j, "samples", 100, 1, 100000));
  GtVerifyOptions opts;
  opts.residual_prec = get_long(j, "residual_prec", 16, 4, 256);
  opts.inject_outside_domain =
      j.contains("inject_outside_domain") && j["inject_outside_domain"].is_boolean() &&
      j["inject_outside_domain"].get<bool>();
  if (j.contains("radii")) {
    if (!j["radii"].is_array()) bad_field("radii", "expected an array of [u,v] pairs");
    opts.radii.clear();
    for (const auto& pair : j["radii"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer())
        bad_field("radii", "expected [u,v] integer pairs");
      opts.radii.emplace_back(pair[0].get<long>(), pair[1].get<long>());
    }
    if (opts.radii.empty()) bad_field("radii", "must be nonempty");
  }
  TopologyDesc top = TopologyDesc::refined(canonical_family(indices));
  return verify_gt_henselian(top, d_max, samples, seed, opts);
}

Report run_axioms(const json& j, std::uint64_t seed) {
  std::string name = get_string(j, "basis", "t-adic-balls");
  BasisFamily basis;
  if (name == "t-adic-balls") {
    basis.kind = BasisFamily::Kind::TAdicBalls;
  } else if (name == "tau-basic-opens") {
    basis.kind = BasisFamily::Kind::TauBasicOpens;
    basis.derivations = canonical_family(get_indices(j, "derivations", {1}));
  } else if (name == "singleton-ball") {
    basis.kind = BasisFamily::Kind::SingletonBall;
  } else if (name == "with-zero-singleton") {
    basis.kind = BasisFamily::Kind::WithZeroSingleton;
  } else {
    bad_field("basis", "unknown family '" + name + "'");
  }
  int samples = static_cast<int>(get_long(j, "samples", 50, 1, 10000));
  return check_basis_axioms(basis, samples, seed);
}

Report run_incomparable(const json& j, std::uint64_t seed) {
  int m = static_cast<int>(get_long(j, "m", 4, 1, 16));
  int samples = static_cast<int>(get_long(j, "samples", 50, 1, 100000));
  IncomparableOptions opts;
  std::string style = get_string(j, "style", "middle-layer");
  if (style == "middle-layer")
    opts.style = AntichainStyle::MiddleLayer;
  else if (style == "function-graphs")
    opts.style = AntichainStyle::FunctionGraphs;
  else
    bad_field("style", "unknown antichain style '" + style + "'");
  opts.base_points = static_cast<int>(get_long(j, "base_points", 3, 1, 8));
  opts.d_max = static_cast<int>(get_long(j, "d_max", 3, 0, 8));
  if (j.contains("query_radii")) {
    if (!j["query_radii"].is_array()) bad_field("query_radii", "expected an integer array");
    opts.query_radii.clear();
    for (const auto& r : j["query_radii"]) {
      if (!r.is_number_integer()) bad_field("query_radii", "expected integer entries");
      opts.query_radii.push_back(r.get<long>());
    }
    if (opts.query_radii.empty()) bad_field("query_radii", "must be nonempty");
  }
  return incomparable_topologies(m, TopologyDesc::base_valuation(), samples, seed, opts);
}

Report run_witness(const json& j, std::uint64_t seed) {
  std::string which = get_string(j, "witness", "");
  Report report;
  report.kind = "witness";
  report.seed = seed;
  report.precision_cap = precision_cap();
  report.generators = GeneratorRegistry::instance().count();

  if (which == "continuity") {
    auto indices = get_indices(j, "derivations", {1});
    long n_max = get_long(j, "N_max", 8, 1, 64);
    for (int i : indices) {
      Derivation d = Derivation::canonical(i);
      for (long n = 1; n <= n_max; ++n) {
        std::string id = "refute-continuity " + d.label() + " N=" + std::to_string(n);
        try {
          FieldElem a = continuity_refutation(d, n);
          bool ok = val_at_least(a, n) && *valuation(apply_derivation(d, a)) <= 0;
          report.add(id, ok ? VerdictStatus::Pass : VerdictStatus::Fail, a.str());
        } catch (const std::exception& e) {
          report.add(id, VerdictStatus::Fail, e.what());
        }
      }
    }
  } else if (which == "nondiscreteness") {
    auto indices = get_indices(j, "derivations", {1, 2});
    auto ds = canonical_family(indices);
    long r_max = get_long(j, "radius_max", 8, 0, 64);
    for (long r = 0; r <= r_max; ++r) {
      std::string id = "nondiscrete r=" + std::to_string(r);
      try {
        FieldElem a = nondiscreteness_witness(ds, Ball::around_zero(r));
        bool ok = !a.is_zero_symbolic() && ball_contains(Ball::around_zero(r), a);
        for (const auto& d : ds)
          ok = ok && ball_contains(Ball::around_zero(r), apply_derivation(d, a));
        report.add(id, ok ? VerdictStatus::Pass : VerdictStatus::Fail, a.str());
      } catch (const std::exception& e) {
        report.add(id, VerdictStatus::Fail, e.what());
      }
    }
  } else if (which == "local-bounded") {
    int index = static_cast<int>(get_long(j, "derivation", 1, 1, 16));
    Derivation d = Derivation::canonical(index);
    int samples = static_cast<int>(get_long(j, "samples", 20, 1, 10000));
    Sampler sampler(seed, GeneratorRegistry::instance().count());
    long u_r = get_long(j, "u_radius", 1, -16, 64);
    long p_r = get_long(j, "pstar_radius", 6, -16, 64);
    Ball u = Ball::around_zero(u_r), pstar = Ball::around_zero(p_r);
    std::string id = "loc-bounded U=" + std::to_string(u_r) + " P*=" + std::to_string(p_r);
    try {
      FieldElem lambda = local_boundedness_witness(u, d, pstar);
      bool ok = true;
      for (int k = 0; k < samples && ok; ++k) {
        FieldElem a = sampler.small(std::max<long>(u_r, 0));
        if (!ball_contains(u, a) || !ball_contains(u, apply_derivation(d, a))) continue;
        ok = ball_contains(pstar, lambda * a) &&
             ball_contains(pstar, apply_derivation(d, lambda * a));
      }
      report.add(id, ok ? VerdictStatus::Pass : VerdictStatus::Fail, lambda.str());
    } catch (const std::exception& e) {
      report.add(id, VerdictStatus::Fail, e.what());
    }
  } else if (which == "dense-tuple") {
    auto indices = get_indices(j, "derivations", {1});
    auto ds = canonical_family(indices);
    if (!j.contains("targets") || !j["targets"].is_array() ||
        j["targets"].size() != ds.size() + 1)
      bad_field("targets", "expected n+1 {center, radius} objects");
    std::vector<Ball> targets;
    for (const auto& tj : j["targets"]) {
      std::string center = get_string(tj, "center", "0");
      long radius = get_long(tj, "radius", 1, -64, 64);
      targets.emplace_back(parse_center("targets.center", center), radius);
    }
    std::string id = "dense-tuple n=" + std::to_string(ds.size());
    try {
      FieldElem a = dense_tuple(ds, targets);
      report.add(id, VerdictStatus::Pass, a.str());
    } catch (const std::exception& e) {
      report.add(id, VerdictStatus::Fail, e.what());
    }
  } else if (which == "enumerator") {
    std::string center = get_string(j, "center", "0");
    long radius = get_long(j, "radius", 2, -64, 64);
    int count = static_cast<int>(get_long(j, "count", 2, 1, 8));
    Ball target(parse_center("center", center), radius);
    std::vector<FieldElem> avoid;
    for (int k = 0; k < count; ++k) {
      std::string id = "enumerate #" + std::to_string(k);
      FieldElem a = dense_independent_enumerator(target, avoid);
      bool ok = ball_contains(target, a);
      report.add(id, ok ? VerdictStatus::Pass : VerdictStatus::Fail, a.str());
      avoid.push_back(a);
    }
  } else if (which == "loc-bounded-dichotomy") {
    int max_k = static_cast<int>(get_long(j, "max_k", 3, 1, 8));
    Report inner = local_boundedness_dichotomy(TopologyDesc::lazy_canonical(), max_k, seed);
    report.append(inner, "");
    report.generators = GeneratorRegistry::instance().count();
  } else {
    bad_field("witness", "unknown witness pipeline '" + which + "'");
  }
  return report;
}

Report run_boundedness(const json& j, std::uint64_t seed) {
  Report report;
  report.kind = "boundedness";
  report.seed = seed;
  report.precision_cap = precision_cap();
  report.generators = GeneratorRegistry::instance().count();
  Sampler sampler(seed, report.generators);
  int samples = static_cast<int>(get_long(j, "samples", 25, 1, 10000));

  if (!j.contains("pairs") || !j["pairs"].is_array() || j["pairs"].empty())
    bad_field("pairs", "expected a nonempty array of {x_center, x_radius, u_radius}");
  int pair_index = 0;
  for (const auto& pj : j["pairs"]) {
    std::string center = get_string(pj, "x_center", "0");
    long xr = get_long(pj, "x_radius", 0, -64, 64);
    long ur = get_long(pj, "u_radius", 1, -64, 64);
    Ball x(parse_center("pairs.x_center", center), xr);
    Ball u = Ball::around_zero(ur);
    std::string id = "bounded #" + std::to_string(pair_index++) + " X=" + x.str() +
                     " U=Ball(0," + std::to_string(ur) + ")";
    try {
      FieldElem lambda = boundedness_witness(x, u);
      bool ok = true;
      for (int k = 0; k < samples && ok; ++k) {
        FieldElem pt = sampler.around(x.center, xr);
        ok = ball_contains(u, lambda * pt);
      }
      report.add(id, ok ? VerdictStatus::Pass : VerdictStatus::Fail, lambda.str());
    } catch (const std::exception& e) {
      report.add(id, VerdictStatus::Fail, e.what());
    }

    Ball inv_ball = v_topology_witness(u);
    std::string vid = "v-topology U=Ball(0," + std::to_string(ur) + ")";
    bool ok = true;
    std::string witness = inv_ball.str();
    for (int k = 0; k < samples && ok; ++k) {
      // sampled x outside U, i.e. v(x) < u.radius
      FieldElem pt = sampler.small(ur - 1 - sampler.integer_in(0, 4));
      ok = ball_contains(inv_ball, FieldElem::integer(1) / pt);
      if (!ok) witness = "1/x escapes for x=" + pt.str();
    }
    report.add(vid, ok ? VerdictStatus::Pass : VerdictStatus::Fail, witness);
  }
  return report;
}

}  // namespace

Report run_scenario_text(const std::string& json_text, const RunOverrides& overrides) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");

  std::string kind = get_string(j, "kind", "");
  if (kind.empty()) bad_field("kind", "missing");
  std::string name = get_string(j, "name", kind);

  std::uint64_t seed = overrides.seed
                           ? *overrides.seed
                           : static_cast<std::uint64_t>(get_long(j, "seed", 0, 0, 1L << 62));
  long cap = overrides.precision_cap
                 ? *overrides.precision_cap
                 : get_long(j, "precision_cap", precision_cap(), 16, 1L << 24);
  set_precision_cap(cap);

  // ambient state is scenario-scoped
  auto deriv_indices = get_indices(j, "derivations", {});
  GeneratorRegistry::instance().reset(required_generators(j, deriv_indices));
  reset_custom_derivation_ids();

  Report report;
  if (kind == "gt-verify")
    report = run_gt_verify(j, seed);
  else if (kind == "axioms")
    report = run_axioms(j, seed);
  else if (kind == "incomparable")
    report = run_incomparable(j, seed);
  else if (kind == "witness")
    report = run_witness(j, seed);
  else if (kind == "boundedness")
    report = run_boundedness(j, seed);
  else
    bad_field("kind", "unknown kind '" + kind + "'");

  report.scenario = name;
  report.kind = kind;
  report.seed = seed;
  report.precision_cap = cap;
  return report;
}

Report run_scenario_file(const std::string& path, const RunOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return run_scenario_text(buffer.str(), overrides);
}

std::string report_to_json(const Report& report) {
  json out;
  out["scenario"] = report.scenario;
  out["kind"] = report.kind;
  json env;
  env["version"] = report.version;
  env["seed"] = report.seed;
  env["precision_cap"] = report.precision_cap;
  env["generators"] = report.generators;
  out["environment"] = env;
  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    json vj;
    vj["id"] = v.id;
    vj["status"] = to_string(v.status);
    vj["witness"] = v.witness;
    verdicts.push_back(vj);
  }
  out["verdicts"] = verdicts;
  json summary;
  summary["pass"] = report.count(VerdictStatus::Pass);
  summary["fail"] = report.count(VerdictStatus::Fail);
  summary["outside_domain"] = report.count(VerdictStatus::OutsideDomain);
  summary["total"] = report.verdicts.size();
  out["summary"] = summary;
  return out.dump(2) + "\n";
}

int exit_code_for(const Report& report) { return report.all_pass() ? 0 : 1; }

}  // namespace henselab
