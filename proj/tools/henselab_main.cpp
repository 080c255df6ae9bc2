#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "henselab/scenario.hpp"

namespace {

struct CommonArgs {
  std::string scenario_path;
  std::string out_path;
  long seed = -1;
  long prec_max = -1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--scenario", args.scenario_path, "scenario JSON file")->required();
  cmd->add_option("--out", args.out_path, "report output path (stdout when omitted)");
  cmd->add_option("--seed", args.seed, "override the scenario seed");
  cmd->add_option("--prec-max", args.prec_max, "override the precision cap");
}

int run(const CommonArgs& args, const std::vector<std::string>& allowed_kinds) {
  henselab::RunOverrides overrides;
  if (args.seed >= 0) overrides.seed = static_cast<std::uint64_t>(args.seed);
  if (args.prec_max > 0) overrides.precision_cap = args.prec_max;
  try {
    henselab::Report report = henselab::run_scenario_file(args.scenario_path, overrides);
    bool kind_ok = false;
    for (const auto& k : allowed_kinds) kind_ok = kind_ok || k == report.kind;
    if (!kind_ok) {
      std::cerr << "error: scenario kind '" << report.kind
                << "' does not match this subcommand\n";
      return 2;
    }
    std::string text = henselab::report_to_json(report);
    if (args.out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(args.out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << args.out_path << "\n";
        return 2;
      }
      out << text;
    }
    return henselab::exit_code_for(report);
  } catch (const henselab::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int report_diff(const std::string& a_path, const std::string& b_path) {
  auto slurp = [](const std::string& path) -> std::string {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  try {
    std::string a = slurp(a_path), b = slurp(b_path);
    if (a == b) {
      std::cout << "reports identical\n";
      return 0;
    }
    auto ja = nlohmann::ordered_json::parse(a);
    auto jb = nlohmann::ordered_json::parse(b);
    auto va = ja.value("verdicts", nlohmann::ordered_json::array());
    auto vb = jb.value("verdicts", nlohmann::ordered_json::array());
    std::cout << "reports differ: " << va.size() << " vs " << vb.size() << " verdicts\n";
    size_t n = std::min(va.size(), vb.size());
    for (size_t i = 0; i < n; ++i) {
      if (va[i] != vb[i]) {
        std::cout << "first differing verdict #" << i << ":\n  " << va[i].dump() << "\n  "
                  << vb[i].dump() << "\n";
        break;
      }
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"henselab — derivation-refined valuation topology verification"};
  app.require_subcommand(1);

  CommonArgs verify_args, witness_args, axioms_args;
  auto* verify = app.add_subcommand("verify", "run a gt-verify scenario");
  add_common(verify, verify_args);
  auto* witness = app.add_subcommand("witness", "run a witness / incomparable / boundedness scenario");
  add_common(witness, witness_args);
  auto* axioms = app.add_subcommand("axioms", "run a neighborhood-basis axioms scenario");
  add_common(axioms, axioms_args);

  std::string diff_a, diff_b;
  auto* diff = app.add_subcommand("report-diff", "compare two report files");
  diff->add_option("a", diff_a, "first report")->required();
  diff->add_option("b", diff_b, "second report")->required();

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) return run(verify_args, {"gt-verify"});
  if (witness->parsed()) return run(witness_args, {"witness", "incomparable", "boundedness"});
  if (axioms->parsed()) return run(axioms_args, {"axioms"});
  if (diff->parsed()) return report_diff(diff_a, diff_b);
  return 2;
}
