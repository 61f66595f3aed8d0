// Command-line surface: invariants, delta profiles, regularity index,
// classification, bound checks, corpus sweeps, and the form-oracle
// comparison. Exit codes: 0 success, 1 input error, 2 internal consistency
// failure (a theorem check fired, which means a bug here, not a finding).

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srdelta/harness.hpp"
#include "srdelta/hilbert.hpp"
#include "srdelta/io.hpp"
#include "srdelta/regularity.hpp"
#include "srdelta/stanley_reisner.hpp"

namespace {

using namespace srdelta;

struct GlobalOpts {
  std::vector<std::string> field_names;
  bool json = false;
  bool reindex = false;

  std::vector<FieldDescriptor> fields() const {
    std::vector<FieldDescriptor> out;
    for (const std::string& name : field_names)
      out.push_back(FieldDescriptor::parse(name));
    if (out.empty()) out.push_back(FieldDescriptor::prime(2));
    return out;
  }
  VertexPolicy policy() const {
    return reindex ? VertexPolicy::kReindex : VertexPolicy::kReject;
  }
};

ParsedInput load(const std::string& path, const GlobalOpts& g) {
  return parse_input_file(path, g.policy());
}

int cmd_invariants(const std::string& path, const GlobalOpts& g) {
  const ParsedInput in = load(path, g);
  const InvariantReport r = compute_invariants(in.complex, g.fields());
  if (g.json) {
    std::cout << to_json(r);
    return 0;
  }
  std::cout << "n          = " << r.n << "\n";
  std::cout << "ideal      = " << in.ideal.str() << "\n";
  std::cout << "krull dim  = " << r.krull_dim << "\n";
  std::cout << "degree     = " << r.degree << "\n";
  for (const auto& [f, reg] : r.regularity)
    std::cout << "reg (" << f << ")   = " << reg << "\n";
  std::cout << "pure       = " << (r.pure ? "yes" : "no") << "\n";
  std::cout << "unmixed    = " << (r.unmixed ? "yes" : "no") << "\n";
  return 0;
}

int cmd_delta(const std::string& path, int t_max, const GlobalOpts& g) {
  const ParsedInput in = load(path, g);
  const DeltaProfile p = delta_profile(in.ideal, t_max);
  if (g.json) {
    std::cout << to_json(p);
    return 0;
  }
  std::cout << "r_index      = " << p.r_index << "\n";
  std::cout << "stable value = " << p.stable_value << "\n";
  for (const auto& [t, dv] : p.values)
    std::cout << "delta(" << t << ") = " << dv.value << "  ["
              << to_string(dv.method) << "]\n";
  return 0;
}

int cmd_ri(const std::string& path, const GlobalOpts& g) {
  const ParsedInput in = load(path, g);
  const DeltaProfile p = delta_profile(in.ideal, 1);
  if (g.json) {
    std::cout << to_json(p);
    return 0;
  }
  std::cout << "r_index = " << p.r_index
            << (p.constant_profile ? "  [constant-profile]" : "") << "\n";
  return 0;
}

int cmd_classify(const std::string& path, const GlobalOpts& g) {
  const ParsedInput in = load(path, g);
  const InvariantReport r = compute_invariants(in.complex, g.fields());
  if (g.json) {
    std::cout << to_json(r);
    return 0;
  }
  std::cout << "pure       = " << (r.pure ? "yes" : "no") << "\n";
  std::cout << "shellable  = "
            << (r.shellable == ShellabilityStatus::kShellable
                    ? "yes"
                    : (r.shellable == ShellabilityStatus::kNotShellable
                           ? "no"
                           : "not-applicable (not pure)"))
            << "\n";
  for (const auto& [f, cm] : r.cohen_macaulay)
    std::cout << "CM (" << f << ")    = " << (cm ? "yes" : "no") << "\n";
  for (const auto& [f, gor] : r.gorenstein)
    std::cout << "Gor (" << f << ")   = " << (gor ? "yes" : "no") << "\n";
  return 0;
}

int cmd_check(const std::string& path, const GlobalOpts& g) {
  const ParsedInput in = load(path, g);
  const BoundVerdict v = verify_bounds(in.complex, g.fields());
  if (g.json) {
    std::cout << to_json(v);
    return 0;
  }
  std::cout << "id = " << v.id << "\n";
  std::cout << "r_index = " << v.r_index << ", dim = " << v.krull_dim
            << ", degree = " << v.degree << "\n";
  std::cout << "r_le_dim               = " << to_string(v.r_le_dim) << "\n";
  std::cout << "r_le_reg_if_shellable  = " << to_string(v.r_le_reg_if_shellable)
            << "\n";
  std::cout << "r_le_reg_if_gorenstein = "
            << to_string(v.r_le_reg_if_gorenstein) << "\n";
  std::cout << "delta_nonincreasing    = " << to_string(v.delta_nonincreasing)
            << "\n";
  if (v.conjecture_violator)
    std::cout << "conjecture-violator: r_index exceeds regularity\n";
  return 0;
}

int cmd_sweep(const SweepConfig& cfg, const GlobalOpts& g) {
  const SweepReport report = run_sweep(cfg);
  const std::string payload = to_json(report, /*pretty=*/true);
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw InputError("cannot open output file '" + cfg.out_path + "'");
    out << payload;
  }
  if (g.json)
    std::cout << payload;
  else
    std::cout << sweep_table(report);
  return 0;
}

int cmd_oracle_compare(const std::string& path, int t, int q,
                       const GlobalOpts& g) {
  const ParsedInput in = load(path, g);
  const long long oracle = oracle_delta_forms(in.ideal, t, q);
  const DeltaValue dv = delta(in.ideal, t);
  const bool equal = oracle == dv.value;
  if (g.json) {
    std::cout << "{\n  \"t\": " << t << ",\n  \"q\": " << q
              << ",\n  \"oracle\": " << oracle
              << ",\n  \"monomial_search\": " << dv.value
              << ",\n  \"equal\": " << (equal ? "true" : "false") << "\n}\n";
  } else {
    std::cout << "oracle over forms  = " << oracle << "\n";
    std::cout << "monomial search    = " << dv.value << "\n";
    std::cout << (equal ? "EQUAL\n" : "MISMATCH\n");
  }
  if (!equal)
    throw CrossValidationMismatch(
        "form oracle disagrees with the monomial search");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of square-free monomial ideals: minimum "
               "distance function, regularity index, and the classical "
               "commutative-algebra package"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts g;
  app.add_option("--field", g.field_names,
                 "Coefficient field(s): Q or F<p>, repeatable (default F2)");
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_flag("--reindex", g.reindex,
               "Shrink the ambient vertex set instead of rejecting inputs "
               "with uncovered vertices");

  std::string path;
  int t_max = 6, t = 1, q = 2;

  CLI::App* invariants = app.add_subcommand(
      "invariants", "Krull dimension, degree, regularity, flags");
  invariants->add_option("file", path, "input file")->required();

  CLI::App* delta_cmd =
      app.add_subcommand("delta", "Minimum distance function profile");
  delta_cmd->add_option("file", path, "input file")->required();
  delta_cmd->add_option("--t-max", t_max, "largest degree to evaluate");

  CLI::App* ri = app.add_subcommand("ri", "Regularity index of delta");
  ri->add_option("file", path, "input file")->required();

  CLI::App* classify = app.add_subcommand(
      "classify", "Pure / shellable / Cohen-Macaulay / Gorenstein");
  classify->add_option("file", path, "input file")->required();

  CLI::App* check =
      app.add_subcommand("check", "Verify the regularity-index bounds");
  check->add_option("file", path, "input file")->required();

  SweepConfig cfg;
  std::string mode = "exhaustive";
  CLI::App* sweep =
      app.add_subcommand("sweep", "Generate a corpus and verify every bound");
  int sweep_n = -1;
  sweep->add_option("--n", sweep_n, "vertex count (sets both ends of the range)");
  sweep->add_option("--n-min", cfg.n_min, "smallest vertex count");
  sweep->add_option("--n-max", cfg.n_max, "largest vertex count");
  sweep->add_option("--mode", mode, "exhaustive | random");
  sweep->add_option("--samples", cfg.samples, "random mode: complexes per n");
  sweep->add_option("--seed", cfg.seed, "random mode: RNG seed");
  sweep->add_option("--out", cfg.out_path, "write the JSON report here");

  CLI::App* oracle = app.add_subcommand(
      "oracle-compare",
      "Brute-force minimum distance over F_q forms vs the monomial search");
  oracle->add_option("file", path, "input file")->required();
  oracle->add_option("--t", t, "degree")->required();
  oracle->add_option("--q", q, "field size, 2 or 3")->required();

  try {
    app.parse(argc, argv);
    if (invariants->parsed()) return cmd_invariants(path, g);
    if (delta_cmd->parsed()) return cmd_delta(path, t_max, g);
    if (ri->parsed()) return cmd_ri(path, g);
    if (classify->parsed()) return cmd_classify(path, g);
    if (check->parsed()) return cmd_check(path, g);
    if (sweep->parsed()) {
      if (sweep_n > 0) cfg.n_min = cfg.n_max = sweep_n;
      if (mode == "exhaustive")
        cfg.mode = SweepMode::kExhaustive;
      else if (mode == "random")
        cfg.mode = SweepMode::kRandom;
      else
        throw srdelta::InputError("unknown sweep mode '" + mode + "'");
      cfg.fields = g.fields();
      return cmd_sweep(cfg, g);
    }
    if (oracle->parsed()) return cmd_oracle_compare(path, t, q, g);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const srdelta::InternalBugError& e) {
    std::cerr << "internal consistency failure (please report): " << e.what()
              << "\n";
    return 2;
  } catch (const srdelta::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
