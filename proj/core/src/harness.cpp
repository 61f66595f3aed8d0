#include "srdelta/harness.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "srdelta/hilbert.hpp"
#include "srdelta/regularity.hpp"
#include "srdelta/stanley_reisner.hpp"

namespace srdelta {

using json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kViolated: return "violated";
    case Verdict::kNotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

std::string to_string(ShellabilityStatus s) {
  switch (s) {
    case ShellabilityStatus::kShellable: return "shellable";
    case ShellabilityStatus::kNotShellable: return "not-shellable";
    case ShellabilityStatus::kNotPure: return "not-applicable";
  }
  return "?";
}

}  // namespace

namespace {

bool equal_prime_heights(const MonomialIdeal& ideal) {
  const std::vector<MonomialPrime> primes = minimal_primes(ideal);
  for (const MonomialPrime& p : primes)
    if (p.height() != primes.front().height()) return false;
  return true;
}

}  // namespace

InvariantReport compute_invariants(const SimplicialComplex& cplx,
                                   const std::vector<FieldDescriptor>& fields) {
  const MonomialIdeal ideal = stanley_reisner_ideal(cplx);
  InvariantReport r;
  r.n = cplx.vertices();
  for (const Monomial& g : ideal.generators()) r.generators.push_back(g.str());
  r.krull_dim = krull_dimension(ideal);
  r.degree = static_cast<long long>(multiplicity(ideal));
  r.pure = is_pure(cplx);
  r.unmixed = equal_prime_heights(ideal);
  r.shellable = shellability(cplx).status;
  for (const FieldDescriptor& f : fields) {
    r.regularity[f.name()] = regularity(cplx, f);
    r.cohen_macaulay[f.name()] = is_cohen_macaulay(cplx, f);
    r.gorenstein[f.name()] = is_gorenstein(cplx, f);
  }
  return r;
}

BoundVerdict verify_bounds(const SimplicialComplex& cplx,
                           const std::vector<FieldDescriptor>& fields) {
  const MonomialIdeal ideal = stanley_reisner_ideal(cplx);
  if (!(complex_from_ideal(ideal) == cplx))
    throw InternalBugError("dictionary round trip failed for " + cplx.str());
  BoundVerdict v;
  v.id = canonical_id(cplx);
  v.n = cplx.vertices();
  v.krull_dim = krull_dimension(ideal);
  v.degree = static_cast<long long>(multiplicity(ideal));
  v.pure = is_pure(cplx);
  v.unmixed = equal_prime_heights(ideal);
  if (v.unmixed != v.pure)
    throw InternalBugError("purity and unmixedness disagree for " + v.id);

  const ShellabilityResult sh = shellability(cplx);
  v.shellable = sh.status;
  if (sh.shelling && !verify_shelling_order(cplx, *sh.shelling))
    throw InternalBugError("shelling witness failed the definition-level "
                           "recheck for " + v.id);

  const DeltaProfile profile = delta_profile(ideal, 1);
  v.r_index = profile.r_index;
  v.stable_value = profile.stable_value;
  for (const auto& [t, dv] : profile.values) v.delta_values.push_back(dv.value);
  // delta_profile construction already cross-validates monotonicity.
  v.delta_nonincreasing = Verdict::kHolds;

  for (const FieldDescriptor& f : fields) {
    v.regularity[f.name()] = regularity(cplx, f);
    v.gorenstein[f.name()] = is_gorenstein(cplx, f);
  }

  v.r_le_dim = v.r_index <= v.krull_dim ? Verdict::kHolds : Verdict::kViolated;

  if (v.shellable == ShellabilityStatus::kShellable) {
    v.r_le_reg_if_shellable = Verdict::kHolds;
    for (const auto& [field, reg] : v.regularity)
      if (v.r_index > reg) v.r_le_reg_if_shellable = Verdict::kViolated;
  }

  bool gorenstein_somewhere = false;
  for (const auto& [field, gor] : v.gorenstein) {
    if (!gor) continue;
    gorenstein_somewhere = true;
    if (v.r_le_reg_if_gorenstein != Verdict::kViolated)
      v.r_le_reg_if_gorenstein = v.r_index <= v.regularity.at(field)
                                     ? Verdict::kHolds
                                     : Verdict::kViolated;
  }
  if (!gorenstein_somewhere) v.r_le_reg_if_gorenstein = Verdict::kNotApplicable;

  // r_I > reg on a complex covered by neither bound hypothesis is an
  // interesting finding, not an error.
  for (const auto& [field, reg] : v.regularity) {
    if (v.r_index > reg &&
        v.shellable != ShellabilityStatus::kShellable &&
        !v.gorenstein.at(field))
      v.conjecture_violator = true;
  }

  if (v.theorem_violated())
    throw TheoremViolation("bound violated on " + v.id +
                           " (r=" + std::to_string(v.r_index) +
                           ", dim=" + std::to_string(v.krull_dim) + ")");
  return v;
}

namespace {

int worker_count(size_t jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("SRDELTA_THREADS")) {
    const long k = std::strtol(env, nullptr, 10);
    if (k >= 1) hw = static_cast<unsigned>(k);
  }
  if (hw == 0) hw = 1;
  return static_cast<int>(std::min<size_t>(hw, std::max<size_t>(jobs, 1)));
}

}  // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  SweepReport report;
  report.config = cfg;

  // Inputs are generated up front, single-threaded, so the stream is a pure
  // function of the config.
  std::vector<SimplicialComplex> inputs;
  std::mt19937_64 rng(cfg.seed);
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    std::vector<SimplicialComplex> batch =
        cfg.mode == SweepMode::kExhaustive
            ? enumerate_complexes(n)
            : sample_complexes(n, cfg.samples, rng);
    for (auto& c : batch) inputs.push_back(std::move(c));
  }
  report.complexes = static_cast<int>(inputs.size());

  // Verdicts are computed in parallel but stored by input index, so the
  // report is byte-identical for any worker count.
  std::vector<BoundVerdict> verdicts(inputs.size());
  std::vector<std::exception_ptr> errors(inputs.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= inputs.size()) return;
      try {
        verdicts[i] = verify_bounds(inputs[i], cfg.fields);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int workers = worker_count(inputs.size());
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  report.verdicts = std::move(verdicts);
  for (const BoundVerdict& v : report.verdicts)
    if (v.conjecture_violator) report.conjecture_violators.push_back(v.id);
  return report;
}

namespace {

json field_map_json(const std::map<std::string, int>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

json field_map_json(const std::map<std::string, bool>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

std::string dump(const json& j, bool pretty) {
  return pretty ? j.dump(2) + "\n" : j.dump();
}

}  // namespace

std::string to_json(const InvariantReport& r, bool pretty) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["n"] = r.n;
  j["generators"] = r.generators;
  j["krull_dim"] = r.krull_dim;
  j["degree"] = r.degree;
  j["regularity"] = field_map_json(r.regularity);
  j["unmixed"] = r.unmixed;
  j["pure"] = r.pure;
  j["shellable"] = to_string(r.shellable);
  j["cohen_macaulay"] = field_map_json(r.cohen_macaulay);
  j["gorenstein"] = field_map_json(r.gorenstein);
  return dump(j, pretty);
}

std::string to_json(const DeltaProfile& p, bool pretty) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["r_index"] = p.r_index;
  j["stable_value"] = p.stable_value;
  j["unmixed"] = p.unmixed;
  j["constant_profile"] = p.constant_profile;
  json values = json::array();
  for (const auto& [t, dv] : p.values) {
    json entry;
    entry["t"] = t;
    entry["delta"] = dv.value;
    entry["method"] = to_string(dv.method);
    values.push_back(entry);
  }
  j["values"] = values;
  return dump(j, pretty);
}

namespace {

json verdict_json(const BoundVerdict& v) {
  json j;
  j["id"] = v.id;
  j["n"] = v.n;
  j["r_index"] = v.r_index;
  j["krull_dim"] = v.krull_dim;
  j["degree"] = v.degree;
  j["stable_value"] = v.stable_value;
  j["regularity"] = field_map_json(v.regularity);
  j["unmixed"] = v.unmixed;
  j["pure"] = v.pure;
  j["shellable"] = to_string(v.shellable);
  j["gorenstein"] = field_map_json(v.gorenstein);
  j["delta"] = v.delta_values;
  json verdicts;
  verdicts["r_le_dim"] = to_string(v.r_le_dim);
  verdicts["r_le_reg_if_shellable"] = to_string(v.r_le_reg_if_shellable);
  verdicts["r_le_reg_if_gorenstein"] = to_string(v.r_le_reg_if_gorenstein);
  verdicts["delta_nonincreasing"] = to_string(v.delta_nonincreasing);
  j["verdicts"] = verdicts;
  j["conjecture_violator"] = v.conjecture_violator;
  return j;
}

}  // namespace

std::string to_json(const BoundVerdict& v, bool pretty) {
  json j = verdict_json(v);
  j["schema_version"] = kReportSchemaVersion;
  return dump(j, pretty);
}

std::string to_json(const SweepReport& r, bool pretty) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  json cfg;
  cfg["n_min"] = r.config.n_min;
  cfg["n_max"] = r.config.n_max;
  cfg["mode"] =
      r.config.mode == SweepMode::kExhaustive ? "exhaustive" : "random";
  cfg["samples"] = r.config.samples;
  cfg["seed"] = r.config.seed;
  json fields = json::array();
  for (const FieldDescriptor& f : r.config.fields) fields.push_back(f.name());
  cfg["fields"] = fields;
  j["config"] = cfg;
  j["complexes"] = r.complexes;
  json verdicts = json::array();
  for (const BoundVerdict& v : r.verdicts) verdicts.push_back(verdict_json(v));
  j["verdicts"] = verdicts;
  j["conjecture_violators"] = r.conjecture_violators;
  return dump(j, pretty);
}

std::string sweep_table(const SweepReport& r) {
  std::string out;
  out += "id\tn\tr\tdim\tdeg\tstable\tpure\tshellable\tverdict\n";
  for (const BoundVerdict& v : r.verdicts) {
    out += v.id + "\t" + std::to_string(v.n) + "\t" +
           std::to_string(v.r_index) + "\t" + std::to_string(v.krull_dim) +
           "\t" + std::to_string(v.degree) + "\t" +
           std::to_string(v.stable_value) + "\t" + (v.pure ? "yes" : "no") +
           "\t" + to_string(v.shellable) + "\t" +
           (v.theorem_violated()
                ? "VIOLATED"
                : (v.conjecture_violator ? "conjecture-violator" : "ok")) +
           "\n";
  }
  out += "total\t" + std::to_string(r.complexes) + " complexes, " +
         std::to_string(r.conjecture_violators.size()) +
         " conjecture-violators\n";
  return out;
}

}  // namespace srdelta
