#ifndef SRDELTA_HARNESS_HPP
#define SRDELTA_HARNESS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srdelta/classifiers.hpp"
#include "srdelta/field.hpp"
#include "srdelta/generator.hpp"
#include "srdelta/mindist.hpp"
#include "srdelta/monomial.hpp"
#include "srdelta/simplicial_complex.hpp"

namespace srdelta {

inline constexpr int kReportSchemaVersion = 1;

// Classical invariants of one Stanley-Reisner ring, all exact.
struct InvariantReport {
  int n = 0;
  std::vector<std::string> generators;      // minimal generators, graded lex
  int krull_dim = 0;
  long long degree = 0;                     // e(S/I)
  std::map<std::string, int> regularity;    // field name -> reg(S/I)
  bool unmixed = false;
  bool pure = false;
  ShellabilityStatus shellable = ShellabilityStatus::kNotPure;
  std::map<std::string, bool> cohen_macaulay;  // per field
  std::map<std::string, bool> gorenstein;      // per field
};

enum class Verdict { kHolds, kViolated, kNotApplicable };

std::string to_string(Verdict v);

// Verdicts for the bounds on the regularity index of one complex:
//   r_le_dim                 r_I <= dim(S/I), unconditional
//   r_le_reg_if_shellable    r_I <= reg(S/I) over every tested field
//   r_le_reg_if_gorenstein   r_I <= reg(S/I) over the fields where the ring
//                            is Gorenstein
//   delta_nonincreasing      the profile never increases
// A violated verdict on the first three is a theorem violation and aborts
// the run; an r_I > reg finding on a complex that is neither shellable nor
// Gorenstein is recorded as a conjecture-violator finding instead.
struct BoundVerdict {
  std::string id;  // canonical facet encoding
  int n = 0;
  int r_index = 0;
  int krull_dim = 0;
  long long degree = 0;
  long long stable_value = 0;
  std::map<std::string, int> regularity;  // per field
  bool unmixed = false;
  bool pure = false;
  ShellabilityStatus shellable = ShellabilityStatus::kNotPure;
  std::map<std::string, bool> gorenstein;
  std::vector<long long> delta_values;  // t = 1..r+2

  Verdict r_le_dim = Verdict::kNotApplicable;
  Verdict r_le_reg_if_shellable = Verdict::kNotApplicable;
  Verdict r_le_reg_if_gorenstein = Verdict::kNotApplicable;
  Verdict delta_nonincreasing = Verdict::kNotApplicable;
  bool conjecture_violator = false;

  bool theorem_violated() const {
    return r_le_dim == Verdict::kViolated ||
           r_le_reg_if_shellable == Verdict::kViolated ||
           r_le_reg_if_gorenstein == Verdict::kViolated;
  }
};

InvariantReport compute_invariants(const SimplicialComplex& cplx,
                                   const std::vector<FieldDescriptor>& fields);

// All invariants plus verdicts for one complex. Throws TheoremViolation when
// a proven bound fails (that is a bug in this library, not a finding).
BoundVerdict verify_bounds(const SimplicialComplex& cplx,
                           const std::vector<FieldDescriptor>& fields);

struct SweepReport {
  SweepConfig config;
  std::vector<BoundVerdict> verdicts;  // input order
  std::vector<std::string> conjecture_violators;  // ids
  int complexes = 0;
};

// Run a sweep: generate, verify each complex (in parallel; the env var
// SRDELTA_THREADS caps the worker count), aggregate in input order.
SweepReport run_sweep(const SweepConfig& cfg);

// JSON serializations. Deterministic: identical inputs give identical bytes.
std::string to_json(const InvariantReport& r, bool pretty = true);
std::string to_json(const DeltaProfile& p, bool pretty = true);
std::string to_json(const BoundVerdict& v, bool pretty = true);
std::string to_json(const SweepReport& r, bool pretty = true);

// Human-readable one-complex-per-line table of a sweep.
std::string sweep_table(const SweepReport& r);

}  // namespace srdelta

#endif  // SRDELTA_HARNESS_HPP
