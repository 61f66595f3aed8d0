#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "srdelta/harness.hpp"
#include "srdelta/io.hpp"
#include "srdelta/stanley_reisner.hpp"

using namespace srdelta;

namespace {

ParsedInput parse_text(const std::string& text,
                       VertexPolicy policy = VertexPolicy::kReject) {
  std::istringstream in(text);
  return parse_input(in, policy);
}

const std::vector<FieldDescriptor> kBothFields = {FieldDescriptor::prime(2),
                                                  FieldDescriptor::rationals()};

}  // namespace

TEST_CASE("facet files parse") {
  const ParsedInput in = parse_text("n=3\n0,1\n1,2\n0,2\n");
  CHECK(in.complex.facet_count() == 3);
  CHECK(in.ideal == MonomialIdeal(3, {Monomial({1, 1, 1})}));
}

TEST_CASE("ideal files parse") {
  const ParsedInput in = parse_text("n=3\nideal\n0,1\n0,2\n");
  CHECK(in.ideal ==
        MonomialIdeal(3, {Monomial({1, 1, 0}), Monomial({1, 0, 1})}));
  CHECK(in.complex.facet_count() == 2);
}

TEST_CASE("comments and blank lines are ignored") {
  const ParsedInput in =
      parse_text("# a triangle\nn=3\n\n0,1  # first edge\n1,2\n0,2\n");
  CHECK(in.complex.facet_count() == 3);
}

TEST_CASE("parse errors carry line numbers") {
  auto message_of = [](const std::string& text) {
    try {
      parse_text(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message_of("n=3\n0,1\nbogus\n").find("line 3") != std::string::npos);
  CHECK(message_of("nope\n").find("line 1") != std::string::npos);
  CHECK(message_of("n=3\n0,1,\n").find("line 2") != std::string::npos);
  CHECK(message_of("n=3\n0,5\n").find("out of range") != std::string::npos);
  CHECK(message_of("n=3\n0,99999999999999999999\n").find("line 2") !=
        std::string::npos);
  CHECK(message_of("n=3 trailing\n").find("line 1") != std::string::npos);
  CHECK_THROWS_AS(parse_text(""), ParseError);
  CHECK_THROWS_AS(parse_text("n=3\n"), ParseError);
  CHECK_THROWS_AS(parse_text("n=3\nideal\n"), ParseError);
  CHECK_THROWS_AS(parse_text("n=0\n0\n"), ParseError);
}

TEST_CASE("vertex policy applies to parsed input") {
  CHECK_THROWS_AS(parse_text("n=4\n0\n1\n"), IsolatedVertexPolicyViolation);
  const ParsedInput in = parse_text("n=4\n0\n1\n", VertexPolicy::kReindex);
  CHECK(in.complex.vertices() == 2);
  CHECK(in.ideal == MonomialIdeal(2, {Monomial({1, 1})}));
}

TEST_CASE("invariant report for the hollow triangle") {
  const ParsedInput in = parse_text("n=3\n0,1\n1,2\n0,2\n");
  const InvariantReport r = compute_invariants(in.complex, kBothFields);
  CHECK(r.krull_dim == 2);
  CHECK(r.degree == 3);
  CHECK(r.regularity.at("F2") == 2);
  CHECK(r.regularity.at("Q") == 2);
  CHECK(r.unmixed);
  CHECK(r.pure);
  CHECK(r.shellable == ShellabilityStatus::kShellable);
  CHECK(r.cohen_macaulay.at("Q"));
  CHECK(r.gorenstein.at("F2"));
  CHECK(r.generators == std::vector<std::string>{"x0*x1*x2"});
}

TEST_CASE("verify_bounds worked examples") {
  const ParsedInput tri = parse_text("n=3\n0,1\n1,2\n0,2\n");
  const BoundVerdict v = verify_bounds(tri.complex, kBothFields);
  CHECK(v.id == "01|02|12");
  CHECK(v.r_index == 2);
  CHECK(v.krull_dim == 2);
  CHECK(v.r_le_dim == Verdict::kHolds);
  CHECK(v.r_le_reg_if_shellable == Verdict::kHolds);
  CHECK(v.r_le_reg_if_gorenstein == Verdict::kHolds);
  CHECK(v.delta_nonincreasing == Verdict::kHolds);
  CHECK_FALSE(v.conjecture_violator);

  // I = (x0*x1) in three variables: r = 1, reg = 1, dim = 2.
  const ParsedInput edge = parse_text("n=3\nideal\n0,1\n");
  const BoundVerdict ve = verify_bounds(edge.complex, kBothFields);
  CHECK(ve.r_index == 1);
  CHECK(ve.krull_dim == 2);
  CHECK(ve.regularity.at("Q") == 1);
  CHECK(ve.r_le_dim == Verdict::kHolds);

  // Mixed: reg bounds not applicable (neither shellable nor Gorenstein).
  const ParsedInput mixed = parse_text("n=3\nideal\n0,1\n0,2\n");
  const BoundVerdict vm = verify_bounds(mixed.complex, kBothFields);
  CHECK(vm.r_index == 1);
  CHECK(vm.krull_dim == 2);
  CHECK(vm.r_le_dim == Verdict::kHolds);
  CHECK(vm.r_le_reg_if_shellable == Verdict::kNotApplicable);
  CHECK(vm.r_le_reg_if_gorenstein == Verdict::kNotApplicable);
}

TEST_CASE("sweeps are deterministic byte for byte") {
  SweepConfig cfg;
  cfg.n_min = cfg.n_max = 5;
  cfg.mode = SweepMode::kRandom;
  cfg.samples = 40;
  cfg.seed = 20240101;
  cfg.fields = kBothFields;
  const std::string a = to_json(run_sweep(cfg));
  const std::string b = to_json(run_sweep(cfg));
  REQUIRE(a == b);

  SweepConfig other = cfg;
  other.seed = 20240102;
  CHECK(to_json(run_sweep(other)) != a);
}

TEST_CASE("sweep bytes do not depend on the worker count") {
  SweepConfig cfg;
  cfg.n_min = cfg.n_max = 5;
  cfg.mode = SweepMode::kRandom;
  cfg.samples = 30;
  cfg.seed = 7;
  setenv("SRDELTA_THREADS", "1", 1);
  const std::string single = to_json(run_sweep(cfg));
  setenv("SRDELTA_THREADS", "4", 1);
  const std::string parallel = to_json(run_sweep(cfg));
  unsetenv("SRDELTA_THREADS");
  REQUIRE(single == parallel);
}

TEST_CASE("exhaustive sweep over n=4 finds no violations") {
  SweepConfig cfg;
  cfg.n_min = 2;
  cfg.n_max = 4;
  cfg.mode = SweepMode::kExhaustive;
  cfg.fields = kBothFields;
  const SweepReport report = run_sweep(cfg);
  CHECK(report.complexes == 1 + 4 + 19);
  for (const BoundVerdict& v : report.verdicts) {
    CHECK_FALSE(v.theorem_violated());
    CHECK(v.delta_nonincreasing == Verdict::kHolds);
  }
}

TEST_CASE("json reports carry the schema version and key fields") {
  const ParsedInput tri = parse_text("n=3\n0,1\n1,2\n0,2\n");
  const std::string inv =
      to_json(compute_invariants(tri.complex, kBothFields));
  CHECK(inv.find("\"schema_version\": 1") != std::string::npos);
  CHECK(inv.find("\"krull_dim\": 2") != std::string::npos);

  const std::string verdict = to_json(verify_bounds(tri.complex, kBothFields));
  CHECK(verdict.find("\"r_le_dim\": \"holds\"") != std::string::npos);

  const std::string profile =
      to_json(delta_profile(tri.ideal, 3));
  CHECK(profile.find("\"r_index\": 2") != std::string::npos);
  CHECK(profile.find("\"method\": \"monomial-search\"") != std::string::npos);
}
