#include <gtest/gtest.h>

#include "test_support.hpp"
#include "weyr/error.hpp"

using namespace weyr;
using namespace weyr::testing;

namespace {

SuiteConfig config(std::size_t trials, std::uint64_t seed, unsigned threads = 1) {
  SuiteConfig c;
  c.trials = trials;
  c.seed = seed;
  c.threads = threads;
  return c;
}

}  // namespace

TEST(Suite, EverySuitePassesASmallRun) {
  for (const auto& name : suite_names()) {
    const VerificationReport r = run_suite(name, config(15, 3));
    EXPECT_EQ(r.failed, 0u) << name << ": " << (r.failures.empty() ? "" : r.failures[0].check + " " + r.failures[0].detail);
    EXPECT_EQ(r.failed, r.failures.size());
    EXPECT_EQ(r.passed + r.failed + r.skipped, r.trials);
    EXPECT_GT(r.checks_run, 0u) << name;
  }
}

TEST(Suite, EmptyRunAndUnknownName) {
  const VerificationReport r = run_suite("perturbation_bounds", config(0, 1));
  EXPECT_EQ(r.trials, 0u);
  EXPECT_EQ(r.failed, 0u);
  EXPECT_THROW(run_suite("no_such_suite", config(1, 1)), ParseError);
}

TEST(Suite, WeyrEqualityExample) {
  const VerificationReport r = run_suite("weyr_equality", config(100, 42, 0));
  EXPECT_EQ(r.failed, 0u);
  EXPECT_EQ(r.monotonicity_violations, 0u);
}

TEST(Suite, RelationBoundsHoldOverManyTrials) {
  const VerificationReport r = run_suite("relation_bounds", config(300, 77, 0));
  EXPECT_EQ(r.failed, 0u) << (r.failures.empty() ? "" : r.failures[0].check + " " + r.failures[0].detail);
  EXPECT_EQ(r.skipped, 0u);
  EXPECT_GT(r.nonzero_delta_trials, 0u);
  EXPECT_EQ(r.monotonicity_violations, 0u);
}

TEST(Suite, DeterministicAcrossThreadCounts) {
  for (const char* name : {"perturbation_bounds", "singular_subspace", "relation_bounds"}) {
    const std::string a = report_to_json(run_suite(name, config(40, 9, 1)), false).dump();
    const std::string b = report_to_json(run_suite(name, config(40, 9, 4)), false).dump();
    const std::string c = report_to_json(run_suite(name, config(40, 10, 4)), false).dump();
    EXPECT_EQ(a, b) << name;
    EXPECT_NE(a, c) << name;
  }
}

TEST(Suite, ReportSchema) {
  const Json j = report_to_json(run_suite("off_side_example", config(5, 1)));
  for (const char* key : {"suite", "seed", "config", "trials", "passed", "failed", "failures", "elapsed_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["trials"], 1);
  EXPECT_FALSE(report_to_json(run_suite("off_side_example", config(5, 1)), false).contains("elapsed_ms"));
}

TEST(Suite, TrialSeedsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t id = 0; id < 1000; ++id) seen.insert(trial_seed(7, id));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(trial_seed(7, 0), trial_seed(8, 0));
}

TEST(Suite, RandomTrialIsReproducible) {
  const SuiteConfig c = config(1, 77);
  const TrialResult a = random_trial(c, 5, PerturbationKind::type_u);
  const TrialResult b = random_trial(c, 5, PerturbationKind::type_u);
  ASSERT_TRUE(a.base && b.base);
  EXPECT_EQ(*a.base, *b.base);
  EXPECT_EQ(*a.perturbed, *b.perturbed);
  EXPECT_TRUE(a.passed());
  ASSERT_TRUE(a.distance.has_value());
  EXPECT_LE(*a.distance, 1u);
}

TEST(Suite, RandomCanonicalSpecsRespectBounds) {
  std::mt19937_64 rng(1);
  std::size_t repeated = 0;
  for (int t = 0; t < 200; ++t) {
    const CanonicalSpec s = random_canonical_spec(rng, 6);
    EXPECT_GE(s.dimension(), 1u);
    EXPECT_LE(s.dimension(), 6u);
    std::set<Q> ev;
    for (const auto& b : s.finite_blocks) ev.insert(b.eigenvalue);
    if (ev.size() < s.finite_blocks.size()) ++repeated;
  }
  EXPECT_GT(repeated, 20u);
}

TEST(Shrink, ReducesToMinimalFailingCase) {
  PerturbationCase c;
  c.spec = CanonicalSpec::parse("3@1/1,2@inf,2@0/1");
  const std::size_t n = c.spec.dimension();
  std::mt19937_64 rng(3);
  c.s_mat = random_unimodular(n, 2, rng);
  c.t_mat = random_unimodular(n, 2, rng);
  c.perturbation = PerturbationSpec::make_type_u(random_int_vector(rng, n), random_int_vector(rng, n),
                                                  random_int_vector(rng, n));
  c.perturbation.u[0] = Q(1);
  // Artificial failure predicate: "u has a nonzero first entry".
  const auto fails = [](const PerturbationCase& x) { return !x.perturbation.u.empty() && !x.perturbation.u[0].is_zero(); };
  const PerturbationCase s = shrink_case(c, fails);
  EXPECT_TRUE(fails(s));
  EXPECT_EQ(s.spec.dimension(), 1u);
  EXPECT_EQ(s.s_mat, Matrix::identity(1));
  EXPECT_EQ(s.t_mat, Matrix::identity(1));
  EXPECT_TRUE(s.perturbation.v_func[0].is_zero());
  EXPECT_TRUE(s.perturbation.w_func->at(0).is_zero());
}

TEST(Shrink, KeepsCaseWhenNothingSmallerFails) {
  PerturbationCase c;
  c.spec = CanonicalSpec::parse("2@0/1");
  c.s_mat = Matrix::identity(2);
  c.t_mat = Matrix::identity(2);
  c.perturbation = PerturbationSpec::make_type_v(e(2, 0), e(2, 1), e(2, 1));
  const auto fails = [&](const PerturbationCase& x) { return x == c; };
  EXPECT_EQ(shrink_case(c, fails).spec, c.spec);
}
