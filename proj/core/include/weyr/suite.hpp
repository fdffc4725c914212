#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "weyr/io.hpp"
#include "weyr/perturb.hpp"

namespace weyr {

struct SuiteConfig {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t max_dim = 6;
  /// Bound on entries of the random equivalence matrices.
  long entry_bound = 3;
  /// Redraws allowed per trial when a draw violates a hypothesis (e.g. regularity).
  std::size_t retry_cap = 50;
  /// 0 = one worker per hardware thread.
  unsigned threads = 0;
};

struct FailureRecord {
  std::uint64_t trial_id = 0;
  std::string check;
  std::optional<OperatorPencil> base;
  std::optional<OperatorPencil> perturbed;
  std::optional<ExtendedScalar> point;
  std::size_t k = 0;
  long w_base = 0;
  long w_pert = 0;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  SuiteConfig config;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Trials whose redraw budget ran out; neither passed nor failed.
  std::size_t skipped = 0;
  std::size_t nonzero_delta_trials = 0;
  std::size_t weyr_tables_checked = 0;
  std::size_t monotonicity_violations = 0;
  std::size_t unchecked_irrational = 0;
  std::size_t checks_run = 0;
  /// One entry per failed trial, shrunk where the suite supports shrinking.
  std::vector<FailureRecord> failures;
  double elapsed_ms = 0;
};

/// Names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one suite. Deterministic in (name, config) apart from elapsed_ms,
/// independent of the thread count. Throws ParseError for an unknown name.
VerificationReport run_suite(const std::string& name, const SuiteConfig& config);

Json report_to_json(const VerificationReport& r, bool include_elapsed = true);

/// Per-trial seed derived from the master seed by a splitmix64 counter.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial_id);

/// Random Weierstrass structure of dimension 1..max_dim with eigenvalues from a
/// small Q(i) pool (repeats are likely, so nontrivial Jordan structure is common).
CanonicalSpec random_canonical_spec(std::mt19937_64& rng, std::size_t max_dim);

/// A reproducible perturbation experiment: base = S·canonical·T, plus rank-one data.
struct PerturbationCase {
  CanonicalSpec spec;
  Matrix s_mat;
  Matrix t_mat;
  PerturbationSpec perturbation;

  OperatorPencil base() const;
  OperatorPencil perturbed() const;

  friend bool operator==(const PerturbationCase&, const PerturbationCase&) = default;
};

/// Draws a case whose perturbed pencil is regular; nullopt after retry_cap redraws.
std::optional<PerturbationCase> random_perturbation_case(const SuiteConfig& config, std::mt19937_64& rng,
                                                         PerturbationKind kind);

/// Weyr-bound check plus the matching-side distance check for one case.
TrialResult evaluate_case(const PerturbationCase& c, std::uint64_t trial_id = 0);

/// One randomized perturbation trial, seeded from (config.seed, trial_id).
/// Returns a result with no pencils if the redraw budget ran out.
TrialResult random_trial(const SuiteConfig& config, std::uint64_t trial_id, PerturbationKind kind);

/// Greedy deterministic shrinking: zero perturbation entries one at a time,
/// drop the equivalence, then shrink blocks, keeping each step only while
/// `fails` still holds.
PerturbationCase shrink_case(PerturbationCase c, const std::function<bool(const PerturbationCase&)>& fails);

}  // namespace weyr
