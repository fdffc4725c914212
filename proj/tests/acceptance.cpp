// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <deque>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "weyr/io.hpp"
#include "weyr/suite.hpp"

using namespace weyr;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

SuiteConfig config(std::size_t trials, std::uint64_t seed, std::size_t max_dim = 6) {
  SuiteConfig c;
  c.trials = trials;
  c.seed = seed;
  c.max_dim = max_dim;
  return c;
}

std::string counts(const VerificationReport& r) {
  std::string s = std::to_string(r.trials) + " trials, " + std::to_string(r.passed) + " passed, " +
                  std::to_string(r.failed) + " failed, " + std::to_string(r.skipped) + " skipped";
  if (!r.failures.empty()) s += "; first failure: " + r.failures[0].check + " " + r.failures[0].detail;
  return s;
}

bool clean(const VerificationReport& r) { return r.failed == 0 && r.skipped == 0 && r.passed == r.trials; }

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = GaussianRational(1);
  return v;
}

std::deque<VerificationReport> produced;

const VerificationReport& keep(VerificationReport r) {
  produced.push_back(std::move(r));
  return produced.back();
}

}  // namespace

int main() {
  constexpr std::uint64_t kSeed = 20240607;
  std::optional<VerificationReport> bounds_report;

  const std::vector<Criterion> criteria = {
      {1, "off-side example reproduced exactly", 1.0,
       [] {
         const OperatorPencil z(Matrix::zero(2, 2), Matrix::zero(2, 2));
         const PerturbationSpec su = PerturbationSpec::make_type_u(unit(2, 0), unit(2, 0), unit(2, 1));
         const PerturbationSpec sv = PerturbationSpec::make_type_v(unit(2, 0), unit(2, 1), unit(2, 0));
         const Subspace range_side = range_representation(apply_perturbation(z, su)).span();
         const Subspace kernel_side = kernel_representation(apply_perturbation(z, sv)).span();
         const bool r_ok = range_side == Subspace::span(4, std::vector<Vector>{unit(4, 0), unit(4, 2)});
         const bool k_ok = kernel_side == Subspace::span(4, std::vector<Vector>{unit(4, 1), unit(4, 3)});
         const std::size_t du = relation_distance(range_representation(z), range_representation(apply_perturbation(z, su)));
         const std::size_t dv = relation_distance(kernel_representation(z), kernel_representation(apply_perturbation(z, sv)));
         return Outcome{r_ok && k_ok && du == 2 && dv == 2,
                        std::string("range side ") + (r_ok ? "matches" : "differs") + ", kernel side " +
                            (k_ok ? "matches" : "differs") + ", distances " + std::to_string(du) + "/" +
                            std::to_string(dv)};
       }},
      {2, "resolvent representations of graph relations", 30.0,
       [] {
         const auto& r = keep(run_suite("resolvent_representation", config(200, kSeed, 5)));
         return Outcome{clean(r), counts(r)};
       }},
      {3, "pencil kernel/range identities, resolvent forms, dimensions", 120.0,
       [] {
         const auto& r = keep(run_suite("pencil_identities", config(300, kSeed, 6)));
         return Outcome{clean(r), counts(r) + ", " + std::to_string(r.checks_run) + " identity checks"};
       }},
      {4, "point spectra of representations equal pencil spectrum", 120.0,
       [] {
         const auto& r = keep(run_suite("spectrum_equality", config(200, kSeed, 6)));
         return Outcome{clean(r), counts(r)};
       }},
      {5, "Weyr tables of pencil and both representations coincide", 300.0,
       [] {
         const auto& r = keep(run_suite("weyr_equality", config(300, kSeed, 6)));
         return Outcome{clean(r), counts(r) + ", " + std::to_string(r.weyr_tables_checked) + " tables"};
       }},
      {6, "singular chain subspace is the pairwise root intersection", 120.0,
       [] {
         const auto& r = keep(run_suite("singular_subspace", config(200, kSeed, 4)));
         return Outcome{clean(r), counts(r) + ", " + std::to_string(r.checks_run) + " subspace checks"};
       }},
      {7, "rank-one perturbations change Weyr indices by at most one", 300.0,
       [&bounds_report] {
         bounds_report = run_suite("perturbation_bounds", config(1000, kSeed, 6));
         const auto& r = keep(*bounds_report);
         const bool ok = clean(r) && r.nonzero_delta_trials >= 50;
         return Outcome{ok, counts(r) + ", " + std::to_string(r.nonzero_delta_trials) + " with nonzero delta, " +
                                std::to_string(r.unchecked_irrational) + " shared irrational degrees"};
       }},
      {8, "matching-side distance at most one; off-side case reaches two", 120.0,
       [&bounds_report] {
         std::size_t distance_failures = 0;
         if (bounds_report)
           for (const auto& f : bounds_report->failures)
             if (f.check == "matching_side_distance") ++distance_failures;
         const auto& singular = keep(run_suite("rank_one_distance", config(1000, kSeed, 6)));
         const auto& off = keep(run_suite("off_side_example", config(1, kSeed)));
         const bool ok = bounds_report && clean(*bounds_report) && distance_failures == 0 && clean(singular) && clean(off);
         return Outcome{ok, "1000 regular trials with " + std::to_string(distance_failures) +
                                " distance failures; arbitrary pencils: " + counts(singular) + "; off-side example " +
                                (clean(off) ? "distance 2" : "FAILED")};
       }},
      {9, "every Weyr table is non-increasing", 1.0,
       [] {
         std::size_t tables = 0, bad = 0;
         for (const auto& r : produced) {
           tables += r.weyr_tables_checked;
           bad += r.monotonicity_violations;
         }
         return Outcome{tables > 0 && bad == 0, std::to_string(tables) + " tables, " + std::to_string(bad) + " violations"};
       }},
      {10, "repeated bounds run is byte-identical", 300.0,
       [&bounds_report] {
         if (!bounds_report) return Outcome{false, "criterion 7 did not run"};
         SuiteConfig c = config(1000, kSeed, 6);
         c.threads = 1;
         const std::string first = report_to_json(*bounds_report, false).dump();
         const std::string again = report_to_json(run_suite("perturbation_bounds", c), false).dump();
         return Outcome{first == again, std::to_string(first.size()) + " bytes, " + (first == again ? "identical" : "different")};
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::printf("[%s] criterion %d: %s (%s; %.2fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), secs, c.limit_s, in_time ? "" : ", TOO SLOW");
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
