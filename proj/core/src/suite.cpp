#include "weyr/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <set>
#include <thread>

#include "weyr/error.hpp"

namespace weyr {

namespace {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

const std::vector<GaussianRational>& eigenvalue_pool() {
  static const std::vector<GaussianRational> pool = {
      GaussianRational(0),
      GaussianRational(1),
      GaussianRational(-1),
      GaussianRational(2),
      GaussianRational::ratio(1, 2),
      GaussianRational::i(),
      GaussianRational(1) - GaussianRational::i(),
  };
  return pool;
}

GaussianRational small_scalar(Rng& rng) {
  const long kind = uniform(rng, 0, 9);
  if (kind < 6) return GaussianRational(uniform(rng, -3, 3));
  if (kind < 8) return GaussianRational::ratio(uniform(rng, -3, 3), 2);
  return GaussianRational(mpq_class(uniform(rng, -2, 2)), mpq_class(uniform(rng, -2, 2)));
}

GaussianRational sparse_entry(Rng& rng, double zero_prob) {
  if (coin(rng, zero_prob)) return GaussianRational(0);
  return GaussianRational(uniform(rng, -2, 2));
}

Vector random_vector(Rng& rng, std::size_t n, double zero_prob) {
  Vector v(n);
  for (auto& x : v) x = sparse_entry(rng, zero_prob);
  return v;
}

Vector nonzero_vector(Rng& rng, std::size_t n, double zero_prob) {
  Vector v = random_vector(rng, n, zero_prob);
  if (n > 0 && std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_zero(); }))
    v[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))] = GaussianRational(1);
  return v;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double zero_prob) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = sparse_entry(rng, zero_prob);
  return m;
}

/// Product of random n×r and r×n factors, so rank <= r.
Matrix random_low_rank(Rng& rng, std::size_t n, std::size_t r) {
  if (r == 0) return Matrix::zero(n, n);
  return random_matrix(rng, n, r, 0.3) * random_matrix(rng, r, n, 0.3);
}

std::size_t dim_in(Rng& rng, std::size_t max_dim, std::size_t cap) {
  return static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(std::max<std::size_t>(1, std::min(max_dim, cap)))));
}

struct GeneratedPencil {
  OperatorPencil pencil;
  std::optional<CanonicalSpec> spec;
};

OperatorPencil planted_pencil(const SuiteConfig& config, Rng& rng, const CanonicalSpec& spec) {
  const std::size_t n = spec.dimension();
  const Matrix s = random_unimodular(n, config.entry_bound, rng);
  const Matrix t = random_unimodular(n, config.entry_bound, rng);
  return apply_equivalence(from_canonical(spec), s, t);
}

/// Half canonical-plus-equivalence, half unstructured (rank-deficient E allowed).
std::optional<GeneratedPencil> random_regular_pencil(const SuiteConfig& config, Rng& rng, std::size_t cap) {
  if (coin(rng, 0.5)) {
    CanonicalSpec spec = random_canonical_spec(rng, std::min(config.max_dim, cap));
    return GeneratedPencil{planted_pencil(config, rng, spec), std::move(spec)};
  }
  const std::size_t n = dim_in(rng, config.max_dim, cap);
  for (std::size_t attempt = 0; attempt <= config.retry_cap; ++attempt) {
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n)));
    OperatorPencil p(random_low_rank(rng, n, r), random_matrix(rng, n, n, 0.4));
    if (is_regular(p)) return GeneratedPencil{std::move(p), std::nullopt};
  }
  return std::nullopt;
}

std::optional<GaussianRational> find_resolvent_point(const OperatorPencil& p, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const GaussianRational mu = small_scalar(rng);
    if (resolvent_point(p, ExtendedScalar(mu))) return mu;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Per-trial bookkeeping

struct TrialOutcome {
  bool skipped = false;
  std::size_t checks = 0;
  std::size_t weyr_tables = 0;
  std::size_t monotonicity_violations = 0;
  std::size_t unchecked_irrational = 0;
  bool nonzero_delta = false;
  std::optional<FailureRecord> failure;
  std::size_t extra_violations = 0;
};

struct Recorder {
  std::uint64_t trial_id;
  TrialOutcome& out;
  std::optional<OperatorPencil> base;
  std::optional<OperatorPencil> perturbed;

  void fail(const std::string& check, const std::string& detail, std::optional<ExtendedScalar> point = std::nullopt,
            std::size_t k = 0, long wb = 0, long wp = 0) {
    if (out.failure) {
      ++out.extra_violations;
      return;
    }
    out.failure = FailureRecord{trial_id, check, base, perturbed, std::move(point), k, wb, wp, detail};
  }

  void expect(bool ok, const std::string& check, const std::string& detail = {},
              std::optional<ExtendedScalar> point = std::nullopt) {
    ++out.checks;
    if (!ok) fail(check, detail, std::move(point));
  }

  void table(const WeyrTable& t) {
    ++out.weyr_tables;
    if (!t.is_non_increasing()) {
      ++out.monotonicity_violations;
      fail("monotonicity", "indices not non-increasing", t.at);
    }
  }
};

using TrialFn = std::function<void(Recorder&, Rng&)>;

VerificationReport run_trials(const std::string& name, const SuiteConfig& config, std::size_t trials,
                              const TrialFn& fn) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(trials);

  auto run_one = [&](std::size_t id) {
    TrialOutcome& o = outcomes[id];
    Recorder rec{id, o, std::nullopt, std::nullopt};
    Rng rng(trial_seed(config.seed, id));
    try {
      fn(rec, rng);
    } catch (const std::exception& e) {
      rec.fail("exception", e.what());
    }
  };

  unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, trials));
  if (workers <= 1) {
    for (std::size_t id = 0; id < trials; ++id) run_one(id);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t id = next++; id < trials; id = next++) run_one(id);
      });
    for (auto& t : pool) t.join();
  }

  VerificationReport r;
  r.suite = name;
  r.seed = config.seed;
  r.config = config;
  r.trials = trials;
  for (auto& o : outcomes) {
    r.checks_run += o.checks;
    r.weyr_tables_checked += o.weyr_tables;
    r.monotonicity_violations += o.monotonicity_violations;
    r.unchecked_irrational += o.unchecked_irrational;
    if (o.nonzero_delta) ++r.nonzero_delta_trials;
    if (o.failure) {
      ++r.failed;
      if (o.extra_violations > 0)
        o.failure->detail += " (+" + std::to_string(o.extra_violations) + " more violations)";
      r.failures.push_back(std::move(*o.failure));
    } else if (o.skipped) {
      ++r.skipped;
    } else {
      ++r.passed;
    }
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string describe(const Subspace& s) { return "dim " + std::to_string(s.dim()); }

// ---------------------------------------------------------------------------
// Suites

void trial_resolvent_representation(const SuiteConfig& config, Recorder& rec, Rng& rng) {
  const std::size_t n = dim_in(rng, config.max_dim, 5);
  const LinearRelation l = LinearRelation::from_graph(random_matrix(rng, n, n, 0.4));
  std::optional<GaussianRational> mu;
  for (int attempt = 0; attempt < 64 && !mu; ++attempt) {
    const GaussianRational c = small_scalar(rng);
    if (is_resolvent_point(l, ExtendedScalar(c))) mu = c;
  }
  if (!mu) {
    rec.out.skipped = true;
    return;
  }
  const GaussianRational lam = coin(rng, 0.1) ? *mu : small_scalar(rng);
  const ResolventRepresentations reps = resolvent_representations(l, *mu, lam);
  const LinearRelation expected = shift(l, lam);
  rec.expect(reps.via_range == expected, "via_range", "ran form differs from L - lambda", ExtendedScalar(lam));
  rec.expect(reps.via_kernel == expected, "via_kernel", "ker form differs from L - lambda", ExtendedScalar(lam));
}

void trial_pencil_identities(const SuiteConfig& config, Recorder& rec, Rng& rng) {
  auto g = random_regular_pencil(config, rng, 6);
  if (!g) {
    rec.out.skipped = true;
    return;
  }
  const OperatorPencil& p = g->pencil;
  rec.base = p;
  const std::size_t n = p.n();
  const auto mu = find_resolvent_point(p, rng);
  if (!mu) {
    rec.out.skipped = true;
    return;
  }
  GaussianRational lam = small_scalar(rng);
  if (coin(rng, 0.5)) {
    const SpectrumReport s = spectrum(p);
    if (!s.finite_eigenvalues.empty())
      lam = s.finite_eigenvalues[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(s.finite_eigenvalues.size()) - 1))].root;
  }
  const ExtendedScalar plam(lam);

  const LinearRelation kr = kernel_representation(p);
  const LinearRelation rr = range_representation(p);
  const LinearRelation kr_l = shift(kr, lam);
  const LinearRelation rr_l = shift(rr, lam);
  const Matrix pencil_at = p.at(plam);
  const Matrix a_mu = p.a() - *mu * p.e();
  const Subspace ker_pl = null_space(pencil_at);
  const Subspace ran_pl = column_space(pencil_at);

  rec.expect(kernel(kr_l) == ker_pl, "ker_kernel_rep", describe(kernel(kr_l)) + " vs " + describe(ker_pl), plam);
  rec.expect(kernel(rr_l) == map_image(a_mu, ker_pl), "ker_range_rep", {}, plam);
  rec.expect(range_of(rr_l) == ran_pl, "ran_range_rep", {}, plam);
  rec.expect(range_of(kr_l) == map_preimage(a_mu, ran_pl), "ran_kernel_rep", {}, plam);
  rec.expect(mul_part(kr) == null_space(p.e()), "mul_kernel_rep");
  rec.expect(domain(kr) == map_preimage(a_mu, column_space(p.e())), "dom_kernel_rep");
  rec.expect(mul_part(rr) == map_image(p.a(), null_space(p.e())), "mul_range_rep");
  rec.expect(domain(rr) == column_space(p.e()), "dom_range_rep");

  rec.expect(resolvent_form_range(p, *mu, lam) == rr_l, "resolvent_form_range", {}, plam);
  rec.expect(resolvent_form_kernel(p, *mu, lam) == kr_l, "resolvent_form_kernel", {}, plam);

  // Dimension agreement at λ and at ∞ (kernel of E, multivalued parts).
  const FredholmData f = fredholm_data(p, plam);
  rec.expect(kernel(kr_l).dim() == f.dim_ker && kernel(rr_l).dim() == f.dim_ker, "dim_ker", {}, plam);
  rec.expect(n - range_of(kr_l).dim() == f.codim_ran && n - range_of(rr_l).dim() == f.codim_ran, "codim_ran", {},
             plam);
  const ExtendedScalar inf = ExtendedScalar::infinity();
  const FredholmData fi = fredholm_data(p, inf);
  rec.expect(mul_part(kr).dim() == fi.dim_ker && mul_part(rr).dim() == fi.dim_ker, "dim_ker_inf", {}, inf);
  rec.expect(n - domain(kr).dim() == fi.codim_ran && n - domain(rr).dim() == fi.codim_ran, "codim_ran_inf", {}, inf);
}

void trial_spectrum_equality(const SuiteConfig& config, Recorder& rec, Rng& rng) {
  auto g = random_regular_pencil(config, rng, 6);
  if (!g) {
    rec.out.skipped = true;
    return;
  }
  const OperatorPencil& p = g->pencil;
  rec.base = p;
  const SpectrumReport s = spectrum(p);
  std::vector<GaussianRational> expected;
  for (const auto& e : s.finite_eigenvalues) expected.push_back(e.root);
  std::sort(expected.begin(), expected.end());
  const Polynomial residual = s.residual.degree() < 0 ? s.residual : s.residual.monic();

  for (const auto& [label, rel] : {std::pair{"kernel_rep", kernel_representation(p)},
                                   std::pair{"range_rep", range_representation(p)}}) {
    const PointSpectrum ps = point_spectrum(rel);
    rec.expect(ps.finite == expected, std::string("finite_") + label);
    rec.expect(ps.infinity == s.has_infinity, std::string("infinity_") + label);
    rec.expect(ps.residual == residual, std::string("residual_") + label,
               ps.residual.to_string() + " vs " + residual.to_string());
  }
  if (g->spec) {
    std::vector<GaussianRational> planted;
    bool planted_inf = false;
    for (const auto& pt : g->spec->planted_points()) {
      if (pt.is_infinity())
        planted_inf = true;
      else
        planted.push_back(pt.value());
    }
    rec.expect(planted == expected && planted_inf == s.has_infinity, "planted_spectrum");
  }
}

void trial_weyr_equality(const SuiteConfig& config, Recorder& rec, Rng& rng) {
  const CanonicalSpec spec = random_canonical_spec(rng, config.max_dim);
  const OperatorPencil p = planted_pencil(config, rng, spec);
  rec.base = p;
  const LinearRelation kr = kernel_representation(p);
  const LinearRelation rr = range_representation(p);

  std::vector<ExtendedScalar> points = spec.planted_points();
  if (points.empty() || !points.back().is_infinity()) points.push_back(ExtendedScalar::infinity());
  points.emplace_back(GaussianRational(3));

  for (const auto& pt : points) {
    const WeyrTable tp = pencil_weyr_table(p, pt);
    const WeyrTable tk = weyr_table(kr, pt);
    const WeyrTable tr = weyr_table(rr, pt);
    const WeyrTable planted = spec.planted_weyr(pt);
    for (const WeyrTable* t : {&tp, &tk, &tr}) rec.table(*t);
    rec.expect(tp.indices == tk.indices, "weyr_pencil_vs_kernel_rep", {}, pt);
    rec.expect(tp.indices == tr.indices, "weyr_pencil_vs_range_rep", {}, pt);
    rec.expect(tp.indices == planted.indices, "weyr_pencil_vs_planted", {}, pt);

    const Matrix& image_map = pt.is_infinity() ? p.a() : p.e();
    for (std::size_t k = 1; k <= tp.indices.size() + 1; ++k) {
      const Subspace chain = pencil_root_subspace(p, pt, k);
      const Subspace ker_side = root_subspace(kr, pt, k);
      rec.expect(chain == ker_side, "root_subspace_chain_vs_power", "k=" + std::to_string(k), pt);
      rec.expect(root_subspace(rr, pt, k) == map_image(image_map, ker_side), "root_subspace_range_image",
                 "k=" + std::to_string(k), pt);
    }
  }
}

LinearRelation random_relation(const SuiteConfig& config, Rng& rng) {
  const std::size_t n = dim_in(rng, config.max_dim, 4);
  const long mode = uniform(rng, 0, 9);
  if (mode < 2) {
    auto g = random_regular_pencil(config, rng, 4);
    if (g) return coin(rng, 0.5) ? kernel_representation(g->pencil) : range_representation(g->pencil);
  }
  const std::size_t d = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(2 * n)));
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < d; ++i) vecs.push_back(random_vector(rng, 2 * n, 0.55));
  if (mode < 4 && n > 0) {
    // Plant a singular chain: x with (x, 0) and (0, x) both in the relation.
    const Vector x = nonzero_vector(rng, n, 0.3);
    Vector a(2 * n), b(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = x[i];
      b[n + i] = x[i];
    }
    vecs.push_back(a);
    vecs.push_back(b);
  }
  return {n, n, Subspace::span(2 * n, vecs)};
}

void trial_singular_subspace(const SuiteConfig& config, Recorder& rec, Rng& rng) {
  const LinearRelation l = random_relation(config, rng);
  const Subspace rc = singular_chain_space(l);
  const std::vector<ExtendedScalar> points = {ExtendedScalar(GaussianRational(0)), ExtendedScalar(GaussianRational(1)),
                                              ExtendedScalar(GaussianRational(-1)),
                                              ExtendedScalar(GaussianRational::i()), ExtendedScalar::infinity()};
  std::vector<Subspace> roots;
  for (const auto& pt : points) roots.push_back(stabilized_root_subspace(l, pt));
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      rec.expect(subspace_intersect(roots[a], roots[b]) == rc, "pairwise_intersection",
                 points[a].to_string() + " & " + points[b].to_string());

  const std::size_t n = l.dim_x();
  bool resolvent = is_resolvent_point(l, ExtendedScalar::infinity());
  if (!resolvent && l.dim() == n && !pencil_det_poly(l.top(), l.bottom()).is_zero()) resolvent = true;
  for (const auto& pt : points) resolvent = resolvent || is_resolvent_point(l, pt);
  if (resolvent) rec.expect(rc.is_zero(), "trivial_with_resolvent_point", describe(rc));
}

void record_perturbation_result(Recorder& rec, const TrialResult& r) {
  rec.out.weyr_tables += r.weyr_tables;
  rec.out.unchecked_irrational += r.unchecked_irrational;
  rec.out.nonzero_delta = rec.out.nonzero_delta || r.nonzero_delta;
  rec.out.checks += 1 + r.tables.size();
  for (const auto& v : r.violations) {
    if (v.check == "monotonicity") ++rec.out.monotonicity_violations;
    rec.fail(v.check, v.detail, v.point, v.k, v.w_base, v.w_pert);
  }
}

bool case_fails(const PerturbationCase& c) {
  try {
    const OperatorPencil pert = c.perturbed();
    if (!is_regular(pert)) return false;
    return !evaluate_case(c).passed();
  } catch (const std::exception&) {
    return false;
  }
}

void trial_perturbation_bounds(const SuiteConfig& config, Recorder& rec, Rng& rng, std::uint64_t id) {
  const PerturbationKind kind = id % 2 == 0 ? PerturbationKind::type_u : PerturbationKind::type_v;
  auto c = random_perturbation_case(config, rng, kind);
  if (!c) {
    rec.out.skipped = true;
    return;
  }
  TrialResult r = evaluate_case(*c, id);
  if (!r.passed()) {
    const PerturbationCase small = shrink_case(*c, case_fails);
    TrialResult shrunk = evaluate_case(small, id);
    if (!shrunk.passed()) {
      r.violations = shrunk.violations;
      r.base = shrunk.base;
      r.perturbed = shrunk.perturbed;
    }
  }
  rec.base = r.base;
  rec.perturbed = r.perturbed;
  record_perturbation_result(rec, r);
}

PerturbationSpec random_perturbation(Rng& rng, std::size_t n, PerturbationKind kind) {
  Vector u = random_vector(rng, n, 0.4);
  Vector v = random_vector(rng, n, 0.4);
  Vector w = random_vector(rng, n, 0.4);
  return kind == PerturbationKind::type_v ? PerturbationSpec::make_type_v(std::move(u), std::move(w), std::move(v))
                                          : PerturbationSpec::make_type_u(std::move(u), std::move(v), std::move(w));
}

void trial_rank_one_distance(const SuiteConfig& config, Recorder& rec, Rng& rng, std::uint64_t id) {
  const PerturbationKind kind = id % 2 == 0 ? PerturbationKind::type_u : PerturbationKind::type_v;
  const std::size_t n = dim_in(rng, config.max_dim, config.max_dim);
  OperatorPencil p = coin(rng, 0.5) ? OperatorPencil(random_low_rank(rng, n, static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n)))),
                                                     random_low_rank(rng, n, static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n)))))
                                    : planted_pencil(config, rng, random_canonical_spec(rng, config.max_dim));
  const PerturbationSpec s = random_perturbation(rng, p.n(), kind);
  rec.base = p;
  rec.perturbed = apply_perturbation(p, s);
  const DistanceCheck d = check_one_dimensional(p, s);
  rec.expect(d.pass, "matching_side_distance", "distance " + std::to_string(d.distance));
}

void trial_relation_bounds(const SuiteConfig& config, Recorder& rec, Rng& rng) {
  const CanonicalSpec spec = random_canonical_spec(rng, config.max_dim);
  const OperatorPencil p = planted_pencil(config, rng, spec);
  rec.base = p;
  const LinearRelation l = coin(rng, 0.5) ? kernel_representation(p) : range_representation(p);
  const std::size_t n = p.n();

  std::optional<LinearRelation> m;
  for (std::size_t attempt = 0; attempt <= config.retry_cap && !m; ++attempt) {
    const Vector f = nonzero_vector(rng, 2 * n, 0.4);
    const Subspace hyper = subspace_intersect(l.span(), null_space(Matrix(1, 2 * n, f)));
    const Vector v = random_vector(rng, 2 * n, 0.4);
    LinearRelation cand(n, n, subspace_sum(hyper, Subspace::span(2 * n, std::vector<Vector>{v})));
    if (singular_chain_space(cand).is_zero()) m = std::move(cand);
  }
  if (!m) {
    rec.out.skipped = true;
    return;
  }
  rec.expect(relation_distance(l, *m) <= 1, "construction_distance");

  std::set<ExtendedScalar> pts{ExtendedScalar::infinity()};
  for (const auto& pt : spec.planted_points()) pts.insert(pt);
  try {
    for (const auto& e : point_spectrum(*m).finite) pts.insert(ExtendedScalar(e));
  } catch (const PreconditionError&) {
  }
  for (const auto& pt : pts) {
    const WeyrTable tl = weyr_table(l, pt);
    const WeyrTable tm = weyr_table(*m, pt);
    rec.table(tl);
    rec.table(tm);
    const std::size_t kmax = std::max(tl.indices.size(), tm.indices.size());
    bool any = false;
    for (std::size_t k = 1; k <= kmax; ++k) {
      const long wl = static_cast<long>(tl.w(k));
      const long wm = static_cast<long>(tm.w(k));
      if (wl != wm) any = true;
      ++rec.out.checks;
      if (std::labs(wl - wm) > 1) rec.fail("weyr_index", "|Δw_k| > 1", pt, k, wl, wm);
    }
    rec.out.nonzero_delta = rec.out.nonzero_delta || any;
  }
}

void trial_off_side_example(Recorder& rec) {
  const OperatorPencil p(Matrix::zero(2, 2), Matrix::zero(2, 2));
  const Vector e1{GaussianRational(1), GaussianRational(0)};
  const Vector e2{GaussianRational(0), GaussianRational(1)};
  const PerturbationSpec su = PerturbationSpec::make_type_u(e1, e1, e2);
  const PerturbationSpec sv = PerturbationSpec::make_type_v(e1, e2, e1);
  rec.base = p;

  auto unit = [](std::size_t i) {
    Vector v(4);
    v[i] = GaussianRational(1);
    return v;
  };
  const Subspace range_side = range_representation(apply_perturbation(p, su)).span();
  const Subspace kernel_side = kernel_representation(apply_perturbation(p, sv)).span();
  rec.expect(range_side == Subspace::span(4, std::vector<Vector>{unit(0), unit(2)}), "range_side_relation");
  rec.expect(kernel_side == Subspace::span(4, std::vector<Vector>{unit(1), unit(3)}), "kernel_side_relation");
  const std::size_t du = off_side_distance(p, su);
  const std::size_t dv = off_side_distance(p, sv);
  rec.expect(du == 2, "off_side_distance_u", "distance " + std::to_string(du));
  rec.expect(dv == 2, "off_side_distance_v", "distance " + std::to_string(dv));
  rec.expect(check_one_dimensional(p, su).distance <= 1, "matching_side_distance_u");
  rec.expect(check_one_dimensional(p, sv).distance <= 1, "matching_side_distance_v");
}

Json failure_to_json(const FailureRecord& f) {
  Json j = {{"trial_id", f.trial_id}, {"check", f.check}};
  j["base"] = f.base ? pencil_to_json(*f.base) : Json(nullptr);
  j["perturbed"] = f.perturbed ? pencil_to_json(*f.perturbed) : Json(nullptr);
  j["point"] = f.point ? to_json(*f.point) : Json(nullptr);
  j["k"] = f.k;
  j["w_base"] = f.w_base;
  j["w_pert"] = f.w_pert;
  j["detail"] = f.detail;
  return j;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial_id) {
  return splitmix64(master ^ splitmix64(trial_id));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "resolvent_representation", "pencil_identities", "spectrum_equality",   "weyr_equality",  "singular_subspace",
      "perturbation_bounds",      "rank_one_distance", "relation_bounds",     "off_side_example",
  };
  return names;
}

CanonicalSpec random_canonical_spec(std::mt19937_64& rng, std::size_t max_dim) {
  const std::size_t n = dim_in(rng, max_dim, max_dim);
  CanonicalSpec spec;
  std::vector<GaussianRational> used;
  std::size_t remaining = n;
  while (remaining > 0) {
    const std::size_t size = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(std::min<std::size_t>(remaining, 3))));
    remaining -= size;
    if (coin(rng, 0.25)) {
      spec.infinite_blocks.push_back(size);
      continue;
    }
    GaussianRational ev;
    if (!used.empty() && coin(rng, 0.5)) {
      ev = used[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(used.size()) - 1))];
    } else {
      const auto& pool = eigenvalue_pool();
      ev = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))];
      used.push_back(ev);
    }
    spec.finite_blocks.push_back({ev, size});
  }
  return spec;
}

OperatorPencil PerturbationCase::base() const { return apply_equivalence(from_canonical(spec), s_mat, t_mat); }

OperatorPencil PerturbationCase::perturbed() const { return apply_perturbation(base(), perturbation); }

std::optional<PerturbationCase> random_perturbation_case(const SuiteConfig& config, std::mt19937_64& rng,
                                                         PerturbationKind kind) {
  CanonicalSpec spec = random_canonical_spec(rng, config.max_dim);
  const std::size_t n = spec.dimension();
  Matrix s = random_unimodular(n, config.entry_bound, rng);
  Matrix t = random_unimodular(n, config.entry_bound, rng);
  const OperatorPencil base = apply_equivalence(from_canonical(spec), s, t);
  for (std::size_t attempt = 0; attempt <= config.retry_cap; ++attempt) {
    PerturbationSpec pert = random_perturbation(rng, n, kind);
    if (is_regular(apply_perturbation(base, pert))) return PerturbationCase{std::move(spec), std::move(s), std::move(t), std::move(pert)};
  }
  return std::nullopt;
}

TrialResult evaluate_case(const PerturbationCase& c, std::uint64_t trial_id) {
  const OperatorPencil base = c.base();
  TrialResult r = weyr_delta_check(base, apply_perturbation(base, c.perturbation));
  r.trial_id = trial_id;
  const DistanceCheck d = check_one_dimensional(base, c.perturbation);
  r.distance = d.distance;
  if (!d.pass) r.violations.push_back({"matching_side_distance", std::nullopt, 0, 0, 0, "distance " + std::to_string(d.distance)});
  return r;
}

TrialResult random_trial(const SuiteConfig& config, std::uint64_t trial_id, PerturbationKind kind) {
  Rng rng(trial_seed(config.seed, trial_id));
  auto c = random_perturbation_case(config, rng, kind);
  if (!c) {
    TrialResult r;
    r.trial_id = trial_id;
    return r;
  }
  return evaluate_case(*c, trial_id);
}

namespace {

Vector drop_index(const Vector& v, std::size_t i) {
  Vector out = v;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

std::optional<Vector> drop_index(const std::optional<Vector>& v, std::size_t i) {
  if (!v) return std::nullopt;
  return drop_index(*v, i);
}

/// Every case obtained by shrinking one block by one (removing it at size 1).
std::vector<PerturbationCase> block_shrinks(const PerturbationCase& c) {
  std::vector<PerturbationCase> out;
  if (c.spec.dimension() <= 1) return out;
  std::size_t offset = 0;
  auto make = [&](CanonicalSpec spec, std::size_t coordinate) {
    const std::size_t n = spec.dimension();
    PerturbationSpec p = c.perturbation;
    p.u = drop_index(p.u, coordinate);
    p.v_func = drop_index(p.v_func, coordinate);
    p.w = drop_index(p.w, coordinate);
    p.w_func = drop_index(p.w_func, coordinate);
    out.push_back({std::move(spec), Matrix::identity(n), Matrix::identity(n), std::move(p)});
  };
  for (std::size_t b = 0; b < c.spec.finite_blocks.size(); ++b) {
    const std::size_t size = c.spec.finite_blocks[b].size;
    CanonicalSpec spec = c.spec;
    if (size == 1)
      spec.finite_blocks.erase(spec.finite_blocks.begin() + static_cast<std::ptrdiff_t>(b));
    else
      --spec.finite_blocks[b].size;
    make(std::move(spec), offset + size - 1);
    offset += size;
  }
  for (std::size_t b = 0; b < c.spec.infinite_blocks.size(); ++b) {
    const std::size_t size = c.spec.infinite_blocks[b];
    CanonicalSpec spec = c.spec;
    if (size == 1)
      spec.infinite_blocks.erase(spec.infinite_blocks.begin() + static_cast<std::ptrdiff_t>(b));
    else
      --spec.infinite_blocks[b];
    make(std::move(spec), offset + size - 1);
    offset += size;
  }
  return out;
}

}  // namespace

PerturbationCase shrink_case(PerturbationCase c, const std::function<bool(const PerturbationCase&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    auto slots = [](PerturbationSpec& p) {
      std::vector<Vector*> v{&p.u, &p.v_func};
      if (p.w) v.push_back(&*p.w);
      if (p.w_func) v.push_back(&*p.w_func);
      return v;
    };
    for (std::size_t s = 0; s < slots(c.perturbation).size(); ++s) {
      for (std::size_t i = 0; i < slots(c.perturbation)[s]->size(); ++i) {
        if ((*slots(c.perturbation)[s])[i].is_zero()) continue;
        PerturbationCase cand = c;
        (*slots(cand.perturbation)[s])[i] = GaussianRational(0);
        if (fails(cand)) {
          c = std::move(cand);
          progress = true;
        }
      }
    }
    const std::size_t n = c.spec.dimension();
    if (c.s_mat != Matrix::identity(n) || c.t_mat != Matrix::identity(n)) {
      PerturbationCase cand = c;
      cand.s_mat = Matrix::identity(n);
      cand.t_mat = Matrix::identity(n);
      if (fails(cand)) {
        c = std::move(cand);
        progress = true;
      }
    }
    if (c.s_mat == Matrix::identity(n) && c.t_mat == Matrix::identity(n)) {
      for (auto& cand : block_shrinks(c)) {
        if (fails(cand)) {
          c = std::move(cand);
          progress = true;
          break;
        }
      }
    }
  }
  return c;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "resolvent_representation")
    return run_trials(name, config, config.trials,
                      [&](Recorder& r, Rng& g) { trial_resolvent_representation(config, r, g); });
  if (name == "pencil_identities")
    return run_trials(name, config, config.trials, [&](Recorder& r, Rng& g) { trial_pencil_identities(config, r, g); });
  if (name == "spectrum_equality")
    return run_trials(name, config, config.trials, [&](Recorder& r, Rng& g) { trial_spectrum_equality(config, r, g); });
  if (name == "weyr_equality")
    return run_trials(name, config, config.trials, [&](Recorder& r, Rng& g) { trial_weyr_equality(config, r, g); });
  if (name == "singular_subspace")
    return run_trials(name, config, config.trials, [&](Recorder& r, Rng& g) { trial_singular_subspace(config, r, g); });
  if (name == "perturbation_bounds")
    return run_trials(name, config, config.trials,
                      [&](Recorder& r, Rng& g) { trial_perturbation_bounds(config, r, g, r.trial_id); });
  if (name == "rank_one_distance")
    return run_trials(name, config, config.trials,
                      [&](Recorder& r, Rng& g) { trial_rank_one_distance(config, r, g, r.trial_id); });
  if (name == "relation_bounds")
    return run_trials(name, config, config.trials, [&](Recorder& r, Rng& g) { trial_relation_bounds(config, r, g); });
  if (name == "off_side_example")
    return run_trials(name, config, std::min<std::size_t>(config.trials, 1),
                      [](Recorder& r, Rng&) { trial_off_side_example(r); });
  throw ParseError("unknown suite '" + name + "'");
}

Json report_to_json(const VerificationReport& r, bool include_elapsed) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(failure_to_json(f));
  Json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["config"] = {{"trials", r.config.trials},           {"max_dim", r.config.max_dim},
                 {"entry_bound", r.config.entry_bound}, {"retry_cap", r.config.retry_cap}};
  j["trials"] = r.trials;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["skipped"] = r.skipped;
  j["checks_run"] = r.checks_run;
  j["nonzero_delta_trials"] = r.nonzero_delta_trials;
  j["weyr_tables_checked"] = r.weyr_tables_checked;
  j["monotonicity_violations"] = r.monotonicity_violations;
  j["unchecked_irrational"] = r.unchecked_irrational;
  j["failures"] = std::move(failures);
  if (include_elapsed) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace weyr
