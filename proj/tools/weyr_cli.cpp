// weyr: spectral analysis and perturbation experiments for matrix pencils.
//
// Exit codes: 0 all checks pass, 1 a mathematical property is violated,
// 2 input or usage error.

#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <sstream>

#include "weyr/error.hpp"
#include "weyr/io.hpp"
#include "weyr/suite.hpp"

namespace {

using namespace weyr;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct Options {
  std::string pencil_path;
  std::string relation_path;
  std::string points;
  std::string format = "json";
  std::string mu;
  std::string lambda;
  std::string type;
  std::string u, w, vfunc, wfunc;
  std::string suite;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t max_dim = 6;
  long entry_bound = 3;
  unsigned threads = 0;
  std::string blocks;
  std::string out;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

std::string weyr_markdown(const std::vector<WeyrTable>& tables) {
  std::ostringstream md;
  for (const auto& t : tables) {
    md << "\n### λ = " << t.at.to_string() << "\n\n";
    if (t.indices.empty()) {
      md << "not an eigenvalue\n";
      continue;
    }
    md << "| k | w_k | dim R^k |\n|---|---|---|\n";
    for (std::size_t k = 1; k <= t.indices.size(); ++k) md << "| " << k << " | " << t.w(k) << " | " << t.root_dim(k) << " |\n";
  }
  return md.str();
}

std::vector<ExtendedScalar> evaluation_points(const SpectrumReport& s, const std::string& extra) {
  std::set<ExtendedScalar> pts{ExtendedScalar::infinity()};
  for (const auto& e : s.finite_eigenvalues) pts.insert(e.root);
  for (const auto& p : parse_points(extra)) pts.insert(p);
  return {pts.begin(), pts.end()};
}

OperatorPencil load_pencil(const std::string& path) { return pencil_from_json(read_json_file(path)); }

OperatorPencil require_regular(OperatorPencil p) {
  if (!is_regular(p)) throw PreconditionError("pencil is not regular (det(λE - A) vanishes identically)");
  return p;
}

int cmd_analyze(const Options& o) {
  const OperatorPencil p = require_regular(load_pencil(o.pencil_path));
  const SpectrumReport s = spectrum(p);
  std::vector<WeyrTable> tables;
  for (const auto& pt : evaluation_points(s, o.points)) tables.push_back(pencil_weyr_table(p, pt));

  if (o.format == "md") {
    std::ostringstream md;
    md << "# Pencil analysis (n = " << p.n() << ")\n\n";
    md << "det(λE - A) = " << p.det_poly().to_string() << "\n\n## Spectrum\n\n";
    for (const auto& e : s.finite_eigenvalues)
      md << "- " << e.root.to_string() << " (algebraic multiplicity " << e.multiplicity << ")\n";
    if (s.has_infinity) md << "- inf (algebraic multiplicity " << s.infinity_multiplicity << ")\n";
    if (s.residual.degree() >= 1) md << "- roots outside Q(i) of " << s.residual.to_string() << "\n";
    md << "\n## Weyr characteristics\n" << weyr_markdown(tables);
    md << "\n## Fredholm data\n\n| λ | dim ker | codim ran |\n|---|---|---|\n";
    for (const auto& t : tables) {
      const FredholmData f = fredholm_data(p, t.at);
      md << "| " << t.at.to_string() << " | " << f.dim_ker << " | " << f.codim_ran << " |\n";
    }
    emit(md.str(), o.out);
    return kPass;
  }

  Json j;
  j["n"] = p.n();
  j["regular"] = true;
  j["det"] = to_json(p.det_poly());
  j["spectrum"] = to_json(s);
  Json wt = Json::array();
  Json fd = Json::array();
  for (const auto& t : tables) {
    wt.push_back(to_json(t));
    Json f = to_json(fredholm_data(p, t.at));
    f["point"] = t.at.to_string();
    fd.push_back(std::move(f));
  }
  j["weyr_tables"] = std::move(wt);
  j["fredholm"] = std::move(fd);
  emit(j.dump(2) + "\n", o.out);
  return kPass;
}

int cmd_repr_check(const Options& o) {
  const OperatorPencil p = load_pencil(o.pencil_path);
  const GaussianRational mu = GaussianRational::parse(o.mu);
  const GaussianRational lam = GaussianRational::parse(o.lambda);
  if (!resolvent_point(p, ExtendedScalar(mu))) throw PreconditionError("mu = " + mu.to_string() + " is not a resolvent point");

  const LinearRelation kr = kernel_representation(p);
  const LinearRelation rr = range_representation(p);
  const LinearRelation kr_l = shift(kr, lam);
  const LinearRelation rr_l = shift(rr, lam);
  const Matrix a_mu = p.a() - mu * p.e();
  const Matrix at = p.at(ExtendedScalar(lam));
  const Subspace ker_pl = null_space(at);
  const Subspace ran_pl = column_space(at);
  const ResolventRepresentations rk = resolvent_representations(kr, mu, lam);
  const ResolventRepresentations rrep = resolvent_representations(rr, mu, lam);

  const std::vector<std::pair<std::string, bool>> checks = {
      {"resolvent_form_range == range_rep - lambda", resolvent_form_range(p, mu, lam) == rr_l},
      {"resolvent_form_kernel == kernel_rep - lambda", resolvent_form_kernel(p, mu, lam) == kr_l},
      {"kernel_rep: ran resolvent form == L - lambda", rk.via_range == kr_l},
      {"kernel_rep: ker resolvent form == L - lambda", rk.via_kernel == kr_l},
      {"range_rep: ran resolvent form == L - lambda", rrep.via_range == rr_l},
      {"range_rep: ker resolvent form == L - lambda", rrep.via_kernel == rr_l},
      {"ker(kernel_rep - lambda) == ker(lambda E - A)", kernel(kr_l) == ker_pl},
      {"ker(range_rep - lambda) == (A - mu E) ker(lambda E - A)", kernel(rr_l) == map_image(a_mu, ker_pl)},
      {"ran(range_rep - lambda) == ran(lambda E - A)", range_of(rr_l) == ran_pl},
      {"ran(kernel_rep - lambda) == (A - mu E)^-1 ran(lambda E - A)", range_of(kr_l) == map_preimage(a_mu, ran_pl)},
      {"mul(kernel_rep) == ker E", mul_part(kr) == null_space(p.e())},
      {"dom(kernel_rep) == (A - mu E)^-1 ran E", domain(kr) == map_preimage(a_mu, column_space(p.e()))},
      {"mul(range_rep) == A ker E", mul_part(rr) == map_image(p.a(), null_space(p.e()))},
      {"dom(range_rep) == ran E", domain(rr) == column_space(p.e())},
  };
  bool all = true;
  Json list = Json::array();
  for (const auto& [name, ok] : checks) {
    all = all && ok;
    list.push_back({{"identity", name}, {"verdict", ok ? "equal" : "different"}});
  }

  if (o.format == "md") {
    std::ostringstream md;
    md << "# Representation check (mu = " << mu.to_string() << ", lambda = " << lam.to_string() << ")\n\n";
    md << "| identity | verdict |\n|---|---|\n";
    for (const auto& [name, ok] : checks) md << "| " << name << " | " << (ok ? "equal" : "different") << " |\n";
    emit(md.str(), o.out);
  } else {
    Json j = {{"mu", mu.to_string()}, {"lambda", lam.to_string()}, {"checks", list}, {"all_equal", all}};
    emit(j.dump(2) + "\n", o.out);
  }
  return all ? kPass : kViolation;
}

PerturbationSpec perturbation_from_options(const Options& o) {
  const Vector u = parse_vector(o.u);
  const Vector v = parse_vector(o.vfunc);
  if (o.type == "v") {
    if (o.w.empty()) throw ParseError("--type v requires --w");
    if (!o.wfunc.empty()) throw ParseError("--wfunc is only valid with --type u");
    return PerturbationSpec::make_type_v(u, parse_vector(o.w), v);
  }
  if (o.wfunc.empty()) throw ParseError("--type u requires --wfunc");
  if (!o.w.empty()) throw ParseError("--w is only valid with --type v");
  return PerturbationSpec::make_type_u(u, v, parse_vector(o.wfunc));
}

int cmd_perturb(const Options& o) {
  const OperatorPencil p = load_pencil(o.pencil_path);
  const PerturbationSpec s = perturbation_from_options(o);
  s.validate(p.n());
  const OperatorPencil q = apply_perturbation(p, s);
  const DistanceCheck d = check_one_dimensional(p, s);
  const std::size_t off = off_side_distance(p, s);
  const bool regular = is_regular(p) && is_regular(q);

  Json j;
  j["perturbation"] = to_json(s);
  j["base"] = pencil_to_json(p);
  j["perturbed"] = pencil_to_json(q);
  j["matching_side"] = s.kind == PerturbationKind::type_u ? "kernel" : "range";
  j["matching_distance"] = d.distance;
  j["off_side_distance"] = off;
  j["both_regular"] = regular;

  bool pass = d.pass;
  std::optional<TrialResult> r;
  if (regular) {
    std::vector<ExtendedScalar> pts;
    if (!o.points.empty()) {
      std::set<ExtendedScalar> all{ExtendedScalar::infinity()};
      for (const auto& e : spectrum(p).finite_eigenvalues) all.insert(e.root);
      for (const auto& e : spectrum(q).finite_eigenvalues) all.insert(e.root);
      for (const auto& e : parse_points(o.points)) all.insert(e);
      pts.assign(all.begin(), all.end());
    }
    r = weyr_delta_check(p, q, pts);
    pass = pass && r->passed();
    Json cmp = Json::array();
    for (const auto& t : r->tables)
      cmp.push_back({{"point", t.point.to_string()}, {"base", to_json(t.base)}, {"perturbed", to_json(t.perturbed)}});
    j["weyr"] = std::move(cmp);
    Json viol = Json::array();
    for (const auto& v : r->violations)
      viol.push_back({{"check", v.check},
                      {"point", v.point ? v.point->to_string() : ""},
                      {"k", v.k},
                      {"w_base", v.w_base},
                      {"w_pert", v.w_pert},
                      {"detail", v.detail}});
    j["violations"] = std::move(viol);
    j["unchecked_irrational"] = r->unchecked_irrational;
  }
  j["pass"] = pass;

  if (o.format == "md") {
    std::ostringstream md;
    md << "# Rank-one perturbation (type " << to_string(s.kind) << ")\n\n";
    md << "- matching-side (" << j["matching_side"].get<std::string>() << ") distance: " << d.distance << "\n";
    md << "- off-side distance: " << off << "\n";
    md << "- both pencils regular: " << (regular ? "yes" : "no") << "\n";
    if (r) {
      md << "\n| λ | w (base) | w (perturbed) |\n|---|---|---|\n";
      for (const auto& t : r->tables)
        md << "| " << t.point.to_string() << " | " << join(t.base.indices) << " | " << join(t.perturbed.indices) << " |\n";
      md << "\nviolations: " << r->violations.size() << "\n";
    }
    emit(md.str(), o.out);
  } else {
    emit(j.dump(2) + "\n", o.out);
  }
  return pass ? kPass : kViolation;
}

int cmd_verify(const Options& o) {
  SuiteConfig cfg;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.max_dim = o.max_dim;
  cfg.entry_bound = o.entry_bound;
  cfg.threads = o.threads;
  if (cfg.max_dim == 0) throw ParseError("--max-dim must be positive");
  if (cfg.entry_bound < 1) throw ParseError("--entry-bound must be at least 1");

  std::vector<std::string> names;
  if (o.suite == "all")
    names = suite_names();
  else
    names = {o.suite};

  std::vector<VerificationReport> reports;
  for (const auto& n : names) reports.push_back(run_suite(n, cfg));
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.failed;

  if (o.format == "md") {
    std::ostringstream md;
    md << "# Verification (seed " << cfg.seed << ")\n\n| suite | trials | passed | failed | skipped | ms |\n|---|---|---|---|---|---|\n";
    for (const auto& r : reports)
      md << "| " << r.suite << " | " << r.trials << " | " << r.passed << " | " << r.failed << " | " << r.skipped << " | "
         << static_cast<long>(r.elapsed_ms) << " |\n";
    for (const auto& r : reports)
      for (const auto& f : r.failures)
        md << "\n- " << r.suite << " trial " << f.trial_id << ": " << f.check << " " << f.detail << "\n";
    emit(md.str(), o.out);
  } else if (reports.size() == 1) {
    emit(report_to_json(reports.front()).dump(2) + "\n", o.out);
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    Json j = {{"seed", cfg.seed}, {"failed", failed}, {"suites", std::move(arr)}};
    emit(j.dump(2) + "\n", o.out);
  }
  return failed == 0 ? kPass : kViolation;
}

int cmd_gen(const Options& o) {
  const CanonicalSpec spec = CanonicalSpec::parse(o.blocks);
  if (spec.dimension() == 0) throw ParseError("--blocks describes an empty pencil");
  OperatorPencil p = from_canonical(spec);
  if (o.seed_given) {
    std::mt19937_64 rng(o.seed);
    const Matrix s = random_unimodular(p.n(), o.entry_bound, rng);
    const Matrix t = random_unimodular(p.n(), o.entry_bound, rng);
    p = apply_equivalence(p, s, t);
  }
  write_text_file(o.out, pencil_to_json(p).dump(2) + "\n");
  return kPass;
}

int cmd_analyze_relation(const Options& o) {
  const LinearRelation l = relation_from_json(read_json_file(o.relation_path));
  if (!l.is_square()) throw PreconditionError("relation must be square (dim_x == dim_y) for spectral analysis");
  std::set<ExtendedScalar> pts{ExtendedScalar::infinity()};
  for (const auto& p : parse_points(o.points)) pts.insert(p);

  Json j;
  j["dim_x"] = l.dim_x();
  j["dim"] = l.dim();
  j["domain"] = to_json(domain(l));
  j["kernel"] = to_json(kernel(l));
  j["range"] = to_json(range_of(l));
  j["mul"] = to_json(mul_part(l));
  j["singular_chain_space"] = to_json(singular_chain_space(l));
  try {
    const PointSpectrum ps = point_spectrum(l);
    Json finite = Json::array();
    for (const auto& e : ps.finite) {
      finite.push_back(e.to_string());
      pts.insert(ExtendedScalar(e));
    }
    j["point_spectrum"] = {{"finite", finite},
                           {"infinity", ps.infinity},
                           {"residual", to_json(ps.residual)},
                           {"characteristic", to_json(ps.characteristic)}};
  } catch (const PreconditionError& e) {
    j["point_spectrum"] = nullptr;
    j["point_spectrum_note"] = e.what();
  }
  std::vector<WeyrTable> tables;
  Json wt = Json::array();
  for (const auto& p : pts) {
    tables.push_back(weyr_table(l, p));
    wt.push_back(to_json(tables.back()));
  }
  j["weyr_tables"] = std::move(wt);

  if (o.format == "md") {
    std::ostringstream md;
    md << "# Relation analysis (" << l.dim_x() << " x " << l.dim_x() << ", dim " << l.dim() << ")\n\n";
    md << "- dom: " << domain(l).dim() << ", ker: " << kernel(l).dim() << ", ran: " << range_of(l).dim()
       << ", mul: " << mul_part(l).dim() << "\n";
    md << "- singular chain space: dim " << singular_chain_space(l).dim() << "\n";
    md << "\n## Weyr characteristics\n" << weyr_markdown(tables);
    emit(md.str(), o.out);
  } else {
    emit(j.dump(2) + "\n", o.out);
  }
  return kPass;
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "md"}));
  cmd->add_option("--out", o.out, "Write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact spectral analysis and rank-one perturbation experiments for matrix pencils"};
  app.require_subcommand(1, 1);

  auto* analyze = app.add_subcommand("analyze", "Spectrum, Weyr tables and Fredholm data of a regular pencil");
  analyze->add_option("--pencil", o.pencil_path, "Pencil file")->required();
  analyze->add_option("--points", o.points, "Extra evaluation points, comma-separated");
  add_format(analyze, o);

  auto* repr = app.add_subcommand("repr-check", "Compare kernel/range representations with their resolvent forms");
  repr->add_option("--pencil", o.pencil_path, "Pencil file")->required();
  repr->add_option("--mu", o.mu, "Resolvent point")->required();
  repr->add_option("--lambda", o.lambda, "Shift")->required();
  add_format(repr, o);

  auto* perturb = app.add_subcommand("perturb", "Apply a rank-one perturbation and compare Weyr characteristics");
  perturb->add_option("--pencil", o.pencil_path, "Pencil file")->required();
  perturb->add_option("--type", o.type, "Perturbation type")->required()->check(CLI::IsMember({"u", "v"}));
  perturb->add_option("--u", o.u, "Vector u")->required();
  perturb->add_option("--w", o.w, "Vector w (type v)");
  perturb->add_option("--vfunc", o.vfunc, "Covector v'")->required();
  perturb->add_option("--wfunc", o.wfunc, "Covector w' (type u)");
  perturb->add_option("--points", o.points, "Extra evaluation points, comma-separated");
  add_format(perturb, o);

  auto* verify = app.add_subcommand("verify", "Run randomized verification suites");
  verify->add_option("--suite", o.suite, "Suite name or 'all'")->required()->check([](const std::string& s) {
    if (s == "all") return std::string();
    for (const auto& n : suite_names())
      if (n == s) return std::string();
    return "unknown suite '" + s + "'";
  });
  verify->add_option("--trials", o.trials, "Trials per suite")->required();
  verify->add_option("--seed", o.seed, "Master seed")->required();
  verify->add_option("--max-dim", o.max_dim, "Maximum pencil dimension");
  verify->add_option("--entry-bound", o.entry_bound, "Entry bound for random equivalences");
  verify->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  add_format(verify, o);

  auto* gen = app.add_subcommand("gen", "Write a pencil in Weierstrass form, optionally scrambled");
  gen->add_option("--blocks", o.blocks, "Blocks, e.g. 2@1/1,1@inf")->required();
  gen->add_option("--seed", o.seed, "Seed for a random unimodular equivalence");
  gen->add_option("--entry-bound", o.entry_bound, "Entry bound for the equivalence");
  gen->add_option("--out", o.out, "Output pencil file")->required();

  auto* rel = app.add_subcommand("analyze-relation", "Spectral data of a linear relation file");
  rel->add_option("--relation", o.relation_path, "Relation file")->required();
  rel->add_option("--points", o.points, "Extra evaluation points, comma-separated");
  add_format(rel, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  o.seed_given = gen->count("--seed") > 0;

  try {
    if (*analyze) return cmd_analyze(o);
    if (*repr) return cmd_repr_check(o);
    if (*perturb) return cmd_perturb(o);
    if (*verify) return cmd_verify(o);
    if (*gen) return cmd_gen(o);
    if (*rel) return cmd_analyze_relation(o);
  } catch (const weyr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
