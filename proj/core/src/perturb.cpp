#include "weyr/perturb.hpp"

#include <algorithm>
#include <set>

#include "weyr/error.hpp"

namespace weyr {

std::string to_string(PerturbationKind kind) { return kind == PerturbationKind::type_v ? "v" : "u"; }

PerturbationSpec PerturbationSpec::make_type_v(Vector u, Vector w, Vector v_func) {
  return {PerturbationKind::type_v, std::move(u), std::move(w), std::move(v_func), std::nullopt};
}

PerturbationSpec PerturbationSpec::make_type_u(Vector u, Vector v_func, Vector w_func) {
  return {PerturbationKind::type_u, std::move(u), std::nullopt, std::move(v_func), std::move(w_func)};
}

void PerturbationSpec::validate(std::size_t n) const {
  auto check = [n](const Vector& v, const char* name) {
    if (v.size() != n)
      throw DimensionError(std::string("perturbation vector ") + name + " has length " + std::to_string(v.size()) +
                           ", expected " + std::to_string(n));
  };
  check(u, "u");
  check(v_func, "v'");
  if (kind == PerturbationKind::type_v) {
    if (!w || w_func) throw PreconditionError("type v perturbation needs w and no w'");
    check(*w, "w");
  } else {
    if (!w_func || w) throw PreconditionError("type u perturbation needs w' and no w");
    check(*w_func, "w'");
  }
}

bool PerturbationSpec::is_zero() const {
  auto zero = [](const Vector& v) { return std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_zero(); }); };
  return zero(u) && zero(v_func) && (!w || zero(*w)) && (!w_func || zero(*w_func));
}

OperatorPencil apply_perturbation(const OperatorPencil& p, const PerturbationSpec& s) {
  s.validate(p.n());
  if (s.kind == PerturbationKind::type_v) return {p.e() + outer(s.u, s.v_func), p.a() + outer(*s.w, s.v_func)};
  return {p.e() + outer(s.u, s.v_func), p.a() + outer(s.u, *s.w_func)};
}

std::size_t relation_distance(const LinearRelation& l, const LinearRelation& m) {
  if (l.dim_x() != m.dim_x() || l.dim_y() != m.dim_y()) throw DimensionError("relation_distance: shapes differ");
  const Subspace common = subspace_intersect(l.span(), m.span());
  return std::max(quotient_dim(common, l.span()), quotient_dim(common, m.span()));
}

namespace {

LinearRelation side(const OperatorPencil& p, bool kernel_side) {
  return kernel_side ? kernel_representation(p) : range_representation(p);
}

}  // namespace

DistanceCheck check_one_dimensional(const OperatorPencil& p, const PerturbationSpec& s) {
  const OperatorPencil q = apply_perturbation(p, s);
  const bool kernel_side = s.kind == PerturbationKind::type_u;
  const std::size_t d = relation_distance(side(p, kernel_side), side(q, kernel_side));
  return {d, d <= 1};
}

std::size_t off_side_distance(const OperatorPencil& p, const PerturbationSpec& s) {
  const OperatorPencil q = apply_perturbation(p, s);
  const bool kernel_side = s.kind != PerturbationKind::type_u;
  return relation_distance(side(p, kernel_side), side(q, kernel_side));
}

namespace {

long as_long(std::size_t v) { return static_cast<long>(v); }

// Irrational eigenvalues of `self` that `other` lacks must have geometric
// multiplicity 1 in `self`. Returns the degree of the shared irrational part.
std::size_t check_irrational(const OperatorPencil& self, const Polynomial& self_residual,
                             const Polynomial& other_residual, const char* label, std::vector<Violation>& out) {
  if (self_residual.degree() < 1) return 0;
  const Polynomial own = square_free_part(self_residual);
  const Polynomial shared =
      other_residual.degree() < 1 ? Polynomial(GaussianRational(1)) : gcd(own, square_free_part(other_residual));
  const Polynomial only = exact_quotient(own, shared);
  if (only.degree() >= 1 && self.n() >= 1) {
    const Polynomial minors = minor_gcd_poly(self.e(), self.a(), self.n() - 1);
    const Polynomial g = gcd(only, minors);
    if (g.degree() >= 1)
      out.push_back({std::string("irrational_geometric_multiplicity_") + label, std::nullopt, 1, 0, 2,
                     "eigenvalues outside Q(i) with dim ker >= 2: roots of " + g.to_string()});
  }
  return static_cast<std::size_t>(std::max(shared.degree(), 0));
}

}  // namespace

TrialResult weyr_delta_check(const OperatorPencil& base, const OperatorPencil& pert, std::vector<ExtendedScalar> points) {
  if (!is_regular(base) || !is_regular(pert)) throw PreconditionError("weyr_delta_check: pencils must be regular");
  if (base.n() != pert.n()) throw DimensionError("weyr_delta_check: pencils have different sizes");
  TrialResult r;
  r.base = base;
  r.perturbed = pert;

  const SpectrumReport sb = spectrum(base);
  const SpectrumReport sp = spectrum(pert);
  if (points.empty()) {
    std::set<ExtendedScalar> pts{ExtendedScalar::infinity()};
    for (const auto& e : sb.finite_eigenvalues) pts.insert(e.root);
    for (const auto& e : sp.finite_eigenvalues) pts.insert(e.root);
    points.assign(pts.begin(), pts.end());
  }

  for (const auto& pt : points) {
    PointComparison cmp{pt, pencil_weyr_table(base, pt), pencil_weyr_table(pert, pt)};
    r.weyr_tables += 2;
    for (const WeyrTable* t : {&cmp.base, &cmp.perturbed})
      if (!t->is_non_increasing())
        r.violations.push_back({"monotonicity", pt, 0, 0, 0, t == &cmp.base ? "base table" : "perturbed table"});
    const std::size_t kmax = std::max(cmp.base.indices.size(), cmp.perturbed.indices.size());
    for (std::size_t k = 1; k <= kmax; ++k) {
      const long wb = as_long(cmp.base.w(k));
      const long wp = as_long(cmp.perturbed.w(k));
      if (wb != wp) r.nonzero_delta = true;
      if (std::labs(wb - wp) > 1) r.violations.push_back({"weyr_index", pt, k, wb, wp, "|Δw_k| > 1"});
      const long db = as_long(cmp.base.root_dim(k));
      const long dp = as_long(cmp.perturbed.root_dim(k));
      if (std::labs(db - dp) > as_long(k))
        r.violations.push_back({"root_dim", pt, k, wb, wp,
                                "|Δ dim R^k| = " + std::to_string(std::labs(db - dp)) + " > k"});
    }
    r.tables.push_back(std::move(cmp));
  }

  r.unchecked_irrational = check_irrational(pert, sp.residual, sb.residual, "perturbed", r.violations);
  check_irrational(base, sb.residual, sp.residual, "base", r.violations);
  return r;
}

}  // namespace weyr
