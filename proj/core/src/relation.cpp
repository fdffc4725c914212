#include "weyr/relation.hpp"

#include "weyr/error.hpp"

namespace weyr {

namespace {

void require_square(const LinearRelation& l, const char* what) {
  if (!l.is_square())
    throw DimensionError(std::string(what) + ": relation is not square (" + std::to_string(l.dim_x()) + " vs " +
                         std::to_string(l.dim_y()) + ")");
}

LinearRelation stacked(const Matrix& top, const Matrix& bottom) {
  return {top.rows(), bottom.rows(), Subspace::span(vstack(top, bottom))};
}

}  // namespace

LinearRelation::LinearRelation(std::size_t dim_x, std::size_t dim_y, Subspace span)
    : dim_x_(dim_x), dim_y_(dim_y), span_(std::move(span)) {
  if (span_.ambient_dim() != dim_x + dim_y) throw DimensionError("relation span has the wrong ambient dimension");
}

LinearRelation LinearRelation::from_span(std::size_t dim_x, std::size_t dim_y,
                                         std::span<const std::pair<Vector, Vector>> pairs) {
  Matrix m(dim_x + dim_y, pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const auto& [x, y] = pairs[c];
    if (x.size() != dim_x || y.size() != dim_y) throw DimensionError("relation element has the wrong length");
    for (std::size_t r = 0; r < dim_x; ++r) m(r, c) = x[r];
    for (std::size_t r = 0; r < dim_y; ++r) m(dim_x + r, c) = y[r];
  }
  return {dim_x, dim_y, Subspace::span(m)};
}

LinearRelation LinearRelation::from_graph(const Matrix& m) { return stacked(Matrix::identity(m.cols()), m); }

LinearRelation LinearRelation::identity(std::size_t n) { return from_graph(Matrix::identity(n)); }

LinearRelation LinearRelation::full(std::size_t dim_x, std::size_t dim_y) {
  return {dim_x, dim_y, Subspace::full(dim_x + dim_y)};
}

LinearRelation LinearRelation::zero(std::size_t dim_x, std::size_t dim_y) {
  return {dim_x, dim_y, Subspace::zero(dim_x + dim_y)};
}

LinearRelation LinearRelation::range_of_stacked(const Matrix& top, const Matrix& bottom) {
  return stacked(top, bottom);
}

LinearRelation LinearRelation::kernel_of_row(const Matrix& left, const Matrix& right) {
  return {left.cols(), right.cols(), null_space(hstack(left, right))};
}

Matrix LinearRelation::top() const { return span_.basis().block(0, 0, dim_x_, dim()); }

Matrix LinearRelation::bottom() const { return span_.basis().block(dim_x_, 0, dim_y_, dim()); }

bool LinearRelation::contains(std::span<const GaussianRational> x, std::span<const GaussianRational> y) const {
  if (x.size() != dim_x_ || y.size() != dim_y_) throw DimensionError("relation element has the wrong length");
  Vector v(x.begin(), x.end());
  v.insert(v.end(), y.begin(), y.end());
  return span_.contains(v);
}

LinearRelation op_sum(const LinearRelation& l, const LinearRelation& m) {
  if (l.dim_x() != m.dim_x() || l.dim_y() != m.dim_y()) throw DimensionError("op_sum: relation shapes differ");
  const Matrix p1 = l.top();
  const Matrix p2 = m.top();
  // Fibre product: P1 a = P2 b.
  const Matrix k = null_space(hstack(p1, -p2)).basis();
  const Matrix a = k.block(0, 0, l.dim(), k.cols());
  const Matrix b = k.block(l.dim(), 0, m.dim(), k.cols());
  return stacked(p1 * a, l.bottom() * a + m.bottom() * b);
}

LinearRelation compose(const LinearRelation& outer, const LinearRelation& inner) {
  if (inner.dim_y() != outer.dim_x()) throw DimensionError("compose: inner codomain does not match outer domain");
  // Q_inner a = P_outer b.
  const Matrix k = null_space(hstack(inner.bottom(), -outer.top())).basis();
  const Matrix a = k.block(0, 0, inner.dim(), k.cols());
  const Matrix b = k.block(inner.dim(), 0, outer.dim(), k.cols());
  return stacked(inner.top() * a, outer.bottom() * b);
}

LinearRelation inverse(const LinearRelation& l) { return stacked(l.bottom(), l.top()); }

Subspace kernel(const LinearRelation& l) { return map_image(l.top(), null_space(l.bottom())); }

Subspace domain(const LinearRelation& l) { return column_space(l.top()); }

Subspace range_of(const LinearRelation& l) { return column_space(l.bottom()); }

Subspace mul_part(const LinearRelation& l) { return map_image(l.bottom(), null_space(l.top())); }

LinearRelation shift(const LinearRelation& l, const GaussianRational& lam) {
  require_square(l, "shift");
  if (lam.is_zero()) return l;
  const Matrix p = l.top();
  return stacked(p, l.bottom() - lam * p);
}

LinearRelation power(const LinearRelation& l, std::size_t k) {
  require_square(l, "power");
  LinearRelation acc = LinearRelation::identity(l.dim_x());
  for (std::size_t i = 0; i < k; ++i) acc = compose(l, acc);
  return acc;
}

Subspace root_subspace(const LinearRelation& l, const ExtendedScalar& at, std::size_t k) {
  require_square(l, "root_subspace");
  if (at.is_infinity()) return mul_part(power(l, k));
  return kernel(power(shift(l, at.value()), k));
}

namespace {

// dims of R^1, R^2, ... until the first repeat (inclusive) or the hard stop k = n + 1.
std::vector<Subspace> root_chain(const LinearRelation& l, const ExtendedScalar& at) {
  const LinearRelation base = at.is_infinity() ? l : shift(l, at.value());
  auto root_of = [&](const LinearRelation& p) { return at.is_infinity() ? mul_part(p) : kernel(p); };
  std::vector<Subspace> chain;
  LinearRelation p = base;
  std::size_t prev_dim = 0;
  for (std::size_t k = 1; k <= l.dim_x() + 1; ++k) {
    Subspace r = root_of(p);
    const std::size_t d = r.dim();
    chain.push_back(std::move(r));
    if (d == prev_dim) break;
    prev_dim = d;
    p = compose(base, p);
  }
  return chain;
}

}  // namespace

Subspace stabilized_root_subspace(const LinearRelation& l, const ExtendedScalar& at) {
  require_square(l, "stabilized_root_subspace");
  return root_chain(l, at).back();
}

std::size_t WeyrTable::root_dim(std::size_t k) const {
  if (root_dims.empty()) return 0;
  return k <= root_dims.size() ? root_dims[k - 1] : root_dims.back();
}

bool WeyrTable::is_non_increasing() const {
  for (std::size_t k = 1; k < indices.size(); ++k)
    if (indices[k] > indices[k - 1]) return false;
  return true;
}

WeyrTable weyr_from_root_dims(const ExtendedScalar& at, std::vector<std::size_t> root_dims) {
  WeyrTable t{at, {}, {}};
  std::size_t prev = 0;
  for (std::size_t d : root_dims) {
    if (d <= prev) break;
    t.indices.push_back(d - prev);
    t.root_dims.push_back(d);
    prev = d;
  }
  return t;
}

WeyrTable weyr_table(const LinearRelation& l, const ExtendedScalar& at) {
  require_square(l, "weyr_table");
  std::vector<std::size_t> dims;
  for (const auto& s : root_chain(l, at)) dims.push_back(s.dim());
  return weyr_from_root_dims(at, std::move(dims));
}

Subspace singular_chain_space(const LinearRelation& l) {
  require_square(l, "singular_chain_space");
  return subspace_intersect(stabilized_root_subspace(l, ExtendedScalar(0)),
                            stabilized_root_subspace(l, ExtendedScalar::infinity()));
}

bool is_resolvent_point(const LinearRelation& l, const ExtendedScalar& at) {
  require_square(l, "is_resolvent_point");
  if (at.is_infinity()) return mul_part(l).is_zero() && domain(l).is_full();
  const LinearRelation s = shift(l, at.value());
  return kernel(s).is_zero() && range_of(s).is_full();
}

std::optional<Matrix> operator_matrix(const LinearRelation& l) {
  if (!mul_part(l).is_zero() || !domain(l).is_full()) return std::nullopt;
  return l.bottom() * inverse(l.top());
}

PointSpectrum point_spectrum(const LinearRelation& l) {
  require_square(l, "point_spectrum");
  const Matrix p = l.top();
  const Matrix q = l.bottom();
  if (l.dim() > l.dim_x())
    throw PreconditionError("point_spectrum: relation has no resolvent point (dimension exceeds the space)");
  PointSpectrum out;
  out.characteristic = minor_gcd_poly(p, q, l.dim());
  if (out.characteristic.is_zero())
    throw PreconditionError("point_spectrum: relation has no resolvent point (singular chains present)");
  const RootFactorization f = gaussian_rational_roots(out.characteristic);
  for (const auto& r : f.roots) out.finite.push_back(r.root);
  out.residual = f.residual;
  out.infinity = !mul_part(l).is_zero();
  return out;
}

ResolventRepresentations resolvent_representations(const LinearRelation& l, const GaussianRational& mu,
                                                   const GaussianRational& lam) {
  require_square(l, "resolvent_representations");
  const auto r = operator_matrix(inverse(shift(l, mu)));
  if (!r) throw PreconditionError("mu = " + mu.to_string() + " is not a resolvent point of the relation");
  const std::size_t n = l.dim_x();
  const Matrix lower = Matrix::identity(n) + (mu - lam) * *r;
  return {LinearRelation::range_of_stacked(*r, lower), LinearRelation::kernel_of_row(lower, -*r)};
}

}  // namespace weyr
