#include "weyr/subspace.hpp"

#include "weyr/error.hpp"

namespace weyr {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v, const char* what) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionError(std::string(what) + ": ambient dimensions differ (" + std::to_string(u.ambient_dim()) +
                         " vs " + std::to_string(v.ambient_dim()) + ")");
}

// Basis of ker m as columns, one per free column of rref(m).
Matrix kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  Matrix basis(n, n - r.rank);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) basis(r.pivot_cols[i], k) = -r.reduced(i, free);
    ++k;
  }
  return basis;
}

}  // namespace

Subspace Subspace::span(const Matrix& spanning) {
  Subspace s;
  s.ambient_dim_ = spanning.rows();
  const RrefResult r = rref(spanning.transpose());
  s.basis_ = r.reduced.block(0, 0, r.rank, spanning.rows()).transpose();
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
  return span(Matrix::from_columns(ambient_dim, vectors));
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = Matrix(ambient_dim, 0);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

bool Subspace::contains(std::span<const GaussianRational> v) const {
  if (v.size() != ambient_dim_) throw DimensionError("vector length does not match ambient dimension");
  return rank(hstack(basis_, Matrix::column(v))) == dim();
}

Subspace null_space(const Matrix& m) { return Subspace::span(kernel_basis(m)); }

Subspace column_space(const Matrix& m) { return Subspace::span(m); }

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "subspace_sum");
  return Subspace::span(hstack(u.basis(), v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "subspace_intersect");
  // u a = v b  <=>  [U, -V] (a; b) = 0; the intersection is U a.
  const Matrix coeffs = kernel_basis(hstack(u.basis(), -v.basis()));
  return Subspace::span(u.basis() * coeffs.block(0, 0, u.dim(), coeffs.cols()));
}

bool contains(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v, "contains");
  return rank(hstack(u.basis(), v.basis())) == u.dim();
}

std::size_t quotient_dim(const Subspace& small, const Subspace& big) {
  require_same_ambient(small, big, "quotient_dim");
  if (!contains(big, small)) throw PreconditionError("quotient_dim: first subspace is not contained in the second");
  return big.dim() - small.dim();
}

Subspace map_image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionError("map_image: matrix columns do not match ambient dimension");
  return Subspace::span(m * s.basis());
}

Subspace map_preimage(const Matrix& m, const Subspace& s) {
  if (m.rows() != s.ambient_dim()) throw DimensionError("map_preimage: matrix rows do not match ambient dimension");
  return null_space(annihilator(s) * m);
}

Matrix annihilator(const Subspace& s) { return kernel_basis(s.basis().transpose()).transpose(); }

}  // namespace weyr
