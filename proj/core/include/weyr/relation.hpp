#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "weyr/polynomial.hpp"
#include "weyr/subspace.hpp"

namespace weyr {

/// A linear relation L ⊆ F^dim_x × F^dim_y, stored as the canonical span of
/// stacked pairs (x; y). Equality of relations is equality of spans.
class LinearRelation {
 public:
  LinearRelation() = default;
  /// Throws DimensionError unless span.ambient_dim() == dim_x + dim_y.
  LinearRelation(std::size_t dim_x, std::size_t dim_y, Subspace span);

  /// Span of the given pairs (x_i, y_i).
  static LinearRelation from_span(std::size_t dim_x, std::size_t dim_y,
                                  std::span<const std::pair<Vector, Vector>> pairs);
  /// {(x, m x)}.
  static LinearRelation from_graph(const Matrix& m);
  static LinearRelation identity(std::size_t n);
  /// F^dim_x × F^dim_y.
  static LinearRelation full(std::size_t dim_x, std::size_t dim_y);
  /// {(0, 0)}.
  static LinearRelation zero(std::size_t dim_x, std::size_t dim_y);
  /// ran [top; bottom]: {(top c, bottom c)}.
  static LinearRelation range_of_stacked(const Matrix& top, const Matrix& bottom);
  /// ker [left, right]: {(x, y) : left x + right y = 0}.
  static LinearRelation kernel_of_row(const Matrix& left, const Matrix& right);

  std::size_t dim_x() const { return dim_x_; }
  std::size_t dim_y() const { return dim_y_; }
  bool is_square() const { return dim_x_ == dim_y_; }
  const Subspace& span() const { return span_; }
  /// dim of the relation as a subspace.
  std::size_t dim() const { return span_.dim(); }
  /// x-components of the canonical basis (dim_x × dim).
  Matrix top() const;
  /// y-components of the canonical basis (dim_y × dim).
  Matrix bottom() const;
  bool contains(std::span<const GaussianRational> x, std::span<const GaussianRational> y) const;

  friend bool operator==(const LinearRelation& a, const LinearRelation& b) = default;

 private:
  std::size_t dim_x_ = 0;
  std::size_t dim_y_ = 0;
  Subspace span_;
};

/// {(x, y1 + y2) : (x, y1) ∈ l, (x, y2) ∈ m}.
LinearRelation op_sum(const LinearRelation& l, const LinearRelation& m);
/// outer ∘ inner = {(x, z) : (x, y) ∈ inner, (y, z) ∈ outer}.
LinearRelation compose(const LinearRelation& outer, const LinearRelation& inner);
/// {(y, x) : (x, y) ∈ l}.
LinearRelation inverse(const LinearRelation& l);

Subspace kernel(const LinearRelation& l);
Subspace domain(const LinearRelation& l);
Subspace range_of(const LinearRelation& l);
Subspace mul_part(const LinearRelation& l);

/// l - λ = {(x, y - λ x)}.
LinearRelation shift(const LinearRelation& l, const GaussianRational& lam);
/// k-fold composition; power(l, 0) is the identity.
LinearRelation power(const LinearRelation& l, std::size_t k);

/// ker (l - λ)^k, or mul l^k at ∞.
Subspace root_subspace(const LinearRelation& l, const ExtendedScalar& at, std::size_t k);
/// Union of all root_subspace(l, at, k); the chain stabilizes by k = dim_x.
Subspace stabilized_root_subspace(const LinearRelation& l, const ExtendedScalar& at);

/// Weyr characteristic w_k = dim R^k / R^(k-1) at one point.
struct WeyrTable {
  ExtendedScalar at;
  /// w_1 >= w_2 >= ... > 0 (trailing zeros stripped).
  std::vector<std::size_t> indices;
  /// dim R^k for k = 1 .. stabilization.
  std::vector<std::size_t> root_dims;

  /// w_k with w_k = 0 beyond the stored indices; k >= 1.
  std::size_t w(std::size_t k) const { return k <= indices.size() ? indices[k - 1] : 0; }
  /// dim R^k; constant after stabilization; k >= 1.
  std::size_t root_dim(std::size_t k) const;
  bool is_non_increasing() const;

  friend bool operator==(const WeyrTable&, const WeyrTable&) = default;
};

/// Builds a table from dims of R^1, R^2, ... (trailing repeats allowed).
WeyrTable weyr_from_root_dims(const ExtendedScalar& at, std::vector<std::size_t> root_dims);

WeyrTable weyr_table(const LinearRelation& l, const ExtendedScalar& at);

/// R_c(l): intersection of the stabilized root subspaces at 0 and ∞.
Subspace singular_chain_space(const LinearRelation& l);

bool is_resolvent_point(const LinearRelation& l, const ExtendedScalar& at);

/// Matrix M if l is the graph of an everywhere-defined operator (mul = {0}, dom full).
std::optional<Matrix> operator_matrix(const LinearRelation& l);

struct PointSpectrum {
  /// Distinct finite eigenvalues in Q(i), sorted.
  std::vector<GaussianRational> finite;
  bool infinity = false;
  /// Monic factor carrying the eigenvalues outside Q(i).
  Polynomial residual;
  /// Monic gcd of the maximal minors of λ P - Q.
  Polynomial characteristic;
};

/// Point spectrum via the maximal-minor gcd of λ·top - bottom.
/// Throws PreconditionError when that gcd vanishes identically (no resolvent point).
PointSpectrum point_spectrum(const LinearRelation& l);

struct ResolventRepresentations {
  LinearRelation via_range;
  LinearRelation via_kernel;
};

/// With R = (l - μ)^{-1}: ran [R; I + (μ-λ)R] and ker [I + (μ-λ)R, -R].
/// Throws PreconditionError if μ is not a resolvent point of l.
ResolventRepresentations resolvent_representations(const LinearRelation& l, const GaussianRational& mu,
                                                   const GaussianRational& lam);

}  // namespace weyr
