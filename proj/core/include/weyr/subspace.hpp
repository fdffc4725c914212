#pragma once

#include <cstddef>
#include <span>

#include "weyr/matrix.hpp"

namespace weyr {

/// A subspace of F^m stored by its unique canonical basis.
///
/// The basis matrix (m x dim) is the transpose of the nonzero part of the
/// RREF of any spanning set written as rows, i.e. it is column-reduced
/// echelon. Two subspaces are equal as sets iff their basis matrices are
/// identical, so operator== is plain matrix equality.
class Subspace {
 public:
  /// The zero subspace of F^0.
  Subspace() = default;

  /// Span of the columns of `spanning` (any number of columns, possibly dependent).
  static Subspace span(const Matrix& spanning);
  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim_; }
  const Matrix& basis() const { return basis_; }

  bool contains(std::span<const GaussianRational> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
};

/// {x : m x = 0}.
Subspace null_space(const Matrix& m);
/// Span of the columns of m.
Subspace column_space(const Matrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
/// true iff v ⊆ u.
bool contains(const Subspace& u, const Subspace& v);
/// dim(big) - dim(small); requires small ⊆ big (PreconditionError otherwise).
std::size_t quotient_dim(const Subspace& small, const Subspace& big);

/// {m x : x ∈ s}.
Subspace map_image(const Matrix& m, const Subspace& s);
/// {x : m x ∈ s}.
Subspace map_preimage(const Matrix& m, const Subspace& s);

/// Rows spanning the annihilator: a (m - dim) x m matrix N with s = ker N.
Matrix annihilator(const Subspace& s);

}  // namespace weyr
