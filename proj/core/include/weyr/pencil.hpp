#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "weyr/polynomial.hpp"
#include "weyr/relation.hpp"

namespace weyr {

/// The matrix pencil λE - A with square n × n coefficients.
///
/// det(λE - A) is computed once at construction, so copies can be shared
/// freely between threads.
class OperatorPencil {
 public:
  /// Throws DimensionError unless e and a are square of equal size.
  OperatorPencil(Matrix e, Matrix a);

  std::size_t n() const { return e_.rows(); }
  const Matrix& e() const { return e_; }
  const Matrix& a() const { return a_; }
  const Polynomial& det_poly() const { return det_; }

  /// λE - A at a finite point, or E at ∞.
  Matrix at(const ExtendedScalar& lam) const;

  friend bool operator==(const OperatorPencil& x, const OperatorPencil& y) { return x.e_ == y.e_ && x.a_ == y.a_; }

 private:
  Matrix e_;
  Matrix a_;
  Polynomial det_;
};

bool is_regular(const OperatorPencil& p);
/// μ finite: det(μE - A) != 0; ∞: det E != 0.
bool resolvent_point(const OperatorPencil& p, const ExtendedScalar& at);

/// E⁻¹A = ker [A, -E] = {(x, z) : A x = E z}.
LinearRelation kernel_representation(const OperatorPencil& p);
/// AE⁻¹ = ran [E; A] = {(E y, A y)}.
LinearRelation range_representation(const OperatorPencil& p);

/// ran [E(A-μE)⁻¹ ; I + (μ-λ)E(A-μE)⁻¹], which equals AE⁻¹ - λ.
/// Throws PreconditionError if μ is not a resolvent point.
LinearRelation resolvent_form_range(const OperatorPencil& p, const GaussianRational& mu, const GaussianRational& lam);
/// ker [I + (μ-λ)(A-μE)⁻¹E , -(A-μE)⁻¹E], which equals E⁻¹A - λ.
LinearRelation resolvent_form_kernel(const OperatorPencil& p, const GaussianRational& mu, const GaussianRational& lam);

/// Endpoints of Jordan chains of length k:
/// S_1 = ker(A - λE), S_{j+1} = (A - λE)⁻¹ E S_j; at ∞ with E and A swapped in role.
Subspace pencil_root_subspace(const OperatorPencil& p, const ExtendedScalar& at, std::size_t k);

/// Weyr characteristic from the Jordan-chain root subspaces.
/// Throws PreconditionError for a singular pencil.
WeyrTable pencil_weyr_table(const OperatorPencil& p, const ExtendedScalar& at);

struct SpectrumReport {
  std::vector<RootMultiplicity> finite_eigenvalues;
  Polynomial residual;
  bool has_infinity = false;
  std::size_t infinity_multiplicity = 0;
};

/// Throws PreconditionError for a singular pencil.
SpectrumReport spectrum(const OperatorPencil& p);

struct FredholmData {
  std::size_t dim_ker = 0;
  std::size_t codim_ran = 0;
  friend bool operator==(const FredholmData&, const FredholmData&) = default;
};

/// (dim ker, codim ran) of λE - A, or of E at ∞. Throws PreconditionError for a singular pencil.
FredholmData fredholm_data(const OperatorPencil& p, const ExtendedScalar& lam);

/// Weierstrass-form block structure.
struct CanonicalSpec {
  struct FiniteBlock {
    GaussianRational eigenvalue;
    std::size_t size = 1;
    friend bool operator==(const FiniteBlock&, const FiniteBlock&) = default;
  };
  std::vector<FiniteBlock> finite_blocks;
  std::vector<std::size_t> infinite_blocks;

  std::size_t dimension() const;
  /// Weyr characteristic implied by the blocks at `at` (number of blocks of size >= k).
  WeyrTable planted_weyr(const ExtendedScalar& at) const;
  /// Distinct planted eigenvalues, sorted, ∞ last if any infinite block.
  std::vector<ExtendedScalar> planted_points() const;

  /// `size@eigenvalue` / `size@inf`, comma-separated, in block order.
  std::string to_string() const;
  /// Throws ParseError.
  static CanonicalSpec parse(std::string_view text);

  friend bool operator==(const CanonicalSpec&, const CanonicalSpec&) = default;
};

/// Finite block (I, J(λ0, s)); infinite block (J(0, s), I); block-diagonal assembly.
OperatorPencil from_canonical(const CanonicalSpec& spec);

/// (S E T, S A T). Throws PreconditionError if S or T is singular.
OperatorPencil apply_equivalence(const OperatorPencil& p, const Matrix& s_mat, const Matrix& t_mat);

/// Unit-determinant integer matrix built from random elementary row additions;
/// every entry stays within [-entry_bound, entry_bound].
Matrix random_unimodular(std::size_t n, long entry_bound, std::mt19937_64& rng);

}  // namespace weyr
