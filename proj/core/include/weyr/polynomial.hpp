#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "weyr/matrix.hpp"

namespace weyr {

/// Univariate polynomial over Q(i), coefficients lowest degree first.
/// Trailing zeros are always stripped; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coeffs);
  Polynomial(GaussianRational constant);  // NOLINT(google-explicit-constructor)

  /// The polynomial λ.
  static Polynomial x();
  /// λ - r.
  static Polynomial linear_factor(const GaussianRational& r);
  /// c * λ^k.
  static Polynomial monomial(const GaussianRational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  /// Coefficient of λ^k (0 beyond the degree).
  GaussianRational coeff(std::size_t k) const;
  /// Leading coefficient; 0 for the zero polynomial.
  GaussianRational leading() const;

  GaussianRational eval(const GaussianRational& at) const;
  Polynomial derivative() const;
  /// Scaled to leading coefficient 1; zero stays zero.
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// e.g. `-1/1 + 1/1*λ^2`; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void strip();
  std::vector<GaussianRational> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b. Throws std::domain_error if b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Quotient of an exact division; throws std::logic_error if the remainder is nonzero.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// p / gcd(p, p'), monic. Requires p nonzero.
Polynomial square_free_part(const Polynomial& p);

/// Square matrix with polynomial entries.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant by fraction-free (Bareiss) elimination over F[λ].
Polynomial poly_determinant(PolyMatrix m);

/// det(λ p_mat - q_mat). Throws DimensionError for non-square or mismatched input.
Polynomial pencil_det_poly(const Matrix& p_mat, const Matrix& q_mat);

/// Monic gcd of all order x order minors of λ p_mat - q_mat (zero polynomial if
/// all minors vanish). order 0 yields the constant 1.
/// Throws DimensionError if shapes differ or order > min(rows, cols).
Polynomial minor_gcd_poly(const Matrix& p_mat, const Matrix& q_mat, std::size_t order);

struct RootMultiplicity {
  GaussianRational root;
  std::size_t multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RootFactorization {
  /// Distinct roots in Q(i), sorted.
  std::vector<RootMultiplicity> roots;
  /// Monic; has no roots in Q(i).
  Polynomial residual;
  /// Leading coefficient of the input: p = unit * prod (λ - r)^m * residual.
  GaussianRational unit;
};

/// Every root of p that lies in Q(i), with multiplicity. Exhaustive:
/// candidates are quotients of Gaussian-integer divisors of the trailing and
/// leading coefficients of the (denominator-cleared) square-free part.
/// Throws std::domain_error for the zero polynomial.
RootFactorization gaussian_rational_roots(const Polynomial& p);

}  // namespace weyr
