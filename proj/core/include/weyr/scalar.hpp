#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace weyr {

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
///
/// Both parts are kept in canonical mpq form (reduced, positive denominator),
/// so equal values always share a bit-identical representation.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  /// num/den as a real scalar.
  static GaussianRational ratio(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Lexicographic (re, im) order; only used to make outputs deterministic.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

  /// Canonical text: `a/b` or `a/b+c/d*i` / `a/b-c/d*i`.
  std::string to_string() const;

  /// Parses the text format above; integer shorthand `a` means `a/1`.
  /// Throws ParseError on malformed input.
  static GaussianRational parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// A point of the extended plane Q(i) ∪ {∞}.
class ExtendedScalar {
 public:
  ExtendedScalar() = default;  // 0
  ExtendedScalar(GaussianRational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExtendedScalar(long v) : value_(GaussianRational(v)) {}        // NOLINT(google-explicit-constructor)

  static ExtendedScalar infinity() {
    ExtendedScalar s;
    s.value_.reset();
    return s;
  }

  bool is_infinity() const { return !value_.has_value(); }
  /// Precondition: !is_infinity().
  const GaussianRational& value() const { return *value_; }

  friend bool operator==(const ExtendedScalar& a, const ExtendedScalar& b) = default;
  /// Finite points first (in GaussianRational order), then ∞.
  friend std::strong_ordering operator<=>(const ExtendedScalar& a, const ExtendedScalar& b);

  /// `inf` for ∞, scalar text otherwise.
  std::string to_string() const;
  /// Accepts `inf`, `infinity`, `∞` or a scalar.
  static ExtendedScalar parse(std::string_view text);

 private:
  std::optional<GaussianRational> value_{GaussianRational{}};
};

std::ostream& operator<<(std::ostream& os, const ExtendedScalar& z);

}  // namespace weyr
