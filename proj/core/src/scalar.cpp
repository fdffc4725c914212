#include "weyr/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "weyr/error.hpp"

namespace weyr {

namespace {

std::string fraction_text(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Reads `digits` or `digits/digits` starting at pos (no sign). Advances pos.
mpq_class read_unsigned_fraction(std::string_view text, std::size_t& pos) {
  auto read_digits = [&](std::size_t& p) {
    const std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == start) throw ParseError("malformed scalar '" + std::string(text) + "': expected digits");
    return std::string(text.substr(start, p - start));
  };
  mpz_class num(read_digits(pos));
  mpz_class den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = mpz_class(read_digits(pos));
    if (den == 0) throw ParseError("malformed scalar '" + std::string(text) + "': zero denominator");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::ratio(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num);
  q /= den;
  return {q};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int c = cmp(a.im_, b.im_);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string GaussianRational::to_string() const {
  std::string out = fraction_text(re_);
  if (sgn(im_) != 0) {
    out += sgn(im_) > 0 ? "+" : "-";
    out += fraction_text(abs(im_));
    out += "*i";
  }
  return out;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  mpq_class re = read_unsigned_fraction(text, pos);
  if (negative) re = -re;
  mpq_class im = 0;
  if (pos < text.size()) {
    const char sign = text[pos];
    if (sign != '+' && sign != '-') throw ParseError("malformed scalar '" + std::string(text) + "'");
    ++pos;
    im = read_unsigned_fraction(text, pos);
    if (sign == '-') im = -im;
    if (text.substr(pos) != "*i") throw ParseError("malformed scalar '" + std::string(text) + "': expected '*i'");
  }
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

std::strong_ordering operator<=>(const ExtendedScalar& a, const ExtendedScalar& b) {
  if (a.is_infinity() || b.is_infinity()) {
    if (a.is_infinity() && b.is_infinity()) return std::strong_ordering::equal;
    return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.value() <=> b.value();
}

std::string ExtendedScalar::to_string() const { return is_infinity() ? "inf" : value().to_string(); }

ExtendedScalar ExtendedScalar::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "∞") return infinity();
  return {GaussianRational::parse(text)};
}

std::ostream& operator<<(std::ostream& os, const ExtendedScalar& z) { return os << z.to_string(); }

}  // namespace weyr
