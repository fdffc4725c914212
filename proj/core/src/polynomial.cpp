#include "weyr/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "weyr/error.hpp"

namespace weyr {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Polynomial::Polynomial(GaussianRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial Polynomial::x() { return Polynomial({GaussianRational(0), GaussianRational(1)}); }

Polynomial Polynomial::linear_factor(const GaussianRational& r) { return Polynomial({-r, GaussianRational(1)}); }

Polynomial Polynomial::monomial(const GaussianRational& c, std::size_t k) {
  std::vector<GaussianRational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussianRational(0); }

GaussianRational Polynomial::leading() const { return coeffs_.empty() ? GaussianRational(0) : coeffs_.back(); }

GaussianRational Polynomial::eval(const GaussianRational& at) const {
  GaussianRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<GaussianRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  const GaussianRational inv = GaussianRational(1) / leading();
  Polynomial m = *this;
  for (auto& c : m.coeffs_) c *= inv;
  return m;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  strip();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  strip();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<GaussianRational> prod(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (!o.coeffs_[j].is_zero()) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  strip();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial m = *this;
  for (auto& c : m.coeffs_) c = -c;
  return m;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    os << (first ? "" : " + ") << coeffs_[k];
    if (k == 1) os << "*λ";
    if (k > 1) os << "*λ^" << k;
    first = false;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<GaussianRational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<GaussianRational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const GaussianRational lead_inv = GaussianRational(1) / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + db);
    if (rem[top].is_zero()) continue;
    const GaussianRational q = rem[top] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= db; ++j) {
      const auto& bj = b.coeffs()[static_cast<std::size_t>(j)];
      if (!bj.is_zero()) rem[static_cast<std::size_t>(k + j)] -= q * bj;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("polynomial division is not exact");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free part of the zero polynomial");
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

Polynomial poly_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("polynomial determinant of a non-square matrix");
  if (n == 0) return Polynomial(GaussianRational(1));
  bool negate = false;
  Polynomial prev(GaussianRational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial t = m[k][k] * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) t -= m[i][k] * m[k][j];
        m[i][j] = prev.degree() == 0 && prev.leading().is_one() ? std::move(t) : exact_quotient(t, prev);
      }
      m[i][k] = Polynomial();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

void require_same_shape(const Matrix& p_mat, const Matrix& q_mat) {
  if (p_mat.rows() != q_mat.rows() || p_mat.cols() != q_mat.cols())
    throw DimensionError("pencil coefficient matrices have different shapes");
}

Polynomial pencil_entry(const Matrix& p_mat, const Matrix& q_mat, std::size_t r, std::size_t c) {
  return Polynomial({-q_mat(r, c), p_mat(r, c)});
}

// Calls f on every increasing k-subset of {0..n-1}; stops early when f returns false.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Polynomial pencil_det_poly(const Matrix& p_mat, const Matrix& q_mat) {
  require_same_shape(p_mat, q_mat);
  if (!p_mat.is_square()) throw DimensionError("pencil_det_poly needs square matrices");
  const std::size_t n = p_mat.rows();
  PolyMatrix m(n, std::vector<Polynomial>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = pencil_entry(p_mat, q_mat, r, c);
  return poly_determinant(std::move(m));
}

Polynomial minor_gcd_poly(const Matrix& p_mat, const Matrix& q_mat, std::size_t order) {
  require_same_shape(p_mat, q_mat);
  if (order > std::min(p_mat.rows(), p_mat.cols()))
    throw DimensionError("minor order " + std::to_string(order) + " exceeds matrix size");
  if (order == 0) return Polynomial(GaussianRational(1));
  Polynomial g;
  for_each_subset(p_mat.rows(), order, [&](const std::vector<std::size_t>& rows) {
    return for_each_subset(p_mat.cols(), order, [&](const std::vector<std::size_t>& cols) {
      PolyMatrix m(order, std::vector<Polynomial>(order));
      for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = 0; c < order; ++c) m[r][c] = pencil_entry(p_mat, q_mat, rows[r], cols[c]);
      g = gcd(g, poly_determinant(std::move(m)));
      return g.degree() != 0;  // a unit gcd cannot shrink further
    });
  });
  return g;
}

}  // namespace weyr
