#include "weyr/pencil.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "weyr/error.hpp"

namespace weyr {

namespace {

void require_regular(const OperatorPencil& p, const char* what) {
  if (!is_regular(p)) throw PreconditionError(std::string(what) + ": pencil is not regular");
}

Matrix shifted_a(const OperatorPencil& p, const GaussianRational& mu) { return p.a() - mu * p.e(); }

Matrix resolvent_of(const OperatorPencil& p, const GaussianRational& mu) {
  if (!resolvent_point(p, mu)) throw PreconditionError("mu = " + mu.to_string() + " is not a resolvent point");
  return inverse(shifted_a(p, mu));
}

}  // namespace

OperatorPencil::OperatorPencil(Matrix e, Matrix a) : e_(std::move(e)), a_(std::move(a)) {
  if (!e_.is_square() || !a_.is_square() || e_.rows() != a_.rows())
    throw DimensionError("pencil coefficients must be square matrices of equal size");
  det_ = pencil_det_poly(e_, a_);
}

Matrix OperatorPencil::at(const ExtendedScalar& lam) const {
  if (lam.is_infinity()) return e_;
  return lam.value() * e_ - a_;
}

bool is_regular(const OperatorPencil& p) { return !p.det_poly().is_zero(); }

bool resolvent_point(const OperatorPencil& p, const ExtendedScalar& at) {
  if (at.is_infinity()) return !p.det_poly().coeff(p.n()).is_zero();
  return !p.det_poly().eval(at.value()).is_zero();
}

LinearRelation kernel_representation(const OperatorPencil& p) {
  return LinearRelation::kernel_of_row(p.a(), -p.e());
}

LinearRelation range_representation(const OperatorPencil& p) {
  return LinearRelation::range_of_stacked(p.e(), p.a());
}

LinearRelation resolvent_form_range(const OperatorPencil& p, const GaussianRational& mu, const GaussianRational& lam) {
  const Matrix r = p.e() * resolvent_of(p, mu);
  return LinearRelation::range_of_stacked(r, Matrix::identity(p.n()) + (mu - lam) * r);
}

LinearRelation resolvent_form_kernel(const OperatorPencil& p, const GaussianRational& mu, const GaussianRational& lam) {
  const Matrix r = resolvent_of(p, mu) * p.e();
  return LinearRelation::kernel_of_row(Matrix::identity(p.n()) + (mu - lam) * r, -r);
}

namespace {

// S_1, S_2, ... until the chain stops growing (inclusive) or k = max_k.
std::vector<Subspace> jordan_chain_spaces(const OperatorPencil& p, const ExtendedScalar& at, std::size_t max_k) {
  // step: S_{j+1} = step⁻¹(push S_j)
  const Matrix step = at.is_infinity() ? p.e() : shifted_a(p, at.value());
  const Matrix& push = at.is_infinity() ? p.a() : p.e();
  std::vector<Subspace> chain;
  if (max_k == 0) return chain;
  chain.push_back(null_space(step));
  while (chain.size() < max_k) {
    Subspace next = map_preimage(step, map_image(push, chain.back()));
    const bool grew = next.dim() > chain.back().dim();
    chain.push_back(std::move(next));
    if (!grew) break;
  }
  return chain;
}

}  // namespace

Subspace pencil_root_subspace(const OperatorPencil& p, const ExtendedScalar& at, std::size_t k) {
  if (k == 0) return Subspace::zero(p.n());
  const auto chain = jordan_chain_spaces(p, at, k);
  return chain.back();
}

WeyrTable pencil_weyr_table(const OperatorPencil& p, const ExtendedScalar& at) {
  require_regular(p, "pencil_weyr_table");
  std::vector<std::size_t> dims;
  for (const auto& s : jordan_chain_spaces(p, at, p.n() + 1)) dims.push_back(s.dim());
  return weyr_from_root_dims(at, std::move(dims));
}

SpectrumReport spectrum(const OperatorPencil& p) {
  require_regular(p, "spectrum");
  const RootFactorization f = gaussian_rational_roots(p.det_poly());
  SpectrumReport out;
  out.finite_eigenvalues = f.roots;
  out.residual = f.residual;
  out.infinity_multiplicity = p.n() - static_cast<std::size_t>(p.det_poly().degree());
  out.has_infinity = out.infinity_multiplicity > 0;
  return out;
}

FredholmData fredholm_data(const OperatorPencil& p, const ExtendedScalar& lam) {
  require_regular(p, "fredholm_data");
  const std::size_t r = rank(p.at(lam));
  return {p.n() - r, p.n() - r};
}

std::size_t CanonicalSpec::dimension() const {
  std::size_t n = 0;
  for (const auto& b : finite_blocks) n += b.size;
  for (auto s : infinite_blocks) n += s;
  return n;
}

WeyrTable CanonicalSpec::planted_weyr(const ExtendedScalar& at) const {
  std::vector<std::size_t> sizes;
  if (at.is_infinity()) {
    sizes = infinite_blocks;
  } else {
    for (const auto& b : finite_blocks)
      if (b.eigenvalue == at.value()) sizes.push_back(b.size);
  }
  std::vector<std::size_t> dims;
  const std::size_t longest = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  std::size_t acc = 0;
  for (std::size_t k = 1; k <= longest; ++k) {
    acc += static_cast<std::size_t>(std::count_if(sizes.begin(), sizes.end(), [k](auto s) { return s >= k; }));
    dims.push_back(acc);
  }
  return weyr_from_root_dims(at, std::move(dims));
}

std::vector<ExtendedScalar> CanonicalSpec::planted_points() const {
  std::set<GaussianRational> finite;
  for (const auto& b : finite_blocks) finite.insert(b.eigenvalue);
  std::vector<ExtendedScalar> out(finite.begin(), finite.end());
  if (!infinite_blocks.empty()) out.push_back(ExtendedScalar::infinity());
  return out;
}

std::string CanonicalSpec::to_string() const {
  std::string out;
  for (const auto& b : finite_blocks) {
    if (!out.empty()) out += ",";
    out += std::to_string(b.size) + "@" + b.eigenvalue.to_string();
  }
  for (auto s : infinite_blocks) {
    if (!out.empty()) out += ",";
    out += std::to_string(s) + "@inf";
  }
  return out;
}

CanonicalSpec CanonicalSpec::parse(std::string_view text) {
  CanonicalSpec spec;
  if (text.empty()) throw ParseError("empty block specification");
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t at = item.find('@');
    if (at == std::string_view::npos) throw ParseError("block '" + std::string(item) + "' lacks '@'");
    std::size_t size = 0;
    const std::string_view size_text = item.substr(0, at);
    const auto [ptr, ec] = std::from_chars(size_text.data(), size_text.data() + size_text.size(), size);
    if (ec != std::errc{} || ptr != size_text.data() + size_text.size() || size == 0)
      throw ParseError("block '" + std::string(item) + "' has an invalid size");
    const std::string_view where = item.substr(at + 1);
    if (where == "inf" || where == "infinity" || where == "∞") {
      spec.infinite_blocks.push_back(size);
    } else {
      spec.finite_blocks.push_back({GaussianRational::parse(where), size});
    }
    start = comma + 1;
  }
  return spec;
}

OperatorPencil from_canonical(const CanonicalSpec& spec) {
  const std::size_t n = spec.dimension();
  Matrix e(n, n);
  Matrix a(n, n);
  std::size_t off = 0;
  for (const auto& b : spec.finite_blocks) {
    for (std::size_t i = 0; i < b.size; ++i) {
      e(off + i, off + i) = 1;
      a(off + i, off + i) = b.eigenvalue;
      if (i + 1 < b.size) a(off + i, off + i + 1) = 1;
    }
    off += b.size;
  }
  for (auto s : spec.infinite_blocks) {
    for (std::size_t i = 0; i < s; ++i) {
      a(off + i, off + i) = 1;
      if (i + 1 < s) e(off + i, off + i + 1) = 1;
    }
    off += s;
  }
  return {std::move(e), std::move(a)};
}

OperatorPencil apply_equivalence(const OperatorPencil& p, const Matrix& s_mat, const Matrix& t_mat) {
  if (!s_mat.is_square() || !t_mat.is_square() || s_mat.rows() != p.n() || t_mat.rows() != p.n())
    throw DimensionError("equivalence matrices must be n x n");
  if (determinant(s_mat).is_zero() || determinant(t_mat).is_zero())
    throw PreconditionError("equivalence matrices must be invertible");
  return {s_mat * p.e() * t_mat, s_mat * p.a() * t_mat};
}

Matrix random_unimodular(std::size_t n, long entry_bound, std::mt19937_64& rng) {
  Matrix m = Matrix::identity(n);
  if (n < 2 || entry_bound < 1) return m;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> coef(-1, 1);
  const std::size_t steps = 3 * n;
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    const long c = coef(rng);
    if (i == j || c == 0) continue;
    Matrix next = m;
    bool within = true;
    for (std::size_t col = 0; col < n && within; ++col) {
      next(i, col) += GaussianRational(c) * m(j, col);
      within = abs(next(i, col).re()) <= entry_bound;
    }
    if (within) m = std::move(next);
  }
  return m;
}

}  // namespace weyr
