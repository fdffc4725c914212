// Exact enumeration of the Q(i)-roots of a polynomial.
//
// After passing to the square-free part and clearing denominators, a root
// alpha/beta (in lowest terms over Z[i]) satisfies alpha | c_0 and beta | c_d
// (Gauss's lemma in the UFD Z[i]). Both divisor sets are generated from the
// Gaussian prime factorisation, obtained by factoring the rational norms.
// Candidates are screened modulo two primes p = 1 (mod 4), where i maps to a
// square root of -1, and survivors are checked exactly.

#include <gmp.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "weyr/polynomial.hpp"

namespace weyr {

namespace {

struct GaussInt {
  mpz_class re{0};
  mpz_class im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  mpz_class norm() const { return re * re + im * im; }
  GaussInt conj() const { return {re, -im}; }
  GaussInt times_i() const { return {-im, re}; }

  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
};

// Exact quotient b / a if a | b.
std::optional<GaussInt> divide_exact(const GaussInt& b, const GaussInt& a) {
  const mpz_class n = a.norm();
  const GaussInt t = b * a.conj();
  if (!mpz_divisible_p(t.re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(t.im.get_mpz_t(), n.get_mpz_t()))
    return std::nullopt;
  return GaussInt{t.re / n, t.im / n};
}

// Nearest-integer rounding of num/den, den > 0.
mpz_class round_div(const mpz_class& num, const mpz_class& den) {
  mpz_class q;
  mpz_class twice = 2 * num + den;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
  return q;
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    const mpz_class n = b.norm();
    const GaussInt t = a * b.conj();
    const GaussInt q{round_div(t.re, n), round_div(t.im, n)};
    GaussInt r = a - q * b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Representative of the associate class: re > 0, im >= 0.
GaussInt normalize_associate(GaussInt z) {
  if (z.is_zero()) return z;
  for (int k = 0; k < 4; ++k) {
    if (sgn(z.re) > 0 && sgn(z.im) >= 0) return z;
    z = z.times_i();
  }
  return z;
}

// ---- rational integer factorisation -------------------------------------------------

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2;
    mpz_class x;
    mpz_class ys;
    mpz_class q = 1;
    mpz_class g = 1;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto f = [&](const mpz_class& v) {
      mpz_class out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = f(y);
          mpz_class d = abs(x - y);
          q = q * d;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    std::map<mpz_class, unsigned> half;
    factor_into(s, half);
    for (auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  const mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::map<mpz_class, unsigned> factor_integer(mpz_class n) {
  std::map<mpz_class, unsigned> out;
  n = abs(n);
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  factor_into(n, out);
  return out;
}

// ---- Gaussian prime factorisation ---------------------------------------------------

// Gaussian primes lying over the rational prime p.
std::vector<GaussInt> primes_over(const mpz_class& p) {
  if (p == 2) return {GaussInt{1, 1}};
  if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) return {GaussInt{p, 0}};
  const mpz_class e = (p - 1) / 4;
  for (unsigned long c = 2;; ++c) {
    mpz_class t;
    mpz_powm(t.get_mpz_t(), mpz_class(c).get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_class sq = t * t + 1;
    if (mpz_divisible_p(sq.get_mpz_t(), p.get_mpz_t())) {
      const GaussInt pi = normalize_associate(gauss_gcd(GaussInt{p, 0}, GaussInt{t, 1}));
      return {pi, normalize_associate(pi.conj())};
    }
  }
}

// All divisors of z up to units (normalized representatives).
std::vector<GaussInt> divisors(const GaussInt& z) {
  std::vector<std::pair<GaussInt, unsigned>> primes;
  GaussInt rest = z;
  for (const auto& [p, unused] : factor_integer(z.norm())) {
    for (const GaussInt& pi : primes_over(p)) {
      unsigned e = 0;
      while (auto q = divide_exact(rest, pi)) {
        rest = *q;
        ++e;
      }
      if (e > 0) primes.emplace_back(pi, e);
    }
  }
  std::vector<GaussInt> out{GaussInt{1, 0}};
  for (const auto& [pi, e] : primes) {
    const std::size_t base = out.size();
    GaussInt power{1, 0};
    for (unsigned k = 1; k <= e; ++k) {
      power = power * pi;
      for (std::size_t j = 0; j < base; ++j) out.push_back(normalize_associate(out[j] * power));
    }
  }
  return out;
}

// ---- modular screening ---------------------------------------------------------------

struct ModPrime {
  std::uint64_t p;
  std::uint64_t sqrt_minus_one;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::array<ModPrime, 2> screening_primes() {
  static const std::array<ModPrime, 2> primes = [] {
    std::array<ModPrime, 2> out{};
    mpz_class candidate = (mpz_class(1) << 62) + 1;
    for (auto& slot : out) {
      do {
        candidate -= 4;
      } while (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0);
      const mpz_class e = (candidate - 1) / 4;
      for (unsigned long c = 2;; ++c) {
        mpz_class t;
        mpz_powm(t.get_mpz_t(), mpz_class(c).get_mpz_t(), e.get_mpz_t(), candidate.get_mpz_t());
        mpz_class sq = t * t + 1;
        if (mpz_divisible_p(sq.get_mpz_t(), candidate.get_mpz_t())) {
          slot = {candidate.get_ui(), t.get_ui()};
          break;
        }
      }
    }
    return out;
  }();
  return primes;
}

std::uint64_t reduce(const GaussInt& z, const ModPrime& m) {
  const std::uint64_t re = mpz_fdiv_ui(z.re.get_mpz_t(), m.p);
  const std::uint64_t im = mpz_fdiv_ui(z.im.get_mpz_t(), m.p);
  return (re + mulmod(im, m.sqrt_minus_one, m.p)) % m.p;
}

// Gaussian-integer coefficients proportional to p.
std::vector<GaussInt> clear_denominators(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
  }
  std::vector<GaussInt> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    const mpq_class re = c.re() * l;
    const mpq_class im = c.im() * l;
    out.push_back({re.get_num(), im.get_num()});
  }
  return out;
}

// Distinct Q(i)-roots of a square-free polynomial with nonzero constant term.
std::vector<GaussianRational> roots_of_square_free(const Polynomial& s) {
  std::vector<GaussianRational> found;
  if (s.degree() < 1) return found;
  const std::vector<GaussInt> c = clear_denominators(s);
  const std::size_t d = c.size() - 1;
  const auto primes = screening_primes();

  std::array<std::vector<std::uint64_t>, 2> c_mod;
  for (std::size_t t = 0; t < 2; ++t)
    for (const auto& ci : c) c_mod[t].push_back(reduce(ci, primes[t]));

  std::vector<GaussInt> numerators;
  for (const GaussInt& a : divisors(c.front())) {
    GaussInt u = a;
    for (int k = 0; k < 4; ++k, u = u.times_i()) numerators.push_back(u);
  }
  const std::vector<GaussInt> denominators = divisors(c.back());

  auto screened = [&](const GaussInt& num, const GaussInt& den) {
    for (std::size_t t = 0; t < 2; ++t) {
      const std::uint64_t p = primes[t].p;
      const std::uint64_t a = reduce(num, primes[t]);
      const std::uint64_t b = reduce(den, primes[t]);
      // Horner on sum c_j a^j b^(d-j)
      std::uint64_t acc = 0;
      std::uint64_t bpow = 1;
      for (std::size_t j = d + 1; j-- > 0;) {
        acc = (mulmod(acc, a, p) + mulmod(c_mod[t][j], bpow, p)) % p;
        bpow = mulmod(bpow, b, p);
      }
      if (acc != 0) return false;
    }
    return true;
  };

  for (const GaussInt& den : denominators) {
    for (const GaussInt& num : numerators) {
      if (!screened(num, den)) continue;
      const GaussianRational r = GaussianRational(mpq_class(num.re), mpq_class(num.im)) /
                                 GaussianRational(mpq_class(den.re), mpq_class(den.im));
      if (!s.eval(r).is_zero()) continue;
      if (std::find(found.begin(), found.end(), r) == found.end()) found.push_back(r);
      if (found.size() == d) return found;
    }
  }
  return found;
}

}  // namespace

RootFactorization gaussian_rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  RootFactorization out;
  out.unit = p.leading();
  Polynomial rest = p.monic();
  Polynomial s = square_free_part(rest);

  std::vector<GaussianRational> candidates;
  if (s.coeff(0).is_zero()) {
    candidates.emplace_back(0);
    s = exact_quotient(s, Polynomial::x());
  }
  for (auto& r : roots_of_square_free(s)) candidates.push_back(std::move(r));
  std::sort(candidates.begin(), candidates.end());

  for (const auto& r : candidates) {
    const Polynomial f = Polynomial::linear_factor(r);
    std::size_t m = 0;
    while (true) {
      auto [q, rem] = divmod(rest, f);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++m;
    }
    out.roots.push_back({r, m});
  }
  out.residual = rest.monic();
  return out;
}

}  // namespace weyr
