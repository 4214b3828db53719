#include "salemtwist/roots.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>

#include "salemtwist/error.hpp"

namespace salemtwist {

namespace {

// Divides by the positive content only, so signs survive.
IntPolynomial strip_content(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class g = p.content();
  if (g == 1) return p;
  std::vector<mpz_class> c = p.coefficients();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

mpq_class to_rational(double x) { return mpq_class(x); }

CertifiedReal certify(const RootInterval& iv) {
  CertifiedReal out;
  mpq_class mid = (iv.lower + iv.upper) / 2;
  out.value = mid.get_d();
  mpq_class half = iv.width() / 2;
  // get_d truncates; one ulp on each side covers the conversion.
  out.error_bound = half.get_d() + 2.0 * std::abs(out.value) * DBL_EPSILON + DBL_MIN;
  return out;
}

}  // namespace

double RootInterval::midpoint() const {
  mpq_class mid = (lower + upper) / 2;
  return mid.get_d();
}

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::zero_polynomial, "Sturm sequence of the zero polynomial");
  chain_.push_back(square_free_part(p));
  if (chain_.front().degree() == 0) return;
  chain_.push_back(strip_content(chain_.front().derivative()));
  while (chain_.back().degree() > 0) {
    IntPolynomial r = pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(strip_content(-r));
  }
}

int SturmSequence::variations_at(const mpq_class& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.sign_at(x));
  return sign_variations(signs);
}

int SturmSequence::variations_at_plus_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sgn(q.leading()));
  return sign_variations(signs);
}

int SturmSequence::variations_at_minus_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(q.degree() % 2 == 0 ? sgn(q.leading()) : -sgn(q.leading()));
  return sign_variations(signs);
}

int SturmSequence::count_roots(const mpq_class& lower, const mpq_class& upper) const {
  return variations_at(lower) - variations_at(upper);
}

int SturmSequence::count_all_roots() const { return variations_at_minus_infinity() - variations_at_plus_infinity(); }

mpz_class root_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::zero_polynomial, "root bound of the zero polynomial");
  const mpz_class lc = abs(p.leading());
  mpz_class top = 0;
  for (int i = 0; i < p.degree(); ++i) top = std::max(top, mpz_class(abs(p.coefficients()[static_cast<std::size_t>(i)])));
  // Cauchy: |z| <= 1 + max|a_i| / |a_d|
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
  return q + 2;
}

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p) {
  SturmSequence sturm(p);
  std::vector<RootInterval> out;
  if (sturm.base().degree() <= 0) return out;
  const mpz_class bound = root_bound(sturm.base());
  struct Pending {
    mpq_class lower, upper;
    int count;
  };
  std::vector<Pending> stack;
  const mpq_class lo(-bound), hi(bound);
  int total = sturm.count_roots(lo, hi);
  if (total > 0) stack.push_back({lo, hi, total});
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 1) {
      out.push_back({cur.lower, cur.upper});
      continue;
    }
    mpq_class mid = (cur.lower + cur.upper) / 2;
    int left = sturm.count_roots(cur.lower, mid);
    // Push right first so the left half is processed first.
    if (cur.count - left > 0) stack.push_back({mid, cur.upper, cur.count - left});
    if (left > 0) stack.push_back({cur.lower, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.upper < b.upper; });
  return out;
}

RootInterval refine_root(const SturmSequence& sturm, RootInterval iv, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
  const mpq_class target = to_rational(tol);
  const IntPolynomial& p = sturm.base();
  if (p.sign_at(iv.upper) == 0) return {iv.upper, iv.upper};
  while (iv.width() >= target) {
    mpq_class mid = (iv.lower + iv.upper) / 2;
    if (p.sign_at(mid) == 0) return {mid, mid};
    if (sturm.count_roots(iv.lower, mid) > 0) {
      iv.upper = mid;
    } else {
      iv.lower = mid;
    }
  }
  return iv;
}

std::vector<CertifiedReal> real_roots(const IntPolynomial& p, double tol) {
  SturmSequence sturm(p);
  std::vector<CertifiedReal> out;
  for (const auto& iv : isolate_real_roots(p)) out.push_back(certify(refine_root(sturm, iv, tol)));
  return out;
}

CertifiedReal real_root_max(const IntPolynomial& p, double tol) {
  if (p.is_zero()) throw Error(ErrorCode::zero_polynomial, "real_root_max of the zero polynomial");
  if (!(tol > 0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
  auto intervals = isolate_real_roots(p);
  if (intervals.empty()) throw Error(ErrorCode::no_real_root, "polynomial " + p.to_string() + " has no real root");
  SturmSequence sturm(p);
  return certify(refine_root(sturm, intervals.back(), tol));
}

// ---------------------------------------------------------------------------
// Aberth iteration

namespace {

using Complex = std::complex<long double>;

struct Horner {
  Complex value;
  Complex derivative;
  long double magnitude_sum;  // sum |a_k| |z|^k, for rounding bounds
};

Horner horner(const std::vector<long double>& coeffs, Complex z) {
  Complex v = 0, d = 0;
  long double mag = 0;
  const long double az = std::abs(z);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
    mag = mag * az + std::abs(*it);
  }
  return {v, d, mag};
}

// get_d truncates to 53 bits; the remainder carries the rest of the
// long double mantissa.
long double to_long_double(const mpz_class& c) {
  const double hi = c.get_d();
  mpz_class rest = c - mpz_class(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

}  // namespace

ComplexRootSet complex_roots(const IntPolynomial& p) {
  const IntPolynomial sf = square_free_part(p);
  ComplexRootSet out;
  const int d = sf.degree();
  if (d <= 0) {
    out.isolated = true;
    return out;
  }
  std::vector<long double> coeffs;
  coeffs.reserve(sf.coefficients().size());
  for (const auto& c : sf.coefficients()) coeffs.push_back(to_long_double(c));

  const std::size_t n = static_cast<std::size_t>(d);
  std::vector<Complex> z(n);
  if (d == 1) {
    z[0] = -coeffs[0] / coeffs[1];
  } else {
    long double radius = std::pow(std::abs(coeffs[0] / coeffs[n]), 1.0L / d);
    if (!(radius > 0) || !std::isfinite(radius)) radius = 1;
    for (std::size_t k = 0; k < n; ++k) {
      long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / d + 0.4L;
      z[k] = std::polar(radius, angle);
    }
    for (int iter = 0; iter < 5000; ++iter) {
      long double worst = 0;
      for (std::size_t k = 0; k < n; ++k) {
        Horner h = horner(coeffs, z[k]);
        if (h.value == Complex(0)) continue;
        Complex ratio = h.value / h.derivative;
        Complex sum = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (j != k) sum += 1.0L / (z[k] - z[j]);
        Complex w = ratio / (1.0L - ratio * sum);
        z[k] -= w;
        worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[k])));
      }
      if (worst < 64 * LDBL_EPSILON) break;
    }
  }

  const long double u = LDBL_EPSILON;
  const long double lc = std::abs(coeffs[n]);
  out.roots.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Horner h = horner(coeffs, z[i]);
    long double evaluation = std::abs(h.value) + 4.0L * (d + 1) * u * h.magnitude_sum;
    long double product = lc;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) product *= std::abs(z[i] - z[j]);
    long double radius = product > 0 ? d * evaluation / product * (1 + 4.0L * d * u) : INFINITY;
    out.roots[i] = {z[i], radius};
    out.max_radius = std::max(out.max_radius, radius);
  }
  out.isolated = true;
  for (std::size_t i = 0; i < n && out.isolated; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(z[i] - z[j]) <= out.roots[i].radius + out.roots[j].radius) {
        out.isolated = false;
        break;
      }
  return out;
}

CertifiedReal max_root_modulus(const IntPolynomial& p, double tol) {
  if (p.is_zero()) throw Error(ErrorCode::zero_polynomial, "root moduli of the zero polynomial");
  const IntPolynomial sf = square_free_part(p);
  if (sf.degree() <= 0) return {0.0, 0.0};
  SturmSequence sturm(sf);
  auto intervals = isolate_real_roots(sf);
  const int real_count = static_cast<int>(intervals.size());

  bool have_real = real_count > 0;
  CertifiedReal real_best{0.0, 0.0};
  if (have_real) {
    CertifiedReal top = certify(refine_root(sturm, intervals.back(), tol));
    CertifiedReal bottom = certify(refine_root(sturm, intervals.front(), tol));
    real_best = std::abs(top.value) >= std::abs(bottom.value) ? CertifiedReal{std::abs(top.value), top.error_bound}
                                                              : CertifiedReal{std::abs(bottom.value), bottom.error_bound};
  }
  const int nonreal_count = sf.degree() - real_count;
  if (nonreal_count == 0) return real_best;

  ComplexRootSet set = complex_roots(sf);
  std::vector<ComplexRoot> roots = set.roots;
  std::sort(roots.begin(), roots.end(),
            [](const ComplexRoot& a, const ComplexRoot& b) { return std::abs(a.value.imag()) > std::abs(b.value.imag()); });
  long double best = 0, best_radius = 0;
  for (int i = 0; i < nonreal_count; ++i) {
    long double m = std::abs(roots[static_cast<std::size_t>(i)].value);
    if (m > best) {
      best = m;
      best_radius = roots[static_cast<std::size_t>(i)].radius;
    }
  }
  const double nr = static_cast<double>(best);
  const double nr_err = static_cast<double>(best_radius);
  if (!have_real) return {nr, nr_err};
  if (real_best.value - real_best.error_bound >= nr + nr_err) return real_best;
  if (nr - nr_err > real_best.value + real_best.error_bound) return {nr, nr_err};
  // Not separated at this precision.
  double value = std::max(nr, real_best.value);
  return {value, std::max(nr_err, real_best.error_bound) + std::abs(nr - real_best.value)};
}

CertifiedReal spectral_radius(const IntMatrix& m, double tol) {
  const IntPolynomial cp = char_poly(m);
  if (is_primitive(m)) return real_root_max(cp, tol);
  return max_root_modulus(cp, tol);
}

}  // namespace salemtwist
