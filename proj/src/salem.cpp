#include "salemtwist/salem.hpp"

#include <algorithm>
#include <cmath>

#include "salemtwist/error.hpp"

namespace salemtwist {

unsigned long euler_totient(unsigned long m) {
  if (m == 0) return 0;
  unsigned long result = m;
  unsigned long x = m;
  for (unsigned long p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

IntPolynomial cyclotomic(unsigned long m) {
  if (m == 0) throw Error(ErrorCode::invalid_argument, "cyclotomic index must be positive");
  IntPolynomial p = IntPolynomial::monomial(1, m) - IntPolynomial{1};
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d == 0) p = poly_divide_exact(p, cyclotomic(d));
  }
  return p;
}

CyclotomicSplit strip_cyclotomic(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::zero_polynomial, "cannot strip cyclotomic factors of zero");
  CyclotomicSplit out;
  out.core = p;
  const int deg = p.degree();
  if (deg <= 0) return out;
  // totient(m) >= sqrt(m/2), so m <= 2 deg^2 covers every candidate;
  // scan a little past that.
  const unsigned long limit = 3ul * static_cast<unsigned long>(deg) * static_cast<unsigned long>(deg) + 2;
  for (unsigned long m = 1; m <= limit; ++m) {
    if (euler_totient(m) > static_cast<unsigned long>(out.core.degree())) continue;
    const IntPolynomial phi = cyclotomic(m);
    int multiplicity = 0;
    for (;;) {
      Division d = divide(out.core, phi);
      if (!d.exact) break;
      out.core = d.quotient;
      ++multiplicity;
    }
    if (multiplicity > 0) out.factors.push_back({m, multiplicity});
  }
  return out;
}

IntPolynomial reassemble(const CyclotomicSplit& split) {
  IntPolynomial p = split.core;
  for (const auto& f : split.factors) {
    const IntPolynomial phi = cyclotomic(f.m);
    for (int i = 0; i < f.multiplicity; ++i) p *= phi;
  }
  return p;
}

SalemReport salem_certify(const IntPolynomial& p, double tol) {
  if (p.is_zero() || p.degree() < 1)
    throw Error(ErrorCode::zero_polynomial, "Salem certification needs a non-constant polynomial");
  if (!(tol > 0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
  SalemReport r;
  r.degree = p.degree();
  r.is_reciprocal = p.is_palindromic();
  const IntPolynomial sf = square_free_part(p);
  r.square_free = sf.degree() == p.degree();

  const auto reals = real_roots(sf, tol);
  r.real_root_count = static_cast<int>(reals.size());
  if (!reals.empty()) r.leading_root = reals.back();
  double real_err = 0.0;
  for (const auto& x : reals) {
    if (x.value - x.error_bound > 1.0) ++r.real_roots_above_one;
    if (std::abs(std::abs(x.value) - 1.0) < tol) ++r.unimodular_count;
    real_err = std::max(real_err, x.error_bound);
  }

  const int nonreal = sf.degree() - r.real_root_count;
  bool nonreal_unimodular = true;
  ComplexRootSet set = complex_roots(sf);
  r.roots_certified = set.isolated && static_cast<double>(set.max_radius) < tol;
  r.max_error_radius = std::max(static_cast<double>(set.max_radius), real_err);
  if (nonreal > 0) {
    auto roots = set.roots;
    std::sort(roots.begin(), roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
      return std::abs(a.value.imag()) > std::abs(b.value.imag());
    });
    for (int i = 0; i < nonreal; ++i) {
      const auto& z = roots[static_cast<std::size_t>(i)];
      const double deviation = static_cast<double>(std::abs(std::abs(z.value) - 1.0L));
      r.residual = std::max(r.residual, deviation);
      if (deviation < tol) {
        ++r.unimodular_count;
      } else {
        nonreal_unimodular = false;
      }
    }
  }
  r.is_salem = r.is_reciprocal && r.square_free && r.roots_certified && r.real_roots_above_one == 1 &&
               r.real_root_count == 2 && nonreal > 0 && nonreal_unimodular;
  r.coronal = r.is_salem;
  return r;
}

}  // namespace salemtwist
