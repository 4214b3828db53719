#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "salemtwist/matrix.hpp"
#include "salemtwist/polynomial.hpp"

namespace salemtwist {

// A real number known to lie within error_bound of value.
struct CertifiedReal {
  double value = 0.0;
  double error_bound = 0.0;
};

// Half-open isolating interval (lower, upper]. lower == upper marks a root
// that was hit exactly by a rational midpoint.
struct RootInterval {
  mpq_class lower;
  mpq_class upper;

  bool exact() const { return lower == upper; }
  mpq_class width() const { return upper - lower; }
  double midpoint() const;
};

class SturmSequence {
 public:
  // p must be nonzero; its square-free part is used.
  explicit SturmSequence(const IntPolynomial& p);

  const IntPolynomial& base() const { return chain_.front(); }
  int variations_at(const mpq_class& x) const;
  int variations_at_minus_infinity() const;
  int variations_at_plus_infinity() const;
  // Number of distinct real roots in (lower, upper].
  int count_roots(const mpq_class& lower, const mpq_class& upper) const;
  int count_all_roots() const;

 private:
  std::vector<IntPolynomial> chain_;
};

// Integer bound B with every root satisfying |z| < B.
mpz_class root_bound(const IntPolynomial& p);

// Disjoint isolating intervals of the distinct real roots, ascending.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p);

// Shrinks an isolating interval below tol (exact roots stay exact).
RootInterval refine_root(const SturmSequence& sturm, RootInterval interval, double tol);

// All distinct real roots to within tol, ascending.
std::vector<CertifiedReal> real_roots(const IntPolynomial& p, double tol);

// Largest real root. Throws no_real_root / zero_polynomial.
CertifiedReal real_root_max(const IntPolynomial& p, double tol);

struct ComplexRoot {
  std::complex<long double> value;
  // A root of the polynomial lies within this distance of value.
  long double radius = 0.0L;
};

struct ComplexRootSet {
  std::vector<ComplexRoot> roots;
  // True when the inclusion discs are pairwise disjoint, so each contains
  // exactly one root.
  bool isolated = false;
  long double max_radius = 0.0L;
};

// Distinct roots (of the square-free part) by Aberth iteration, with
// Weierstrass-correction inclusion radii.
ComplexRootSet complex_roots(const IntPolynomial& p);

// Maximum modulus of the eigenvalues of m. Uses the exact Sturm route when
// the dominant root is real, otherwise the numerically isolated moduli.
CertifiedReal spectral_radius(const IntMatrix& m, double tol);

// Same, starting from a characteristic polynomial.
CertifiedReal max_root_modulus(const IntPolynomial& p, double tol);

}  // namespace salemtwist
