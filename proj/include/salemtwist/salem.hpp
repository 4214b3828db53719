#pragma once

#include <optional>
#include <vector>

#include "salemtwist/polynomial.hpp"
#include "salemtwist/roots.hpp"

namespace salemtwist {

unsigned long euler_totient(unsigned long m);

// The m-th cyclotomic polynomial, by exact division of t^m - 1 by the
// cyclotomic factors of its proper divisors.
IntPolynomial cyclotomic(unsigned long m);

struct CyclotomicFactor {
  unsigned long m = 0;
  int multiplicity = 0;

  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

struct CyclotomicSplit {
  IntPolynomial core;
  std::vector<CyclotomicFactor> factors;  // ascending m
};

// Divides out every Phi_m dividing p (all m with totient(m) <= deg p).
// core * prod Phi_m^e == p exactly.
CyclotomicSplit strip_cyclotomic(const IntPolynomial& p);

IntPolynomial reassemble(const CyclotomicSplit& split);

struct SalemReport {
  int degree = 0;
  bool is_reciprocal = false;
  bool square_free = false;
  std::optional<CertifiedReal> leading_root;
  int real_root_count = 0;
  int real_roots_above_one = 0;
  int unimodular_count = 0;
  // max | |z| - 1 | over the non-real roots
  double residual = 0.0;
  // largest inclusion radius among the numerically isolated roots
  double max_error_radius = 0.0;
  bool roots_certified = false;
  bool is_salem = false;
  // a Galois conjugate of the leading root lies on the unit circle
  bool coronal = false;
};

// Tolerance tol bounds both the unimodularity test and the required root
// inclusion radius.
SalemReport salem_certify(const IntPolynomial& p, double tol);

}  // namespace salemtwist
