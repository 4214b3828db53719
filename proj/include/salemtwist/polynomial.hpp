#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace salemtwist {

// Univariate polynomial over Z in the variable t. Coefficients are stored
// constant term first and trailing zeros are always trimmed, so the zero
// polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  // Zero for indices past the degree.
  mpz_class coefficient(std::size_t i) const;
  const mpz_class& leading() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const mpz_class& rhs);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs *= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const mpz_class& rhs) { return lhs *= rhs; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;
  // Exact sign of p(x) in {-1, 0, 1}.
  int sign_at(const mpq_class& x) const;

  IntPolynomial derivative() const;
  // p(-t)
  IntPolynomial reflected() const;
  // t^deg p(1/t)
  IntPolynomial reversed() const;
  bool is_palindromic() const;

  // Nonnegative gcd of the coefficients.
  mpz_class content() const;
  // p / content, sign chosen so the leading coefficient is positive.
  IntPolynomial normalized() const;

  // Descending-degree text such as "t^10 + t^9 - t^7 - 2*t + 1".
  std::string to_string() const;
  static IntPolynomial parse(std::string_view text);

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

// |lc(b)|^(deg a - deg b + 1) * a mod b. The positive multiplier keeps signs,
// which is what Sturm sequences need.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

struct Division {
  IntPolynomial quotient;
  IntPolynomial remainder;
  // q divides p
  bool exact = false;
  // Every step stayed in Z, so p == quotient * q + remainder with
  // deg remainder < deg q.
  bool complete = false;
};

// Long division over Z. Stops as soon as a leading coefficient is not
// divisible by lc(q); then complete and exact are both false.
Division divide(const IntPolynomial& p, const IntPolynomial& q);

// p / q when q divides p in Z[t]; throws Error(inexact_division) otherwise.
IntPolynomial poly_divide_exact(const IntPolynomial& p, const IntPolynomial& q);

// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// p / gcd(p, p'), normalized.
IntPolynomial square_free_part(const IntPolynomial& p);

// a = +-b.
bool equal_up_to_sign(const IntPolynomial& a, const IntPolynomial& b);

// The variable t.
IntPolynomial t_poly();

}  // namespace salemtwist
