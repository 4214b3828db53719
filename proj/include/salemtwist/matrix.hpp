#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "salemtwist/polynomial.hpp"

namespace salemtwist {

// Square integer matrix, row-major, 0-based indexing.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dimension);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t dimension);

  std::size_t dimension() const { return dim_; }
  mpz_class& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const mpz_class& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  IntMatrix transposed() const;
  bool is_nonnegative() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<mpz_class> entries_;
};

// det(tI - M), monic, by the division-free Samuelson-Berkowitz recursion.
IntPolynomial char_poly(const IntMatrix& m);

// Fraction-free Bareiss elimination.
mpz_class determinant(const IntMatrix& m);

// Nonnegative and some power strictly positive (checked up to the Wielandt
// exponent (k-1)^2 + 1 on the zero pattern).
bool is_primitive(const IntMatrix& m);

}  // namespace salemtwist
