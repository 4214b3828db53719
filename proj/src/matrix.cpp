#include "salemtwist/matrix.hpp"

#include <algorithm>
#include <utility>

#include "salemtwist/error.hpp"

namespace salemtwist {

IntMatrix::IntMatrix(std::size_t dimension) : dim_(dimension), entries_(dimension * dimension) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorCode::invalid_argument, "matrix rows must form a square");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t dimension) {
  IntMatrix m(dimension);
  for (std::size_t i = 0; i < dimension; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const mpz_class& v) { return sgn(v) >= 0; });
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const mpz_class& v) { return sgn(v) == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::invalid_argument, "matrix dimension mismatch");
  const std::size_t n = a.dim_;
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const mpz_class& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

IntPolynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.dimension();
  // Coefficients highest degree first; the 0x0 case is the constant 1.
  std::vector<mpz_class> poly{1};
  for (std::size_t r = 0; r < n; ++r) {
    // The leading (r+1)x(r+1) block is [[A_r, col], [row, m(r,r)]].
    std::vector<mpz_class> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -m(r, r);
    // power = A_r^k * col, starting at k = 0
    std::vector<mpz_class> power(r);
    for (std::size_t i = 0; i < r; ++i) power[i] = m(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      mpz_class dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * power[i];
      toeplitz[k] = -dot;
      if (k == r + 1) break;
      std::vector<mpz_class> next(r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          if (sgn(m(i, j)) != 0) next[i] += m(i, j) * power[j];
        }
      }
      power = std::move(next);
    }
    std::vector<mpz_class> next_poly(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next_poly[i] += toeplitz[i - j] * poly[j];
    }
    poly = std::move(next_poly);
  }
  std::reverse(poly.begin(), poly.end());
  return IntPolynomial(std::move(poly));
}

mpz_class determinant(const IntMatrix& m) {
  const std::size_t n = m.dimension();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && sgn(a(pivot, k)) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_primitive(const IntMatrix& m) {
  if (!m.is_nonnegative()) return false;
  const std::size_t n = m.dimension();
  if (n == 0) return false;
  using Pattern = std::vector<std::vector<char>>;
  Pattern base(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i][j] = sgn(m(i, j)) > 0;
  Pattern power = base;
  const std::size_t wielandt = (n - 1) * (n - 1) + 1;
  for (std::size_t k = 1; k <= wielandt; ++k) {
    bool positive = true;
    for (const auto& row : power)
      for (char v : row) positive = positive && v;
    if (positive) return true;
    Pattern next(n, std::vector<char>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (power[i][l])
          for (std::size_t j = 0; j < n; ++j) next[i][j] = next[i][j] || base[l][j];
    power = std::move(next);
  }
  return false;
}

}  // namespace salemtwist
